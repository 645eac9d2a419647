#include "spanoid/subset.hpp"

#include <algorithm>
#include <stdexcept>

namespace spanoid {

namespace {
std::size_t word_count(std::size_t n) { return (n + 63) / 64; }
}  // namespace

Subset::Subset(std::size_t n) : n_(n), words_(word_count(n), 0) {}

Subset Subset::full(std::size_t n) {
  Subset s(n);
  for (auto& w : s.words_) w = ~Mask{0};
  if (n % 64 != 0) s.words_.back() = low_bits(n % 64);
  return s;
}

Subset Subset::from_mask(std::size_t n, Mask m) {
  if (n > 64) throw std::logic_error("Subset::from_mask needs n <= 64");
  Subset s(n);
  if (n > 0) s.words_[0] = m & low_bits(n);
  return s;
}

Subset Subset::of(std::size_t n, std::initializer_list<Element> elements) {
  return of(n, std::vector<Element>(elements));
}

Subset Subset::of(std::size_t n, const std::vector<Element>& elements) {
  Subset s(n);
  for (Element e : elements) {
    if (e >= n) throw std::out_of_range("element outside ground set");
    s.set(e);
  }
  return s;
}

std::size_t Subset::count() const {
  std::size_t c = 0;
  for (Mask w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool Subset::none() const {
  return std::all_of(words_.begin(), words_.end(), [](Mask w) { return w == 0; });
}

bool Subset::is_subset_of(const Subset& other) const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] & ~other.words_[w]) return false;
  return true;
}

bool Subset::intersects(const Subset& other) const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] & other.words_[w]) return true;
  return false;
}

Subset& Subset::operator|=(const Subset& other) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

Subset& Subset::operator&=(const Subset& other) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

Subset& Subset::operator-=(const Subset& other) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

Subset Subset::complement() const { return full(n_) - *this; }

Mask Subset::mask() const {
  if (n_ > 64) throw std::logic_error("Subset::mask needs n <= 64");
  return words_.empty() ? 0 : words_[0];
}

std::vector<Element> Subset::elements() const {
  std::vector<Element> out;
  for_each([&](Element e) { out.push_back(e); });
  return out;
}

Element Subset::first() const { return next(static_cast<Element>(-1)); }

Element Subset::next(Element after) const {
  std::size_t start = after == static_cast<Element>(-1) ? 0 : std::size_t{after} + 1;
  for (std::size_t w = start / 64; w < words_.size(); ++w) {
    Mask m = words_[w];
    if (w == start / 64 && start % 64 != 0) m &= ~low_bits(start % 64);
    if (m) return static_cast<Element>(w * 64 + std::countr_zero(m));
  }
  return static_cast<Element>(n_);
}

std::size_t Subset::hash() const {
  std::size_t h = n_ * 0x9e3779b97f4a7c15ULL;
  for (Mask w : words_) h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
  return h;
}

std::strong_ordering operator<=>(const Subset& a, const Subset& b) {
  if (a.n_ != b.n_) return a.n_ <=> b.n_;
  for (std::size_t w = a.words_.size(); w-- > 0;)
    if (a.words_[w] != b.words_[w]) return a.words_[w] <=> b.words_[w];
  return std::strong_ordering::equal;
}

bool set_less(const std::vector<Element>& a, const std::vector<Element>& b) {
  auto ia = a.rbegin();
  auto ib = b.rbegin();
  for (; ia != a.rend() && ib != b.rend(); ++ia, ++ib)
    if (*ia != *ib) return *ia < *ib;
  return ia == a.rend() && ib != b.rend();
}

}  // namespace spanoid
