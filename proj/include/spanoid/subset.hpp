#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace spanoid {

using Element = std::uint32_t;
using Mask = std::uint64_t;

inline Mask bit(Element i) { return Mask{1} << i; }
inline Mask low_bits(std::size_t n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }
inline int popcount(Mask m) { return std::popcount(m); }

// Subset of {0, ..., n-1}. Ordered as the integer whose bit i is membership of i.
class Subset {
 public:
  Subset() = default;
  explicit Subset(std::size_t n);

  static Subset full(std::size_t n);
  static Subset from_mask(std::size_t n, Mask m);
  static Subset of(std::size_t n, std::initializer_list<Element> elements);
  static Subset of(std::size_t n, const std::vector<Element>& elements);

  std::size_t universe() const { return n_; }
  bool test(Element i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(Element i) { words_[i >> 6] |= Mask{1} << (i & 63); }
  void reset(Element i) { words_[i >> 6] &= ~(Mask{1} << (i & 63)); }

  std::size_t count() const;
  bool none() const;
  bool is_full() const { return count() == n_; }
  bool is_subset_of(const Subset& other) const;
  bool intersects(const Subset& other) const;

  Subset& operator|=(const Subset& other);
  Subset& operator&=(const Subset& other);
  Subset& operator-=(const Subset& other);
  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
  friend Subset operator-(Subset a, const Subset& b) { return a -= b; }
  Subset complement() const;

  // Requires universe() <= 64.
  Mask mask() const;

  std::vector<Element> elements() const;
  // Smallest member, or universe() when empty.
  Element first() const;
  Element next(Element after) const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Mask m = words_[w];
      while (m) {
        f(static_cast<Element>(w * 64 + std::countr_zero(m)));
        m &= m - 1;
      }
    }
  }

  std::size_t hash() const;

  friend bool operator==(const Subset& a, const Subset& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }
  friend std::strong_ordering operator<=>(const Subset& a, const Subset& b);

 private:
  std::size_t n_ = 0;
  boost::container::small_vector<Mask, 2> words_;
};

struct SubsetHash {
  std::size_t operator()(const Subset& s) const { return s.hash(); }
};

// Integer order on sorted element lists, consistent with Subset ordering.
bool set_less(const std::vector<Element>& a, const std::vector<Element>& b);

// Next k-subset mask in increasing integer order (Gosper). Caller checks the bound.
inline Mask next_combination(Mask v) {
  Mask t = v | (v - 1);
  return (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
}

}  // namespace spanoid
