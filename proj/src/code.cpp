#include "spanoid/code.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "spanoid/error.hpp"
#include "spanoid/lp.hpp"
#include "spanoid/rank.hpp"
#include "spanoid/rng.hpp"

namespace spanoid {

Code::Code(std::size_t n, std::uint64_t s, std::vector<Word> words) : n_(n), s_(s), words_(std::move(words)) {
  if (s_ == 0) throw DomainError("alphabet size must be at least 1");
  std::set<Word> seen;
  for (std::size_t k = 0; k < words_.size(); ++k) {
    const auto& w = words_[k];
    if (w.size() != n_)
      throw DomainError("word " + std::to_string(k + 1) + " has length " + std::to_string(w.size()) +
                        ", expected " + std::to_string(n_));
    for (Symbol x : w)
      if (x >= s_) throw DomainError("word " + std::to_string(k + 1) + " uses symbol " + std::to_string(x) +
                                     " outside the alphabet of size " + std::to_string(s_));
    if (!seen.insert(w).second) throw DomainError("word " + std::to_string(k + 1) + " is repeated");
  }
}

std::optional<Violation> check_consistent(const Spanoid& sp, const Code& c) {
  if (c.length() != sp.size())
    throw DomainError("code length " + std::to_string(c.length()) + " does not match spanoid size " +
                      std::to_string(sp.size()));
  const auto& words = c.words();
  std::vector<std::size_t> order(words.size());
  for (const auto& r : sp.rules()) {
    if (std::binary_search(r.premise.begin(), r.premise.end(), r.conclusion)) continue;
    auto proj_less = [&](std::size_t a, std::size_t b) {
      for (Element e : r.premise)
        if (words[a][e] != words[b][e]) return words[a][e] < words[b][e];
      return false;
    };
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (proj_less(a, b)) return true;
      if (proj_less(b, a)) return false;
      return words[a] < words[b];
    });
    for (std::size_t start = 0; start < order.size();) {
      std::size_t end = start + 1;
      while (end < order.size() && !proj_less(order[start], order[end])) ++end;
      const Word& first = words[order[start]];
      for (std::size_t k = start + 1; k < end; ++k)
        if (words[order[k]][r.conclusion] != first[r.conclusion])
          return Violation{r, first, words[order[k]]};
      start = end;
    }
  }
  return std::nullopt;
}

namespace {

// Largest k with b^k == x, or 0 when x is not a power of b (b >= 2, x >= 1).
unsigned power_of(std::uint64_t x, std::uint64_t b) {
  unsigned k = 0;
  while (x > 1) {
    if (x % b) return 0;
    x /= b;
    ++k;
  }
  return k;
}

// Smallest r with s = r^k for some k.
std::uint64_t primitive_root(std::uint64_t s) {
  for (std::uint64_t r = 2; r * r <= s; ++r)
    if (power_of(s, r)) return r;
  return s;
}

}  // namespace

Dimension code_dimension(const Code& c) {
  if (c.size() == 0) throw DomainError("the empty code has no dimension");
  Dimension d;
  if (c.size() == 1) {
    d.exact = Rational(0);
    return d;
  }
  if (c.alphabet() < 2) throw DomainError("a code over one symbol has a single word");
  std::uint64_t root = primitive_root(c.alphabet());
  unsigned q = power_of(c.alphabet(), root);
  unsigned p = power_of(c.size(), root);
  if (p) d.exact = Rational(p, q);
  d.value = d.exact ? to_double(*d.exact)
                    : std::log(static_cast<double>(c.size())) / std::log(static_cast<double>(c.alphabet()));
  return d;
}

UnionCode::UnionCode(SetRepresentation rep, std::size_t ell) : rep_(std::move(rep)), ell_(ell) {
  if (rep_.flavor != SetRepresentation::Flavor::union_)
    throw DomainError("code construction needs a union-flavor representation");
  if (ell_ == 0) throw DomainError("ell must be positive");
  Subset used(rep_.universe);
  for (std::size_t i = 0; i < rep_.sets.size(); ++i) {
    if (rep_.sets[i].universe() != rep_.universe)
      throw DomainError("set " + std::to_string(i + 1) + " has the wrong universe");
    if (rep_.sets[i].count() > ell_)
      throw DomainError("set " + std::to_string(i + 1) + " has " + std::to_string(rep_.sets[i].count()) +
                        " elements, more than ell = " + std::to_string(ell_));
    used |= rep_.sets[i];
  }
  if (!used.is_full()) throw DomainError("universe element " + std::to_string(used.complement().first() + 1) +
                                         " belongs to no set");
}

Rational UnionCode::dimension() const { return Rational(rep_.universe, ell_); }

Word UnionCode::word(const std::vector<bool>& x) const {
  if (x.size() != rep_.universe) throw DomainError("assignment length does not match the universe");
  Word w;
  w.reserve(rep_.sets.size());
  for (const auto& s : rep_.sets) {
    Symbol sym = 0;
    unsigned k = 0;
    s.for_each([&](Element u) {
      if (x[u]) sym |= Symbol{1} << k;
      ++k;
    });
    w.push_back(sym);
  }
  return w;
}

Code UnionCode::materialize(const Limits& limits) const {
  if (rep_.universe > limits.materialize_bits)
    throw CapacityError("code has 2^" + std::to_string(rep_.universe) + " words; materialization is capped at 2^" +
                        std::to_string(limits.materialize_bits));
  if (ell_ > 63) throw CapacityError("alphabet 2^ell does not fit in 64 bits");
  std::vector<Word> words;
  std::vector<bool> x(rep_.universe);
  for (Mask m = 0; m < (Mask{1} << rep_.universe); ++m) {
    for (std::size_t u = 0; u < rep_.universe; ++u) x[u] = (m >> u) & 1;
    words.push_back(word(x));
  }
  std::sort(words.begin(), words.end());
  return Code(rep_.sets.size(), Symbol{1} << ell_, std::move(words));
}

std::optional<Rule> UnionCode::first_violation(const Spanoid& sp) const {
  if (sp.size() != rep_.sets.size()) throw DomainError("code length does not match spanoid size");
  for (const auto& r : sp.rules()) {
    Subset cover(rep_.universe);
    for (Element t : r.premise) cover |= rep_.sets[t];
    if (!rep_.sets[r.conclusion].is_subset_of(cover)) return r;
  }
  return std::nullopt;
}

UnionCode code_from_union_representation(const SetRepresentation& rep, std::size_t ell) {
  return UnionCode(rep, ell);
}

namespace {

// Union representation over a multiset of opens: S_i = {h : i in H[h]}.
SetRepresentation representation_of(std::size_t n, const std::vector<Subset>& h) {
  SetRepresentation rep;
  rep.universe = h.size();
  rep.flavor = SetRepresentation::Flavor::union_;
  rep.sets.assign(n, Subset(h.size()));
  for (Element k = 0; k < h.size(); ++k) h[k].for_each([&](Element i) { rep.sets[i].set(k); });
  return rep;
}

}  // namespace

UnionCode build_cover_code(const Spanoid& sp, const Limits& limits) {
  CoverDual dual = lp_cover_dual(sp, limits);
  Integer scale = 1;
  for (const auto& l : dual.lambda) scale = boost::multiprecision::lcm(scale, Integer(boost::multiprecision::denominator(l)));
  if (scale > Integer(limits.rule_cap)) throw CapacityError("cover code scale " + scale.str() + " is too large");
  std::vector<Subset> h;
  for (std::size_t k = 0; k < dual.opens.size(); ++k) {
    Integer copies = boost::multiprecision::numerator(Rational(dual.lambda[k] * scale));
    for (Integer c = 0; c < copies; ++c) h.push_back(dual.opens[k]);
  }
  UnionCode code(representation_of(sp.size(), h), scale.convert_to<std::size_t>());
  if (code.dimension() != dual.optimum) throw std::logic_error("cover code dimension differs from the cover LP");
  if (auto bad = code.first_violation(sp)) throw std::logic_error("cover code violates rule " + describe(*bad));
  return code;
}

SampledCode sample_small_alphabet_code(const Spanoid& sp, std::uint64_t seed, std::size_t retries,
                                       const Limits& limits) {
  if (retries == 0) throw DomainError("retries must be at least 1");
  CoverDual dual = lp_cover_dual(sp, limits);
  const std::size_t n = sp.size();
  std::optional<std::size_t> load_cap;
  if (n >= 3) {
    double ln = std::log(static_cast<double>(n));
    load_cap = static_cast<std::size_t>(std::ceil(std::exp(1.0) * ln / std::log(ln)));
  }
  std::size_t best_members = 0, best_load = 0;
  for (std::size_t attempt = 0; attempt < retries; ++attempt) {
    Rng rng(split_seed(seed, attempt));
    std::vector<Subset> h;
    for (std::size_t k = 0; k < dual.opens.size(); ++k)
      if (rng.bernoulli(dual.lambda[k])) h.push_back(dual.opens[k]);
    std::vector<std::size_t> load(n, 0);
    for (const auto& o : h) o.for_each([&](Element i) { ++load[i]; });
    std::size_t max_load = *std::max_element(load.begin(), load.end());
    bool large = Rational(2 * h.size()) >= dual.optimum;
    bool light = !load_cap || max_load <= *load_cap;
    if (h.size() > best_members) {
      best_members = h.size();
      best_load = max_load;
    }
    if (!large || !light) continue;
    UnionCode code(representation_of(n, h), std::max<std::size_t>(max_load, 1));
    if (auto bad = code.first_violation(sp)) throw std::logic_error("sampled code violates rule " + describe(*bad));
    return SampledCode{std::move(code), h.size(), max_load, attempt + 1};
  }
  throw RetriesExhausted("no sample met |H| >= LPcover/2 and the load cap within " + std::to_string(retries) +
                         " attempts (largest |H| " + std::to_string(best_members) + " with load " +
                         std::to_string(best_load) + ")");
}

UnionCode tensor(const UnionCode& a, const UnionCode& b) {
  const auto& ra = a.representation();
  const auto& rb = b.representation();
  SetRepresentation rep;
  rep.universe = ra.universe * rb.universe;
  rep.flavor = SetRepresentation::Flavor::union_;
  for (const auto& s : ra.sets)
    for (const auto& t : rb.sets) {
      Subset st(rep.universe);
      s.for_each([&](Element u) { t.for_each([&](Element v) { st.set(static_cast<Element>(u * rb.universe + v)); }); });
      rep.sets.push_back(std::move(st));
    }
  return UnionCode(std::move(rep), a.ell() * b.ell());
}

namespace {

class Bits {
 public:
  explicit Bits(std::size_t n = 0) : w_((n + 63) / 64, 0) {}
  void set(std::size_t i) { w_[i >> 6] |= Mask{1} << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(Mask{1} << (i & 63)); }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  bool none() const {
    return std::all_of(w_.begin(), w_.end(), [](Mask m) { return m == 0; });
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (Mask m : w_) c += static_cast<std::size_t>(popcount(m));
    return c;
  }
  Bits operator&(const Bits& o) const {
    Bits r = *this;
    for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] &= o.w_[k];
    return r;
  }
  // Smallest member; the set must be nonempty.
  std::size_t first() const {
    std::size_t k = 0;
    while (!w_[k]) ++k;
    return k * 64 + static_cast<std::size_t>(std::countr_zero(w_[k]));
  }
  Bits without(const Bits& o) const {
    Bits r = *this;
    for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] &= ~o.w_[k];
    return r;
  }
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      for (Mask m = w_[k]; m; m &= m - 1) f(k * 64 + static_cast<std::size_t>(std::countr_zero(m)));
  }

 private:
  std::vector<Mask> w_;
};

// Maximum clique with greedy colouring bounds, stopping early at `cap`.
class CliqueSearch {
 public:
  CliqueSearch(const std::vector<Bits>& adj, std::size_t cap, std::uint64_t budget)
      : adj_(adj), cap_(cap), budget_(budget) {}

  void run(std::vector<std::size_t> start, const Bits& candidates, std::vector<std::size_t> incumbent) {
    best_ = std::move(incumbent);
    current_ = std::move(start);
    if (best_.size() < current_.size()) best_ = current_;
    if (best_.size() < cap_) expand(candidates);
  }

  const std::vector<std::size_t>& best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void expand(Bits cand) {
    if (++nodes_ > budget_) throw BudgetError("maximum code search exceeded the node budget", best_.size(), cap_);
    std::vector<std::size_t> order;
    std::vector<std::size_t> colour;
    Bits uncoloured = cand;
    std::size_t c = 0;
    while (!uncoloured.none()) {
      ++c;
      Bits avail = uncoloured;
      while (!avail.none()) {
        std::size_t v = avail.first();
        uncoloured.reset(v);
        order.push_back(v);
        colour.push_back(c);
        avail.reset(v);
        avail = avail.without(adj_[v]);
      }
    }
    for (std::size_t k = order.size(); k-- > 0;) {
      if (current_.size() + colour[k] <= best_.size()) return;
      std::size_t v = order[k];
      current_.push_back(v);
      Bits next = cand & adj_[v];
      if (next.none()) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(next);
      }
      current_.pop_back();
      if (best_.size() >= cap_) return;
      cand.reset(v);
    }
  }

  const std::vector<Bits>& adj_;
  std::size_t cap_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::size_t> best_;
  std::vector<std::size_t> current_;
};

// floor(s^q) for rational q >= 0.
Integer floor_power(std::uint64_t s, const Rational& q) {
  Integer p = boost::multiprecision::numerator(q);
  Integer d = boost::multiprecision::denominator(q);
  Integer target = boost::multiprecision::pow(Integer(s), p.convert_to<unsigned>());
  unsigned den = d.convert_to<unsigned>();
  Integer lo = 0, hi = Integer(1);
  while (boost::multiprecision::pow(hi, den) <= target) hi *= 2;
  while (hi - lo > 1) {
    Integer mid = (lo + hi) / 2;
    if (boost::multiprecision::pow(mid, den) <= target)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

}  // namespace

MaxCodeResult max_consistent_code(const Spanoid& sp, std::uint64_t s, bool use_entropy_bound, const Limits& limits) {
  const std::size_t n = sp.size();
  if (s == 0) throw DomainError("alphabet size must be at least 1");
  if (s == 1) return MaxCodeResult{Code(n, 1, {Word(n, 0)}), 1, 0};
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (total > limits.code_words / s)
      throw CapacityError("s^n exceeds the word cap " + std::to_string(limits.code_words));
    total *= s;
  }
  std::vector<Word> digits(total, Word(n));
  for (std::uint64_t w = 0; w < total; ++w) {
    std::uint64_t x = w;
    for (std::size_t k = 0; k < n; ++k) {
      digits[w][k] = x % s;
      x /= s;
    }
  }
  std::vector<Rule> rules;
  for (const auto& r : sp.rules())
    if (!std::binary_search(r.premise.begin(), r.premise.end(), r.conclusion)) rules.push_back(r);
  auto compatible = [&](const Word& a, const Word& b) {
    for (const auto& r : rules) {
      if (a[r.conclusion] == b[r.conclusion]) continue;
      bool agree = std::all_of(r.premise.begin(), r.premise.end(), [&](Element e) { return a[e] == b[e]; });
      if (agree) return false;
    }
    return true;
  };
  std::vector<Bits> adj(total, Bits(total));
  for (std::uint64_t a = 0; a < total; ++a)
    for (std::uint64_t b = a + 1; b < total; ++b)
      if (compatible(digits[a], digits[b])) {
        adj[a].set(b);
        adj[b].set(a);
      }

  // Relabelling symbols per coordinate preserves consistency, so some maximum
  // code contains the all-zero word.
  std::size_t cap = static_cast<std::size_t>(total);
  std::vector<std::size_t> incumbent;
  if (use_entropy_bound) {
    Integer bound = floor_power(s, lp_entropy(sp, EntropyMode::elemental, limits).optimum);
    if (n <= 64) {
      std::size_t r = rank(sp, RankMethod::automatic, limits).rank;
      bound = std::min(bound, Integer(boost::multiprecision::pow(Integer(s), static_cast<unsigned>(r))));
    }
    if (bound < Integer(cap)) cap = bound.convert_to<std::size_t>();
    try {
      UnionCode cover = build_cover_code(sp, limits);
      if (cover.ell() < 64 && (std::uint64_t{1} << cover.ell()) <= s && cover.bits() <= limits.materialize_bits) {
        Code words = cover.materialize(limits);
        for (const auto& w : words.words()) {
          std::uint64_t idx = 0;
          for (std::size_t k = n; k-- > 0;) idx = idx * s + w[k];
          incumbent.push_back(static_cast<std::size_t>(idx));
        }
      }
    } catch (const CapacityError&) {
    }
  }
  Bits candidates = adj[0];
  CliqueSearch search(adj, cap, limits.code_nodes);
  search.run({0}, candidates, incumbent);

  std::vector<Word> words;
  for (std::size_t v : search.best()) words.push_back(digits[v]);
  std::sort(words.begin(), words.end());
  Code code(n, s, std::move(words));
  if (auto bad = check_consistent(sp, code)) throw std::logic_error("maximum code search returned an inconsistent code");
  std::size_t closed_by = code.size() >= cap ? cap : code.size();
  return MaxCodeResult{std::move(code), closed_by, search.nodes()};
}

}  // namespace spanoid
