#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "spanoid/limits.hpp"
#include "spanoid/subset.hpp"

namespace spanoid {

// Elements are 0-based in the API; text formats and messages are 1-based.
struct Rule {
  std::vector<Element> premise;  // sorted, no repeats
  Element conclusion = 0;

  friend bool operator==(const Rule&, const Rule&) = default;
};

// Rules ordered by premise (as an integer bitmask), then conclusion.
bool rule_less(const Rule& a, const Rule& b);
std::string describe(const Rule& r);

class Spanoid {
 public:
  // Validates indices, sorts premises and removes duplicate rules.
  Spanoid(std::size_t n, std::vector<Rule> rules, const Limits& limits = default_limits());

  // The spanoid whose open sets are the unions of members of `opens`.
  // Stores the minimal rule basis: for each element e every minimal A with
  // e in span(A) \ A, computed as minimal transversals.
  static Spanoid from_open_generators(std::size_t n, const std::vector<Subset>& opens,
                                      const Limits& limits = default_limits());

  std::size_t size() const { return n_; }
  const std::vector<Rule>& rules() const { return rules_; }

  Subset span(const Subset& t) const;
  // Mask path, n <= 64.
  Mask span(Mask t) const;
  bool models(const Subset& a, Element i) const { return span(a).test(i); }
  bool spans_all(const Subset& t) const { return span(t).is_full(); }

  bool has_rule(const Rule& r) const;
  std::size_t empty_premise_rules() const;
  // Messages about legal but unusual rules (empty premise, i in S).
  std::vector<std::string> lint() const;

  // Generating open sets when the spanoid was built from a family; lets
  // minimal open sets be read off without enumerating 2^n subsets.
  const std::vector<Subset>* open_generators() const { return generators_.get(); }

 private:
  void index();

  std::size_t n_;
  std::vector<Rule> rules_;
  std::vector<Mask> premise_masks_;
  std::vector<Mask> conclusion_bits_;
  std::vector<std::vector<std::uint32_t>> occurs_;  // element -> rules using it
  std::vector<std::uint32_t> initial_;              // rules with empty premise
  std::shared_ptr<const std::vector<Subset>> generators_;
};

// Pointwise equality of span operators over all 2^n subsets.
bool same_closure(const Spanoid& a, const Spanoid& b, const Limits& limits = default_limits());

}  // namespace spanoid
