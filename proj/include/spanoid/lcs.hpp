#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spanoid/graph.hpp"
#include "spanoid/limits.hpp"
#include "spanoid/rational.hpp"
#include "spanoid/spanoid.hpp"

namespace spanoid {

using Matching = std::vector<std::vector<Element>>;  // disjoint sorted q-subsets

struct LcsInstance {
  Spanoid spanoid;
  std::size_t q = 2;
  Rational delta;
  std::vector<Matching> matchings;  // one per element
};

struct LcsViolation {
  enum class Kind { shape, arity, range, self, overlap, too_small, missing_rule };
  Kind kind;
  Element element;
  std::string message;
};

std::optional<LcsViolation> validate_lcs(const LcsInstance& inst);

// Nonzero k-bit vectors with {a, b} ⊨ a xor b; element e is the vector e + 1.
LcsInstance hadamard_spanoid(std::size_t k, const Limits& limits = default_limits());

// floor(n / 2q) uniformly random disjoint q-subsets of [n] \ {i} per element i.
LcsInstance random_qlcs(std::size_t n, std::size_t q, std::uint64_t seed,
                        const Limits& limits = default_limits());

// Pick ℓ uniformly; j -> i whenever {j, ℓ} ∈ M_i. Declared (2δ, 1).
class PairSampler : public SpreadSampler {
 public:
  explicit PairSampler(const LcsInstance& inst);
  std::size_t vertices() const override { return n_; }
  Rational alpha() const override { return 2 * delta_; }
  Rational beta() const override { return 1; }
  Draw draw(Rng& rng) const override;

 private:
  std::size_t n_;
  Rational delta_;
  std::vector<std::vector<std::pair<Element, Element>>> by_pivot_;  // ℓ -> (j, i)
};

// Random J with inclusion probability (δn)^{-1/(q-1)}; empty graph when J is
// oversized, else for each i one uniformly chosen T ∈ M_i whose first q-1
// elements lie in J contributes the edge (last of T) -> i. Declared (1/4, 1/δ).
class SubsetSampler : public SpreadSampler {
 public:
  explicit SubsetSampler(const LcsInstance& inst);
  std::size_t vertices() const override { return inst_->spanoid.size(); }
  Rational alpha() const override { return Rational(1, 4); }
  Rational beta() const override { return 1 / inst_->delta; }
  Draw draw(Rng& rng) const override;

  double inclusion() const { return inclusion_; }
  double threshold() const { return threshold_; }

 private:
  const LcsInstance* inst_;
  double inclusion_;
  double threshold_;
};

struct FiredEdge {
  std::size_t step;
  Element from;
  Element to;
};

struct SpanningRun {
  Subset set;
  std::size_t attempts = 0;
  std::size_t steps = 0;       // steps of the process behind the returned set
  std::size_t sources = 0;     // sources at that step
  std::vector<FiredEdge> transcript;
  std::vector<std::vector<Element>> draws;  // chosen ℓ / retained J per step
};

struct ProcessOptions {
  std::size_t retries = 100;
  std::optional<std::size_t> steps;  // default ⌈(8/δ) ln n⌉ or ⌈16 ln n⌉
  // Return the smallest candidate over all prefixes instead of the last one.
  bool best_prefix = false;
  // An attempt whose set is larger than this counts as failed and is retried.
  std::optional<std::size_t> max_size;
};

// Default number of process steps for the two algorithms.
std::size_t default_steps_2lcs(const LcsInstance& inst);
std::size_t default_steps_qlcs(const LcsInstance& inst);

// The candidate after step t is (chosen ℓ's or retained J's) ∪ the smallest
// vertex of every source of G_t; it spans [n] for every t. Returned sets are
// checked with span() before returning.
SpanningRun spanning_set_2lcs(const LcsInstance& inst, std::uint64_t seed,
                              const ProcessOptions& options = {});
SpanningRun spanning_set_qlcs(const LcsInstance& inst, std::uint64_t seed,
                              const ProcessOptions& options = {});

}  // namespace spanoid
