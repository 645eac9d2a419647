#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "spanoid/family.hpp"
#include "spanoid/limits.hpp"
#include "spanoid/spanoid.hpp"

namespace spanoid {

enum class RankMethod { automatic, hitting_set, direct_search, product_lemma };

std::string to_string(RankMethod m);

struct RankCertificate {
  std::size_t rank = 0;
  Subset witness;  // spans [n], |witness| = rank
  RankMethod method = RankMethod::automatic;
  std::uint64_t nodes = 0;
};

// Exact rank. The witness is the smallest spanning set of minimum size in
// integer order. Exact search needs n <= 64; BudgetError carries the bounds
// known when limits.rank_nodes runs out.
RankCertificate rank(const Spanoid& sp, RankMethod method = RankMethod::automatic,
                     const Limits& limits = default_limits());

// Minimum hitting set of the minimal nonempty open sets.
RankCertificate rank_hitting_set(const Spanoid& sp, const Limits& limits = default_limits());
// Size-by-size search over subsets with span pruning; needs no enumeration.
RankCertificate rank_direct(const Spanoid& sp, const Limits& limits = default_limits());

struct LogBound {
  std::size_t closed = 0;  // |C_S|
  double log2 = 0;
  // 2^rank <= |C_S|, checked in integers.
  bool admits(std::size_t rank) const;
};
LogBound rank_log_bound(const Spanoid& sp, const Limits& limits = default_limits());

struct FranklResult {
  Element element = 0;      // most frequent, smallest index on ties
  std::size_t count = 0;    // nonempty members containing it
  std::size_t members = 0;  // N, the nonempty members
  std::size_t rank = 0;     // rank of the spanoid whose open sets are the family
  // count >= ceil(N / rank)
  bool meets_bound() const;
};
// The family must be union-closed and contain the empty set.
FranklResult frankl_max_frequency(const SetFamily& fam, const Limits& limits = default_limits());

}  // namespace spanoid
