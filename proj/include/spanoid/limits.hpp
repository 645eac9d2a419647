#pragma once

#include <cstddef>
#include <cstdint>

namespace spanoid {

struct Limits {
  // Largest n for which all 2^n subsets are enumerated.
  std::size_t enumeration_cap = 22;
  // Search nodes for one exact rank computation.
  std::uint64_t rank_nodes = 400'000'000;
  std::size_t entropy_full_cap = 12;
  std::size_t entropy_elemental_cap = 16;
  // Stored rules per spanoid.
  std::size_t rule_cap = std::size_t{1} << 22;
  // Candidate words s^n and search nodes for the maximum code search.
  std::uint64_t code_words = 4096;
  std::uint64_t code_nodes = 50'000'000;
  // Universe size up to which union-representation codes are materialized.
  std::size_t materialize_bits = 20;
};

inline const Limits& default_limits() {
  static const Limits limits;
  return limits;
}

}  // namespace spanoid
