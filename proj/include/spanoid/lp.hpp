#pragma once

#include <cstddef>
#include <vector>

#include "spanoid/limits.hpp"
#include "spanoid/rational.hpp"
#include "spanoid/simplex.hpp"
#include "spanoid/spanoid.hpp"

namespace spanoid {

// min sum x_i  s.t.  sum_{i in O} x_i >= 1 for every minimal nonempty open O.
LinearProgram cover_program(const Spanoid& sp, const Limits& limits = default_limits());
// max sum λ_O  s.t.  sum_{O ∋ i} λ_O <= 1 for every element i.
LinearProgram cover_dual_program(const Spanoid& sp, const Limits& limits = default_limits());

Rational lp_cover(const Spanoid& sp, const Limits& limits = default_limits());

struct CoverDual {
  Rational optimum;
  std::vector<Subset> opens;    // minimal opens in family order
  std::vector<Rational> lambda;  // one weight per open
};
// Solves both sides and checks that the optima agree.
CoverDual lp_cover_dual(const Spanoid& sp, const Limits& limits = default_limits());

enum class EntropyMode { full, elemental };

// Variables f(S) for nonempty S, in mask order; f(∅) = 0 is implicit.
LinearProgram entropy_program(const Spanoid& sp, EntropyMode mode,
                              const Limits& limits = default_limits());

struct EntropyResult {
  Rational optimum;
  std::vector<Rational> profile;  // f indexed by subset mask, profile[0] = 0
};
EntropyResult lp_entropy(const Spanoid& sp, EntropyMode mode = EntropyMode::elemental,
                         const Limits& limits = default_limits());

}  // namespace spanoid
