#pragma once

// Deliberately naive reference implementations used to cross-check the
// library. They share no code with it beyond the Spanoid rule list.

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "spanoid/code.hpp"
#include "spanoid/rational.hpp"
#include "spanoid/rng.hpp"
#include "spanoid/simplex.hpp"
#include "spanoid/spanoid.hpp"

namespace oracle {

using Set = std::set<int>;

Set naive_span(const spanoid::Spanoid& sp, const Set& t);
std::vector<Set> naive_closed_sets(const spanoid::Spanoid& sp);
// Smallest size of a spanning set, trying sizes in order.
std::size_t brute_rank(const spanoid::Spanoid& sp);
std::size_t brute_min_hitting_set(const std::vector<Set>& sets, int n);
// Every pair of words checked against every stored rule.
bool naive_consistent(const spanoid::Spanoid& sp, const spanoid::Code& c);

// max c·x s.t. A x <= b, x >= 0 by enumerating basic solutions. Empty when
// infeasible; callers keep the region bounded.
std::optional<spanoid::Rational> vertex_enumeration_max(const std::vector<std::vector<spanoid::Rational>>& a,
                                                        const std::vector<spanoid::Rational>& b,
                                                        const std::vector<spanoid::Rational>& c);
// Same optimum for a LinearProgram with nonnegative variables, any sense.
std::optional<spanoid::Rational> vertex_enumeration(const spanoid::LinearProgram& lp);

// Random rule lists: up to max_rules rules with premises of size 0..3
// (empty premises rare).
spanoid::Spanoid random_spanoid(spanoid::Rng& rng, std::size_t n, std::size_t max_rules);
// Bounded random LP with integer data over `vars` nonnegative variables.
spanoid::LinearProgram random_lp(spanoid::Rng& rng, std::size_t vars, std::size_t rows);

}  // namespace oracle
