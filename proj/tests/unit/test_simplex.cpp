#include <string>

#include "doctest.h"
#include "oracles.hpp"
#include "spanoid/error.hpp"
#include "spanoid/simplex.hpp"

using namespace spanoid;

TEST_CASE("single variable") {
  LinearProgram lp;
  std::size_t x = lp.add_variable("x", 1);
  lp.add_constraint({{x, 1}}, Relation::le, 3);
  for (bool fs : {true, false}) {
    LpSolution sol = solve_exact(lp, fs);
    CHECK(sol.optimum == 3);
    CHECK(sol.primal[x] == 3);
    CHECK(sol.dual[0] == 1);
  }
}

TEST_CASE("infeasible and unbounded programs") {
  LinearProgram inf;
  std::size_t x = inf.add_variable("x", 1);
  inf.add_constraint({{x, 1}}, Relation::le, 1, "low");
  inf.add_constraint({{x, 1}}, Relation::ge, 2, "high");
  for (bool fs : {true, false}) CHECK_THROWS_AS(solve_exact(inf, fs), InfeasibleError);

  LinearProgram unb;
  std::size_t a = unb.add_variable("a", 1);
  std::size_t b = unb.add_variable("b", 0);
  unb.add_constraint({{a, 1}, {b, -1}}, Relation::le, 1);
  for (bool fs : {true, false}) {
    try {
      solve_exact(unb, fs);
      FAIL("expected unbounded");
    } catch (const UnboundedError& e) {
      REQUIRE(e.ray().size() == 2);
      // the ray improves the objective and keeps the row satisfied
      CHECK(e.ray()[a] > 0);
      CHECK(e.ray()[a] - e.ray()[b] <= 0);
    }
  }
}

TEST_CASE("free variables, equalities and minimization") {
  // min x + 2y  s.t. x + y = 4, x - y >= -2, y free, x >= 0
  LinearProgram lp;
  lp.sense = Sense::minimize;
  std::size_t x = lp.add_variable("x", 1);
  std::size_t y = lp.add_variable("y", 2, false);
  lp.add_constraint({{x, 1}, {y, 1}}, Relation::eq, 4);
  lp.add_constraint({{x, 1}, {y, -1}}, Relation::ge, -2);
  lp.add_constraint({{x, 1}}, Relation::le, 10);
  for (bool fs : {true, false}) {
    LpSolution sol = solve_exact(lp, fs);
    // y = 4 - x with x <= 10, so the optimum is x = 10, y = -6
    CHECK(sol.optimum == -2);
    CHECK(sol.primal[x] == 10);
    CHECK(sol.primal[y] == -6);
    CHECK_NOTHROW(verify_solution(lp, sol));
  }
}

TEST_CASE("fractional optimum") {
  // max x + y  s.t. 2x + y <= 3, x + 2y <= 3
  LinearProgram lp;
  std::size_t x = lp.add_variable("x", 1);
  std::size_t y = lp.add_variable("y", 1);
  lp.add_constraint({{x, 2}, {y, 1}}, Relation::le, 3);
  lp.add_constraint({{x, 1}, {y, 2}}, Relation::le, 3);
  LpSolution sol = solve_exact(lp);
  CHECK(sol.optimum == 2);
  CHECK(sol.dual[0] == Rational(1, 3));
  CHECK(sol.dual[1] == Rational(1, 3));
}

TEST_CASE("verify_solution rejects a wrong certificate") {
  LinearProgram lp;
  std::size_t x = lp.add_variable("x", 1);
  lp.add_constraint({{x, 1}}, Relation::le, 3);
  LpSolution sol = solve_exact(lp);
  sol.optimum = 4;
  CHECK_THROWS_AS(verify_solution(lp, sol), std::logic_error);
}

TEST_CASE("random programs agree with vertex enumeration") {
  Rng rng(77);
  int solved = 0;
  for (int trial = 0; trial < 150; ++trial) {
    LinearProgram lp = oracle::random_lp(rng, 2 + rng.below(3), 2 + rng.below(4));
    auto expected = oracle::vertex_enumeration(lp);
    for (bool fs : {true, false}) {
      if (expected) {
        LpSolution sol = solve_exact(lp, fs);
        CHECK(sol.optimum == *expected);
        CHECK_NOTHROW(verify_solution(lp, sol));
      } else {
        CHECK_THROWS_AS(solve_exact(lp, fs), InfeasibleError);
      }
    }
    solved += expected.has_value();
  }
  CHECK(solved > 30);
}

TEST_CASE("dump lists rows with rational literals") {
  LinearProgram lp;
  std::size_t x = lp.add_variable("x", Rational(1, 2));
  lp.add_constraint({{x, Rational(3, 4)}}, Relation::ge, 1, "r1");
  std::string text = dump(lp);
  CHECK(text.find("1/2") != std::string::npos);
  CHECK(text.find("3/4") != std::string::npos);
  CHECK(text.find("r1") != std::string::npos);
  CHECK(text.find(">=") != std::string::npos);
}
