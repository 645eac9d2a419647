#include "doctest.h"
#include "oracles.hpp"
#include "spanoid/catalog.hpp"
#include "spanoid/error.hpp"
#include "spanoid/family.hpp"
#include "spanoid/lp.hpp"
#include "spanoid/rank.hpp"

using namespace spanoid;

TEST_CASE("cover values") {
  CHECK(lp_cover(pentagon()) == Rational(5, 2));
  CHECK(lp_cover(free_spanoid(3)) == 3);
  CHECK(lp_cover(xu_spanoid()) == Rational(3, 2));
  CHECK(lp_cover(uniform_matroid(2, 4)) == Rational(4, 3));
}

TEST_CASE("xu cover against vertex enumeration") {
  LinearProgram lp = cover_program(xu_spanoid());
  auto expected = oracle::vertex_enumeration(lp);
  REQUIRE(expected.has_value());
  CHECK(*expected == Rational(3, 2));
}

TEST_CASE("cover dual weights") {
  CoverDual d = lp_cover_dual(pentagon());
  CHECK(d.optimum == Rational(5, 2));
  REQUIRE(d.lambda.size() == d.opens.size());
  Rational sum = 0;
  for (const auto& l : d.lambda) sum += l;
  CHECK(sum == Rational(5, 2));
  for (Element i = 0; i < 5; ++i) {
    Rational load = 0;
    for (std::size_t k = 0; k < d.opens.size(); ++k)
      if (d.opens[k].test(i)) load += d.lambda[k];
    CHECK(load <= 1);
  }
  CoverDual f = lp_cover_dual(free_spanoid(1));
  CHECK(f.lambda == std::vector<Rational>{1});
}

TEST_CASE("cover primal and dual agree on random spanoids") {
  Rng rng(51);
  for (int trial = 0; trial < 80; ++trial) {
    Spanoid sp = oracle::random_spanoid(rng, 1 + rng.below(8), 14);
    Rational primal = lp_cover(sp);
    CHECK(lp_cover_dual(sp).optimum == primal);
    CHECK(primal <= Rational(rank(sp).rank));
    CHECK((primal >= 1) == (rank(sp).rank > 0));
  }
}

TEST_CASE("entropy values") {
  CHECK(lp_entropy(pentagon()).optimum == Rational(5, 2));
  CHECK(lp_entropy(pentagon(), EntropyMode::full).optimum == Rational(5, 2));
  CHECK(lp_entropy(free_spanoid(4)).optimum == 4);
  CHECK(lp_entropy(uniform_matroid(2, 4)).optimum == 2);
  CHECK(lp_entropy(xu_spanoid()).optimum == Rational(3, 2));
}

TEST_CASE("full and elemental entropy agree and sit between cover and rank") {
  Rng rng(53);
  for (int trial = 0; trial < 40; ++trial) {
    Spanoid sp = oracle::random_spanoid(rng, 1 + rng.below(5), 10);
    Rational el = lp_entropy(sp).optimum;
    CHECK(lp_entropy(sp, EntropyMode::full).optimum == el);
    CHECK(lp_cover(sp) <= el);
    CHECK(el <= Rational(rank(sp).rank));
  }
}

TEST_CASE("entropy profile respects span") {
  Rng rng(57);
  for (int trial = 0; trial < 30; ++trial) {
    Spanoid sp = oracle::random_spanoid(rng, 1 + rng.below(5), 10);
    EntropyResult r = lp_entropy(sp);
    const Mask full = low_bits(sp.size());
    REQUIRE(r.profile.size() == full + 1);
    CHECK(r.profile[0] == 0);
    CHECK(r.profile[full] == r.optimum);
    for (Mask a = 0; a <= full; ++a) {
      CHECK(r.profile[sp.span(a)] == r.profile[a]);
      for (Element i = 0; i < sp.size(); ++i) {
        CHECK(r.profile[a] <= r.profile[a | bit(i)]);
        CHECK(r.profile[a | bit(i)] <= r.profile[a] + 1);
      }
    }
  }
}

TEST_CASE("entropy caps") {
  Limits tight;
  tight.entropy_full_cap = 4;
  tight.entropy_elemental_cap = 4;
  CHECK_THROWS_AS(lp_entropy(free_spanoid(5), EntropyMode::full, tight), CapacityError);
  CHECK_THROWS_AS(lp_entropy(free_spanoid(5), EntropyMode::elemental, tight), CapacityError);
  CHECK_THROWS_AS(entropy_program(free_spanoid(5), EntropyMode::full, tight), CapacityError);
}
