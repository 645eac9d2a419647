#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "spanoid/catalog.hpp"
#include "spanoid/error.hpp"
#include "spanoid/family.hpp"
#include "spanoid/io.hpp"
#include "spanoid/rank.hpp"

using namespace spanoid;

namespace {

SetFamily family(std::size_t n, std::vector<std::vector<Element>> sets) {
  std::vector<Subset> members;
  for (const auto& s : sets) members.push_back(Subset::of(n, s));
  return SetFamily(n, members);
}

}  // namespace

TEST_CASE("closed sets of the catalog") {
  CHECK(closed_sets(xu_spanoid()) == xu_closed_sets());
  CHECK(closed_sets(free_spanoid(3)).size() == 8);
  CHECK(closed_sets(pentagon()).size() == 17);
  CHECK(closed_sets(pentagon()).intersection_closed());
  CHECK(open_sets(pentagon()).union_closed());
}

TEST_CASE("open sets are the complements of closed sets") {
  CHECK(open_sets(xu_spanoid()) == xu_closed_sets().complements());
  Rng rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    Spanoid sp = oracle::random_spanoid(rng, 1 + rng.below(8), 12);
    CHECK(open_sets(sp) == closed_sets(sp).complements());
  }
}

TEST_CASE("minimal opens") {
  CHECK(minimal_open_sets(free_spanoid(2)) == family(2, {{0}, {1}}));
  SetFamily pent = family(5, {{0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}});
  CHECK(minimal_open_sets(pentagon()) == pent);
  CHECK(irreducible_open_sets(pentagon()) == pent);
  CHECK(minimal_open_sets(xu_spanoid()) == family(4, {{0, 1}, {0, 2}, {1, 2, 3}}));
}

TEST_CASE("closed sets match the naive oracle") {
  Rng rng(5);
  for (int trial = 0; trial < 80; ++trial) {
    Spanoid sp = oracle::random_spanoid(rng, 1 + rng.below(9), 14);
    SetFamily fam = closed_sets(sp);
    auto naive = oracle::naive_closed_sets(sp);
    REQUIRE(fam.size() == naive.size());
    for (const auto& c : naive) {
      Subset s(sp.size());
      for (int e : c) s.set(Element(e));
      CHECK(fam.contains(s));
    }
  }
}

TEST_CASE("closed families round trip through the spanoid") {
  Rng rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    Spanoid sp = oracle::random_spanoid(rng, 1 + rng.below(8), 12);
    SetFamily fam = closed_sets(sp);
    Spanoid back = from_closed_family(fam);
    CHECK(same_closure(sp, back));
    CHECK(closed_sets(back) == fam);
  }
  CHECK_THROWS_AS(from_closed_family(family(3, {{0}, {1}, {0, 1, 2}})), DomainError);
  CHECK_THROWS_AS(from_closed_family(family(3, {{0}})), DomainError);
}

TEST_CASE("intersection representation") {
  CHECK(intersection_dimension(set_representation(pentagon())) == 3);
  CHECK(intersection_dimension(set_representation(free_spanoid(2))) == 2);
  Rng rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    Spanoid sp = oracle::random_spanoid(rng, 1 + rng.below(8), 12);
    SetRepresentation rep = set_representation(sp);
    CHECK(rep.flavor == SetRepresentation::Flavor::intersection);
    CHECK(same_closure(sp, spanoid_of(rep)));
    CHECK(same_closure(sp, spanoid_of(rep.complemented())));
  }
}

TEST_CASE("xu spanoid under its intersection representation") {
  Spanoid xu = xu_spanoid();
  SetRepresentation rep = set_representation(xu);
  const Mask full = low_bits(4);
  for (Mask a = 0; a <= full; ++a) {
    for (Element i = 0; i < 4; ++i) {
      Subset inter = Subset::full(rep.universe);
      for (Element j = 0; j < 4; ++j)
        if (a >> j & 1) inter &= rep.sets[j];
      CHECK(inter.is_subset_of(rep.sets[i]) == xu.models(Subset::from_mask(4, a), i));
    }
  }
}

TEST_CASE("union families") {
  std::vector<Subset> tri{Subset::of(3, {0, 1}), Subset::of(3, {1, 2}), Subset::of(3, {0, 2})};
  CHECK(rank(from_union_family(3, tri)).rank == 2);
  CHECK(rank(from_union_family(2, {Subset::of(2, {0, 1})})).rank == 1);
  SetRepresentation rep = pentagon_union_representation();
  CHECK(rep.flavor == SetRepresentation::Flavor::union_);
  Spanoid sp = spanoid_of(rep);
  Spanoid pent = pentagon();
  for (const Rule& r : pent.rules()) CHECK(sp.has_rule(r));
}

TEST_CASE("family gaps") {
  SetFamily f = family(3, {{0}, {1}, {0, 1, 2}});
  CHECK_FALSE(f.intersection_closed());
  REQUIRE(f.intersection_gap().has_value());
  CHECK(family(3, {{}, {0}, {1}, {0, 1}}).union_closed());
  CHECK_FALSE(family(3, {{0}, {1}}).union_closed());
  CHECK(family(3, {{0, 1}, {0}, {1, 2}}).minimal_nonempty() == family(3, {{0}, {1, 2}}));
}
