#include "doctest.h"
#include "oracles.hpp"
#include "spanoid/catalog.hpp"
#include "spanoid/error.hpp"
#include "spanoid/family.hpp"
#include "spanoid/lp.hpp"
#include "spanoid/product.hpp"
#include "spanoid/rank.hpp"

using namespace spanoid;

namespace {

bool family_included(const SetFamily& a, const SetFamily& b) {
  for (const auto& s : a.members())
    if (!b.contains(s)) return false;
  return true;
}

}  // namespace

TEST_CASE("product names and indexing") {
  CHECK(parse_product_kind("dot") == ProductKind::dot);
  CHECK(parse_product_kind("tensor") == ProductKind::tensor);
  CHECK(parse_product_kind("semidirect") == ProductKind::semidirect);
  CHECK(to_string(ProductKind::tensor) == "tensor");
  CHECK_THROWS_AS(parse_product_kind("cartesian"), DomainError);
  ProductSpanoid p = product_tensor(free_spanoid(2), free_spanoid(3));
  CHECK(p.spanoid.size() == 6);
  CHECK(p.index(1, 2) == 5);
  CHECK(p.coordinates(4) == std::pair<Element, Element>{1, 1});
  for (Element e = 0; e < 6; ++e) CHECK(p.index(p.coordinates(e).first, p.coordinates(e).second) == e);
}

TEST_CASE("catalog products") {
  CHECK(rank(product_semidirect(pentagon(), pentagon()).spanoid).rank == 9);
  CHECK(same_closure(product_semidirect(free_spanoid(2), free_spanoid(2)).spanoid, free_spanoid(4)));
  CHECK(same_closure(product_dot(free_spanoid(2), free_spanoid(3)).spanoid, free_spanoid(6)));
  CHECK(rank(product_semidirect(xu_spanoid(), xu_spanoid()).spanoid).rank == 4);
  CHECK(rank(product_tensor(xu_spanoid(), xu_spanoid()).spanoid).rank == 3);
  CHECK(lp_cover(product_dot(pentagon(), pentagon()).spanoid) == Rational(25, 4));
}

TEST_CASE("pentagon tensor square has rank 8") {
  ProductSpanoid t = product_tensor(pentagon(), pentagon());
  Subset eight(25);
  for (auto [i, j] : std::vector<std::pair<Element, Element>>{
           {0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 2}, {2, 3}, {3, 2}, {4, 4}})
    eight.set(t.index(i, j));
  CHECK(eight.count() == 8);
  CHECK(t.spanoid.spans_all(eight));
  RankCertificate c = rank(t.spanoid);
  CHECK(t.spanoid.spans_all(c.witness));
  CHECK(c.rank == 8);
}

TEST_CASE("semidirect rank is multiplicative") {
  Rng rng(81);
  for (int trial = 0; trial < 40; ++trial) {
    Spanoid a = oracle::random_spanoid(rng, 1 + rng.below(4), 6);
    Spanoid b = oracle::random_spanoid(rng, 1 + rng.below(4), 6);
    ProductSpanoid p = product_semidirect(a, b);
    std::size_t want = rank(a).rank * rank(b).rank;
    CHECK(rank(p.spanoid).rank == want);
    RankCertificate c = semidirect_rank(p);
    CHECK(c.rank == want);
    CHECK(p.spanoid.spans_all(c.witness));
  }
}

TEST_CASE("dot cover is the product of the covers") {
  Rng rng(83);
  for (int trial = 0; trial < 30; ++trial) {
    Spanoid a = oracle::random_spanoid(rng, 1 + rng.below(4), 6);
    Spanoid b = oracle::random_spanoid(rng, 1 + rng.below(4), 6);
    CHECK(lp_cover(product_dot(a, b).spanoid) == lp_cover(a) * lp_cover(b));
  }
}

TEST_CASE("semidirect entropy is at most the product") {
  Rng rng(85);
  for (int trial = 0; trial < 15; ++trial) {
    Spanoid a = oracle::random_spanoid(rng, 1 + rng.below(3), 5);
    Spanoid b = oracle::random_spanoid(rng, 1 + rng.below(3), 5);
    Rational ea = lp_entropy(a).optimum;
    Rational eb = lp_entropy(b).optimum;
    CHECK(lp_entropy(product_semidirect(a, b).spanoid).optimum <= ea * eb);
  }
}

TEST_CASE("open families are nested across the three products") {
  Rng rng(87);
  for (int trial = 0; trial < 30; ++trial) {
    Spanoid a = oracle::random_spanoid(rng, 1 + rng.below(4), 6);
    Spanoid b = oracle::random_spanoid(rng, 1 + rng.below(4), 6);
    SetFamily od = open_sets(product_dot(a, b).spanoid);
    SetFamily ot = open_sets(product_tensor(a, b).spanoid);
    SetFamily os = open_sets(product_semidirect(a, b).spanoid);
    CHECK(family_included(od, ot));
    CHECK(family_included(ot, os));
  }
}

TEST_CASE("stored rules give the same products as derived inferences") {
  Rng rng(89);
  for (int trial = 0; trial < 30; ++trial) {
    Spanoid a = oracle::random_spanoid(rng, 1 + rng.below(4), 6);
    Spanoid b = oracle::random_spanoid(rng, 1 + rng.below(4), 6);
    for (auto kind : {ProductKind::tensor, ProductKind::semidirect})
      CHECK(same_closure(product(kind, a, b).spanoid, product_over_derived(kind, a, b)));
  }
}
