#include "doctest.h"
#include "oracles.hpp"
#include "spanoid/catalog.hpp"
#include "spanoid/error.hpp"
#include "spanoid/spanoid.hpp"

using namespace spanoid;

namespace {

oracle::Set as_set(const Subset& s) {
  oracle::Set out;
  s.for_each([&](Element e) { out.insert(int(e)); });
  return out;
}

}  // namespace

TEST_CASE("construction") {
  Spanoid p = pentagon();
  CHECK(p.size() == 5);
  CHECK(p.rules().size() == 5);
  CHECK(p.has_rule(Rule{{0, 1}, 3}));
  CHECK(Spanoid(3, {}).rules().empty());
  CHECK_THROWS_AS(Spanoid(2, {Rule{{0}, 2}}), DomainError);
  // duplicates and unsorted premises are normalized
  Spanoid d(3, {Rule{{1, 0}, 2}, Rule{{0, 1}, 2}});
  CHECK(d.rules().size() == 1);
  CHECK(d.rules()[0].premise == std::vector<Element>{0, 1});
}

TEST_CASE("span on the pentagon") {
  Spanoid p = pentagon();
  CHECK(p.span(Subset::of(5, {0, 1})) == Subset::of(5, {0, 1, 3}));
  CHECK(p.span(Subset(5)) == Subset(5));
  CHECK(p.span(Subset::of(5, {0, 1, 2})).is_full());
  CHECK(p.span(Mask{0b00011}) == Mask{0b01011});
}

TEST_CASE("models") {
  Spanoid p = pentagon();
  CHECK(p.models(Subset::of(5, {0, 1}), 3));
  CHECK(p.models(Subset::of(5, {2}), 2));
  CHECK_FALSE(p.models(Subset::of(5, {0, 1}), 2));
}

TEST_CASE("lint reports empty premises and vacuous rules") {
  Spanoid s(3, {Rule{{}, 0}, Rule{{1}, 1}, Rule{{1}, 2}});
  auto notes = s.lint();
  CHECK(notes.size() == 2);
  CHECK(s.empty_premise_rules() == 1);
  CHECK(s.span(Subset(3)) == Subset::of(3, {0}));
}

TEST_CASE("span agrees with the fixpoint oracle and is a closure operator") {
  Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 1 + rng.below(10);
    Spanoid sp = oracle::random_spanoid(rng, n, 3 * n);
    const Mask full = low_bits(n);
    for (Mask a = 0; a <= full; ++a) {
      Subset A = Subset::from_mask(n, a);
      Subset s = sp.span(A);
      REQUIRE(as_set(s) == oracle::naive_span(sp, as_set(A)));
      CHECK(sp.span(a) == s.mask());
      CHECK(A.is_subset_of(s));
      CHECK(sp.span(s) == s);
      // monotone: adding one element never shrinks the span
      for (Element e = 0; e < n; ++e) CHECK((s.mask() & ~sp.span(a | bit(e))) == 0);
    }
  }
}

TEST_CASE("span on universes beyond 64 elements") {
  // chain 0 -> 1 -> ... -> 99
  std::vector<Rule> rules;
  for (Element i = 0; i + 1 < 100; ++i) rules.push_back(Rule{{i}, i + 1});
  Spanoid chain(100, rules);
  CHECK(chain.spans_all(Subset::of(100, {0})));
  CHECK(chain.span(Subset::of(100, {70})).count() == 30);
}

TEST_CASE("from_open_generators") {
  // opens generated by {1,2} and {2,3}: the closed sets are complements of unions
  std::vector<Subset> gens{Subset::of(3, {0, 1}), Subset::of(3, {1, 2})};
  Spanoid sp = Spanoid::from_open_generators(3, gens);
  REQUIRE(sp.open_generators() != nullptr);
  const std::vector<Mask> open{0, 0b011, 0b110, 0b111};
  for (Mask m = 0; m < 8; ++m) {
    bool is_open = std::find(open.begin(), open.end(), m) != open.end();
    CHECK((sp.span(Mask{0b111} & ~m) == (Mask{0b111} & ~m)) == is_open);
  }
}

TEST_CASE("same_closure") {
  CHECK(same_closure(pentagon(), pentagon()));
  CHECK_FALSE(same_closure(pentagon(), free_spanoid(5)));
  // a derived rule added explicitly leaves the closure unchanged
  std::vector<Rule> rules = pentagon().rules();
  rules.push_back(Rule{{0, 1, 2}, 4});
  CHECK(same_closure(pentagon(), Spanoid(5, rules)));
}

TEST_CASE("catalog names") {
  CHECK(named_spanoid("pentagon").rules() == pentagon().rules());
  CHECK(named_spanoid("free:3").size() == 3);
  CHECK(named_spanoid("uniform:2:4").spans_all(Subset::of(4, {1, 3})));
  CHECK_FALSE(named_spanoid("uniform:2:4").spans_all(Subset::of(4, {1})));
  CHECK_THROWS_AS(named_spanoid("hexagon"), DomainError);
}
