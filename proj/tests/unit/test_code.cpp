#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "spanoid/catalog.hpp"
#include "spanoid/code.hpp"
#include "spanoid/error.hpp"
#include "spanoid/lp.hpp"
#include "spanoid/product.hpp"

using namespace spanoid;

namespace {

Code all_words(std::size_t n, std::uint64_t s) {
  std::vector<Word> words;
  Word w(n, 0);
  while (true) {
    words.push_back(w);
    std::size_t i = n;
    while (i > 0 && w[i - 1] == s - 1) w[--i] = 0;
    if (i == 0) break;
    ++w[i - 1];
  }
  return Code(n, s, words);
}

// Drops universe elements that no set contains.
SetRepresentation compact(const SetRepresentation& rep) {
  std::vector<Element> keep;
  for (Element u = 0; u < rep.universe; ++u)
    for (const auto& s : rep.sets)
      if (s.test(u)) {
        keep.push_back(u);
        break;
      }
  SetRepresentation out{keep.size(), {}, rep.flavor};
  for (const auto& s : rep.sets) {
    Subset t(keep.size());
    for (Element k = 0; k < keep.size(); ++k)
      if (s.test(keep[k])) t.set(k);
    out.sets.push_back(t);
  }
  return out;
}

}  // namespace

TEST_CASE("code validation") {
  CHECK_THROWS_AS(Code(2, 2, {{0, 1, 0}}), DomainError);
  CHECK_THROWS_AS(Code(2, 2, {{0, 2}}), DomainError);
  CHECK_THROWS_AS(Code(2, 2, {{0, 1}, {0, 1}}), DomainError);
  CHECK(Code(2, 2, {}).size() == 0);
}

TEST_CASE("consistency checks") {
  Spanoid p = pentagon();
  CHECK_FALSE(check_consistent(p, Code(5, 2, {{1, 0, 1, 1, 0}})).has_value());
  CHECK_FALSE(check_consistent(free_spanoid(5), all_words(5, 2)).has_value());
  auto v = check_consistent(p, all_words(5, 2));
  REQUIRE(v.has_value());
  CHECK(v->rule == Rule{{0, 1}, 3});
  CHECK(v->first[0] == v->second[0]);
  CHECK(v->first[1] == v->second[1]);
  CHECK(v->first[3] != v->second[3]);
  CHECK(v->first == Word{0, 0, 0, 0, 0});
  CHECK(v->second == Word{0, 0, 0, 1, 0});
}

TEST_CASE("dimensions") {
  CHECK(*code_dimension(Code(3, 2, {{0, 0, 0}})).exact == 0);
  CHECK(*code_dimension(all_words(3, 2)).exact == 3);
  CHECK(*code_dimension(all_words(2, 4)).exact == 2);
  Dimension d = code_dimension(Code(2, 2, {{0, 0}, {0, 1}, {1, 0}}));
  CHECK_FALSE(d.exact.has_value());
  CHECK(d.value == doctest::Approx(std::log2(3.0)));
}

TEST_CASE("union codes") {
  UnionCode c = code_from_union_representation(pentagon_union_representation(), 2);
  CHECK(c.dimension() == Rational(5, 2));
  // coordinate 1 reads bits 2 and 5
  for (Element u = 0; u < 5; ++u) {
    std::vector<bool> x(5, false);
    x[u] = true;
    CHECK((c.word(x)[0] != 0) == (u == 1 || u == 4));
  }
  CHECK_FALSE(c.first_violation(pentagon()).has_value());
  Code m = c.materialize();
  CHECK(m.size() == 32);
  CHECK(m.alphabet() == 4);
  CHECK_FALSE(check_consistent(pentagon(), m).has_value());
  CHECK(oracle::naive_consistent(pentagon(), m));

  SetRepresentation single{1, {Subset::of(1, {0})}, SetRepresentation::Flavor::union_};
  CHECK(code_from_union_representation(single, 1).dimension() == 1);

  SetRepresentation xu = compact(set_representation(xu_spanoid()).complemented());
  UnionCode xc(xu, xu.universe);
  CHECK_FALSE(xc.first_violation(xu_spanoid()).has_value());
  CHECK_FALSE(check_consistent(xu_spanoid(), xc.materialize()).has_value());
}

TEST_CASE("first_violation agrees with materialized checks") {
  Rng rng(61);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t u = 1 + rng.below(6);
    std::size_t n = 1 + rng.below(5);
    SetRepresentation rep{u, {}, SetRepresentation::Flavor::union_};
    for (std::size_t i = 0; i < n; ++i) rep.sets.push_back(Subset::from_mask(u, rng.below(Mask{1} << u)));
    rep = compact(rep);
    if (rep.universe == 0) continue;
    UnionCode c(rep, rep.universe);
    Spanoid target = oracle::random_spanoid(rng, n, 6);
    Code m = c.materialize();
    CHECK(c.first_violation(target).has_value() == !oracle::naive_consistent(target, m));
  }
}

TEST_CASE("cover codes") {
  UnionCode p = build_cover_code(pentagon());
  CHECK(p.dimension() == Rational(5, 2));
  CHECK_FALSE(p.first_violation(pentagon()).has_value());
  CHECK(build_cover_code(free_spanoid(2)).dimension() == 2);
  UnionCode x = build_cover_code(xu_spanoid());
  CHECK(x.dimension() == Rational(3, 2));
  CHECK_FALSE(x.first_violation(xu_spanoid()).has_value());
  Rng rng(63);
  for (int trial = 0; trial < 40; ++trial) {
    Spanoid sp = oracle::random_spanoid(rng, 1 + rng.below(7), 12);
    UnionCode c = build_cover_code(sp);
    CHECK(c.dimension() == lp_cover(sp));
    CHECK_FALSE(c.first_violation(sp).has_value());
  }
}

TEST_CASE("small alphabet sampling") {
  SampledCode s = sample_small_alphabet_code(pentagon(), 1, 100);
  CHECK(s.members == 4);
  CHECK(s.max_load == 2);
  CHECK(s.code.ell() == 2);
  CHECK(s.code.dimension() == 2);
  CHECK(s.code.dimension() >= Rational(5, 4));
  CHECK_FALSE(s.code.first_violation(pentagon()).has_value());
  CHECK(sample_small_alphabet_code(free_spanoid(4), 1, 100).code.dimension() == 4);
}

TEST_CASE("maximum consistent codes") {
  Spanoid p = pentagon();
  CHECK(max_consistent_code(p, 1).code.size() == 1);
  CHECK(max_consistent_code(p, 2).code.size() == 5);
  CHECK(max_consistent_code(p, 2, false).code.size() == 5);
  CHECK(max_consistent_code(p, 3).code.size() == 12);
  CHECK(max_consistent_code(free_spanoid(2), 3).code.size() == 9);
  Rng rng(67);
  for (int trial = 0; trial < 20; ++trial) {
    Spanoid sp = oracle::random_spanoid(rng, 1 + rng.below(4), 8);
    double h = to_double(lp_entropy(sp).optimum);
    std::size_t prev = 0;
    for (std::uint64_t s = 1; s <= 3; ++s) {
      Code c = max_consistent_code(sp, s).code;
      CHECK(oracle::naive_consistent(sp, c));
      CHECK(c.size() >= prev);
      CHECK(double(c.size()) <= std::pow(double(s), h) + 1e-9);
      CHECK(max_consistent_code(sp, s, false).code.size() == c.size());
      prev = c.size();
    }
  }
}

TEST_CASE("tensored codes are consistent with the semidirect product") {
  Rng rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    Spanoid a = oracle::random_spanoid(rng, 1 + rng.below(4), 6);
    Spanoid b = oracle::random_spanoid(rng, 1 + rng.below(4), 6);
    UnionCode ca = build_cover_code(a);
    UnionCode cb = build_cover_code(b);
    UnionCode t = tensor(ca, cb);
    CHECK(t.dimension() == ca.dimension() * cb.dimension());
    CHECK_FALSE(t.first_violation(product_semidirect(a, b).spanoid).has_value());
  }
}
