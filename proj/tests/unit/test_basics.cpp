#include <set>

#include "doctest.h"
#include "spanoid/error.hpp"
#include "spanoid/rational.hpp"
#include "spanoid/rng.hpp"
#include "spanoid/subset.hpp"

using namespace spanoid;

TEST_CASE("subset basic operations") {
  Subset s = Subset::of(70, {0, 3, 65});
  CHECK(s.count() == 3);
  CHECK(s.test(65));
  CHECK_FALSE(s.test(64));
  CHECK(s.first() == 0);
  CHECK(s.next(3) == 65);
  CHECK(s.elements() == std::vector<Element>{0, 3, 65});
  s.reset(0);
  CHECK(s.first() == 3);
  CHECK(s.complement().count() == 68);
  CHECK(Subset(5).first() == 5);
  CHECK(Subset::full(5).is_full());
  CHECK(Subset::of(5, {1}).is_subset_of(Subset::of(5, {1, 2})));
  CHECK_FALSE(Subset::of(5, {1}).intersects(Subset::of(5, {2})));
  CHECK((Subset::of(5, {1, 2}) - Subset::of(5, {2})) == Subset::of(5, {1}));
}

TEST_CASE("subset order is the integer order") {
  std::vector<Subset> all;
  for (Mask m = 0; m < 32; ++m) all.push_back(Subset::from_mask(5, m));
  for (std::size_t i = 0; i + 1 < all.size(); ++i) {
    CHECK(all[i] < all[i + 1]);
    CHECK(set_less(all[i].elements(), all[i + 1].elements()));
  }
  CHECK(Subset::from_mask(5, 19).mask() == 19);
}

TEST_CASE("next_combination walks k-subsets in increasing order") {
  std::vector<Mask> seen;
  for (Mask v = low_bits(3); v < (Mask{1} << 6); v = next_combination(v)) seen.push_back(v);
  CHECK(seen.size() == 20);
  for (std::size_t i = 0; i + 1 < seen.size(); ++i) CHECK(seen[i] < seen[i + 1]);
  for (Mask v : seen) CHECK(popcount(v) == 3);
}

TEST_CASE("rational formatting and parsing") {
  CHECK(to_string(Rational(5, 2)) == "5/2");
  CHECK(to_string(Rational(4, 2)) == "2");
  CHECK(to_string(Rational(-3, 6)) == "-1/2");
  CHECK(parse_rational("10/4") == Rational(5, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
  CHECK(floor_div(Rational(-5, 2)) == -3);
  CHECK(ceil(Rational(5, 2)) == 3);
  CHECK(ceil(Rational(3)) == 3);
  CHECK(to_double(Rational(1, 4)) == 0.25);
}

TEST_CASE("rng is reproducible and in range") {
  Rng a(42), b(42);
  for (int k = 0; k < 100; ++k) CHECK(a.next() == b.next());
  Rng r(7);
  for (int k = 0; k < 1000; ++k) CHECK(r.below(13) < 13);
  for (int k = 0; k < 1000; ++k) {
    double u = r.unit();
    CHECK(u >= 0);
    CHECK(u < 1);
  }
  CHECK_FALSE(r.bernoulli(Rational(0)));
  CHECK(r.bernoulli(Rational(1)));
  std::set<std::uint64_t> streams;
  for (std::uint64_t s = 0; s < 100; ++s) streams.insert(split_seed(5, s));
  CHECK(streams.size() == 100);
  CHECK(split_seed(5, 3) == split_seed(5, 3));
}

TEST_CASE("exit codes follow the error taxonomy") {
  CHECK(exit_code(DomainError("x")) == 1);
  CHECK(exit_code(ValidationError("x")) == 1);
  CHECK(exit_code(RetriesExhausted("x")) == 1);
  CHECK(exit_code(CapacityError("x")) == 2);
  CHECK(exit_code(BudgetError("x", 1, 2)) == 2);
  CHECK(exit_code(IoError("x")) == 3);
  CHECK(exit_code(ParseError("x", 4)) == 3);
  CHECK(std::string(ParseError("bad", 4).what()) == "line 4: bad");
}
