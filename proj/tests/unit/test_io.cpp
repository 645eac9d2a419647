#include <cstdio>
#include <string>

#include "doctest.h"
#include "oracles.hpp"
#include "spanoid/catalog.hpp"
#include "spanoid/error.hpp"
#include "spanoid/family.hpp"
#include "spanoid/io.hpp"
#include "spanoid/lcs.hpp"

using namespace spanoid;

TEST_CASE("spanoid text format") {
  std::string text = format_spanoid(pentagon());
  CHECK(text.find("rule 1 2 -> 4") != std::string::npos);
  Spanoid back = parse_spanoid(text);
  CHECK(back.rules() == pentagon().rules());
  Spanoid c = parse_spanoid("# spanoid v1\n# a comment\nn 3\n\nrule 1 -> 2\nrule -> 3\n");
  CHECK(c.size() == 3);
  CHECK(c.span(Subset::of(3, {0})) == Subset::full(3));
}

TEST_CASE("spanoid round trip on random inputs") {
  Rng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    Spanoid sp = oracle::random_spanoid(rng, 1 + rng.below(10), 20);
    Spanoid back = parse_spanoid(format_spanoid(sp));
    CHECK(back.rules() == sp.rules());
  }
}

TEST_CASE("parse errors carry line numbers") {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_spanoid(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("# spanoid v1\nn 3\nrule 1 -> 4\n") == 3);
  CHECK(line_of("# spanoid v1\nn 3\nrule 1 2 3\n") == 3);
  CHECK(line_of("# spanoid v1\nn three\n") == 2);
  CHECK(line_of("# spanoid v1\nn 3\nrule 0 -> 1\n") == 3);
  CHECK(line_of("# spanoid v1\nn 3\nrule a -> 1\n") == 3);
  CHECK_THROWS_AS(parse_spanoid(""), ParseError);
}

TEST_CASE("family format") {
  SetFamily fam = xu_closed_sets();
  CHECK(parse_family(format_family(fam)) == fam);
  std::string text = format_family(closed_sets(free_spanoid(2)));
  CHECK(text.find("set empty") != std::string::npos);
  CHECK_THROWS_AS(parse_family("# family v1\nn 2\nset 3\n"), ParseError);
}

TEST_CASE("code format") {
  Code c(3, 2, {{0, 1, 1}, {1, 0, 1}});
  Code back = parse_code(format_code(c));
  CHECK(back.words() == c.words());
  CHECK(back.alphabet() == 2);
  CHECK_THROWS_AS(parse_code("# code v1\nn 3\ns 2\n0 1 2\n"), ParseError);
}

TEST_CASE("lcs format") {
  LcsInstance inst = hadamard_spanoid(3);
  LcsInstance back = parse_lcs(format_lcs(inst));
  CHECK(format_lcs(back) == format_lcs(inst));
  CHECK(back.spanoid.size() == inst.spanoid.size());
}

TEST_CASE("files") {
  CHECK_THROWS_AS(read_file("/nonexistent/dir/file.spanoid"), IoError);
  CHECK_THROWS_AS(write_file("/nonexistent/dir/file.spanoid", "x"), IoError);
  std::string path = "io_test_tmp.spanoid";
  write_file(path, format_spanoid(pentagon()));
  CHECK(parse_spanoid(read_file(path)).rules() == pentagon().rules());
  std::remove(path.c_str());
}

TEST_CASE("format_subset is 1-based") {
  CHECK(format_subset(Subset::of(5, {0, 1, 3})) == "1 2 4");
}
