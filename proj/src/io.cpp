#include "spanoid/io.hpp"

#include <fstream>
#include <sstream>

#include "spanoid/error.hpp"

namespace spanoid {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    Line line{number, {}};
    for (std::string w; words >> w;) line.tokens.push_back(w);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

std::uint64_t parse_count(const std::string& token, std::size_t line) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("expected a nonnegative integer, got '" + token + "'", line);
  try {
    return std::stoull(token);
  } catch (const std::exception&) {
    throw ParseError("integer out of range: '" + token + "'", line);
  }
}

Element parse_element(const std::string& token, std::size_t n, std::size_t line) {
  std::uint64_t v = parse_count(token, line);
  if (v < 1 || v > n)
    throw ParseError("element " + token + " outside 1.." + std::to_string(n), line);
  return static_cast<Element>(v - 1);
}

std::size_t expect_header(const std::vector<Line>& lines, std::size_t& pos, const char* key) {
  if (pos >= lines.size() || lines[pos].tokens.size() != 2 || lines[pos].tokens[0] != key)
    throw ParseError(std::string("expected '") + key + " <int>'",
                     pos < lines.size() ? lines[pos].number : 0);
  std::size_t v = parse_count(lines[pos].tokens[1], lines[pos].number);
  ++pos;
  return v;
}

Rule parse_rule(const Line& line, std::size_t n) {
  const auto& t = line.tokens;
  if (t.size() < 3 || t[t.size() - 2] != "->")
    throw ParseError("expected 'rule <i1> ... -> <j>'", line.number);
  Rule r;
  for (std::size_t k = 1; k + 2 < t.size(); ++k) r.premise.push_back(parse_element(t[k], n, line.number));
  r.conclusion = parse_element(t.back(), n, line.number);
  return r;
}

std::string rule_line(const Rule& r) {
  std::string s = "rule";
  for (Element e : r.premise) s += " " + std::to_string(e + 1);
  return s + " -> " + std::to_string(r.conclusion + 1) + "\n";
}

}  // namespace

std::string format_subset(const Subset& s) {
  std::string out;
  s.for_each([&](Element e) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e + 1);
  });
  return out;
}

Spanoid parse_spanoid(const std::string& text) {
  auto lines = tokenize(text);
  std::size_t pos = 0;
  std::size_t n = expect_header(lines, pos, "n");
  if (n == 0) throw ParseError("n must be positive", lines[0].number);
  std::vector<Rule> rules;
  for (; pos < lines.size(); ++pos) {
    if (lines[pos].tokens[0] != "rule")
      throw ParseError("unknown directive '" + lines[pos].tokens[0] + "'", lines[pos].number);
    rules.push_back(parse_rule(lines[pos], n));
  }
  return Spanoid(n, std::move(rules));
}

std::string format_spanoid(const Spanoid& sp) {
  std::string out = "# spanoid v1\nn " + std::to_string(sp.size()) + "\n";
  for (const auto& r : sp.rules()) out += rule_line(r);
  return out;
}

SetFamily parse_family(const std::string& text) {
  auto lines = tokenize(text);
  std::size_t pos = 0;
  std::size_t n = expect_header(lines, pos, "n");
  if (n == 0) throw ParseError("n must be positive", lines[0].number);
  std::vector<Subset> members;
  for (; pos < lines.size(); ++pos) {
    const auto& line = lines[pos];
    if (line.tokens[0] != "set")
      throw ParseError("unknown directive '" + line.tokens[0] + "'", line.number);
    Subset s(n);
    if (line.tokens.size() == 2 && line.tokens[1] == "empty") {
      members.push_back(s);
      continue;
    }
    if (line.tokens.size() < 2) throw ParseError("empty set must be written 'set empty'", line.number);
    for (std::size_t k = 1; k < line.tokens.size(); ++k) s.set(parse_element(line.tokens[k], n, line.number));
    members.push_back(s);
  }
  return SetFamily(n, std::move(members));
}

std::string format_family(const SetFamily& fam) {
  std::string out = "# family v1\nn " + std::to_string(fam.universe()) + "\n";
  for (const auto& m : fam.members()) out += m.none() ? "set empty\n" : "set " + format_subset(m) + "\n";
  return out;
}

Code parse_code(const std::string& text) {
  auto lines = tokenize(text);
  std::size_t pos = 0;
  std::size_t n = expect_header(lines, pos, "n");
  std::uint64_t s = expect_header(lines, pos, "s");
  std::vector<Word> words;
  for (; pos < lines.size(); ++pos) {
    const auto& line = lines[pos];
    if (line.tokens.size() != n)
      throw ParseError("word has " + std::to_string(line.tokens.size()) + " symbols, expected " +
                           std::to_string(n),
                       line.number);
    Word w;
    for (const auto& tok : line.tokens) {
      std::uint64_t v = parse_count(tok, line.number);
      if (v >= s) throw ParseError("symbol " + tok + " outside 0.." + std::to_string(s - 1), line.number);
      w.push_back(v);
    }
    words.push_back(std::move(w));
  }
  try {
    return Code(n, s, std::move(words));
  } catch (const DomainError& e) {
    throw IoError(std::string("invalid code: ") + e.what());
  }
}

std::string format_code(const Code& c) {
  std::string out = "# code v1\nn " + std::to_string(c.length()) + "\ns " + std::to_string(c.alphabet()) + "\n";
  for (const auto& w : c.words()) {
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(w[k]);
    }
    out += '\n';
  }
  return out;
}

LcsInstance parse_lcs(const std::string& text) {
  auto lines = tokenize(text);
  std::size_t pos = 0;
  std::size_t n = expect_header(lines, pos, "n");
  if (n == 0) throw ParseError("n must be positive", lines[0].number);
  std::size_t q = expect_header(lines, pos, "q");
  if (pos >= lines.size() || lines[pos].tokens.size() != 2 || lines[pos].tokens[0] != "delta")
    throw ParseError("expected 'delta <p/q>'", pos < lines.size() ? lines[pos].number : 0);
  Rational delta;
  try {
    delta = parse_rational(lines[pos].tokens[1]);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), lines[pos].number);
  }
  ++pos;
  std::vector<Rule> rules;
  std::vector<Matching> matchings(n);
  for (; pos < lines.size(); ++pos) {
    const auto& line = lines[pos];
    const auto& t = line.tokens;
    if (t[0] == "rule") {
      rules.push_back(parse_rule(line, n));
    } else if (t[0] == "match") {
      if (t.size() < 4 || t[2] != ":") throw ParseError("expected 'match <i> : <j1> ... <jq>'", line.number);
      Element i = parse_element(t[1], n, line.number);
      std::vector<Element> subset;
      for (std::size_t k = 3; k < t.size(); ++k) subset.push_back(parse_element(t[k], n, line.number));
      matchings[i].push_back(std::move(subset));
    } else {
      throw ParseError("unknown directive '" + t[0] + "'", line.number);
    }
  }
  return LcsInstance{Spanoid(n, std::move(rules)), q, delta, std::move(matchings)};
}

std::string format_lcs(const LcsInstance& inst) {
  std::string out = "# lcs v1\nn " + std::to_string(inst.spanoid.size()) + "\nq " + std::to_string(inst.q) +
                    "\ndelta " + to_string(inst.delta) + "\n";
  for (const auto& r : inst.spanoid.rules()) out += rule_line(r);
  for (Element i = 0; i < inst.matchings.size(); ++i)
    for (const auto& t : inst.matchings[i]) {
      out += "match " + std::to_string(i + 1) + " :";
      for (Element e : t) out += " " + std::to_string(e + 1);
      out += '\n';
    }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << text;
  if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace spanoid
