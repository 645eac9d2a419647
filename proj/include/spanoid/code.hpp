#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "spanoid/family.hpp"
#include "spanoid/limits.hpp"
#include "spanoid/rational.hpp"
#include "spanoid/spanoid.hpp"

namespace spanoid {

using Symbol = std::uint64_t;
using Word = std::vector<Symbol>;

class Code {
 public:
  // Rejects wrong lengths, symbols >= s and repeated words.
  Code(std::size_t n, std::uint64_t s, std::vector<Word> words);

  std::size_t length() const { return n_; }
  std::uint64_t alphabet() const { return s_; }
  std::size_t size() const { return words_.size(); }
  const std::vector<Word>& words() const { return words_; }

 private:
  std::size_t n_;
  std::uint64_t s_;
  std::vector<Word> words_;
};

struct Violation {
  Rule rule;
  Word first;
  Word second;
};

// First violated stored rule (in rule order); within it the lexicographically
// smallest agreeing projection, its smallest word, and the smallest word of
// that group differing at the conclusion.
std::optional<Violation> check_consistent(const Spanoid& sp, const Code& c);

struct Dimension {
  std::optional<Rational> exact;  // set when |C| and s are powers of a common base
  double value = 0;
};
Dimension code_dimension(const Code& c);

// Code of a union representation: one bit x_u per universe element, coordinate
// i carries (x_u)_{u in S_i} packed into ell bits, missing positions zero.
class UnionCode {
 public:
  UnionCode(SetRepresentation rep, std::size_t ell);

  std::size_t length() const { return rep_.sets.size(); }
  std::size_t ell() const { return ell_; }
  std::size_t bits() const { return rep_.universe; }
  const SetRepresentation& representation() const { return rep_; }
  // |U| / ell
  Rational dimension() const;

  Word word(const std::vector<bool>& x) const;
  // All 2^|U| words over alphabet 2^ell; needs |U| <= limits.materialize_bits.
  Code materialize(const Limits& limits = default_limits()) const;
  // Exact test without materializing: rule (T, i) holds iff S_i ⊆ ∪_{t∈T} S_t.
  std::optional<Rule> first_violation(const Spanoid& sp) const;

 private:
  SetRepresentation rep_;
  std::size_t ell_;
};

UnionCode code_from_union_representation(const SetRepresentation& rep, std::size_t ell);

// Universe = one bit per member of the multiset H built from the scaled dual.
UnionCode build_cover_code(const Spanoid& sp, const Limits& limits = default_limits());

struct SampledCode {
  UnionCode code;
  std::size_t members = 0;   // |H|
  std::size_t max_load = 0;  // Δ(H)
  std::size_t attempts = 0;
};
SampledCode sample_small_alphabet_code(const Spanoid& sp, std::uint64_t seed, std::size_t retries,
                                       const Limits& limits = default_limits());

// S_(i,j) = S_i × T_j over U1 × U2 with ell = ell1·ell2; element (i,j) sits at i·n2 + j.
UnionCode tensor(const UnionCode& a, const UnionCode& b);

struct MaxCodeResult {
  Code code;
  std::size_t upper_bound = 0;  // the bound that closed the search
  std::uint64_t nodes = 0;
};
// Maximum consistent code over alphabet s by branch and bound over the word
// compatibility graph. With use_entropy_bound the search also stops at
// floor(s^LPentropy); without it the search is purely combinatorial.
MaxCodeResult max_consistent_code(const Spanoid& sp, std::uint64_t s, bool use_entropy_bound = true,
                                  const Limits& limits = default_limits());

}  // namespace spanoid
