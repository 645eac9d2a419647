#include "spanoid/lp.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>

#include "spanoid/error.hpp"
#include "spanoid/family.hpp"

namespace spanoid {

namespace {

std::string braces(const Subset& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Element e) {
    out += (first ? "" : ",") + std::to_string(e + 1);
    first = false;
  });
  return out + "}";
}

std::string braces(std::size_t n, Mask m) { return braces(Subset::from_mask(n, m)); }

// Collects entropy rows with integer coefficients over subset masks,
// dropping zero rows and exact duplicates.
class RowSet {
 public:
  RowSet(LinearProgram& lp, std::size_t n) : lp_(lp), n_(n) {}

  void add(std::map<Mask, long> coefs, Relation rel, long rhs, const std::string& name) {
    std::erase_if(coefs, [](const auto& kv) { return kv.second == 0 || kv.first == 0; });
    if (coefs.empty()) {
      bool ok = rel == Relation::le ? 0 <= rhs : rel == Relation::ge ? 0 >= rhs : rhs == 0;
      if (!ok) throw std::logic_error("entropy row " + name + " is contradictory");
      return;
    }
    Key key{std::vector<std::pair<Mask, long>>(coefs.begin(), coefs.end()), static_cast<int>(rel), rhs};
    if (!seen_.insert(key).second) return;
    std::vector<Term> terms;
    for (const auto& [m, c] : coefs) terms.push_back(Term{static_cast<std::size_t>(m - 1), Rational(c)});
    lp_.add_constraint(std::move(terms), rel, Rational(rhs), name);
  }

  std::string name(Mask m) const { return braces(n_, m); }

 private:
  using Key = std::tuple<std::vector<std::pair<Mask, long>>, int, long>;
  LinearProgram& lp_;
  std::size_t n_;
  std::set<Key> seen_;
};

}  // namespace

LinearProgram cover_program(const Spanoid& sp, const Limits& limits) {
  SetFamily opens = minimal_open_sets(sp, limits);
  LinearProgram lp;
  lp.sense = Sense::minimize;
  for (Element i = 0; i < sp.size(); ++i) lp.add_variable("x" + std::to_string(i + 1), 1);
  for (const auto& o : opens.members()) {
    std::vector<Term> terms;
    o.for_each([&](Element i) { terms.push_back(Term{i, 1}); });
    lp.add_constraint(std::move(terms), Relation::ge, 1, "O" + braces(o));
  }
  return lp;
}

LinearProgram cover_dual_program(const Spanoid& sp, const Limits& limits) {
  SetFamily opens = minimal_open_sets(sp, limits);
  LinearProgram lp;
  lp.sense = Sense::maximize;
  std::vector<std::vector<Term>> rows(sp.size());
  for (std::size_t k = 0; k < opens.size(); ++k) {
    const auto& o = opens.members()[k];
    lp.add_variable("l" + braces(o), 1);
    o.for_each([&](Element i) { rows[i].push_back(Term{k, 1}); });
  }
  for (Element i = 0; i < sp.size(); ++i)
    if (!rows[i].empty()) lp.add_constraint(std::move(rows[i]), Relation::le, 1, "e" + std::to_string(i + 1));
  return lp;
}

Rational lp_cover(const Spanoid& sp, const Limits& limits) {
  LinearProgram lp = cover_program(sp, limits);
  if (lp.constraints.empty()) return 0;
  return solve_exact(lp).optimum;
}

CoverDual lp_cover_dual(const Spanoid& sp, const Limits& limits) {
  CoverDual out;
  out.opens = minimal_open_sets(sp, limits).members();
  if (out.opens.empty()) return out;
  LpSolution dual = solve_exact(cover_dual_program(sp, limits));
  Rational primal = solve_exact(cover_program(sp, limits)).optimum;
  if (primal != dual.optimum)
    throw std::logic_error("cover LP duality gap: primal " + to_string(primal) + ", dual " +
                           to_string(dual.optimum));
  out.optimum = dual.optimum;
  out.lambda = dual.primal;
  return out;
}

LinearProgram entropy_program(const Spanoid& sp, EntropyMode mode, const Limits& limits) {
  const std::size_t n = sp.size();
  const std::size_t cap = mode == EntropyMode::full ? limits.entropy_full_cap : limits.entropy_elemental_cap;
  if (n > cap || n > limits.enumeration_cap)
    throw CapacityError(std::string(mode == EntropyMode::full ? "full" : "elemental") +
                        " entropy LP supports n <= " + std::to_string(cap) + ", got n = " + std::to_string(n));
  const Mask full = low_bits(n);
  LinearProgram lp;
  lp.sense = Sense::maximize;
  for (Mask m = 1; m <= full; ++m) lp.add_variable("f" + braces(n, m), m == full ? 1 : 0);
  RowSet rows(lp, n);

  for (Element i = 0; i < n; ++i) rows.add({{bit(i), 1}}, Relation::le, 1, "unit" + rows.name(bit(i)));
  for (const auto& r : sp.rules()) {
    Mask p = 0;
    for (Element e : r.premise) p |= bit(e);
    if (p & bit(r.conclusion)) continue;
    rows.add({{p | bit(r.conclusion), 1}, {p, -1}}, Relation::eq, 0, "rule" + describe(r));
  }

  if (mode == EntropyMode::full) {
    for (Mask a = 1; a <= full; ++a)
      for (Mask b = a + 1; b <= full; ++b) {
        if ((a & b) == a || (a & b) == b) continue;
        std::map<Mask, long> c;
        c[a | b] += 1;
        c[a & b] += 1;
        c[a] -= 1;
        c[b] -= 1;
        rows.add(std::move(c), Relation::le, 0, "sub" + rows.name(a) + rows.name(b));
      }
    for (Mask b = 1; b <= full; ++b)
      for (Mask a = (b - 1) & b; a; a = (a - 1) & b)
        rows.add({{a, 1}, {b, -1}}, Relation::le, 0, "mono" + rows.name(a) + rows.name(b));
  } else {
    for (Element i = 0; i < n; ++i)
      for (Element j = i + 1; j < n; ++j) {
        const Mask rest = full & ~(bit(i) | bit(j));
        for (Mask a = rest;; a = (a - 1) & rest) {
          std::map<Mask, long> c;
          c[a | bit(i) | bit(j)] += 1;
          c[a] += 1;
          c[a | bit(i)] -= 1;
          c[a | bit(j)] -= 1;
          rows.add(std::move(c), Relation::le, 0,
                   "sub" + rows.name(a) + "+" + std::to_string(i + 1) + "," + std::to_string(j + 1));
          if (a == 0) break;
        }
      }
    for (Element i = 0; i < n; ++i)
      rows.add({{full & ~bit(i), 1}, {full, -1}}, Relation::le, 0, "mono" + rows.name(full & ~bit(i)));
  }
  return lp;
}

EntropyResult lp_entropy(const Spanoid& sp, EntropyMode mode, const Limits& limits) {
  LpSolution sol = solve_exact(entropy_program(sp, mode, limits));
  EntropyResult out;
  out.optimum = sol.optimum;
  out.profile.assign(sol.primal.size() + 1, 0);
  for (std::size_t k = 0; k < sol.primal.size(); ++k) out.profile[k + 1] = sol.primal[k];
  return out;
}

}  // namespace spanoid
