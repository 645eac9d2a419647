#include "spanoid/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>

namespace spanoid {

std::size_t LinearProgram::add_variable(std::string name, Rational cost, bool nonneg) {
  names.push_back(std::move(name));
  objective.push_back(std::move(cost));
  nonnegative.push_back(nonneg);
  return names.size() - 1;
}

void LinearProgram::add_constraint(std::vector<Term> terms, Relation rel, Rational rhs, std::string name) {
  constraints.push_back(Constraint{std::move(terms), rel, std::move(rhs), std::move(name)});
}

namespace {

constexpr std::uint32_t kNoSlot = std::numeric_limits<std::uint32_t>::max();
constexpr std::size_t kDead = std::numeric_limits<std::size_t>::max();

struct Entry {
  std::uint32_t slot;
  Rational value;
};
using Row = std::vector<Entry>;

const Rational* find(const Row& row, std::uint32_t slot) {
  auto it = std::lower_bound(row.begin(), row.end(), slot,
                             [](const Entry& e, std::uint32_t s) { return e.slot < s; });
  return it != row.end() && it->slot == slot ? &it->value : nullptr;
}

// dst := (dst without `skip`) + factor * src
void add_scaled(Row& dst, const Rational& factor, const Row& src, std::uint32_t skip) {
  Row out;
  out.reserve(dst.size() + src.size());
  std::size_t i = 0, j = 0;
  while (i < dst.size() || j < src.size()) {
    if (i < dst.size() && dst[i].slot == skip) {
      ++i;
      continue;
    }
    if (j == src.size() || (i < dst.size() && dst[i].slot < src[j].slot)) {
      out.push_back(std::move(dst[i++]));
    } else if (i == dst.size() || src[j].slot < dst[i].slot) {
      out.push_back(Entry{src[j].slot, factor * src[j].value});
      ++j;
    } else {
      Rational v = dst[i].value + factor * src[j].value;
      if (v != 0) out.push_back(Entry{dst[i].slot, std::move(v)});
      ++i;
      ++j;
    }
  }
  dst.swap(out);
}

// Dictionary: x_basic[r] = rhs[r] + sum_slot rows[r][slot] * x_nonbasic[slot],
// objective z = value + sum_slot obj[slot] * x_nonbasic[slot].
class Dictionary {
 public:
  std::vector<Row> rows;
  std::vector<Rational> rhs;
  std::vector<std::size_t> basic;
  std::vector<std::size_t> nonbasic;
  Row obj;
  Rational value;
  std::size_t pivots = 0;

  void pivot(std::size_t r, std::uint32_t k) {
    Rational inv = 1 / *find(rows[r], k);
    Row pr;
    pr.reserve(rows[r].size());
    for (const auto& e : rows[r])
      pr.push_back(Entry{e.slot, e.slot == k ? inv : Rational(-e.value * inv)});
    Rational prhs = -rhs[r] * inv;
    for (std::size_t s = 0; s < rows.size(); ++s) {
      if (s == r) continue;
      const Rational* c = find(rows[s], k);
      if (!c) continue;
      Rational cv = *c;
      rhs[s] += cv * prhs;
      add_scaled(rows[s], cv, pr, k);
    }
    if (const Rational* c = find(obj, k)) {
      Rational cv = *c;
      value += cv * prhs;
      add_scaled(obj, cv, pr, k);
    }
    rows[r] = std::move(pr);
    rhs[r] = std::move(prhs);
    std::swap(basic[r], nonbasic[k]);
    ++pivots;
  }

  // Largest coefficient entering; after a run of degenerate pivots Bland's
  // rule takes over until the objective strictly improves, which rules out
  // cycling. Returns kNoSlot at optimality, else the unbounded slot.
  std::uint32_t optimize() {
    constexpr std::size_t kDegenerateRun = 50;
    std::size_t degenerate = 0;
    for (;;) {
      const bool bland = degenerate >= kDegenerateRun;
      std::uint32_t k = kNoSlot;
      for (const auto& e : obj) {
        if (e.value <= 0 || nonbasic[e.slot] == kDead) continue;
        if (k == kNoSlot) {
          k = e.slot;
          continue;
        }
        const Rational& cur = *find(obj, k);
        if (bland ? nonbasic[e.slot] < nonbasic[k]
                  : e.value > cur || (e.value == cur && nonbasic[e.slot] < nonbasic[k]))
          k = e.slot;
      }
      if (k == kNoSlot) return kNoSlot;
      std::size_t leave = rows.size();
      Rational best;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        const Rational* c = find(rows[r], k);
        if (!c || *c >= 0) continue;
        Rational ratio = rhs[r] / -*c;
        if (leave == rows.size() || ratio < best || (ratio == best && basic[r] < basic[leave])) {
          leave = r;
          best = std::move(ratio);
        }
      }
      if (leave == rows.size()) return k;
      degenerate = best == 0 ? degenerate + 1 : 0;
      pivot(leave, k);
    }
  }
};

struct Standard {
  std::size_t columns = 0;
  std::vector<std::size_t> plus, minus;  // user var -> column (minus = kDead if nonneg)
  std::vector<std::map<std::size_t, Rational>> rows;
  std::vector<Rational> rhs;
  std::vector<std::pair<std::size_t, int>> origin;  // user constraint, sign
  std::vector<Rational> cost;
};

Standard standardize(const LinearProgram& lp) {
  Standard st;
  const std::size_t nv = lp.variables();
  st.plus.resize(nv);
  st.minus.assign(nv, kDead);
  for (std::size_t j = 0; j < nv; ++j) {
    st.plus[j] = st.columns++;
    if (!lp.nonnegative[j]) st.minus[j] = st.columns++;
  }
  st.cost.assign(st.columns, 0);
  for (std::size_t j = 0; j < nv; ++j) {
    Rational c = lp.sense == Sense::maximize ? lp.objective[j] : Rational(-lp.objective[j]);
    st.cost[st.plus[j]] = c;
    if (st.minus[j] != kDead) st.cost[st.minus[j]] = -c;
  }
  for (std::size_t ci = 0; ci < lp.constraints.size(); ++ci) {
    const auto& con = lp.constraints[ci];
    std::map<std::size_t, Rational> row;
    for (const auto& t : con.terms) {
      if (t.var >= nv) throw std::invalid_argument("constraint refers to an unknown variable");
      row[st.plus[t.var]] += t.coef;
      if (st.minus[t.var] != kDead) row[st.minus[t.var]] -= t.coef;
    }
    std::erase_if(row, [](const auto& kv) { return kv.second == 0; });
    auto push = [&](int sign) {
      std::map<std::size_t, Rational> r;
      for (const auto& [col, v] : row) r[col] = sign > 0 ? v : Rational(-v);
      st.rows.push_back(std::move(r));
      st.rhs.push_back(sign > 0 ? con.rhs : Rational(-con.rhs));
      st.origin.emplace_back(ci, sign);
    };
    if (con.relation != Relation::ge) push(+1);
    if (con.relation != Relation::le) push(-1);
  }
  return st;
}

std::string describe_row(const LinearProgram& lp, std::size_t ci) {
  const auto& name = lp.constraints[ci].name;
  return name.empty() ? "row " + std::to_string(ci + 1) : name;
}

// Dense double-precision dictionary with the same layout as Dictionary. Only
// used to guess an optimal basis, which is then solved and checked exactly.
class FloatDictionary {
 public:
  static constexpr double eps = 1e-9;

  FloatDictionary(const Standard& st) : m_(st.rows.size()), w_(st.columns + 1), t_(m_ * w_, 0.0), rhs_(m_) {
    for (std::size_t r = 0; r < m_; ++r) {
      for (const auto& [col, v] : st.rows[r]) t_[r * w_ + col] = -v.convert_to<double>();
      rhs_[r] = st.rhs[r].convert_to<double>();
      basic_.push_back(st.columns + r);
    }
    for (std::size_t j = 0; j <= st.columns; ++j) nonbasic_.push_back(j);
    obj_.assign(w_, 0.0);
  }

  double& at(std::size_t r, std::size_t k) { return t_[r * w_ + k]; }
  std::vector<double>& obj() { return obj_; }
  std::vector<double>& rhs() { return rhs_; }
  std::vector<std::size_t>& basic() { return basic_; }
  std::vector<std::size_t>& nonbasic() { return nonbasic_; }
  std::size_t pivots() const { return pivots_; }
  double value() const { return value_; }
  void set_value(double v) { value_ = v; }
  void kill(std::size_t k) { dead_ = k; }

  void pivot(std::size_t r, std::size_t k) {
    double* pr = &t_[r * w_];
    const double inv = 1 / pr[k];
    for (std::size_t j = 0; j < w_; ++j) pr[j] = j == k ? inv : -pr[j] * inv;
    const double prhs = -rhs_[r] * inv;
    auto eliminate = [&](double* row, double& rhs) {
      const double c = row[k];
      if (c == 0) return;
      row[k] = 0;
      for (std::size_t j = 0; j < w_; ++j)
        if (pr[j] != 0) row[j] += c * pr[j];
      rhs += c * prhs;
    };
    for (std::size_t s = 0; s < m_; ++s)
      if (s != r) eliminate(&t_[s * w_], rhs_[s]);
    eliminate(obj_.data(), value_);
    rhs_[r] = prhs;
    std::swap(basic_[r], nonbasic_[k]);
    ++pivots_;
  }

  // Same rules as the exact dictionary with tolerances. False when unbounded
  // or out of iterations.
  bool optimize(std::size_t limit) {
    std::size_t degenerate = 0;
    while (pivots_ < limit) {
      const bool bland = degenerate >= 50;
      std::size_t k = w_;
      for (std::size_t j = 0; j < w_; ++j) {
        if (j == dead_ || obj_[j] <= eps) continue;
        if (k == w_ || (bland ? nonbasic_[j] < nonbasic_[k] : obj_[j] > obj_[k])) k = j;
      }
      if (k == w_) return true;
      std::size_t leave = m_;
      double best = 0;
      for (std::size_t r = 0; r < m_; ++r) {
        const double c = at(r, k);
        if (c >= -eps) continue;
        const double ratio = std::max(0.0, rhs_[r]) / -c;
        if (leave == m_ || ratio < best - eps ||
            (ratio <= best + eps && (bland ? basic_[r] < basic_[leave] : -c > -at(leave, k)))) {
          leave = r;
          best = ratio;
        }
      }
      if (leave == m_) return false;
      degenerate = best <= eps ? degenerate + 1 : 0;
      pivot(leave, k);
    }
    return false;
  }

 private:
  std::size_t m_, w_;
  std::vector<double> t_;
  std::vector<double> rhs_;
  std::vector<double> obj_;
  std::vector<std::size_t> basic_, nonbasic_;
  double value_ = 0;
  std::size_t pivots_ = 0;
  std::size_t dead_ = std::numeric_limits<std::size_t>::max();
};

struct BasisGuess {
  std::vector<std::size_t> basic;  // standard-form variables, slacks at columns + r
  std::size_t pivots = 0;
};

// Optimal basis of the standard form by floating-point simplex, or empty when
// the float run reports infeasible, unbounded or stalls.
std::optional<BasisGuess> guess_basis(const Standard& st) {
  const std::size_t nc = st.columns;
  const std::size_t m = st.rows.size();
  const std::size_t aux = nc;  // last dictionary column doubles as phase-one variable
  const std::size_t limit = 20 * (m + nc) + 1000;
  FloatDictionary d(st);
  for (auto& b : d.basic()) ++b;  // slacks sit after the auxiliary column
  auto& nb = d.nonbasic();
  nb[aux] = nc + m + 1;  // id of the auxiliary variable, outside the standard range
  auto worst = std::min_element(d.rhs().begin(), d.rhs().end());
  if (worst != d.rhs().end() && *worst < -FloatDictionary::eps) {
    for (std::size_t r = 0; r < m; ++r) d.at(r, aux) = 1;
    d.obj()[aux] = -1;
    d.pivot(static_cast<std::size_t>(worst - d.rhs().begin()), aux);
    if (!d.optimize(limit) || d.value() < -1e-7) return std::nullopt;
    auto at = std::find(d.basic().begin(), d.basic().end(), nc + m + 1);
    if (at != d.basic().end()) {
      const auto r = static_cast<std::size_t>(at - d.basic().begin());
      std::size_t k = nc + 1;
      for (std::size_t j = 0; j <= nc; ++j)
        if (nb[j] != nc + m + 1 && std::abs(d.at(r, j)) > FloatDictionary::eps &&
            (k == nc + 1 || std::abs(d.at(r, j)) > std::abs(d.at(r, k))))
          k = j;
      if (k == nc + 1) return std::nullopt;
      d.pivot(r, k);
    }
  }
  const std::size_t kx = static_cast<std::size_t>(std::find(nb.begin(), nb.end(), nc + m + 1) - nb.begin());
  for (std::size_t r = 0; r < m; ++r) d.at(r, kx) = 0;
  d.kill(kx);
  std::fill(d.obj().begin(), d.obj().end(), 0.0);
  d.set_value(0);
  // Standard ids: structural j is j, slack r is nc + 1 + r in this dictionary.
  for (std::size_t r = 0; r < m; ++r) {
    const std::size_t var = d.basic()[r];
    if (var >= nc) continue;
    const double c = st.cost[var].convert_to<double>();
    if (c == 0) continue;
    d.set_value(d.value() + c * d.rhs()[r]);
    for (std::size_t j = 0; j <= nc; ++j) d.obj()[j] += c * d.at(r, j);
  }
  for (std::size_t j = 0; j <= nc; ++j)
    if (nb[j] < nc) d.obj()[j] += st.cost[nb[j]].convert_to<double>();
  d.obj()[kx] = 0;
  if (!d.optimize(limit)) return std::nullopt;
  BasisGuess g;
  g.pivots = d.pivots();
  for (std::size_t b : d.basic()) {
    if (b == nc + m + 1) return std::nullopt;
    g.basic.push_back(b < nc ? b : b - 1);
  }
  return g;
}

// Solves M z = v by Gaussian elimination; empty when M is singular.
std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> a, std::vector<Rational> v) {
  const std::size_t k = a.size();
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    while (piv < k && a[piv][col] == 0) ++piv;
    if (piv == k) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(v[piv], v[col]);
    const Rational inv = 1 / a[col][col];
    for (std::size_t r = 0; r < k; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col] * inv;
      for (std::size_t c = col; c < k; ++c)
        if (a[col][c] != 0) a[r][c] -= f * a[col][c];
      v[r] -= f * v[col];
    }
  }
  for (std::size_t i = 0; i < k; ++i) v[i] /= a[i][i];
  return v;
}

struct StandardSolution {
  std::vector<Rational> x;      // structural columns
  std::vector<Rational> y;      // one dual per standard row
  Rational value;
};

// Exact primal and dual values of a basis; empty unless both are feasible,
// i.e. unless the basis is optimal.
std::optional<StandardSolution> solve_basis(const Standard& st, const std::vector<std::size_t>& basic) {
  const std::size_t nc = st.columns;
  const std::size_t m = st.rows.size();
  std::vector<bool> in_basis(nc + m, false);
  for (std::size_t b : basic) in_basis[b] = true;
  std::vector<std::size_t> cols, tight;
  for (std::size_t j = 0; j < nc; ++j)
    if (in_basis[j]) cols.push_back(j);
  for (std::size_t r = 0; r < m; ++r)
    if (!in_basis[nc + r]) tight.push_back(r);
  if (cols.size() != tight.size()) return std::nullopt;
  const std::size_t k = cols.size();
  auto coef = [&](std::size_t r, std::size_t j) -> Rational {
    auto it = st.rows[r].find(j);
    return it == st.rows[r].end() ? Rational(0) : it->second;
  };
  std::vector<std::vector<Rational>> a(k, std::vector<Rational>(k)), at(k, std::vector<Rational>(k));
  std::vector<Rational> b(k), c(k);
  for (std::size_t t = 0; t < k; ++t) {
    for (std::size_t u = 0; u < k; ++u) {
      a[t][u] = coef(tight[t], cols[u]);
      at[u][t] = a[t][u];
    }
    b[t] = st.rhs[tight[t]];
  }
  for (std::size_t u = 0; u < k; ++u) c[u] = st.cost[cols[u]];
  auto xb = solve_square(std::move(a), std::move(b));
  if (!xb) return std::nullopt;
  auto yt = solve_square(std::move(at), std::move(c));
  if (!yt) return std::nullopt;

  StandardSolution sol;
  sol.x.assign(nc, 0);
  sol.y.assign(m, 0);
  for (std::size_t u = 0; u < k; ++u) {
    if ((*xb)[u] < 0) return std::nullopt;
    sol.x[cols[u]] = (*xb)[u];
  }
  for (std::size_t t = 0; t < k; ++t) {
    if ((*yt)[t] < 0) return std::nullopt;
    sol.y[tight[t]] = (*yt)[t];
  }
  std::vector<Rational> combo(nc, 0);
  for (std::size_t r = 0; r < m; ++r) {
    Rational lhs = 0;
    for (const auto& [j, v] : st.rows[r]) {
      lhs += v * sol.x[j];
      if (sol.y[r] != 0) combo[j] += sol.y[r] * v;
    }
    if (lhs > st.rhs[r]) return std::nullopt;
  }
  for (std::size_t j = 0; j < nc; ++j) {
    if (combo[j] < st.cost[j]) return std::nullopt;
    sol.value += st.cost[j] * sol.x[j];
  }
  return sol;
}

LpSolution finish(const LinearProgram& lp, const Standard& st, const StandardSolution& s, std::size_t pivots) {
  LpSolution sol;
  sol.pivots = pivots;
  sol.optimum = lp.sense == Sense::maximize ? s.value : Rational(-s.value);
  sol.primal.resize(lp.variables());
  for (std::size_t j = 0; j < lp.variables(); ++j) {
    sol.primal[j] = s.x[st.plus[j]];
    if (st.minus[j] != kDead) sol.primal[j] -= s.x[st.minus[j]];
  }
  sol.dual.assign(lp.constraints.size(), 0);
  for (std::size_t r = 0; r < st.rows.size(); ++r) {
    auto [ci, sign] = st.origin[r];
    if (sign > 0)
      sol.dual[ci] += s.y[r];
    else
      sol.dual[ci] -= s.y[r];
  }
  if (lp.sense == Sense::minimize)
    for (auto& y : sol.dual) y = -y;
  verify_solution(lp, sol);
  return sol;
}

}  // namespace

LpSolution solve_exact(const LinearProgram& lp, bool float_start) {
  if (lp.objective.size() != lp.variables() || lp.nonnegative.size() != lp.variables())
    throw std::invalid_argument("linear program has inconsistent variable arrays");
  Standard st = standardize(lp);
  const std::size_t nc = st.columns;
  const std::size_t m = st.rows.size();

  // A floating-point run proposes a basis; it is accepted only if its exact
  // primal and dual values are feasible. Otherwise the exact dictionary runs.
  if (float_start)
    if (auto guess = guess_basis(st))
      if (auto s = solve_basis(st, guess->basic)) return finish(lp, st, *s, guess->pivots);

  Dictionary d;
  d.rows.resize(m);
  d.rhs = st.rhs;
  for (std::size_t r = 0; r < m; ++r) {
    for (const auto& [col, v] : st.rows[r]) d.rows[r].push_back(Entry{static_cast<std::uint32_t>(col), -v});
    d.basic.push_back(nc + r);
  }
  for (std::size_t j = 0; j < nc; ++j) d.nonbasic.push_back(j);

  auto slot_of = [&](std::size_t var) -> std::uint32_t {
    for (std::uint32_t k = 0; k < d.nonbasic.size(); ++k)
      if (d.nonbasic[k] == var) return k;
    return kNoSlot;
  };

  // Phase one with auxiliary variable x0 = nc + m.
  auto worst = std::min_element(d.rhs.begin(), d.rhs.end());
  if (worst != d.rhs.end() && *worst < 0) {
    const std::size_t aux = nc + m;
    const auto ka = static_cast<std::uint32_t>(d.nonbasic.size());
    d.nonbasic.push_back(aux);
    for (auto& row : d.rows) row.push_back(Entry{ka, 1});
    d.obj = {Entry{ka, -1}};
    d.value = 0;
    std::size_t r0 = 0;
    for (std::size_t r = 1; r < m; ++r)
      if (d.rhs[r] < d.rhs[r0] || (d.rhs[r] == d.rhs[r0] && d.basic[r] < d.basic[r0])) r0 = r;
    d.pivot(r0, ka);
    d.optimize();
    if (d.value < 0) {
      std::vector<std::size_t> rows;
      for (std::size_t r = 0; r < m; ++r) {
        std::uint32_t k = slot_of(nc + r);
        const Rational* y = k == kNoSlot ? nullptr : find(d.obj, k);
        if (y && *y != 0) rows.push_back(st.origin[r].first);
      }
      std::sort(rows.begin(), rows.end());
      rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
      std::string what = "linear program is infeasible; Farkas combination uses";
      for (std::size_t ci : rows) what += " " + describe_row(lp, ci);
      throw InfeasibleError(what, rows);
    }
    auto at = std::find(d.basic.begin(), d.basic.end(), aux);
    if (at != d.basic.end()) {
      std::size_t r = static_cast<std::size_t>(at - d.basic.begin());
      std::uint32_t k = kNoSlot;
      for (const auto& e : d.rows[r])
        if (k == kNoSlot || d.nonbasic[e.slot] < d.nonbasic[k]) k = e.slot;
      if (k == kNoSlot) throw std::logic_error("auxiliary row without nonbasic support");
      d.pivot(r, k);
    }
    std::uint32_t kx = slot_of(aux);
    for (auto& row : d.rows)
      std::erase_if(row, [kx](const Entry& e) { return e.slot == kx; });
    d.nonbasic[kx] = kDead;
  }

  d.obj.clear();
  d.value = 0;
  std::vector<std::int64_t> row_of(nc + m, -1);
  for (std::size_t r = 0; r < m; ++r) row_of[d.basic[r]] = static_cast<std::int64_t>(r);
  for (std::size_t j = 0; j < nc; ++j) {
    if (st.cost[j] == 0) continue;
    if (row_of[j] >= 0) {
      auto r = static_cast<std::size_t>(row_of[j]);
      d.value += st.cost[j] * d.rhs[r];
      add_scaled(d.obj, st.cost[j], d.rows[r], kNoSlot);
    } else {
      add_scaled(d.obj, 1, Row{Entry{slot_of(j), st.cost[j]}}, kNoSlot);
    }
  }

  if (std::uint32_t k = d.optimize(); k != kNoSlot) {
    std::vector<Rational> dir(nc + m + 1, 0);
    if (d.nonbasic[k] < dir.size()) dir[d.nonbasic[k]] = 1;
    for (std::size_t r = 0; r < m; ++r)
      if (const Rational* c = find(d.rows[r], k)) dir[d.basic[r]] = *c;
    std::vector<Rational> ray(lp.variables());
    for (std::size_t j = 0; j < lp.variables(); ++j) {
      ray[j] = dir[st.plus[j]];
      if (st.minus[j] != kDead) ray[j] -= dir[st.minus[j]];
    }
    throw UnboundedError("linear program is unbounded along the reported ray", std::move(ray));
  }

  StandardSolution s;
  s.value = d.value;
  s.x.assign(nc, 0);
  for (std::size_t r = 0; r < m; ++r)
    if (d.basic[r] < nc) s.x[d.basic[r]] = d.rhs[r];
  s.y.assign(m, 0);
  for (std::uint32_t k = 0; k < d.nonbasic.size(); ++k) {
    std::size_t var = d.nonbasic[k];
    if (var == kDead || var < nc || var >= nc + m) continue;
    if (const Rational* c = find(d.obj, k)) s.y[var - nc] = -*c;
  }
  return finish(lp, st, s, d.pivots);
}

void verify_solution(const LinearProgram& lp, const LpSolution& sol) {
  auto fail = [](const std::string& what) { throw std::logic_error("LP certificate check failed: " + what); };
  const std::size_t nv = lp.variables();
  if (sol.primal.size() != nv || sol.dual.size() != lp.constraints.size()) fail("sizes");
  for (std::size_t j = 0; j < nv; ++j)
    if (lp.nonnegative[j] && sol.primal[j] < 0) fail("negative value for " + lp.names[j]);
  Rational obj = 0;
  for (std::size_t j = 0; j < nv; ++j) obj += lp.objective[j] * sol.primal[j];
  if (obj != sol.optimum) fail("objective value");
  const bool max = lp.sense == Sense::maximize;
  std::vector<Rational> combo(nv, 0);
  Rational dual_obj = 0;
  for (std::size_t ci = 0; ci < lp.constraints.size(); ++ci) {
    const auto& con = lp.constraints[ci];
    Rational lhs = 0;
    for (const auto& t : con.terms) {
      lhs += t.coef * sol.primal[t.var];
      combo[t.var] += sol.dual[ci] * t.coef;
    }
    bool ok = con.relation == Relation::le ? lhs <= con.rhs
              : con.relation == Relation::ge ? lhs >= con.rhs
                                             : lhs == con.rhs;
    if (!ok) fail("primal infeasible at " + describe_row(lp, ci));
    const Rational& y = sol.dual[ci];
    bool sign_ok = con.relation == Relation::eq ||
                   ((con.relation == Relation::le) == max ? y >= 0 : y <= 0);
    if (!sign_ok) fail("dual sign at " + describe_row(lp, ci));
    dual_obj += y * con.rhs;
  }
  for (std::size_t j = 0; j < nv; ++j) {
    bool ok = !lp.nonnegative[j] ? combo[j] == lp.objective[j]
              : max              ? combo[j] >= lp.objective[j]
                                 : combo[j] <= lp.objective[j];
    if (!ok) fail("dual infeasible at " + lp.names[j]);
  }
  if (dual_obj != sol.optimum) fail("strong duality");
}

std::string dump(const LinearProgram& lp) {
  auto terms = [&](const std::vector<Term>& ts) {
    std::string s;
    for (const auto& t : ts) {
      if (t.coef == 0) continue;
      Rational c = t.coef;
      if (s.empty()) {
        s += to_string(c);
      } else {
        s += c < 0 ? " - " : " + ";
        s += to_string(c < 0 ? Rational(-c) : c);
      }
      s += " " + lp.names[t.var];
    }
    return s.empty() ? std::string("0") : s;
  };
  std::vector<Term> obj;
  for (std::size_t j = 0; j < lp.variables(); ++j)
    if (lp.objective[j] != 0) obj.push_back(Term{j, lp.objective[j]});
  std::string out = lp.sense == Sense::maximize ? "maximize " : "minimize ";
  out += terms(obj) + "\nsubject to\n";
  for (std::size_t ci = 0; ci < lp.constraints.size(); ++ci) {
    const auto& con = lp.constraints[ci];
    const char* rel = con.relation == Relation::le ? " <= " : con.relation == Relation::ge ? " >= " : " = ";
    out += "  " + describe_row(lp, ci) + ": " + terms(con.terms) + rel + to_string(con.rhs) + "\n";
  }
  out += "bounds\n";
  for (std::size_t j = 0; j < lp.variables(); ++j)
    out += "  " + lp.names[j] + (lp.nonnegative[j] ? " >= 0\n" : " free\n");
  return out;
}

}  // namespace spanoid
