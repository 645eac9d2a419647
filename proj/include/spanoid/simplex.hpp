#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "spanoid/error.hpp"
#include "spanoid/rational.hpp"

namespace spanoid {

enum class Sense { maximize, minimize };
enum class Relation { le, ge, eq };

struct Term {
  std::size_t var;
  Rational coef;
};

struct Constraint {
  std::vector<Term> terms;
  Relation relation = Relation::le;
  Rational rhs;
  std::string name;
};

struct LinearProgram {
  Sense sense = Sense::maximize;
  std::vector<std::string> names;
  std::vector<Rational> objective;
  std::vector<bool> nonnegative;
  std::vector<Constraint> constraints;

  std::size_t add_variable(std::string name, Rational cost = 0, bool nonneg = true);
  void add_constraint(std::vector<Term> terms, Relation rel, Rational rhs, std::string name = {});
  std::size_t variables() const { return names.size(); }
};

class UnboundedError : public DomainError {
 public:
  UnboundedError(const std::string& what, std::vector<Rational> ray)
      : DomainError(what), ray_(std::move(ray)) {}
  // Direction of unbounded improvement, one entry per variable.
  const std::vector<Rational>& ray() const { return ray_; }

 private:
  std::vector<Rational> ray_;
};

// Duals follow one convention for both senses: with y the returned duals,
// sum_r y_r·b_r equals the optimum, and for every variable j the combination
// sum_r y_r·a_rj is >= c_j (maximize) or <= c_j (minimize), with equality
// for free variables. Sign of y_r: maximize gives y >= 0 on <= rows and
// y <= 0 on >= rows; minimize the reverse; = rows are unrestricted.
struct LpSolution {
  Rational optimum;
  std::vector<Rational> primal;
  std::vector<Rational> dual;
  std::size_t pivots = 0;
};

// Dictionary simplex over exact rationals; phase one uses a single auxiliary
// variable. By default a floating-point run first proposes a basis, kept only
// if its exact primal and dual values are feasible. Every solution is checked
// against the certificate conditions above before it is returned.
LpSolution solve_exact(const LinearProgram& lp, bool float_start = true);

// Throws std::logic_error naming the first failed condition.
void verify_solution(const LinearProgram& lp, const LpSolution& sol);

// Human-readable rows with p/q literals, in stored order.
std::string dump(const LinearProgram& lp);

}  // namespace spanoid
