#pragma once

#include <vector>

#include "hampower/exact.hpp"

namespace hampower {

enum class Relation { le, ge, eq };

struct LinearConstraint {
  std::vector<Rational> coeffs;
  Relation rel = Relation::ge;
  Rational rhs;
};

enum class Sense { minimize, maximize };

// All variables are nonnegative.
struct LinearProgram {
  int num_vars = 0;
  Sense sense = Sense::minimize;
  std::vector<Rational> objective;
  std::vector<LinearConstraint> constraints;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  Rational value;
  std::vector<Rational> x;
};

// Two-phase dense tableau simplex over the rationals with Bland's rule.
LpSolution solve_lp(const LinearProgram& lp);

}  // namespace hampower
