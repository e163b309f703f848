#pragma once

#include <vector>

#include "smp/rational.hpp"

namespace smp {

enum class Relation { less_equal, equal, greater_equal };

struct LinearConstraint {
  std::vector<Rational> coefficients;
  Relation relation = Relation::less_equal;
  Rational rhs;
};

// maximize objective·x subject to constraints; variable j is required to be
// nonnegative iff nonnegative[j] (an empty flag vector means all are).
struct LinearProgram {
  std::vector<Rational> objective;
  std::vector<LinearConstraint> constraints;
  std::vector<bool> nonnegative;
};

struct LpResult {
  enum class Status { optimal, unbounded, infeasible } status = Status::infeasible;
  std::vector<Rational> solution;
  Rational objective;
  // Indices of constraints satisfied with equality at the solution.
  std::vector<int> tight;
};

// Two-phase primal simplex with Bland's rule in exact arithmetic.
LpResult simplex_maximize(const LinearProgram& lp);

}  // namespace smp
