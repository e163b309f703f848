#pragma once

#include <string>
#include <vector>

#include "smp/rational.hpp"

namespace smp {

struct LinearSystem {
  std::vector<std::vector<Rational>> matrix;
  std::vector<Rational> rhs;
  std::vector<std::string> labels;
};

struct GaussianResult {
  enum class Status { unique, family, infeasible } status = Status::infeasible;
  // A particular solution (free variables at 0) unless infeasible.
  std::vector<Rational> solution;
  // Basis of the nullspace of the matrix; integer entries, gcd 1, first
  // nonzero entry positive.
  std::vector<std::vector<Integer>> nullspace;
  int rank = 0;
};

GaussianResult gaussian_solve(const LinearSystem& sys);

// Scales a nonzero rational vector to integers with gcd 1 and first nonzero
// entry positive.
std::vector<Integer> normalize_integer(const std::vector<Rational>& v);

}  // namespace smp
