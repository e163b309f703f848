#pragma once

#include <vector>

#include "smp/instance.hpp"
#include "smp/poset.hpp"

namespace smp {

struct MinCostResult {
  Assignment assignment;
  Rational cost;
  std::vector<bool> ideal;             // per rotation
  std::vector<Rational> rotation_cost;  // c . rho
  std::vector<Rational> zeta;           // tau * (c . rho)
  Rational cut_capacity;
};

Rational cost_of(const std::vector<Rational>& costs, const Assignment& x);

// Minimizes c.x over stable assignments through a minimum cut in the
// closure network of the rotation poset.
MinCostResult min_cost_stable(const Instance& inst, const RotationPoset& poset, const std::vector<Rational>& costs);
MinCostResult min_cost_stable(const Instance& inst, const std::vector<Rational>& costs);

}  // namespace smp
