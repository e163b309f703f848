#include "smp/min_cost.hpp"

#include "smp/errors.hpp"
#include "smp/min_cut.hpp"

namespace smp {

Rational cost_of(const std::vector<Rational>& costs, const Assignment& x) {
  Rational s = 0;
  for (int e = 0; e < x.size(); ++e) s += costs[e] * x[e];
  return s;
}

MinCostResult min_cost_stable(const Instance& inst, const RotationPoset& poset, const std::vector<Rational>& costs) {
  if (static_cast<int>(costs.size()) != inst.num_edges()) throw DomainError("cost vector has wrong length");
  const int n = poset.size();
  MinCostResult out;
  for (int i = 0; i < n; ++i) {
    Rational c = 0;
    for (int e = 0; e < inst.num_edges(); ++e) c += costs[e] * Rational(poset.rotations[i].values[e]);
    out.rotation_cost.push_back(c);
    out.zeta.push_back(poset.tau(i) * c);
  }

  const int s = n, t = n + 1;
  FlowNetwork net(n + 2, s, t);
  for (const auto& [i, j] : poset.hasse_edges) net.add_arc(i, j, Capacity::unbounded());
  Rational negative = 0;
  for (int i = 0; i < n; ++i) {
    if (out.zeta[i] > 0) net.add_arc(s, i, Capacity::finite(out.zeta[i]));
    if (out.zeta[i] < 0) {
      net.add_arc(i, t, Capacity::finite(-out.zeta[i]));
      negative += out.zeta[i];
    }
  }
  MinCutResult cut = min_cut(net);
  if (!cut.bounded) throw InvariantError("closure network has no finite cut");
  out.cut_capacity = cut.capacity;
  out.ideal.assign(n, false);
  Rational weight = 0;
  for (int i = 0; i < n; ++i) {
    out.ideal[i] = !cut.source_side[i];
    if (out.ideal[i]) weight += out.zeta[i];
  }
  if (weight != cut.capacity + negative) throw InvariantError("cut capacity does not match the ideal weight");
  out.assignment = gamma(inst, poset, fully_closed(poset, out.ideal));
  out.cost = cost_of(costs, out.assignment);
  if (out.cost != cost_of(costs, poset.x_min) + weight) throw InvariantError("cost of the optimum does not match its ideal weight");
  return out;
}

MinCostResult min_cost_stable(const Instance& inst, const std::vector<Rational>& costs) {
  return min_cost_stable(inst, build_poset(inst), costs);
}

}  // namespace smp
