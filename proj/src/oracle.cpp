#include "smp/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "smp/errors.hpp"
#include "smp/stability.hpp"

namespace smp {

std::vector<Assignment> oracle_enumerate_stable(const Instance& inst, const OracleConfig& config) {
  long long candidates = 1;
  std::vector<long> cap(inst.num_edges());
  for (int e = 0; e < inst.num_edges(); ++e) {
    const Edge& edge = inst.edge(e);
    if (edge.unbounded || edge.capacity.get_den() != 1) throw DomainError("oracle needs integral finite capacities");
    cap[e] = edge.capacity.get_num().get_si();
    candidates *= cap[e] + 1;
    if (candidates > config.max_candidates) throw CapExceeded("oracle enumeration exceeds its cap");
  }
  for (const auto& v : inst.vertices()) {
    if (v.quota.get_den() != 1) throw DomainError("oracle needs integral quotas");
    for (const auto& tie : v.ties) {
      if (tie.size() != 1) throw DomainError("oracle needs strict preference orders");
    }
  }
  std::vector<Assignment> out;
  Assignment x(inst.num_edges());
  std::vector<Rational> room(inst.num_vertices());
  for (int v = 0; v < inst.num_vertices(); ++v) room[v] = inst.vertex(v).quota;
  // Depth-first over edges, pruning quota violations.
  std::function<void(int)> rec = [&](int e) {
    if (e == inst.num_edges()) {
      if (stability_report(inst, x).stable) out.push_back(x);
      return;
    }
    const Edge& edge = inst.edge(e);
    for (long value = 0; value <= cap[e] && value <= room[edge.firm] && value <= room[edge.worker]; ++value) {
      x[e] = value;
      room[edge.firm] -= value;
      room[edge.worker] -= value;
      rec(e + 1);
      room[edge.firm] += value;
      room[edge.worker] += value;
    }
    x[e] = 0;
  };
  rec(0);
  return out;
}

std::optional<Assignment> oracle_side_optimum(const Instance& inst, const std::vector<Assignment>& stable, Side side) {
  for (const auto& x : stable) {
    bool best = true;
    for (const auto& y : stable) {
      if (!compare_stable(inst, x, y, side).holds) {
        best = false;
        break;
      }
    }
    if (best) return x;
  }
  return std::nullopt;
}

LatticeExploration explore_full_shift_lattice(const Instance& inst, const RotationPoset& poset, const OracleConfig& config) {
  LatticeExploration out;
  std::map<std::vector<bool>, int> seen;
  std::set<std::pair<int, int>> pairs;
  auto index_of = [&](const Rotation& rot) {
    auto j = poset.find(rot);
    if (!j) throw InvariantError("exploration met a rotation outside the rotation set");
    return *j;
  };
  out.states.push_back(poset.x_min);
  out.applied.push_back(std::vector<bool>(poset.size(), false));
  seen[out.applied[0]] = 0;
  for (std::size_t k = 0; k < out.states.size(); ++k) {
    if (static_cast<int>(out.states.size()) > config.max_states) throw CapExceeded("lattice exploration exceeds its cap");
    std::vector<Rotation> rots = rotations_at(inst, out.states[k]);
    std::set<int> here;
    for (const auto& rot : rots) here.insert(index_of(rot));
    for (const auto& rot : rots) {
      int i = index_of(rot);
      Assignment next = apply_shift(inst, out.states[k], rot, rot.tau);
      for (const auto& rot2 : rotations_at(inst, next)) {
        int j = index_of(rot2);
        if (!here.count(j)) pairs.insert({i, j});
      }
      std::vector<bool> applied = out.applied[k];
      applied[i] = true;
      auto it = seen.find(applied);
      if (it == seen.end()) {
        seen[applied] = static_cast<int>(out.states.size());
        out.states.push_back(std::move(next));
        out.applied.push_back(std::move(applied));
      } else if (out.states[it->second] != next) {
        throw InvariantError("the same rotation set led to two different assignments");
      }
    }
  }
  out.successor_pairs.assign(pairs.begin(), pairs.end());
  return out;
}

}  // namespace smp
