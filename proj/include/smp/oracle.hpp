#pragma once

#include <utility>
#include <vector>

#include "smp/instance.hpp"
#include "smp/poset.hpp"

namespace smp {

struct OracleConfig {
  long long max_candidates = 1000000;  // product of (b(e) + 1)
  int max_states = 5000;               // lattice exploration
};

// All integral stable allocations of a strict-order instance with integral
// capacities and quotas, by exhaustive enumeration.
std::vector<Assignment> oracle_enumerate_stable(const Instance& inst, const OracleConfig& config = {});

// The member of `stable` that every firm weakly prefers to all others.
std::optional<Assignment> oracle_side_optimum(const Instance& inst, const std::vector<Assignment>& stable, Side side);

struct LatticeExploration {
  // States reachable from x_min by full shifts, with the applied rotations.
  std::vector<Assignment> states;
  std::vector<std::vector<bool>> applied;
  // Pairs (i, j): at some state rotation i applies and j does not, and j
  // applies after the full shift along i.
  std::vector<std::pair<int, int>> successor_pairs;
};

LatticeExploration explore_full_shift_lattice(const Instance& inst, const RotationPoset& poset,
                                              const OracleConfig& config = {});

}  // namespace smp
