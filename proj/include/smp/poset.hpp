#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "smp/instance.hpp"
#include "smp/rotations.hpp"

namespace smp {

// Guard on the number of shifts of a route: 4|E| unless SMP_MAX_STEPS is set.
int default_step_guard(const Instance& inst);

struct RouteOptions {
  // Canonical order (first maximal component) when unset.
  std::optional<std::uint64_t> seed;
  std::optional<int> max_steps;
};

struct Route {
  std::vector<Assignment> states;  // x_0 ... x_N
  std::vector<Rotation> rotations;  // rho_1 ... rho_N, tau at the state where applied
  std::vector<Rational> weights;    // lambda_i
  bool all_full = true;
  bool non_expensive = true;

  int length() const { return static_cast<int>(rotations.size()); }
  const Assignment& terminal() const { return states.back(); }
};

// Full shifts, one component at a time, until no rotation applies.
Route run_route(const Instance& inst, const Assignment& start, const RouteOptions& options = {});

struct RotationPoset {
  std::vector<Rotation> rotations;  // ids r0, r1, ... in canonical route order
  Assignment x_min;
  Assignment x_max;
  // precedes[i][j]: rotation i strictly precedes rotation j.
  std::vector<std::vector<bool>> precedes;
  std::vector<std::pair<int, int>> hasse_edges;  // sorted

  int size() const { return static_cast<int>(rotations.size()); }
  const Rational& tau(int i) const { return rotations[i].tau; }
  std::string id(int i) const { return "r" + std::to_string(i); }
  std::optional<int> find(const Rotation& rot) const;
};

struct PosetOptions {
  // Seed of the second, cross-checking order of the avoidance runs.
  std::uint64_t seed = 1;
  bool check_hasse_witnesses = true;
};

RotationPoset build_poset(const Instance& inst, const Assignment& x_min, const PosetOptions& options = {});
RotationPoset build_poset(const Instance& inst, const PosetOptions& options = {});

using ClosedFunction = std::vector<Rational>;

bool is_closed(const RotationPoset& poset, const ClosedFunction& lambda);

// Reads the weights off a lower semi-route from x_min to the stable x.
ClosedFunction omega(const Instance& inst, const RotationPoset& poset, const Assignment& x);

// x_min + sum lambda(rho) rho; lambda must be closed.
Assignment gamma(const Instance& inst, const RotationPoset& poset, const ClosedFunction& lambda);

// Fully closed function of the ideal given as a membership vector.
ClosedFunction fully_closed(const RotationPoset& poset, const std::vector<bool>& ideal);

std::vector<std::vector<bool>> enumerate_ideals(const RotationPoset& poset, int cap = 20);
std::vector<ClosedFunction> enumerate_fully_closed(const RotationPoset& poset, int cap = 20);

// Closed functions with values in {0, tau/(k-1), ..., tau}; k^|R| <= cap.
std::vector<ClosedFunction> grid_closed_functions(const RotationPoset& poset, int k, long long cap = 1000000);
std::vector<Assignment> grid_sublattice(const Instance& inst, const RotationPoset& poset, int k, long long cap = 1000000);

bool hull_membership(const RotationPoset& poset, const ClosedFunction& lambda);

// Witness test for a Hasse edge (i, j): at gamma of the ideal below j without
// i, rotation i applies and j does not; after the full shift along i, j applies.
bool hasse_witness(const Instance& inst, const RotationPoset& poset, int i, int j);

}  // namespace smp
