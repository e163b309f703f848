#include "smp/poset.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>

#include "smp/errors.hpp"
#include "smp/initial_assignment.hpp"
#include "smp/stability.hpp"

namespace smp {

int default_step_guard(const Instance& inst) {
  if (const char* env = std::getenv("SMP_MAX_STEPS")) {
    char* end = nullptr;
    long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<int>(value);
  }
  return 4 * inst.num_edges();
}

Route run_route(const Instance& inst, const Assignment& start, const RouteOptions& options) {
  const int guard = options.max_steps.value_or(default_step_guard(inst));
  std::mt19937_64 rng(options.seed.value_or(0));
  Route route;
  route.states.push_back(start);
  for (;;) {
    std::vector<Rotation> rots = rotations_at(inst, route.states.back());
    if (rots.empty()) break;
    if (route.length() >= guard) throw InvariantError("route exceeded the step guard of " + std::to_string(guard));
    std::size_t pick = options.seed ? static_cast<std::size_t>(rng() % rots.size()) : 0;
    Rotation& rot = rots[pick];
    for (const auto& prior : route.rotations) {
      if (prior.same_vector(rot)) route.non_expensive = false;
    }
    route.states.push_back(apply_shift(inst, route.states.back(), rot, rot.tau));
    route.weights.push_back(rot.tau);
    route.rotations.push_back(std::move(rot));
  }
  ActiveStructure s = build_active_structure(inst, route.terminal());
  if (!active_graph(inst, s).active_edges().empty()) throw InvariantError("active edges remain at a terminal state");
  if (route.length() > 2 * inst.num_edges()) throw InvariantError("full-shift route longer than 2|E|");
  return route;
}

std::optional<int> RotationPoset::find(const Rotation& rot) const {
  for (int i = 0; i < size(); ++i) {
    if (rotations[i].same_vector(rot)) return i;
  }
  return std::nullopt;
}

namespace {

// Applies every applicable rotation except `avoid` until none is left;
// returns which rotations were applied.
std::vector<bool> avoidance_run(const Instance& inst, const RotationPoset& p, int avoid, std::optional<std::uint64_t> seed) {
  std::mt19937_64 rng(seed.value_or(0));
  std::vector<bool> applied(p.size(), false);
  Assignment cur = p.x_min;
  const int guard = default_step_guard(inst);
  for (int steps = 0;; ++steps) {
    std::vector<std::pair<int, Rotation>> candidates;
    for (auto& rot : rotations_at(inst, cur)) {
      auto j = p.find(rot);
      if (!j) throw InvariantError("route met a rotation outside the rotation set");
      if (rot.tau != p.tau(*j)) throw InvariantError("rotation met with a different maximal weight");
      if (applied[*j]) throw InvariantError("rotation applicable twice on a full-shift route");
      if (*j != avoid) candidates.emplace_back(*j, std::move(rot));
    }
    if (candidates.empty()) break;
    if (steps >= guard) throw InvariantError("avoidance run exceeded the step guard");
    std::size_t pick = seed ? static_cast<std::size_t>(rng() % candidates.size()) : 0;
    auto& [j, rot] = candidates[pick];
    cur = apply_shift(inst, cur, rot, rot.tau);
    applied[j] = true;
  }
  return applied;
}

}  // namespace

RotationPoset build_poset(const Instance& inst, const Assignment& x_min, const PosetOptions& options) {
  RotationPoset p;
  p.x_min = x_min;
  if (!rotations_at(inst.swapped(), x_min).empty()) throw DomainError("start is not the firm-optimal stable assignment");
  Route route = run_route(inst, x_min);
  if (!route.non_expensive) throw InvariantError("canonical route repeats a rotation");
  p.rotations = route.rotations;
  p.x_max = route.terminal();
  const int n = p.size();
  if (n > 2 * inst.num_edges()) throw InvariantError("more than 2|E| rotations");

  p.precedes.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    std::vector<bool> a = avoidance_run(inst, p, i, std::nullopt);
    std::vector<bool> b = avoidance_run(inst, p, i, options.seed + static_cast<std::uint64_t>(i));
    if (a != b) throw InvariantError("avoidance runs disagree for " + p.id(i));
    for (int j = 0; j < n; ++j) p.precedes[i][j] = j != i && !a[j];
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (p.precedes[i][j] && p.precedes[j][i]) throw InvariantError("precedence is not antisymmetric");
      if (p.precedes[i][j] && j < i) throw InvariantError("canonical route is not a linear extension");
      for (int k = 0; k < n; ++k) {
        if (p.precedes[i][j] && p.precedes[j][k] && !p.precedes[i][k]) throw InvariantError("precedence is not transitive");
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!p.precedes[i][j]) continue;
      bool covered = false;
      for (int k = 0; k < n && !covered; ++k) covered = p.precedes[i][k] && p.precedes[k][j];
      if (!covered) p.hasse_edges.emplace_back(i, j);
    }
  }
  if (options.check_hasse_witnesses) {
    for (const auto& [i, j] : p.hasse_edges) {
      if (!hasse_witness(inst, p, i, j)) throw InvariantError("Hasse edge " + p.id(i) + " -> " + p.id(j) + " has no witness");
    }
  }
  return p;
}

RotationPoset build_poset(const Instance& inst, const PosetOptions& options) {
  return build_poset(inst, solve_xmin(inst), options);
}

bool is_closed(const RotationPoset& p, const ClosedFunction& lambda) {
  if (static_cast<int>(lambda.size()) != p.size()) return false;
  for (int j = 0; j < p.size(); ++j) {
    if (lambda[j] < 0 || lambda[j] > p.tau(j)) return false;
    if (lambda[j] == 0) continue;
    for (int i = 0; i < p.size(); ++i) {
      if (p.precedes[i][j] && lambda[i] != p.tau(i)) return false;
    }
  }
  return true;
}

ClosedFunction omega(const Instance& inst, const RotationPoset& p, const Assignment& x) {
  if (!stability_report(inst, x).stable) throw DomainError("assignment is not stable");
  ClosedFunction lambda(p.size(), Rational(0));
  Assignment cur = p.x_min;
  const int guard = default_step_guard(inst) + 2 * p.size();
  for (int steps = 0; cur != x; ++steps) {
    if (steps >= guard) throw DomainError("assignment not reached within the step guard");
    bool moved = false;
    for (const auto& rot : rotations_at(inst, cur)) {
      Rational step = rot.tau;
      for (int e : rot.component.edges) {
        const Integer& r = rot.values[e];
        if (r > 0 && x[e] > cur[e]) step = std::min(step, Rational((x[e] - cur[e]) / Rational(r)));
        if (r < 0 && cur[e] > x[e]) step = std::min(step, Rational((cur[e] - x[e]) / Rational(-r)));
      }
      Assignment next = apply_shift(inst, cur, rot, step);
      if (!compare_stable(inst, next, x, Side::firms).holds) continue;
      auto j = p.find(rot);
      if (!j) throw InvariantError("semi-route met a rotation outside the rotation set");
      lambda[*j] += step;
      cur = std::move(next);
      moved = true;
      break;
    }
    if (!moved) throw DomainError("assignment is not reachable from the firm-optimal one");
  }
  if (!is_closed(p, lambda)) throw InvariantError("weights of a semi-route are not closed");
  return lambda;
}

Assignment gamma(const Instance& inst, const RotationPoset& p, const ClosedFunction& lambda) {
  if (!is_closed(p, lambda)) throw DomainError("weight vector is not closed");
  Assignment x = p.x_min;
  for (int i = 0; i < p.size(); ++i) {
    if (lambda[i] == 0) continue;
    for (int e = 0; e < inst.num_edges(); ++e) {
      if (p.rotations[i].values[e] != 0) x[e] += lambda[i] * Rational(p.rotations[i].values[e]);
    }
  }
  if (!stability_report(inst, x).stable) throw InvariantError("image of a closed function is not stable");
  return x;
}

ClosedFunction fully_closed(const RotationPoset& p, const std::vector<bool>& ideal) {
  ClosedFunction lambda(p.size(), Rational(0));
  for (int i = 0; i < p.size(); ++i) {
    if (ideal[i]) lambda[i] = p.tau(i);
  }
  return lambda;
}

std::vector<std::vector<bool>> enumerate_ideals(const RotationPoset& p, int cap) {
  if (p.size() > cap) throw CapExceeded("rotation set larger than the enumeration cap");
  std::vector<std::vector<bool>> out;
  std::vector<bool> cur(p.size(), false);
  std::function<void(int)> rec = [&](int j) {
    if (j == p.size()) {
      out.push_back(cur);
      return;
    }
    rec(j + 1);
    for (int i = 0; i < j; ++i) {
      if (p.precedes[i][j] && !cur[i]) return;
    }
    cur[j] = true;
    rec(j + 1);
    cur[j] = false;
  };
  rec(0);
  return out;
}

std::vector<ClosedFunction> enumerate_fully_closed(const RotationPoset& p, int cap) {
  std::vector<ClosedFunction> out;
  for (const auto& ideal : enumerate_ideals(p, cap)) out.push_back(fully_closed(p, ideal));
  return out;
}

std::vector<ClosedFunction> grid_closed_functions(const RotationPoset& p, int k, long long cap) {
  if (k < 2) throw DomainError("grid size must be at least 2");
  long long count = 1;
  for (int i = 0; i < p.size(); ++i) {
    count *= k;
    if (count > cap) throw CapExceeded("grid larger than the enumeration cap");
  }
  std::vector<ClosedFunction> out;
  ClosedFunction cur(p.size(), Rational(0));
  std::function<void(int)> rec = [&](int j) {
    if (j == p.size()) {
      out.push_back(cur);
      return;
    }
    bool free = true;
    for (int i = 0; i < j; ++i) {
      if (p.precedes[i][j] && cur[i] != p.tau(i)) free = false;
    }
    for (int step = 0; step < (free ? k : 1); ++step) {
      cur[j] = p.tau(j) * step / (k - 1);
      rec(j + 1);
    }
    cur[j] = 0;
  };
  rec(0);
  return out;
}

std::vector<Assignment> grid_sublattice(const Instance& inst, const RotationPoset& p, int k, long long cap) {
  std::vector<Assignment> out;
  for (const auto& lambda : grid_closed_functions(p, k, cap)) out.push_back(gamma(inst, p, lambda));
  return out;
}

bool hull_membership(const RotationPoset& p, const ClosedFunction& lambda) {
  if (static_cast<int>(lambda.size()) != p.size()) return false;
  for (int i = 0; i < p.size(); ++i) {
    if (lambda[i] < 0 || lambda[i] > p.tau(i)) return false;
  }
  for (int i = 0; i < p.size(); ++i) {
    for (int j = 0; j < p.size(); ++j) {
      if (p.precedes[i][j] && lambda[j] / p.tau(j) > lambda[i] / p.tau(i)) return false;
    }
  }
  return true;
}

bool hasse_witness(const Instance& inst, const RotationPoset& p, int i, int j) {
  std::vector<bool> ideal(p.size(), false);
  for (int k = 0; k < p.size(); ++k) ideal[k] = p.precedes[k][j] && k != i;
  Assignment x = gamma(inst, p, fully_closed(p, ideal));
  auto applicable = [&](const Assignment& at, int r) -> std::optional<Rotation> {
    for (auto& rot : rotations_at(inst, at)) {
      if (rot.same_vector(p.rotations[r])) return rot;
    }
    return std::nullopt;
  };
  auto ri = applicable(x, i);
  if (!ri || ri->tau != p.tau(i)) return false;
  if (applicable(x, j)) return false;
  Assignment x2 = apply_shift(inst, x, *ri, ri->tau);
  return applicable(x2, j).has_value();
}

}  // namespace smp
