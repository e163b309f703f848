#include "smp/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "smp/choice.hpp"
#include "smp/errors.hpp"
#include "smp/initial_assignment.hpp"
#include "smp/min_cost.hpp"
#include "smp/oracle.hpp"
#include "smp/poset.hpp"
#include "smp/stability.hpp"

namespace smp {

namespace {

Rational random_between(std::mt19937_64& rng, const Rational& lo, const Rational& hi) {
  long den = 1 + static_cast<long>(rng() % 4);
  long steps = 8;
  long k = static_cast<long>(rng() % (steps * den + 1));
  Rational t(k);
  t /= steps * den;
  return lo + (hi - lo) * t;
}

std::string check_choice_axioms(const Instance& inst, std::mt19937_64& rng, int samples) {
  for (int v = 0; v < inst.num_vertices(); ++v) {
    const auto& edges = inst.vertex(v).edges;
    bool bounded = std::none_of(edges.begin(), edges.end(), [&](int e) { return inst.edge(e).unbounded; });
    if (!bounded) continue;
    for (int s = 0; s < samples; ++s) {
      std::vector<Rational> z(edges.size()), z2(edges.size()), z3(edges.size());
      for (std::size_t k = 0; k < edges.size(); ++k) z[k] = random_between(rng, 0, inst.edge(edges[k]).capacity);
      ChoiceOutcome c = choose(inst, v, z);
      for (std::size_t k = 0; k < edges.size(); ++k) {
        z2[k] = random_between(rng, 0, z[k]);
        z3[k] = random_between(rng, c.result[k], z[k]);
      }
      Rational sum = 0, chosen = 0;
      for (std::size_t k = 0; k < z.size(); ++k) {
        sum += z[k];
        chosen += c.result[k];
      }
      if (chosen != std::min(sum, inst.vertex(v).quota)) return "quota acceptability fails at " + inst.vertex(v).id;
      if (choose(inst, v, c.result).result != c.result) return "idempotence fails at " + inst.vertex(v).id;
      if (choose(inst, v, z3).result != c.result) return "consistence fails at " + inst.vertex(v).id;
      ChoiceOutcome c2 = choose(inst, v, z2);
      for (std::size_t k = 0; k < z.size(); ++k) {
        if (std::min(c.result[k], z2[k]) > c2.result[k]) return "persistence fails at " + inst.vertex(v).id;
      }
    }
  }
  return "";
}

std::vector<std::pair<std::vector<Integer>, Rational>> omega_set(const Route& r) {
  std::vector<std::pair<std::vector<Integer>, Rational>> out;
  for (int i = 0; i < r.length(); ++i) out.emplace_back(r.rotations[i].values, r.weights[i]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<CheckResult> verify_instance(const Instance& inst, const VerifyOptions& options) {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(options.seed);
  auto run = [&](const std::string& name, const std::function<std::string()>& body) {
    CheckResult r{name, false, ""};
    try {
      r.detail = body();
      r.pass = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = e.what();
    }
    out.push_back(r);
    return r.pass;
  };

  run("choice_axioms", [&] { return check_choice_axioms(inst, rng, options.choice_samples); });

  ModifiedResult modified;
  bool have_xmin = run("modified_method", [&]() -> std::string {
    modified = solve_xmin_modified(inst);
    if (!modified.within_bound) return "iterations " + std::to_string(modified.iterations) + " exceed 10|E|";
    return "";
  });
  if (!have_xmin) return out;

  RotationPoset poset;
  if (!run("rotation_poset", [&] {
        poset = build_poset(inst, modified.x_min);
        return std::string();
      })) {
    return out;
  }

  run("rotation_structure", [&]() -> std::string {
    for (int i = 0; i < poset.size(); ++i) {
      auto d = rotation_defects(inst, poset.rotations[i]);
      if (!d.empty()) return poset.id(i) + " violates " + d.front();
    }
    return "";
  });

  run("route_invariance", [&]() -> std::string {
    Route base = run_route(inst, poset.x_min);
    for (int s = 0; s < options.route_seeds; ++s) {
      RouteOptions ro;
      ro.seed = options.seed + static_cast<std::uint64_t>(s);
      Route r = run_route(inst, poset.x_min, ro);
      if (r.terminal() != poset.x_max) return "seeded route ends elsewhere";
      if (omega_set(r) != omega_set(base)) return "rotation multisets differ between routes";
    }
    return "";
  });

  run("side_polarity", [&]() -> std::string {
    if (!compare_stable(inst, poset.x_min, poset.x_max, Side::firms).holds) return "x_min is not firm-preferred to x_max";
    if (!compare_stable(inst, poset.x_max, poset.x_min, Side::workers).holds) return "x_max is not worker-preferred to x_min";
    return "";
  });

  std::vector<ClosedFunction> ideals;
  bool small = poset.size() <= options.ideal_cap;
  if (small) ideals = enumerate_fully_closed(poset, options.ideal_cap);

  run("bijection", [&]() -> std::string {
    if (!small) return "";
    for (const auto& lambda : ideals) {
      Assignment x = gamma(inst, poset, lambda);
      if (omega(inst, poset, x) != lambda) return "omega(gamma(lambda)) != lambda";
    }
    return "";
  });

  run("size_and_deficit_invariance", [&]() -> std::string {
    StabilityReport ref = stability_report(inst, poset.x_min);
    for (const auto& lambda : ideals) {
      Assignment x = gamma(inst, poset, lambda);
      for (int v = 0; v < inst.num_vertices(); ++v) {
        if (load(inst, x, v) != load(inst, poset.x_min, v)) return "load differs at " + inst.vertex(v).id;
        if (ref.fully_filled[v]) continue;
        for (int e : inst.vertex(v).edges) {
          if (x[e] != poset.x_min[e]) return "deficit restriction differs at " + inst.vertex(v).id;
        }
      }
    }
    return "";
  });

  run("lattice_homomorphism", [&]() -> std::string {
    if (ideals.empty()) return "";
    for (int s = 0; s < options.pair_samples; ++s) {
      const auto& a = ideals[rng() % ideals.size()];
      const auto& b = ideals[rng() % ideals.size()];
      Assignment x = gamma(inst, poset, a), y = gamma(inst, poset, b);
      ClosedFunction lo(a.size()), hi(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) {
        lo[i] = std::min(a[i], b[i]);
        hi[i] = std::max(a[i], b[i]);
      }
      if (omega(inst, poset, side_join(inst, x, y, Side::firms)) != lo) return "firm join does not map to the meet";
      if (omega(inst, poset, side_join(inst, x, y, Side::workers)) != hi) return "worker join does not map to the join";
    }
    return "";
  });

  run("hasse_diagram", [&]() -> std::string {
    if (!small) return "";
    LatticeExploration ex = explore_full_shift_lattice(inst, poset);
    if (ex.successor_pairs != poset.hasse_edges) return "successor pairs differ from the transitive reduction";
    std::set<std::vector<bool>> a(ex.applied.begin(), ex.applied.end());
    auto ideal_sets = enumerate_ideals(poset, options.ideal_cap);
    std::set<std::vector<bool>> b(ideal_sets.begin(), ideal_sets.end());
    if (a != b) return "reachable rotation sets differ from the ideals";
    return "";
  });

  run("min_cost", [&]() -> std::string {
    if (!small) return "";
    std::vector<Rational> costs = inst.costs();
    if (costs.empty()) {
      for (int e = 0; e < inst.num_edges(); ++e) costs.push_back(Rational(static_cast<long>(rng() % 19) - 9));
    }
    MinCostResult best = min_cost_stable(inst, poset, costs);
    for (const auto& lambda : ideals) {
      if (cost_of(costs, gamma(inst, poset, lambda)) < best.cost) return "an ideal beats the min-cut optimum";
    }
    return "";
  });

  run("quota_filling", [&]() -> std::string {
    QuotaFillingResult q = solve_quota_filling(inst);
    StabilityReport rep = stability_report(inst, poset.x_min);
    bool all_full = std::all_of(rep.fully_filled.begin(), rep.fully_filled.end(), [](bool b) { return b; });
    if (q.quota_filling != all_full) return "quota-filling verdict disagrees with x_min";
    if (q.quota_filling && *q.assignment != poset.x_max) return "quota-filling assignment differs from x_max";
    return "";
  });
  return out;
}

}  // namespace smp
