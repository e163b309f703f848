#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "reference.hpp"
#include "smp/choice.hpp"
#include "smp/errors.hpp"
#include "smp/initial_assignment.hpp"
#include "smp/min_cost.hpp"
#include "smp/oracle.hpp"
#include "smp/poset.hpp"
#include "smp/rotations.hpp"
#include "smp/stability.hpp"

using namespace smp;
namespace ref = smp::reference;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Failures {
 public:
  void add(const std::string& what) {
    if (count_++ < 3) text_ += (text_.empty() ? "" : "; ") + what;
  }
  bool empty() const { return count_ == 0; }
  Outcome outcome(const std::string& ok) const {
    if (count_ == 0) return {true, ok};
    return {false, std::to_string(count_) + " failure(s): " + text_};
  }

 private:
  int count_ = 0;
  std::string text_;
};

constexpr std::uint64_t kSeed = 20240601;

std::vector<Instance> random_family(testing::Family family, int count, std::uint64_t seed, bool integral = true,
                                    int max_side = 6) {
  std::mt19937_64 rng(seed);
  testing::RandomConfig cfg;
  cfg.family = family;
  cfg.integral = integral;
  cfg.max_side = max_side;
  cfg.max_edges = 25;
  cfg.max_capacity = 3;
  std::vector<Instance> out;
  for (int i = 0; i < count; ++i) out.push_back(testing::random_instance(rng, cfg));
  return out;
}

// Dense opposed markets; every third one is the disjoint union of two smaller
// markets so that the posets are not all chains.
std::vector<Instance> criterion4_instances() {
  std::mt19937_64 rng(kSeed + 4);
  testing::RandomConfig cfg;
  cfg.family = testing::Family::smp;
  cfg.min_side = 3;
  cfg.max_side = 5;
  cfg.edge_probability = 1.0;
  cfg.opposed_probability = 0.9;
  cfg.max_capacity = 2;
  cfg.max_edges = 25;
  testing::RandomConfig piece = cfg;
  piece.min_side = 2;
  piece.max_side = 3;
  piece.max_edges = 12;
  std::vector<Instance> out;
  for (int i = 0; i < 50; ++i) {
    if (i % 3 == 2) {
      out.push_back(testing::disjoint_union({testing::random_instance(rng, piece), testing::random_instance(rng, piece)}));
    } else {
      out.push_back(testing::random_instance(rng, cfg));
    }
  }
  return out;
}

Rational random_in(std::mt19937_64& rng, const Rational& lo, const Rational& hi) {
  long den = 1 + static_cast<long>(rng() % 6);
  Rational t(static_cast<long>(rng() % (den + 1)));
  t /= den;
  return lo + (hi - lo) * t;
}

using Omega = std::vector<std::pair<std::vector<Integer>, Rational>>;

Omega omega_of(const Route& r) {
  Omega out;
  for (int i = 0; i < r.length(); ++i) out.emplace_back(r.rotations[i].values, r.weights[i]);
  std::sort(out.begin(), out.end());
  return out;
}

// 1. Choice axioms on random (v, z, z') with a reference choice function.
Outcome criterion1() {
  Failures fail;
  std::mt19937_64 rng(kSeed + 1);
  const int cases = 1000;
  for (auto family : {testing::Family::smp, testing::Family::sap, testing::Family::sdp}) {
    auto pool = random_family(family, 20, kSeed + 10 + static_cast<int>(family), false);
    for (int c = 0; c < cases; ++c) {
      const Instance& inst = pool[rng() % pool.size()];
      int v = static_cast<int>(rng() % inst.num_vertices());
      const auto& edges = inst.vertex(v).edges;
      if (edges.empty()) {
        --c;
        continue;
      }
      std::vector<Rational> z(edges.size()), between(edges.size()), below(edges.size());
      for (std::size_t k = 0; k < edges.size(); ++k) z[k] = random_in(rng, 0, inst.edge(edges[k]).capacity);
      ChoiceOutcome cz = choose(inst, v, z);
      std::string where = std::string(testing::family_name(family)) + " case " + std::to_string(c);
      if (cz.result != ref::choose(inst, v, z).result) fail.add(where + ": differs from reference choice");
      for (std::size_t k = 0; k < z.size(); ++k) {
        between[k] = random_in(rng, cz.result[k], z[k]);
        below[k] = random_in(rng, 0, z[k]);
      }
      if (choose(inst, v, between).result != cz.result) fail.add(where + ": A1");
      ChoiceOutcome cb = choose(inst, v, below);
      for (std::size_t k = 0; k < z.size(); ++k) {
        if (std::min(cz.result[k], below[k]) > cb.result[k]) {
          fail.add(where + ": A2");
          break;
        }
      }
      Rational sum = 0, chosen = 0;
      for (std::size_t k = 0; k < z.size(); ++k) {
        sum += z[k];
        chosen += cz.result[k];
      }
      if (chosen != std::min(sum, inst.vertex(v).quota)) fail.add(where + ": quota acceptability");
      if (choose(inst, v, cz.result).result != cz.result) fail.add(where + ": idempotence");
    }
  }
  return fail.outcome("3 families x 1000 cases; A1, A2, quota acceptability, idempotence exact");
}

// Circulation and alignment checked directly on the values.
bool circulation_and_aligned(const Instance& inst, const std::vector<Integer>& rho) {
  for (int v = 0; v < inst.num_vertices(); ++v) {
    Integer sum = 0;
    std::vector<Integer> signed_values;
    for (int e : inst.vertex(v).edges) {
      sum += rho[e];
      bool wanted = inst.is_firm(v) ? rho[e] > 0 : rho[e] < 0;
      if (wanted) signed_values.push_back(rho[e]);
    }
    if (sum != 0) return false;
    if (std::adjacent_find(signed_values.begin(), signed_values.end(), std::not_equal_to<>()) != signed_values.end()) {
      return false;
    }
  }
  return true;
}

// 2. 3x3 tie market reproduction.
Outcome criterion2() {
  Failures fail;
  Instance inst = testing::tie_market(8, 15);
  ModifiedResult solved = solve_xmin_modified(inst);
  Assignment eight = testing::constant_assignment(inst, 8);
  if (solved.x_min != eight) fail.add("solver did not return x = 8");
  if (!ref::is_stable(inst, eight)) fail.add("x = 8 not stable by the reference test");
  ActiveStructure s = build_active_structure(inst, eight);
  auto comps = maximal_components(active_graph(inst, s));
  if (comps.size() != 1 || comps[0].vertices.size() != 6) fail.add("expected one maximal component on 6 vertices");
  auto rots = rotations_at(inst, eight);
  if (rots.size() != 1) return {false, "expected exactly one rotation"};
  const auto& rho = rots[0].values;
  auto at = [&](const char* id) { return rho[*inst.find_edge(id)]; };
  if (at("f2w1") != -8) fail.add("rho(f2w1) != -8");
  if (at("f1w3") != -2 || at("f3w3") != -2) fail.add("rho(f1w3), rho(f3w3) != -2");
  Integer lo = *std::min_element(rho.begin(), rho.end()), hi = *std::max_element(rho.begin(), rho.end());
  if (lo != -8 || hi != 7) fail.add("values not spanning [-8, 7]");
  Integer g = 0;
  for (const auto& v : rho) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), Integer(abs(v)).get_mpz_t());
  if (g != 1) fail.add("gcd != 1");
  if (!circulation_and_aligned(inst, rho)) fail.add("not an aligned circulation");
  std::ostringstream taus;
  for (auto [a, b] : std::vector<std::pair<long, long>>{{8, 15}, {8, 100}, {16, 17}}) {
    Instance ex = testing::tie_market(a, b);
    auto r = rotations_at(ex, testing::constant_assignment(ex, a));
    Rational expected = std::min(Rational(a, 1) / 8, Rational(b - a, 1) / 7);
    if (r.size() != 1 || r[0].tau != expected) fail.add("tau mismatch at (" + std::to_string(a) + "," + std::to_string(b) + ")");
    if (!r.empty()) taus << " tau(" << a << "," << b << ")=" << to_string(r[0].tau);
  }
  if (rots[0].tau != 1) fail.add("tau != 1 at (8,15)");
  return fail.outcome("x=8 stable, one 6-vertex component, rho(f2w1)=-8, rho(f1w3)=rho(f3w3)=-2, range [-8,7], gcd 1;" +
                      taus.str());
}

// 3. Chained instance rotation norms.
Outcome criterion3() {
  Failures fail;
  std::ostringstream observed;
  bool scaling = true;
  Instance base = testing::tie_market(8, 100);
  Rotation rho1 = rotations_at(base, testing::constant_assignment(base, 8)).at(0);
  for (int k = 1; k <= 6; ++k) {
    Instance inst = testing::chained_tie_market(k, 8, 100);
    if (inst.num_vertices() != 5 * k + 1) fail.add("k=" + std::to_string(k) + ": vertex count");
    auto rots = rotations_at(inst, testing::constant_assignment(inst, 8));
    if (rots.size() != 1) {
      fail.add("k=" + std::to_string(k) + ": expected one rotation");
      continue;
    }
    Integer norm = rots[0].norm_inf();
    Integer stated = 2;
    for (int j = 1; j < k; ++j) stated *= 4;
    observed << (k > 1 ? "," : "") << norm;
    if (norm != stated) fail.add("k=" + std::to_string(k) + ": norm " + to_string(norm) + " != " + to_string(stated));
    // Copy j carries 4^(j-1) times the base rotation.
    Integer scale = 1;
    for (int j = 1; j <= k; ++j, scale *= 4) {
      for (int i = 1; i <= 3; ++i) {
        for (int l = 1; l <= 3; ++l) {
          std::string w = (l == 1 && j < k)   ? "h" + std::to_string(j)
                          : (l == 3 && j > 1) ? "h" + std::to_string(j - 1)
                                              : "w" + std::to_string(l) + "_" + std::to_string(j);
          auto e = inst.find_edge("f" + std::to_string(i) + "_" + std::to_string(j) + ":" + w);
          auto e0 = base.find_edge("f" + std::to_string(i) + "w" + std::to_string(l));
          if (!e || !e0 || rots[0].values[*e] != scale * rho1.values[*e0]) scaling = false;
        }
      }
    }
  }
  std::string info = "observed norms " + observed.str() + " on 5k+1 vertices; copy j = 4^(j-1) rho: " +
                     (scaling ? "yes" : "no");
  Outcome out = fail.outcome("norms 2*4^(k-1)");
  out.detail = (out.pass ? "" : "stated 2*4^(k-1) not met; ") + info;
  return out;
}

// 4. Route length and invariance of Omega over seeded orders.
Outcome criterion4() {
  Failures fail;
  int routes = 0, nonempty = 0;
  auto pool = criterion4_instances();
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const Instance& inst = pool[i];
    Assignment x_min = solve_xmin(inst);
    Route base = run_route(inst, x_min);
    if (base.length() > 0) ++nonempty;
    Omega reference_omega = omega_of(base);
    for (int s = 0; s <= 5; ++s) {
      RouteOptions opt;
      if (s > 0) opt.seed = kSeed + static_cast<std::uint64_t>(100 * i + s);
      Route r = s == 0 ? base : run_route(inst, x_min, opt);
      ++routes;
      if (r.length() > 2 * inst.num_edges()) fail.add("instance " + std::to_string(i) + ": route longer than 2|E|");
      if (omega_of(r) != reference_omega) fail.add("instance " + std::to_string(i) + ": Omega differs");
      if (!ref::is_stable(inst, r.terminal())) fail.add("instance " + std::to_string(i) + ": terminal not stable");
      if (r.terminal() != base.terminal()) fail.add("instance " + std::to_string(i) + ": terminal differs");
    }
  }
  return fail.outcome(std::to_string(pool.size()) + " instances (" + std::to_string(nonempty) +
                      " with rotations), " + std::to_string(routes) + " routes <= 2|E|, Omega identical over 5 seeds");
}

// 5. Single-tie markets have one stable assignment.
Outcome criterion5() {
  Failures fail;
  auto pool = random_family(testing::Family::sdp, 50, kSeed + 5, false);
  for (std::size_t i = 0; i < pool.size(); ++i) {
    RotationPoset p = build_poset(pool[i]);
    if (p.size() != 0) fail.add("instance " + std::to_string(i) + ": rotations found");
    if (p.x_min != p.x_max) fail.add("instance " + std::to_string(i) + ": x_min != x_max");
    if (!ref::is_stable(pool[i], p.x_min)) fail.add("instance " + std::to_string(i) + ": not stable");
  }
  return fail.outcome("50 single-tie instances: no rotations, x_min = x_max");
}

// 6. Strict orders: unit cycle rotations, integral F-optimum matching brute force.
Outcome criterion6() {
  Failures fail;
  int rotations = 0, oracle_checked = 0;
  auto pool = random_family(testing::Family::sap, 50, kSeed + 6, true, 5);
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const Instance& inst = pool[i];
    RotationPoset p = build_poset(inst);
    std::string where = "instance " + std::to_string(i);
    for (const auto& rot : p.rotations) {
      ++rotations;
      if (!ref::simple_cycle_support(inst, rot.values)) fail.add(where + ": rotation not a unit simple cycle");
    }
    for (int e = 0; e < inst.num_edges(); ++e) {
      if (p.x_min[e].get_den() != 1) fail.add(where + ": x_min not integral");
    }
    auto stable = ref::integral_stable(inst, 200000);
    if (stable.empty()) continue;
    ++oracle_checked;
    std::vector<Assignment> optimum;
    for (const auto& x : stable) {
      bool best = std::all_of(stable.begin(), stable.end(),
                              [&](const Assignment& y) { return ref::side_prefers(inst, Side::firms, x, y); });
      if (best) optimum.push_back(x);
    }
    if (optimum.size() != 1 || optimum[0] != p.x_min) fail.add(where + ": x_min differs from brute-force optimum");
  }
  if (oracle_checked < 10) fail.add("too few instances within the oracle cap");
  return fail.outcome("50 strict-order instances, " + std::to_string(rotations) + " rotations all unit simple cycles; " +
                      std::to_string(oracle_checked) + " checked against brute force");
}

// 7. Nonconvexity of the stable set.
Outcome criterion7() {
  Failures fail;
  Instance inst = testing::chorded_hexagon();
  auto odd = testing::assignment_from(inst, {{"e1", 1}, {"e3", 1}, {"e5", 1}});
  auto even = testing::assignment_from(inst, {{"e2", 1}, {"e4", 1}, {"e6", 1}});
  Assignment half(inst.num_edges());
  for (int e = 0; e < inst.num_edges(); ++e) half[e] = (odd[e] + even[e]) / 2;
  if (!stability_report(inst, odd).stable || !ref::is_stable(inst, odd)) fail.add("{e1,e3,e5} not stable");
  if (!stability_report(inst, even).stable || !ref::is_stable(inst, even)) fail.add("{e2,e4,e6} not stable");
  StabilityReport r = stability_report(inst, half);
  std::vector<int> expected{*inst.find_edge("a")};
  if (r.stable || r.blocking_edges != expected) fail.add("half-sum report is not {unstable, blocking = [a]}");
  if (ref::blocking_edges(inst, half) != expected) fail.add("reference blocking set differs");
  return fail.outcome("both incidence vectors stable; half-sum unstable with blocking edges [a]");
}

// 8. Bijection, homomorphism, Hasse diagram.
Outcome criterion8() {
  Failures fail;
  std::mt19937_64 rng(kSeed + 8);
  int checked = 0, functions = 0, pairs = 0, hasse = 0;
  auto pool = criterion4_instances();
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const Instance& inst = pool[i];
    std::string where = "instance " + std::to_string(i);
    RotationPoset p = build_poset(inst);
    if (p.size() > 20) continue;
    ++checked;
    auto sets = ref::ideals(p.precedes);
    std::vector<ClosedFunction> lambdas;
    for (const auto& s : sets) lambdas.push_back(fully_closed(p, s));
    if (lambdas.size() != enumerate_fully_closed(p).size()) fail.add(where + ": ideal count differs");
    for (const auto& lambda : lambdas) {
      ++functions;
      Assignment x = gamma(inst, p, lambda);
      if (!ref::is_stable(inst, x)) fail.add(where + ": gamma not stable");
      if (omega(inst, p, x) != lambda) fail.add(where + ": omega(gamma(lambda)) != lambda");
    }
    for (int s = 0; s < 20; ++s) {
      const auto& a = lambdas[rng() % lambdas.size()];
      const auto& b = lambdas[rng() % lambdas.size()];
      Assignment x = gamma(inst, p, a), y = gamma(inst, p, b);
      ClosedFunction lo(a.size()), hi(a.size());
      for (std::size_t k = 0; k < a.size(); ++k) {
        lo[k] = std::min(a[k], b[k]);
        hi[k] = std::max(a[k], b[k]);
      }
      ++pairs;
      Assignment fj = side_join(inst, x, y, Side::firms), wj = side_join(inst, x, y, Side::workers);
      if (omega(inst, p, fj) != lo) fail.add(where + ": firm join does not map to the meet");
      if (omega(inst, p, wj) != hi) fail.add(where + ": worker join does not map to the join");
      if (!ref::side_prefers(inst, Side::firms, fj, x) || !ref::side_prefers(inst, Side::firms, fj, y)) {
        fail.add(where + ": firm join not an upper bound for the firms");
      }
    }
    // Precedence from full-shift reachability: i before j iff every reachable
    // rotation set containing j contains i.
    LatticeExploration ex = explore_full_shift_lattice(inst, p);
    std::vector<std::vector<bool>> reach(p.size(), std::vector<bool>(p.size(), false));
    for (int a = 0; a < p.size(); ++a) {
      for (int b = 0; b < p.size(); ++b) {
        if (a == b) continue;
        reach[a][b] = std::all_of(ex.applied.begin(), ex.applied.end(),
                                  [&](const std::vector<bool>& s) { return !s[b] || s[a]; });
      }
    }
    if (reach != p.precedes) fail.add(where + ": reachability order differs from avoidance order");
    // Transitive closure of the Hasse edges gives the order back.
    std::vector<std::vector<bool>> closure(p.size(), std::vector<bool>(p.size(), false));
    for (const auto& [a, b] : p.hasse_edges) closure[a][b] = true;
    for (int k = 0; k < p.size(); ++k) {
      for (int a = 0; a < p.size(); ++a) {
        for (int b = 0; b < p.size(); ++b) {
          if (closure[a][k] && closure[k][b]) closure[a][b] = true;
        }
      }
    }
    if (closure != p.precedes) fail.add(where + ": Hasse closure differs");
    if (ex.successor_pairs != p.hasse_edges) fail.add(where + ": successor pairs differ from Hasse edges");
    for (const auto& [a, b] : p.hasse_edges) {
      ++hasse;
      if (!hasse_witness(inst, p, a, b)) fail.add(where + ": Hasse edge fails the witness test");
    }
  }
  return fail.outcome(std::to_string(checked) + " instances, " + std::to_string(functions) + " fully closed functions, " +
                      std::to_string(pairs) + " pairs, " + std::to_string(hasse) + " Hasse edges");
}

// 9. Min-cost through the min cut against exhaustive ideals.
Outcome criterion9() {
  Failures fail;
  std::mt19937_64 rng(kSeed + 9);
  testing::RandomConfig cfg;
  cfg.max_side = 6;
  cfg.max_capacity = 3;
  int used = 0, attempts = 0, total_rotations = 0;
  while (used < 30 && attempts < 2000) {
    ++attempts;
    cfg.family = attempts % 2 ? testing::Family::smp : testing::Family::sap;
    cfg.integral = attempts % 3 != 0;
    Instance inst = testing::random_instance(rng, cfg);
    RotationPoset p = build_poset(inst);
    if (p.size() == 0 || p.size() > 15) continue;
    ++used;
    total_rotations += p.size();
    std::string where = "instance " + std::to_string(used);
    std::vector<Rational> costs;
    for (int e = 0; e < inst.num_edges(); ++e) costs.push_back(Rational(static_cast<long>(rng() % 19) - 9));
    MinCostResult best = min_cost_stable(inst, p, costs);
    std::optional<Rational> brute;
    for (const auto& s : ref::ideals(p.precedes)) {
      Assignment x = gamma(inst, p, fully_closed(p, s));
      Rational c = 0;
      for (int e = 0; e < inst.num_edges(); ++e) c += costs[e] * x[e];
      if (!brute || c < *brute) brute = c;
    }
    Rational returned = 0;
    for (int e = 0; e < inst.num_edges(); ++e) returned += costs[e] * best.assignment[e];
    if (!brute || best.cost != *brute) fail.add(where + ": min-cut optimum differs from enumeration");
    if (returned != best.cost) fail.add(where + ": reported cost does not match the assignment");
    if (!ref::is_stable(inst, best.assignment)) fail.add(where + ": optimum not stable");
    // Constant costs: every stable assignment costs c |x_min|.
    Rational c0(static_cast<long>(rng() % 9) + 1);
    MinCostResult flat = min_cost_stable(inst, p, std::vector<Rational>(inst.num_edges(), c0));
    if (flat.cost != c0 * total(p.x_min)) fail.add(where + ": constant cost differs from c |x_min|");
    for (const auto& z : flat.zeta) {
      if (z != 0) fail.add(where + ": nonzero zeta under constant cost");
    }
  }
  if (used < 30) fail.add("only " + std::to_string(used) + " instances with 1..15 rotations found");
  return fail.outcome(std::to_string(used) + " instances (" + std::to_string(total_rotations) +
                      " rotations) match exhaustive ideals; constant costs give c|x_min| and zeta = 0");
}

// 10. Modified method and the quota-filling extension.
Outcome criterion10() {
  Failures fail;
  int instances = 0, big = 0, filling = 0, max_ratio_num = 0, max_ratio_den = 1;
  std::vector<std::vector<Instance>> families;
  families.push_back(criterion4_instances());
  families.push_back(random_family(testing::Family::sdp, 50, kSeed + 5, false));
  families.push_back(random_family(testing::Family::sap, 50, kSeed + 6, true, 5));
  families.push_back(random_family(testing::Family::smp, 50, kSeed + 10, false));
  families.push_back(random_family(testing::Family::sap, 50, kSeed + 11, false));
  for (const auto& family : families) {
    for (const auto& inst : family) {
      std::string where = "instance " + std::to_string(instances++);
      ModifiedResult r = solve_xmin_modified(inst);
      big += r.big_iterations;
      if (r.iterations * max_ratio_den > max_ratio_num * inst.num_edges()) {
        max_ratio_num = r.iterations;
        max_ratio_den = inst.num_edges();
      }
      if (r.iterations > 10 * inst.num_edges()) fail.add(where + ": more than 10|E| iterations");
      if (!ref::is_stable(inst, r.x_min)) fail.add(where + ": output not stable");
      if (!rotations_at(inst.swapped(), r.x_min).empty()) fail.add(where + ": a reversed rotation still applies");
      Assignment x_max = run_route(inst, r.x_min).terminal();
      bool all_full = true;
      for (int v = 0; v < inst.num_vertices(); ++v) all_full = all_full && load(inst, r.x_min, v) == inst.vertex(v).quota;
      QuotaFillingResult q = solve_quota_filling(inst);
      if (q.quota_filling != all_full) fail.add(where + ": quota-filling verdict wrong");
      if (all_full) {
        ++filling;
        if (!q.assignment || *q.assignment != x_max) fail.add(where + ": quota-filling result differs from x_max");
      }
    }
  }
  return fail.outcome(std::to_string(instances) + " instances within 10|E| (max " + std::to_string(max_ratio_num) + "/" +
                      std::to_string(max_ratio_den) + " iterations/|E|, " + std::to_string(big) +
                      " big iterations), stable, no reversed rotation; " + std::to_string(filling) +
                      " quota-filling instances agree with x_max");
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--only" && i + 1 < argc) only = std::atoi(argv[++i]);
  }
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"choice-function axioms", criterion1},        {"3x3 tie market reproduction", criterion2},
      {"chained rotation norms", criterion3},        {"route bounds and invariance", criterion4},
      {"single-tie degeneracy", criterion5},         {"strict-order specialization", criterion6},
      {"nonconvexity example", criterion7},          {"bijection and lattice", criterion8},
      {"min-cost correctness", criterion9},          {"modified x_min method", criterion10},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && static_cast<int>(i) + 1 != only) continue;
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream t;
    t.precision(2);
    t << std::fixed << secs;
    std::cout << "criterion " << i + 1 << " [" << criteria[i].first << "]: " << (o.pass ? "PASS" : "FAIL") << " - "
              << o.detail << " (" << t.str() << "s)" << std::endl;
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
