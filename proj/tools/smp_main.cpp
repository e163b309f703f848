#include <algorithm>
#include <cstdint>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "smp/choice.hpp"
#include "smp/errors.hpp"
#include "smp/initial_assignment.hpp"
#include "smp/io.hpp"
#include "smp/min_cost.hpp"
#include "smp/poset.hpp"
#include "smp/rotations.hpp"
#include "smp/stability.hpp"
#include "smp/verify.hpp"

using json = nlohmann::ordered_json;

namespace {

using namespace smp;

json assignment_json(const Instance& inst, const Assignment& x) {
  json values = json::object();
  for (int e = 0; e < inst.num_edges(); ++e) values[inst.edge(e).id] = to_string(x[e]);
  return values;
}

json vertex_ids(const Instance& inst, const std::vector<int>& vs) {
  json out = json::array();
  for (int v : vs) out.push_back(inst.vertex(v).id);
  return out;
}

json edge_ids(const Instance& inst, const std::vector<int>& es) {
  json out = json::array();
  for (int e : es) out.push_back(inst.edge(e).id);
  return out;
}

json rotation_json(const Instance& inst, const Rotation& rot) {
  json values = json::object();
  for (int e = 0; e < inst.num_edges(); ++e) {
    if (rot.values[e] != 0) values[inst.edge(e).id] = to_string(rot.values[e]);
  }
  return json{{"component", vertex_ids(inst, rot.component.vertices)},
              {"values", values},
              {"tau", to_string(rot.tau)}};
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string active_graph_dot(const Instance& inst, const Assignment& x) {
  ActiveStructure s = build_active_structure(inst, x);
  ActiveGraph g = active_graph(inst, s);
  std::vector<std::string> nodes, arcs;
  for (int v = 0; v < inst.num_vertices(); ++v) {
    std::string shape = inst.is_firm(v) ? "box" : "ellipse";
    nodes.push_back("  " + dot_quote(inst.vertex(v).id) + " [shape=" + shape + "];");
    for (const auto& a : g.out[v]) {
      arcs.push_back("  " + dot_quote(inst.vertex(v).id) + " -> " + dot_quote(inst.vertex(a.to).id) +
                     " [label=" + dot_quote(inst.edge(a.edge).id) + "];");
    }
  }
  std::sort(nodes.begin(), nodes.end());
  std::sort(arcs.begin(), arcs.end());
  std::ostringstream out;
  out << "digraph active {\n";
  for (const auto& n : nodes) out << n << "\n";
  for (const auto& a : arcs) out << a << "\n";
  out << "}\n";
  return out.str();
}

std::string poset_dot(const RotationPoset& poset) {
  std::ostringstream out;
  out << "digraph poset {\n";
  for (int i = 0; i < poset.size(); ++i) {
    out << "  " << poset.id(i) << " [label=\"" << poset.id(i) << " tau=" << to_string(poset.tau(i)) << "\"];\n";
  }
  for (const auto& [i, j] : poset.hasse_edges) out << "  " << poset.id(i) << " -> " << poset.id(j) << ";\n";
  out << "}\n";
  return out.str();
}

json iteration_trace(const ModifiedResult& r) {
  json out = json::array();
  for (const auto& rec : r.trace) {
    json j{{"kind", rec.kind == IterationRecord::Kind::big ? "big" : "ordinary"},
           {"positive", rec.positive},
           {"events", rec.events}};
    if (rec.eta) j["eta"] = to_string(*rec.eta);
    if (!rec.tight.empty()) j["tight"] = rec.tight;
    out.push_back(j);
  }
  return out;
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

Instance load_instance(const std::string& path) { return parse_instance(read_file(path)); }

int cmd_check(const std::string& inst_path, const std::string& x_path) {
  Instance inst = load_instance(inst_path);
  Assignment x = parse_assignment(inst, read_file(x_path));
  MembershipReport m = validate_assignment(inst, x);
  if (!m.in_box || !m.quota_feasible) {
    json violations = json::array();
    for (const auto& v : m.violations) {
      const char* kind = v.kind == Violation::Kind::negative       ? "negative"
                         : v.kind == Violation::Kind::above_capacity ? "above_capacity"
                                                                     : "over_quota";
      violations.push_back({{"kind", kind}, {"id", v.id}, {"value", to_string(v.value)}, {"bound", to_string(v.bound)}});
    }
    print(json{{"error", "assignment is not admissible"}, {"in_box", m.in_box},
               {"quota_feasible", m.quota_feasible}, {"violations", violations}});
    return 1;
  }
  StabilityReport r = stability_report(inst, x);
  print(json{{"stable", r.stable},
             {"blocking_edges", edge_ids(inst, r.blocking_edges)},
             {"fully_filled_firms", vertex_ids(inst, r.fully_filled_on(inst, Side::firms))},
             {"fully_filled_workers", vertex_ids(inst, r.fully_filled_on(inst, Side::workers))},
             {"deficit_firms", vertex_ids(inst, r.deficit_on(inst, Side::firms))},
             {"deficit_workers", vertex_ids(inst, r.deficit_on(inst, Side::workers))}});
  return 0;
}

int cmd_solve(const std::string& path, const std::string& side_name, const std::string& method, bool trace) {
  Instance inst = load_instance(path);
  Side side = side_name == "workers" ? Side::workers : Side::firms;
  json out;
  if (method == "quota-filling") {
    // The extension yields the worker-optimal assignment of its input.
    Instance target = side == Side::workers ? inst : inst.swapped();
    QuotaFillingResult q = solve_quota_filling(target);
    out["quota_filling"] = q.quota_filling;
    if (!q.quota_filling) {
      out["error"] = "instance is not quota-filling";
      print(out);
      return 1;
    }
    out["values"] = assignment_json(inst, *q.assignment);
    out["route_length"] = q.route_length;
  } else {
    Instance target = side == Side::firms ? inst : inst.swapped();
    ModifiedResult r = solve_xmin_modified(target);
    out["values"] = assignment_json(inst, r.x_min);
    out["iterations"] = r.iterations;
    out["big_iterations"] = r.big_iterations;
    out["within_bound"] = r.within_bound;
    out["normalization_shifts"] = r.normalization_shifts;
    if (trace) out["trace"] = iteration_trace(r);
  }
  print(out);
  return 0;
}

int cmd_rotations(const std::string& path, const std::string& at_path, bool dot) {
  Instance inst = load_instance(path);
  Assignment x = at_path.empty() ? solve_xmin(inst) : parse_assignment(inst, read_file(at_path));
  require_admissible(inst, x);
  if (!is_stable(inst, x)) throw DomainError("assignment is not stable");
  if (dot) {
    std::cout << active_graph_dot(inst, x);
    return 0;
  }
  json out = json::array();
  for (const auto& rot : rotations_at(inst, x)) out.push_back(rotation_json(inst, rot));
  print(json{{"rotations", out}});
  return 0;
}

int cmd_poset(const std::string& path, bool dot) {
  Instance inst = load_instance(path);
  RotationPoset poset = build_poset(inst);
  if (dot) {
    std::cout << poset_dot(poset);
    return 0;
  }
  json rots = json::array();
  for (int i = 0; i < poset.size(); ++i) {
    json r = rotation_json(inst, poset.rotations[i]);
    r["id"] = poset.id(i);
    rots.push_back(r);
  }
  json hasse = json::array();
  for (const auto& [i, j] : poset.hasse_edges) hasse.push_back({poset.id(i), poset.id(j)});
  print(json{{"rotations", rots},
             {"hasse_edges", hasse},
             {"x_min", assignment_json(inst, poset.x_min)},
             {"x_max", assignment_json(inst, poset.x_max)}});
  return 0;
}

int cmd_mincost(const std::string& path, const std::string& costs_path, bool maximize) {
  Instance inst = load_instance(path);
  std::vector<Rational> costs;
  if (!costs_path.empty()) {
    costs = parse_costs(inst, read_file(costs_path));
  } else if (inst.has_costs()) {
    costs = inst.costs();
  } else {
    throw DomainError("no costs given and the instance has no costs field");
  }
  if (maximize) {
    for (auto& c : costs) c = -c;
  }
  RotationPoset poset = build_poset(inst);
  MinCostResult r = min_cost_stable(inst, poset, costs);
  json ideal = json::array();
  for (int i = 0; i < poset.size(); ++i) {
    if (r.ideal[i]) ideal.push_back(poset.id(i));
  }
  Rational cost = maximize ? Rational(-r.cost) : r.cost;
  print(json{{"assignment", assignment_json(inst, r.assignment)}, {"cost", to_string(cost)}, {"ideal", ideal}});
  return 0;
}

int cmd_enumerate(const std::string& path, int grid) {
  Instance inst = load_instance(path);
  RotationPoset poset = build_poset(inst);
  std::vector<Assignment> xs;
  if (grid >= 2) {
    xs = grid_sublattice(inst, poset, grid);
  } else {
    for (const auto& lambda : enumerate_fully_closed(poset)) xs.push_back(gamma(inst, poset, lambda));
  }
  json out = json::array();
  for (const auto& x : xs) out.push_back(json{{"values", assignment_json(inst, x)}});
  print(json{{"assignments", out}});
  return 0;
}

int cmd_verify(const std::string& path, std::uint64_t seed) {
  Instance inst = load_instance(path);
  VerifyOptions opts;
  opts.seed = seed;
  auto checks = verify_instance(inst, opts);
  json out = json::array();
  bool all = true;
  for (const auto& c : checks) {
    json j{{"name", c.name}, {"pass", c.pass}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    out.push_back(j);
    all = all && c.pass;
  }
  print(json{{"pass", all}, {"checks", out}});
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stable assignments with choice functions"};
  app.require_subcommand(1);

  std::string inst_path, x_path, side = "firms", method = "modified", at_path, costs_path;
  bool trace = false, dot = false, maximize = false;
  int grid = 0;
  std::uint64_t seed = 20240601;

  auto* check = app.add_subcommand("check", "Stability report of an assignment");
  check->add_option("instance", inst_path)->required();
  check->add_option("assignment", x_path)->required();

  auto* solve = app.add_subcommand("solve", "Side-optimal stable assignment");
  solve->add_option("instance", inst_path)->required();
  solve->add_option("--side", side)->check(CLI::IsMember({"firms", "workers"}));
  solve->add_option("--method", method)->check(CLI::IsMember({"modified", "quota-filling"}));
  solve->add_flag("--trace", trace);

  auto* rotations = app.add_subcommand("rotations", "Rotations exposed at a stable assignment");
  rotations->add_option("instance", inst_path)->required();
  rotations->add_option("--at", at_path);
  rotations->add_flag("--dot", dot);

  auto* poset = app.add_subcommand("poset", "Rotation poset");
  poset->add_option("instance", inst_path)->required();
  poset->add_flag("--dot", dot);

  auto* mincost = app.add_subcommand("mincost", "Minimum-cost stable assignment");
  mincost->add_option("instance", inst_path)->required();
  mincost->add_option("--costs", costs_path);
  mincost->add_flag("--maximize", maximize);

  auto* enumerate = app.add_subcommand("enumerate", "Stable assignments of fully closed functions or a grid");
  enumerate->add_option("instance", inst_path)->required();
  enumerate->add_option("--grid", grid)->check(CLI::Range(2, 1000));

  auto* verify = app.add_subcommand("verify", "Invariant checks of every module");
  verify->add_option("instance", inst_path)->required();
  verify->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print(json{{"error", e.what()}, {"kind", "usage"}});
    return 2;
  }

  try {
    if (*check) return cmd_check(inst_path, x_path);
    if (*solve) return cmd_solve(inst_path, side, method, trace);
    if (*rotations) return cmd_rotations(inst_path, at_path, dot);
    if (*poset) return cmd_poset(inst_path, dot);
    if (*mincost) return cmd_mincost(inst_path, costs_path, maximize);
    if (*enumerate) return cmd_enumerate(inst_path, grid);
    if (*verify) return cmd_verify(inst_path, seed);
  } catch (const smp::ParseError& e) {
    print(json{{"error", e.what()}, {"kind", "parse"}});
    return 1;
  } catch (const smp::CapExceeded& e) {
    print(json{{"error", e.what()}, {"kind", "cap_exceeded"}});
    return 1;
  } catch (const smp::DomainError& e) {
    print(json{{"error", e.what()}, {"kind", "domain"}});
    return 1;
  } catch (const smp::InvariantError& e) {
    print(json{{"error", e.what()}, {"kind", "invariant"}});
    return 1;
  }
  return 2;
}
