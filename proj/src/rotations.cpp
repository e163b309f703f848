#include "smp/rotations.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "smp/errors.hpp"
#include "smp/linear_algebra.hpp"
#include "smp/stability.hpp"

namespace smp {

namespace {

bool unsaturated(const Instance& inst, const Assignment& x, int e) {
  return inst.edge(e).unbounded || x[e] < inst.edge(e).capacity;
}

}  // namespace

bool ActiveStructure::reduced_head(int f) const {
  return potential_tie[f].has_value() && choice[f].critical_tie && *potential_tie[f] == *choice[f].critical_tie;
}

ActiveStructure build_active_structure(const Instance& inst, const Assignment& x) {
  StabilityReport report = stability_report(inst, x);
  if (!report.stable) throw DomainError("assignment is not stable");
  const int n = inst.num_vertices();
  ActiveStructure s;
  s.fully_filled = report.fully_filled;
  s.potential_tie.assign(n, std::nullopt);
  s.active_head.assign(n, {});
  s.singular.assign(n, false);
  s.regular.assign(n, false);
  for (int v = 0; v < n; ++v) s.choice.push_back(choose_at(inst, v, x));

  for (int f : inst.side_vertices(Side::firms)) {
    if (!s.fully_filled[f]) continue;
    const auto& ties = inst.vertex(f).ties;
    for (std::size_t t = 0; t < ties.size(); ++t) {
      bool blocked = false;
      std::vector<int> d;
      for (int e : ties[t]) {
        if (!unsaturated(inst, x, e)) continue;
        int w = inst.edge(e).worker;
        if (!s.fully_filled[w]) blocked = true;
        if (s.choice[w].in_tail(e)) d.push_back(e);
      }
      if (blocked) break;
      if (!d.empty()) {
        s.potential_tie[f] = static_cast<int>(t);
        s.active_head[f] = std::move(d);
        break;
      }
    }
  }
  for (int w : inst.side_vertices(Side::workers)) {
    if (s.fully_filled[w]) s.active_head[w] = s.choice[w].head;
  }

  // Cleaning.
  for (int v = 0; v < n; ++v) {
    if (!s.fully_filled[v]) continue;
    if (inst.is_firm(v)) {
      if (s.active_head[v].empty()) s.singular[v] = true;
    } else {
      for (int e : s.active_head[v]) {
        if (!s.fully_filled[inst.edge(e).firm]) s.singular[v] = true;
      }
    }
  }
  for (bool grew = true; grew;) {
    grew = false;
    for (int v = 0; v < n; ++v) {
      if (!s.fully_filled[v] || s.singular[v]) continue;
      for (int e : s.active_head[v]) {
        if (s.singular[inst.other_end(e, v)]) {
          s.singular[v] = true;
          grew = true;
          break;
        }
      }
    }
  }
  for (int v = 0; v < n; ++v) s.regular[v] = s.fully_filled[v] && !s.singular[v];
  for (int v = 0; v < n; ++v) {
    if (!s.regular[v]) continue;
    if (s.active_head[v].empty()) throw InvariantError("regular vertex with empty active head");
    for (int e : s.active_head[v]) {
      if (!s.regular[inst.other_end(e, v)]) throw InvariantError("active edge leaves the regular set");
    }
  }
  return s;
}

std::vector<int> ActiveGraph::active_edges() const {
  std::vector<int> out;
  for (const auto& arcs : this->out) {
    for (const auto& a : arcs) out.push_back(a.edge);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ActiveGraph active_graph(const Instance& inst, const ActiveStructure& s) {
  ActiveGraph g;
  g.out.assign(inst.num_vertices(), {});
  for (int v = 0; v < inst.num_vertices(); ++v) {
    if (!s.regular[v]) continue;
    for (int e : s.active_head[v]) g.out[v].push_back({inst.other_end(e, v), e});
  }
  return g;
}

std::vector<Component> maximal_components(const ActiveGraph& g) {
  const int n = static_cast<int>(g.out.size());
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  int counter = 0, num_comp = 0;
  std::function<void(int)> dfs = [&](int v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (const auto& a : g.out[v]) {
      if (index[a.to] < 0) {
        dfs(a.to);
        low[v] = std::min(low[v], low[a.to]);
      } else if (on_stack[a.to]) {
        low[v] = std::min(low[v], index[a.to]);
      }
    }
    if (low[v] == index[v]) {
      for (;;) {
        int u = stack.back();
        stack.pop_back();
        on_stack[u] = false;
        comp[u] = num_comp;
        if (u == v) break;
      }
      ++num_comp;
    }
  };
  for (int v = 0; v < n; ++v) {
    if (index[v] < 0) dfs(v);
  }
  std::vector<bool> has_exit(num_comp, false), has_arc(num_comp, false);
  for (int v = 0; v < n; ++v) {
    for (const auto& a : g.out[v]) {
      if (comp[a.to] != comp[v]) {
        has_exit[comp[v]] = true;
      } else {
        has_arc[comp[v]] = true;
      }
    }
  }
  std::map<int, Component> by_comp;
  for (int v = 0; v < n; ++v) {
    int c = comp[v];
    if (has_exit[c] || !has_arc[c]) continue;
    by_comp[c].vertices.push_back(v);
    for (const auto& a : g.out[v]) by_comp[c].edges.push_back(a.edge);
  }
  std::vector<Component> out;
  for (auto& [c, comp_data] : by_comp) {
    std::sort(comp_data.edges.begin(), comp_data.edges.end());
    out.push_back(std::move(comp_data));
  }
  std::sort(out.begin(), out.end(), [](const Component& a, const Component& b) { return a.vertices[0] < b.vertices[0]; });
  return out;
}

Integer Rotation::norm_inf() const {
  Integer m = 0;
  for (const auto& v : values) m = std::max(m, Integer(::abs(v)));
  return m;
}

Rotation extract_rotation(const Instance& inst, const Assignment& x, const ActiveStructure& s, const Component& c) {
  std::map<int, int> var;
  for (int v : c.vertices) var[v] = static_cast<int>(var.size());
  const std::size_t k = var.size();
  LinearSystem sys;
  for (int v : c.vertices) sys.labels.push_back(inst.vertex(v).id);
  // Row v: h_v * var_v - sum of the counterpart variables over active edges
  // entering v from inside the component.
  std::vector<std::vector<Rational>> rows(k, std::vector<Rational>(k));
  for (int v : c.vertices) rows[var[v]][var[v]] = static_cast<long>(s.active_head[v].size());
  for (int e : c.edges) {
    int f = inst.edge(e).firm, w = inst.edge(e).worker;
    bool firm_side = std::binary_search(s.active_head[f].begin(), s.active_head[f].end(), e) && s.regular[f];
    int tail = firm_side ? f : w;  // arc tail
    int head = firm_side ? w : f;
    rows[var[head]][var[tail]] -= 1;
  }
  sys.matrix = rows;
  sys.rhs.assign(k, Rational(0));
  GaussianResult res = gaussian_solve(sys);
  if (res.nullspace.size() != 1) {
    throw InvariantError("balance system nullspace has dimension " + std::to_string(res.nullspace.size()));
  }
  const auto& sol = res.nullspace[0];
  for (const auto& value : sol) {
    if (value <= 0) throw InvariantError("balance system solution is not positive");
  }
  Rotation rot;
  rot.values.assign(inst.num_edges(), Integer(0));
  rot.component = c;
  for (int e : c.edges) {
    int f = inst.edge(e).firm, w = inst.edge(e).worker;
    bool firm_side = std::binary_search(s.active_head[f].begin(), s.active_head[f].end(), e);
    rot.values[e] = firm_side ? sol[var[f]] : Integer(-sol[var[w]]);
  }
  (void)x;
  return rot;
}

Rational max_weight(const Instance& inst, const Assignment& x, const Rotation& rot) {
  std::optional<Rational> tau;
  auto take = [&](const Rational& value) {
    if (!tau || value < *tau) tau = value;
  };
  for (int e : rot.component.edges) {
    const Integer& r = rot.values[e];
    if (r < 0) {
      take(x[e] / Rational(-r));
    } else if (r > 0 && !inst.edge(e).unbounded) {
      take((inst.edge(e).capacity - x[e]) / Rational(r));
    }
  }
  for (int w : rot.component.vertices) {
    if (inst.is_firm(w)) continue;
    ChoiceOutcome c = choose_at(inst, w, x);
    for (int e : c.head) {
      if (rot.values[e] >= 0) continue;
      for (int e2 : c.critical_edges) {
        if (c.in_head(e2)) continue;
        take((x[e] - x[e2]) / Rational(-rot.values[e] + rot.values[e2]));
      }
    }
  }
  if (!tau) throw InvariantError("rotation without a weight bound");
  if (*tau <= 0) throw InvariantError("nonpositive maximal weight");
  return *tau;
}

std::vector<Rotation> rotations_at(const Instance& inst, const Assignment& x) {
  ActiveStructure s = build_active_structure(inst, x);
  ActiveGraph g = active_graph(inst, s);
  std::vector<Rotation> out;
  for (const auto& c : maximal_components(g)) {
    Rotation rot = extract_rotation(inst, x, s, c);
    rot.tau = max_weight(inst, x, rot);
    out.push_back(std::move(rot));
  }
  return out;
}

Assignment apply_shifts(const Instance& inst, const Assignment& x,
                        const std::vector<std::pair<const Rotation*, Rational>>& shifts) {
  std::set<int> used;
  Assignment y = x;
  for (const auto& [rot, lambda] : shifts) {
    if (lambda <= 0 || lambda > rot->tau) throw DomainError("shift weight outside (0, tau]");
    for (int v : rot->component.vertices) {
      if (!used.insert(v).second) throw DomainError("simultaneous rotations share a vertex");
    }
    for (int e = 0; e < inst.num_edges(); ++e) {
      if (rot->values[e] != 0) y[e] += lambda * Rational(rot->values[e]);
    }
  }
  if (!stability_report(inst, y).stable) throw InvariantError("rotational shift produced an unstable assignment");
  if (y == x || !compare_stable(inst, x, y, Side::firms).holds) {
    throw InvariantError("rotational shift did not move strictly down for the firms");
  }
  return y;
}

Assignment apply_shift(const Instance& inst, const Assignment& x, const Rotation& rot, const Rational& lambda) {
  return apply_shifts(inst, x, {{&rot, lambda}});
}

std::vector<std::string> rotation_defects(const Instance& inst, const Rotation& rot) {
  std::vector<std::string> out;
  bool circulation = true, aligned = true;
  for (int v = 0; v < inst.num_vertices(); ++v) {
    Integer sum = 0;
    std::optional<Integer> common;
    for (int e : inst.vertex(v).edges) {
      const Integer& r = rot.values[e];
      sum += r;
      bool own = inst.is_firm(v) ? r > 0 : r < 0;
      if (!own) continue;
      if (common && *common != r) aligned = false;
      common = r;
    }
    if (sum != 0) circulation = false;
  }
  if (!circulation) out.push_back("circulation");
  if (!aligned) out.push_back("aligned");
  if (gcd_of(rot.values) != 1) out.push_back("normalized");

  std::vector<int> parent(inst.num_vertices());
  for (int v = 0; v < inst.num_vertices(); ++v) parent[v] = v;
  std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
  std::set<int> touched;
  for (int e = 0; e < inst.num_edges(); ++e) {
    if (rot.values[e] == 0) continue;
    touched.insert(inst.edge(e).firm);
    touched.insert(inst.edge(e).worker);
    parent[find(inst.edge(e).firm)] = find(inst.edge(e).worker);
  }
  std::set<int> roots;
  for (int v : touched) roots.insert(find(v));
  if (roots.size() != 1) out.push_back("connected");
  return out;
}

}  // namespace smp
