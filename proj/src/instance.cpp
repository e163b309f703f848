#include "smp/instance.hpp"

#include <algorithm>
#include <set>

#include "smp/errors.hpp"

namespace smp {

Instance Instance::build(const InstanceSpec& spec) {
  Instance inst;
  auto add_vertex = [&](const std::string& id, Side side) {
    if (inst.vertex_index_.count(id)) throw DomainError("duplicate vertex id \"" + id + "\"");
    inst.vertex_index_[id] = static_cast<int>(inst.vertices_.size());
    Vertex v;
    v.id = id;
    v.side = side;
    inst.vertices_.push_back(std::move(v));
  };
  for (const auto& id : spec.firms) add_vertex(id, Side::firms);
  inst.num_firms_ = static_cast<int>(spec.firms.size());
  for (const auto& id : spec.workers) add_vertex(id, Side::workers);

  std::vector<EdgeSpec> sorted = spec.edges;
  std::sort(sorted.begin(), sorted.end(), [](const EdgeSpec& a, const EdgeSpec& b) { return a.id < b.id; });
  std::set<std::pair<int, int>> pairs;
  for (const auto& es : sorted) {
    if (inst.edge_index_.count(es.id)) throw DomainError("duplicate edge id \"" + es.id + "\"");
    auto f = inst.find_vertex(es.firm);
    auto w = inst.find_vertex(es.worker);
    if (!f || !inst.is_firm(*f)) throw DomainError("edge \"" + es.id + "\" references unknown firm \"" + es.firm + "\"");
    if (!w || inst.is_firm(*w)) throw DomainError("edge \"" + es.id + "\" references unknown worker \"" + es.worker + "\"");
    if (!es.unbounded && es.capacity <= 0) throw DomainError("nonpositive capacity on edge \"" + es.id + "\"");
    if (!pairs.insert({*f, *w}).second) {
      throw DomainError("duplicate (firm, worker) pair (" + es.firm + ", " + es.worker + ")");
    }
    Edge e;
    e.id = es.id;
    e.firm = *f;
    e.worker = *w;
    e.capacity = es.unbounded ? Rational(0) : es.capacity;
    e.unbounded = es.unbounded;
    int idx = static_cast<int>(inst.edges_.size());
    inst.edge_index_[es.id] = idx;
    inst.vertices_[*f].edges.push_back(idx);
    inst.vertices_[*w].edges.push_back(idx);
    inst.edges_.push_back(std::move(e));
  }

  for (const auto& [id, q] : spec.quotas) {
    if (!inst.find_vertex(id)) throw DomainError("quota for unknown vertex \"" + id + "\"");
  }
  for (const auto& [id, ties] : spec.preferences) {
    if (!inst.find_vertex(id)) throw DomainError("preferences for unknown vertex \"" + id + "\"");
  }
  for (int v = 0; v < inst.num_vertices(); ++v) {
    Vertex& vx = inst.vertices_[v];
    auto q = spec.quotas.find(vx.id);
    if (q == spec.quotas.end()) throw DomainError("missing quota for vertex \"" + vx.id + "\"");
    if (q->second <= 0) throw DomainError("nonpositive quota for vertex \"" + vx.id + "\"");
    vx.quota = q->second;

    auto p = spec.preferences.find(vx.id);
    std::vector<std::vector<std::string>> ties;
    if (p != spec.preferences.end()) ties = p->second;
    std::set<int> seen;
    for (std::size_t t = 0; t < ties.size(); ++t) {
      if (ties[t].empty()) throw DomainError("tie partition mismatch at \"" + vx.id + "\": empty tie");
      std::vector<int> tie;
      for (const auto& eid : ties[t]) {
        auto e = inst.find_edge(eid);
        if (!e || (inst.edges_[*e].firm != v && inst.edges_[*e].worker != v) || !seen.insert(*e).second) {
          throw DomainError("tie partition mismatch at \"" + vx.id + "\": edge \"" + eid + "\"");
        }
        tie.push_back(*e);
        if (vx.side == Side::firms) {
          inst.edges_[*e].firm_tie = static_cast<int>(t);
        } else {
          inst.edges_[*e].worker_tie = static_cast<int>(t);
        }
      }
      std::sort(tie.begin(), tie.end());
      vx.ties.push_back(std::move(tie));
    }
    if (seen.size() != vx.edges.size()) {
      throw DomainError("tie partition mismatch at \"" + vx.id + "\": ties do not cover all incident edges");
    }
  }

  if (!spec.costs.empty()) {
    inst.costs_.assign(inst.num_edges(), Rational(0));
    for (const auto& [id, c] : spec.costs) {
      auto e = inst.find_edge(id);
      if (!e) throw DomainError("cost for unknown edge \"" + id + "\"");
      inst.costs_[*e] = c;
    }
  }
  return inst;
}

std::vector<int> Instance::side_vertices(Side s) const {
  std::vector<int> out;
  int lo = s == Side::firms ? 0 : num_firms_;
  int hi = s == Side::firms ? num_firms_ : num_vertices();
  for (int v = lo; v < hi; ++v) out.push_back(v);
  return out;
}

std::optional<int> Instance::find_edge(const std::string& id) const {
  auto it = edge_index_.find(id);
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Instance::find_vertex(const std::string& id) const {
  auto it = vertex_index_.find(id);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

Instance Instance::with_costs(std::vector<Rational> costs) const {
  if (static_cast<int>(costs.size()) != num_edges()) throw DomainError("cost vector has wrong length");
  Instance out = *this;
  out.costs_ = std::move(costs);
  return out;
}

InstanceSpec Instance::to_spec() const {
  InstanceSpec spec;
  for (int v = 0; v < num_vertices(); ++v) {
    const Vertex& vx = vertices_[v];
    (is_firm(v) ? spec.firms : spec.workers).push_back(vx.id);
    spec.quotas[vx.id] = vx.quota;
    auto& ties = spec.preferences[vx.id];
    for (const auto& tie : vx.ties) {
      std::vector<std::string> ids;
      for (int e : tie) ids.push_back(edges_[e].id);
      ties.push_back(std::move(ids));
    }
  }
  for (const auto& e : edges_) {
    spec.edges.push_back({e.id, vertices_[e.firm].id, vertices_[e.worker].id, e.capacity, e.unbounded});
  }
  for (int e = 0; e < static_cast<int>(costs_.size()); ++e) spec.costs[edges_[e].id] = costs_[e];
  return spec;
}

Instance Instance::swapped() const {
  InstanceSpec spec = to_spec();
  std::swap(spec.firms, spec.workers);
  for (auto& e : spec.edges) std::swap(e.firm, e.worker);
  return build(spec);
}

std::vector<Rational> restrict_to(const Instance& inst, const std::vector<Rational>& z, int v) {
  std::vector<Rational> out;
  out.reserve(inst.vertex(v).edges.size());
  for (int e : inst.vertex(v).edges) out.push_back(z[e]);
  return out;
}

Rational load(const Instance& inst, const Assignment& x, int v) {
  Rational s = 0;
  for (int e : inst.vertex(v).edges) s += x[e];
  return s;
}

Rational total(const Assignment& x) {
  Rational s = 0;
  for (const auto& value : x.values()) s += value;
  return s;
}

MembershipReport validate_assignment(const Instance& inst, const Assignment& x) {
  if (x.size() != inst.num_edges()) throw DomainError("assignment has wrong length");
  MembershipReport report;
  for (int e = 0; e < inst.num_edges(); ++e) {
    const Edge& edge = inst.edge(e);
    if (x[e] < 0) {
      report.in_box = false;
      report.violations.push_back({Violation::Kind::negative, edge.id, x[e], Rational(0)});
    } else if (!edge.unbounded && x[e] > edge.capacity) {
      report.in_box = false;
      report.violations.push_back({Violation::Kind::above_capacity, edge.id, x[e], edge.capacity});
    }
  }
  for (int v = 0; v < inst.num_vertices(); ++v) {
    Rational l = load(inst, x, v);
    if (l > inst.vertex(v).quota) {
      report.quota_feasible = false;
      report.violations.push_back({Violation::Kind::over_quota, inst.vertex(v).id, l, inst.vertex(v).quota});
    }
  }
  return report;
}

void require_admissible(const Instance& inst, const Assignment& x) {
  auto report = validate_assignment(inst, x);
  if (!report.in_box || !report.quota_feasible) {
    const auto& v = report.violations.front();
    throw DomainError("assignment is not admissible at \"" + v.id + "\"");
  }
}

}  // namespace smp
