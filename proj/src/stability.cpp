#include "smp/stability.hpp"

#include <algorithm>

#include "smp/errors.hpp"

namespace smp {

std::vector<int> StabilityReport::fully_filled_on(const Instance& inst, Side s) const {
  std::vector<int> out;
  for (int v : inst.side_vertices(s)) {
    if (fully_filled[v]) out.push_back(v);
  }
  return out;
}

std::vector<int> StabilityReport::deficit_on(const Instance& inst, Side s) const {
  std::vector<int> out;
  for (int v : inst.side_vertices(s)) {
    if (!fully_filled[v]) out.push_back(v);
  }
  return out;
}

StabilityReport stability_report(const Instance& inst, const Assignment& x) {
  require_admissible(inst, x);
  std::vector<ChoiceOutcome> choice;
  choice.reserve(inst.num_vertices());
  StabilityReport report;
  report.fully_filled.assign(inst.num_vertices(), false);
  for (int v = 0; v < inst.num_vertices(); ++v) {
    choice.push_back(choose_at(inst, v, x));
    if (choice.back().result != restrict_to(inst, x.values(), v)) {
      throw DomainError("assignment is not stationary at \"" + inst.vertex(v).id + "\"");
    }
    report.fully_filled[v] = load(inst, x, v) == inst.vertex(v).quota;
  }
  for (int e = 0; e < inst.num_edges(); ++e) {
    const Edge& edge = inst.edge(e);
    bool unsaturated = edge.unbounded || x[e] < edge.capacity;
    bool blocking = unsaturated && choice[edge.firm].in_tail(e) && choice[edge.worker].in_tail(e);
    // Independent form: an unsaturated edge is harmless iff some endpoint is
    // full and the edge is in its head or among its worse edges.
    bool guarded = false;
    for (int v : {edge.firm, edge.worker}) {
      if (report.fully_filled[v] && (choice[v].in_head(e) || choice[v].in_worse(e))) guarded = true;
    }
    if (unsaturated && blocking == guarded) throw InvariantError("blocking characterizations disagree on \"" + edge.id + "\"");
    if (blocking) report.blocking_edges.push_back(e);
  }
  report.stable = report.blocking_edges.empty();
  return report;
}

bool is_stable(const Instance& inst, const Assignment& x) {
  auto m = validate_assignment(inst, x);
  if (!m.in_box || !m.quota_feasible) return false;
  return stability_report(inst, x).stable;
}

namespace {

void require_stable(const Instance& inst, const Assignment& x) {
  if (!stability_report(inst, x).stable) throw DomainError("assignment is not stable");
}

bool side_holds(const Instance& inst, const Assignment& x, const Assignment& y, Side side, std::vector<Preference>* verdicts) {
  bool holds = true;
  for (int v : inst.side_vertices(side)) {
    Preference p = prefers(inst, v, restrict_to(inst, x.values(), v), restrict_to(inst, y.values(), v));
    if (verdicts) verdicts->push_back(p);
    if (p != Preference::strictly_better && p != Preference::equal) holds = false;
  }
  return holds;
}

}  // namespace

SideComparison compare_stable(const Instance& inst, const Assignment& x, const Assignment& y, Side side) {
  require_stable(inst, x);
  require_stable(inst, y);
  SideComparison out;
  out.holds = side_holds(inst, x, y, side, &out.verdicts);
  if (out.holds && !side_holds(inst, y, x, opposite(side), nullptr)) {
    throw InvariantError("polarity violated: x is preferred by one side but y not by the other");
  }
  return out;
}

Assignment side_join(const Instance& inst, const Assignment& x, const Assignment& y, Side side) {
  Assignment out(inst.num_edges());
  for (int v : inst.side_vertices(side)) {
    const auto& edges = inst.vertex(v).edges;
    std::vector<Rational> z(edges.size());
    for (std::size_t k = 0; k < edges.size(); ++k) z[k] = std::max(x[edges[k]], y[edges[k]]);
    ChoiceOutcome c = choose(inst, v, z);
    for (std::size_t k = 0; k < edges.size(); ++k) out[edges[k]] = c.result[k];
  }
  return out;
}

}  // namespace smp
