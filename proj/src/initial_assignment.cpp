#include "smp/initial_assignment.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "smp/choice.hpp"
#include "smp/errors.hpp"
#include "smp/poset.hpp"
#include "smp/simplex.hpp"
#include "smp/stability.hpp"

namespace smp {

namespace {

void require_finite(const Instance& inst) {
  for (const auto& e : inst.edges()) {
    if (e.unbounded) throw DomainError("iterative methods need finite capacities");
  }
}

std::vector<bool> full_on(const Instance& inst, const Assignment& z, Side s) {
  std::vector<bool> out(inst.num_vertices(), false);
  for (int v : inst.side_vertices(s)) out[v] = load(inst, z, v) == inst.vertex(v).quota;
  return out;
}

// Rule (3.1): keep the bound where the worker accepted everything, else lower
// it to the accepted amount.
std::vector<Rational> next_bounds(const IterationState& s) {
  std::vector<Rational> b = s.bounds;
  for (int e = 0; e < s.x.size(); ++e) {
    if (s.y[e] != s.x[e]) b[e] = s.y[e];
  }
  return b;
}

struct Snapshot {
  std::vector<bool> fixed;  // per edge: saturated by y or bound reduced
  std::vector<bool> workers_full;
  std::vector<std::optional<int>> worker_tie;
  std::vector<std::vector<int>> worker_head;
};

Snapshot take_snapshot(const Instance& inst, const std::vector<Rational>& bounds, const Assignment& y) {
  Snapshot s;
  s.fixed.assign(inst.num_edges(), false);
  for (int e = 0; e < inst.num_edges(); ++e) {
    s.fixed[e] = bounds[e] < inst.edge(e).capacity || y[e] == inst.edge(e).capacity;
  }
  s.workers_full = full_on(inst, y, Side::workers);
  s.worker_tie.assign(inst.num_vertices(), std::nullopt);
  s.worker_head.assign(inst.num_vertices(), {});
  for (int w : inst.side_vertices(Side::workers)) {
    if (!s.workers_full[w]) continue;
    ChoiceOutcome c = choose_at(inst, w, y);
    s.worker_tie[w] = c.critical_tie;
    s.worker_head[w] = c.head;
  }
  return s;
}

// Positive events between consecutive snapshots; throws on a regression.
std::vector<std::string> progress(const Instance& inst, const Snapshot& prev, const Snapshot& cur) {
  std::vector<std::string> events;
  for (int e = 0; e < inst.num_edges(); ++e) {
    if (prev.fixed[e] && !cur.fixed[e]) throw InvariantError("edge \"" + inst.edge(e).id + "\" left the saturated/reduced set");
    if (!prev.fixed[e] && cur.fixed[e]) events.push_back("fixed:" + inst.edge(e).id);
  }
  for (int w : inst.side_vertices(Side::workers)) {
    const std::string& id = inst.vertex(w).id;
    if (prev.workers_full[w] && !cur.workers_full[w]) throw InvariantError("worker \"" + id + "\" stopped being fully filled");
    if (!prev.workers_full[w]) {
      if (cur.workers_full[w]) events.push_back("filled:" + id);
      continue;
    }
    if (*cur.worker_tie[w] > *prev.worker_tie[w]) throw InvariantError("critical tie of \"" + id + "\" got worse");
    if (*cur.worker_tie[w] < *prev.worker_tie[w]) {
      events.push_back("tie:" + id);
      continue;
    }
    const auto& a = prev.worker_head[w];
    const auto& b = cur.worker_head[w];
    if (!std::includes(b.begin(), b.end(), a.begin(), a.end())) throw InvariantError("head of \"" + id + "\" shrank");
    if (b.size() > a.size()) events.push_back("head:" + id);
  }
  return events;
}

void check_ordinary_monotone(const Instance& inst, const IterationState& prev, const IterationState& cur) {
  for (int e = 0; e < inst.num_edges(); ++e) {
    if (cur.bounds[e] > prev.bounds[e]) throw InvariantError("bounds increased");
    if (prev.reduced[e] && !cur.reduced[e]) throw InvariantError("reduced set shrank");
  }
  for (int v = 0; v < inst.num_vertices(); ++v) {
    if (inst.is_firm(v) && cur.firms_full[v] && !prev.firms_full[v]) throw InvariantError("firm became fully filled again");
    if (!inst.is_firm(v) && prev.workers_full[v] && !cur.workers_full[v]) throw InvariantError("worker lost its fill");
  }
}

struct BigIteration {
  std::vector<Rational> bounds;
  Assignment y;
  IterationRecord record;
};

BigIteration big_iteration(const Instance& inst, const std::vector<Rational>& bounds, const Assignment& x,
                           const Assignment& y) {
  const int n = inst.num_vertices();
  std::vector<ChoiceOutcome> choice(n);
  for (int f : inst.side_vertices(Side::firms)) choice[f] = choose_at(inst, f, x);
  for (int w : inst.side_vertices(Side::workers)) choice[w] = choose_at(inst, w, y);
  std::vector<bool> firm_full = full_on(inst, x, Side::firms);
  std::vector<bool> worker_full = full_on(inst, y, Side::workers);

  // Increase sets: head edges of full firms with room under the bound that
  // the worker would not cut back immediately.
  std::vector<std::vector<int>> increase(n);
  std::vector<bool> in_increase(inst.num_edges(), false);
  for (int f : inst.side_vertices(Side::firms)) {
    if (!firm_full[f]) continue;
    for (int e : choice[f].head) {
      int w = inst.edge(e).worker;
      if (bounds[e] <= x[e]) continue;
      if (worker_full[w] && choice[w].in_head(e)) continue;
      increase[f].push_back(e);
      in_increase[e] = true;
    }
  }
  std::map<int, int> var;
  for (int f : inst.side_vertices(Side::firms)) {
    if (!increase[f].empty()) var[f] = static_cast<int>(var.size());
  }
  for (int w : inst.side_vertices(Side::workers)) {
    if (worker_full[w]) var[w] = static_cast<int>(var.size());
  }
  const int k = static_cast<int>(var.size());
  LinearProgram lp;
  lp.objective.assign(k, Rational(0));
  std::vector<std::string> labels;
  auto row = [&]() { return std::vector<Rational>(k, Rational(0)); };
  auto add = [&](std::vector<Rational> coeffs, Relation rel, Rational rhs, std::string label) {
    lp.constraints.push_back({std::move(coeffs), rel, std::move(rhs)});
    labels.push_back(std::move(label));
  };
  for (const auto& [f, j] : var) {
    if (inst.is_firm(f)) lp.objective[j] = static_cast<long>(increase[f].size());
  }
  for (int w : inst.side_vertices(Side::workers)) {
    const std::string& wid = inst.vertex(w).id;
    if (worker_full[w]) {
      auto c = row();
      c[var[w]] = static_cast<long>(choice[w].head.size());
      for (int e : inst.vertex(w).edges) {
        if (in_increase[e]) c[var[inst.edge(e).firm]] -= 1;
      }
      add(c, Relation::equal, 0, "balance:" + wid);
      const Rational& a = *choice[w].cutting_height;
      auto c3 = row();
      c3[var[w]] = 1;
      add(c3, Relation::less_equal, a, "height:" + wid);
      for (int e : choice[w].critical_edges) {
        if (choice[w].in_head(e)) continue;
        auto c6 = row();
        c6[var[w]] = 1;
        if (in_increase[e]) c6[var[inst.edge(e).firm]] = 1;
        add(c6, Relation::less_equal, a - y[e], "head:" + inst.edge(e).id);
      }
    } else {
      auto c7 = row();
      bool any = false;
      for (int e : inst.vertex(w).edges) {
        if (in_increase[e]) {
          c7[var[inst.edge(e).firm]] += 1;
          any = true;
        }
      }
      if (any) add(c7, Relation::less_equal, inst.vertex(w).quota - load(inst, y, w), "fill:" + wid);
    }
  }
  for (int f : inst.side_vertices(Side::firms)) {
    if (increase[f].empty()) continue;
    const std::string& fid = inst.vertex(f).id;
    auto c4 = row();
    c4[var[f]] = static_cast<long>(increase[f].size());
    for (int e : inst.vertex(f).edges) {
      int w = inst.edge(e).worker;
      bool reduced = bounds[e] < inst.edge(e).capacity;
      if (worker_full[w] && reduced && choice[w].in_head(e)) c4[var[w]] -= 1;
    }
    add(c4, Relation::less_equal, inst.vertex(f).quota - load(inst, y, f), "quota:" + fid);
    for (int e : increase[f]) {
      auto c5 = row();
      c5[var[f]] = 1;
      add(c5, Relation::less_equal, bounds[e] - y[e], "bound:" + inst.edge(e).id);
    }
  }

  LpResult res = simplex_maximize(lp);
  if (res.status != LpResult::Status::optimal) throw InvariantError("big-iteration program has no optimum");

  BigIteration out;
  out.record.kind = IterationRecord::Kind::big;
  out.record.eta = res.objective;
  for (int i : res.tight) {
    if (lp.constraints[i].relation != Relation::equal) out.record.tight.push_back(labels[i]);
  }
  if (res.objective > 0 && out.record.tight.empty()) throw InvariantError("optimal big iteration attains no inequality");

  out.y = y;
  for (const auto& [v, j] : var) {
    const Rational& value = res.solution[j];
    if (inst.is_firm(v)) {
      for (int e : increase[v]) out.y[e] += value;
    } else {
      for (int e : choice[v].head) out.y[e] -= value;
    }
  }
  out.bounds = bounds;
  for (int w : inst.side_vertices(Side::workers)) {
    if (!worker_full[w]) continue;
    for (int e : choice[w].head) out.bounds[e] = std::min(out.bounds[e], out.y[e]);
  }
  require_admissible(inst, out.y);
  for (int e = 0; e < inst.num_edges(); ++e) {
    if (out.y[e] > out.bounds[e]) throw InvariantError("big iteration exceeded a bound");
  }
  return out;
}

}  // namespace

IterationState make_iteration_state(const Instance& inst, int round, std::vector<Rational> bounds) {
  IterationState s;
  s.round = round;
  s.bounds = std::move(bounds);
  s.x = Assignment(inst.num_edges());
  s.y = Assignment(inst.num_edges());
  for (int f : inst.side_vertices(Side::firms)) {
    ChoiceOutcome c = choose(inst, f, restrict_to(inst, s.bounds, f));
    const auto& edges = inst.vertex(f).edges;
    for (std::size_t k = 0; k < edges.size(); ++k) s.x[edges[k]] = c.result[k];
  }
  for (int w : inst.side_vertices(Side::workers)) {
    ChoiceOutcome c = choose_at(inst, w, s.x);
    const auto& edges = inst.vertex(w).edges;
    for (std::size_t k = 0; k < edges.size(); ++k) s.y[edges[k]] = c.result[k];
  }
  s.firms_full = full_on(inst, s.x, Side::firms);
  s.workers_full = full_on(inst, s.y, Side::workers);
  s.reduced.assign(inst.num_edges(), false);
  for (int e = 0; e < inst.num_edges(); ++e) {
    s.reduced[e] = s.bounds[e] < inst.edge(e).capacity;
    if (!(s.bounds[e] >= s.x[e] && s.x[e] >= s.y[e] && s.y[e] >= 0)) throw InvariantError("b >= x >= y >= 0 violated");
  }
  s.terminal = s.x == s.y;
  return s;
}

IterationState initial_iteration_state(const Instance& inst) {
  require_finite(inst);
  std::vector<Rational> b;
  for (const auto& e : inst.edges()) b.push_back(e.capacity);
  return make_iteration_state(inst, 0, std::move(b));
}

IterationState ordinary_iteration_step(const Instance& inst, const IterationState& state) {
  if (state.terminal) return state;
  IterationState next = make_iteration_state(inst, state.round + 1, next_bounds(state));
  check_ordinary_monotone(inst, state, next);
  return next;
}

OrdinaryRun run_ordinary(const Instance& inst, int max_iterations) {
  OrdinaryRun run;
  run.state = initial_iteration_state(inst);
  run.iterations = 1;
  while (!run.state.terminal && run.iterations < max_iterations) {
    run.state = ordinary_iteration_step(inst, run.state);
    ++run.iterations;
  }
  run.terminated = run.state.terminal;
  return run;
}

ModifiedResult solve_xmin_modified(const Instance& inst, const ModifiedOptions& options) {
  const int m = inst.num_edges();
  const int hard_cap = options.max_iterations.value_or(100 * m + 100);
  ModifiedResult out;
  IterationState state = initial_iteration_state(inst);
  out.iterations = 1;
  Snapshot prev = take_snapshot(inst, next_bounds(state), state.y);
  out.trace.push_back({IterationRecord::Kind::ordinary, true, {}, std::nullopt, {}});
  bool last_positive = true;

  auto ordinary_from = [&](IterationState next) {
    check_ordinary_monotone(inst, state, next);
    state = std::move(next);
    ++out.iterations;
    Snapshot cur = take_snapshot(inst, next_bounds(state), state.y);
    IterationRecord rec;
    rec.events = progress(inst, prev, cur);
    rec.positive = !rec.events.empty() || state.terminal;
    last_positive = rec.positive;
    prev = std::move(cur);
    out.trace.push_back(std::move(rec));
  };

  while (!state.terminal) {
    if (out.iterations >= hard_cap) throw CapExceeded("modified method exceeded its iteration cap");
    if (last_positive) {
      ordinary_from(make_iteration_state(inst, state.round + 1, next_bounds(state)));
      continue;
    }
    BigIteration big = big_iteration(inst, next_bounds(state), state.x, state.y);
    ++out.iterations;
    ++out.big_iterations;
    Snapshot cur = take_snapshot(inst, big.bounds, big.y);
    big.record.events = progress(inst, prev, cur);
    big.record.positive = !big.record.events.empty();
    prev = std::move(cur);
    out.trace.push_back(big.record);
    ordinary_from(make_iteration_state(inst, state.round + 1, big.bounds));
  }
  out.within_bound = out.iterations <= 10 * m;
  out.direct = state.x;
  if (!stability_report(inst, out.direct).stable) throw InvariantError("modified method produced an unstable assignment");

  // Reversed rotations: with the sides exchanged, the firm-optimal assignment
  // is the terminal state of a route.
  Instance swapped = inst.swapped();
  Route route = run_route(swapped, out.direct);
  out.x_min = route.terminal();
  out.normalization_shifts = route.length();
  if (!rotations_at(swapped, out.x_min).empty()) throw InvariantError("reversed rotation still applies after normalization");
  return out;
}

Assignment solve_xmin(const Instance& inst) { return solve_xmin_modified(inst).x_min; }

Assignment solve_xmax(const Instance& inst) { return run_route(inst, solve_xmin(inst)).terminal(); }

Assignment solve_side_optimal(const Instance& inst, Side side) {
  return side == Side::firms ? solve_xmin(inst) : solve_xmax(inst);
}

namespace {

std::string fresh_id(const std::set<std::string>& taken, const std::string& base) {
  std::string id = base;
  while (taken.count(id)) id = "_" + id;
  return id;
}

}  // namespace

ExtendedInstance extend_instance(const Instance& inst) {
  InstanceSpec spec = inst.to_spec();
  spec.costs.clear();
  std::set<std::string> vertex_ids, edge_ids;
  for (const auto& v : inst.vertices()) vertex_ids.insert(v.id);
  for (const auto& e : inst.edges()) edge_ids.insert(e.id);
  std::string f0 = fresh_id(vertex_ids, "f0");
  vertex_ids.insert(f0);
  std::string w0 = fresh_id(vertex_ids, "w0");

  // Generated edge ids share one prefix that no base edge id starts with.
  std::string prefix = "~";
  for (bool clash = true; clash;) {
    clash = false;
    for (const auto& id : edge_ids) {
      if (id.rfind(prefix, 0) == 0) clash = true;
    }
    if (clash) prefix += "~";
  }

  Rational qf = 0, qw = 0;
  std::vector<std::string> a_ids, b_ids;
  for (int w : inst.side_vertices(Side::workers)) {
    const Vertex& wx = inst.vertex(w);
    qw += wx.quota;
    std::string id = prefix + "A:" + wx.id;
    spec.edges.push_back({id, f0, wx.id, wx.quota, false});
    spec.preferences[wx.id].push_back({id});
    a_ids.push_back(id);
  }
  for (int f : inst.side_vertices(Side::firms)) {
    const Vertex& fx = inst.vertex(f);
    qf += fx.quota;
    std::string id = prefix + "B:" + fx.id;
    spec.edges.push_back({id, fx.id, w0, fx.quota, false});
    auto& ties = spec.preferences[fx.id];
    ties.insert(ties.begin(), std::vector<std::string>{id});
    b_ids.push_back(id);
  }
  std::string f0w0 = prefix + "C";
  spec.edges.push_back({f0w0, f0, w0, Rational(0), true});
  std::sort(a_ids.begin(), a_ids.end());
  std::sort(b_ids.begin(), b_ids.end());
  auto& p0 = spec.preferences[f0];
  for (const auto& id : a_ids) p0.push_back({id});
  p0.push_back({f0w0});
  auto& p1 = spec.preferences[w0];
  p1.push_back({f0w0});
  for (const auto& id : b_ids) p1.push_back({id});
  spec.firms.push_back(f0);
  spec.workers.push_back(w0);
  spec.quotas[f0] = qw;
  spec.quotas[w0] = qf;

  ExtendedInstance ext;
  ext.instance = Instance::build(spec);
  ext.f0 = *ext.instance.find_vertex(f0);
  ext.w0 = *ext.instance.find_vertex(w0);
  ext.q_firms = qf;
  ext.q_workers = qw;
  ext.base_edge.assign(ext.instance.num_edges(), -1);
  for (int e = 0; e < ext.instance.num_edges(); ++e) {
    if (auto b = inst.find_edge(ext.instance.edge(e).id)) ext.base_edge[e] = *b;
  }
  for (const auto& id : a_ids) ext.a_edges.push_back(*ext.instance.find_edge(id));
  for (const auto& id : b_ids) ext.b_edges.push_back(*ext.instance.find_edge(id));
  ext.f0w0 = *ext.instance.find_edge(f0w0);
  return ext;
}

Assignment initial_extended_assignment(const ExtendedInstance& ext) {
  Assignment y(ext.instance.num_edges());
  for (int e : ext.a_edges) y[e] = ext.instance.edge(e).capacity;
  for (int e : ext.b_edges) y[e] = ext.instance.edge(e).capacity;
  return y;
}

QuotaFillingResult solve_quota_filling(const Instance& inst) {
  ExtendedInstance ext = extend_instance(inst);
  Assignment y0 = initial_extended_assignment(ext);
  Route route = run_route(ext.instance, y0);
  QuotaFillingResult out;
  out.y_max = route.terminal();
  out.route_length = route.length();
  bool zero = true;
  for (int e : ext.a_edges) zero = zero && out.y_max[e] == 0;
  for (int e : ext.b_edges) zero = zero && out.y_max[e] == 0;
  out.quota_filling = zero;
  if (zero) {
    Assignment x(inst.num_edges());
    for (int e = 0; e < ext.instance.num_edges(); ++e) {
      if (ext.base_edge[e] >= 0) x[ext.base_edge[e]] = out.y_max[e];
    }
    if (!stability_report(inst, x).stable) throw InvariantError("quota-filling restriction is not stable");
    out.assignment = std::move(x);
  }
  return out;
}

}  // namespace smp
