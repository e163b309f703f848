#include "smp/min_cut.hpp"

#include <deque>

#include "smp/errors.hpp"

namespace smp {

int FlowNetwork::add_arc(int from, int to, Capacity capacity) {
  if (from < 0 || from >= num_nodes_ || to < 0 || to >= num_nodes_) throw DomainError("arc endpoint out of range");
  if (!capacity.infinite && capacity.value < 0) throw DomainError("negative arc capacity");
  arcs_.push_back({from, to, std::move(capacity)});
  return static_cast<int>(arcs_.size()) - 1;
}

namespace {

struct Residual {
  int arc;
  bool forward;
};

}  // namespace

MinCutResult min_cut(const FlowNetwork& net) {
  const int n = net.num_nodes();
  const auto& arcs = net.arcs();
  std::vector<std::vector<Residual>> adj(n);
  for (int a = 0; a < static_cast<int>(arcs.size()); ++a) {
    adj[arcs[a].from].push_back({a, true});
    adj[arcs[a].to].push_back({a, false});
  }
  MinCutResult out;
  out.flow.assign(arcs.size(), Rational(0));

  // Residual capacity; nullopt stands for +inf.
  auto residual = [&](const Residual& r) -> std::optional<Rational> {
    const Arc& arc = arcs[r.arc];
    if (r.forward) {
      if (arc.capacity.infinite) return std::nullopt;
      return Rational(arc.capacity.value - out.flow[r.arc]);
    }
    return out.flow[r.arc];
  };
  auto head = [&](const Residual& r) { return r.forward ? arcs[r.arc].to : arcs[r.arc].from; };

  for (;;) {
    std::vector<int> parent(n, -2);
    std::vector<Residual> via(n, {-1, true});
    std::deque<int> queue{net.source()};
    parent[net.source()] = -1;
    while (!queue.empty() && parent[net.sink()] == -2) {
      int u = queue.front();
      queue.pop_front();
      for (const auto& r : adj[u]) {
        int v = head(r);
        if (parent[v] != -2) continue;
        auto cap = residual(r);
        if (cap && *cap <= 0) continue;
        parent[v] = u;
        via[v] = r;
        queue.push_back(v);
      }
    }
    if (parent[net.sink()] == -2) {
      out.source_side.assign(n, false);
      for (int v = 0; v < n; ++v) out.source_side[v] = parent[v] != -2;
      break;
    }
    std::optional<Rational> bottleneck;
    for (int v = net.sink(); v != net.source(); v = parent[v]) {
      auto cap = residual(via[v]);
      if (cap && (!bottleneck || *cap < *bottleneck)) bottleneck = *cap;
    }
    if (!bottleneck) {
      out.bounded = false;
      return out;
    }
    for (int v = net.sink(); v != net.source(); v = parent[v]) {
      if (via[v].forward) {
        out.flow[via[v].arc] += *bottleneck;
      } else {
        out.flow[via[v].arc] -= *bottleneck;
      }
    }
  }

  auto cap = cut_capacity(net, out.source_side);
  if (!cap) throw InvariantError("residual cut crosses an infinite arc");
  Rational value = 0;
  for (int a = 0; a < static_cast<int>(arcs.size()); ++a) {
    if (arcs[a].from == net.source()) value += out.flow[a];
    if (arcs[a].to == net.source()) value -= out.flow[a];
  }
  if (value != *cap) throw InvariantError("max-flow value differs from cut capacity");
  out.capacity = *cap;
  return out;
}

std::optional<Rational> cut_capacity(const FlowNetwork& net, const std::vector<bool>& side) {
  Rational total = 0;
  for (const auto& arc : net.arcs()) {
    if (side[arc.from] && !side[arc.to]) {
      if (arc.capacity.infinite) return std::nullopt;
      total += arc.capacity.value;
    }
  }
  return total;
}

}  // namespace smp
