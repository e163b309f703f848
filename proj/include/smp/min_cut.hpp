#pragma once

#include <optional>
#include <vector>

#include "smp/rational.hpp"

namespace smp {

struct Capacity {
  Rational value;
  bool infinite = false;

  static Capacity finite(Rational v) { return {std::move(v), false}; }
  static Capacity unbounded() { return {Rational(0), true}; }
};

struct Arc {
  int from = 0;
  int to = 0;
  Capacity capacity;
};

class FlowNetwork {
 public:
  FlowNetwork(int num_nodes, int source, int sink) : num_nodes_(num_nodes), source_(source), sink_(sink) {}

  int add_arc(int from, int to, Capacity capacity);

  int num_nodes() const { return num_nodes_; }
  int source() const { return source_; }
  int sink() const { return sink_; }
  const std::vector<Arc>& arcs() const { return arcs_; }

 private:
  int num_nodes_;
  int source_;
  int sink_;
  std::vector<Arc> arcs_;
};

struct MinCutResult {
  // False when every s-t cut has infinite capacity.
  bool bounded = true;
  // Nodes reachable from s in the final residual network.
  std::vector<bool> source_side;
  Rational capacity;
  std::vector<Rational> flow;  // per arc
};

// Shortest augmenting paths (Edmonds-Karp).
MinCutResult min_cut(const FlowNetwork& net);

// Sum of finite capacities of arcs leaving the side; nullopt if an infinite arc leaves it.
std::optional<Rational> cut_capacity(const FlowNetwork& net, const std::vector<bool>& side);

}  // namespace smp
