#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "smp/rational.hpp"

namespace smp {

enum class Side { firms, workers };

inline Side opposite(Side s) { return s == Side::firms ? Side::workers : Side::firms; }

struct Edge {
  std::string id;
  int firm = -1;
  int worker = -1;
  Rational capacity;
  // An unbounded edge has capacity +inf; only auxiliary instances use it.
  bool unbounded = false;
  int firm_tie = -1;
  int worker_tie = -1;
};

struct Vertex {
  std::string id;
  Side side = Side::firms;
  Rational quota;
  // Best tie first; each tie lists edge indices in canonical order.
  std::vector<std::vector<int>> ties;
  // Incident edges in canonical order.
  std::vector<int> edges;
};

struct EdgeSpec {
  std::string id;
  std::string firm;
  std::string worker;
  Rational capacity;
  bool unbounded = false;
};

struct InstanceSpec {
  std::vector<std::string> firms;
  std::vector<std::string> workers;
  std::vector<EdgeSpec> edges;
  std::map<std::string, Rational> quotas;
  std::map<std::string, std::vector<std::vector<std::string>>> preferences;
  std::map<std::string, Rational> costs;
};

// Vertices are indexed firms first, then workers, each in input order.
// Edges are indexed in lexicographic order of their ids.
class Instance {
 public:
  static Instance build(const InstanceSpec& spec);

  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_firms() const { return num_firms_; }
  int num_workers() const { return num_vertices() - num_firms_; }

  const Edge& edge(int e) const { return edges_[e]; }
  const Vertex& vertex(int v) const { return vertices_[v]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }

  std::vector<int> side_vertices(Side s) const;
  bool is_firm(int v) const { return v < num_firms_; }
  Side side_of(int v) const { return is_firm(v) ? Side::firms : Side::workers; }

  int endpoint(int e, Side s) const { return s == Side::firms ? edges_[e].firm : edges_[e].worker; }
  int other_end(int e, int v) const { return edges_[e].firm == v ? edges_[e].worker : edges_[e].firm; }
  int tie_of(int e, int v) const { return edges_[e].firm == v ? edges_[e].firm_tie : edges_[e].worker_tie; }

  std::optional<int> find_edge(const std::string& id) const;
  std::optional<int> find_vertex(const std::string& id) const;

  bool has_costs() const { return !costs_.empty(); }
  const std::vector<Rational>& costs() const { return costs_; }
  Instance with_costs(std::vector<Rational> costs) const;

  // Same market with the roles of firms and workers exchanged.
  Instance swapped() const;

  InstanceSpec to_spec() const;

 private:
  std::vector<Edge> edges_;
  std::vector<Vertex> vertices_;
  int num_firms_ = 0;
  std::map<std::string, int> edge_index_;
  std::map<std::string, int> vertex_index_;
  std::vector<Rational> costs_;
};

class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(int num_edges) : values_(num_edges) {}
  explicit Assignment(std::vector<Rational> values) : values_(std::move(values)) {}

  int size() const { return static_cast<int>(values_.size()); }
  Rational& operator[](int e) { return values_[e]; }
  const Rational& operator[](int e) const { return values_[e]; }
  const std::vector<Rational>& values() const { return values_; }

  bool operator==(const Assignment& other) const { return values_ == other.values_; }
  bool operator!=(const Assignment& other) const { return !(*this == other); }
  // Lexicographic, for sorting in tests and enumeration output.
  bool operator<(const Assignment& other) const { return values_ < other.values_; }

 private:
  std::vector<Rational> values_;
};

// z restricted to the edges of v, aligned with vertex(v).edges.
std::vector<Rational> restrict_to(const Instance& inst, const std::vector<Rational>& z, int v);
Rational load(const Instance& inst, const Assignment& x, int v);
Rational total(const Assignment& x);

struct Violation {
  enum class Kind { negative, above_capacity, over_quota } kind;
  std::string id;
  Rational value;
  Rational bound;
};

struct MembershipReport {
  bool in_box = true;
  bool quota_feasible = true;
  std::vector<Violation> violations;
};

MembershipReport validate_assignment(const Instance& inst, const Assignment& x);

// Throws DomainError unless x is in the box and quota feasible.
void require_admissible(const Instance& inst, const Assignment& x);

}  // namespace smp
