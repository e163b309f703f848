#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "smp/choice.hpp"
#include "smp/instance.hpp"

namespace smp {

struct ActiveStructure {
  std::vector<ChoiceOutcome> choice;  // per vertex, at x
  std::vector<bool> fully_filled;
  // Firms: index of the chosen tie of the potential head, if any.
  std::vector<std::optional<int>> potential_tie;
  // Firms: potential head D_f. Workers: head H_w. Empty for deficit vertices.
  std::vector<std::vector<int>> active_head;
  std::vector<bool> singular;  // V^0
  std::vector<bool> regular;   // V^+

  bool reduced_head(int f) const;
};

// Requires x stable.
ActiveStructure build_active_structure(const Instance& inst, const Assignment& x);

struct ActiveArc {
  int to;
  int edge;
};

// Directed active graph on all vertices; regular vertices carry the arcs
// f -> w for edges of D_f and w -> f for edges of H_w.
struct ActiveGraph {
  std::vector<std::vector<ActiveArc>> out;

  std::vector<int> active_edges() const;
};

ActiveGraph active_graph(const Instance& inst, const ActiveStructure& s);

struct Component {
  std::vector<int> vertices;  // sorted
  std::vector<int> edges;     // sorted; arcs with both ends inside
};

// Strong components with no arc leaving them, ordered by smallest vertex.
// Components without arcs are not reported.
std::vector<Component> maximal_components(const ActiveGraph& g);

struct Rotation {
  std::vector<Integer> values;  // per edge
  Component component;
  Rational tau;

  Integer norm_inf() const;
  bool same_vector(const Rotation& other) const { return values == other.values; }
};

// Solves the homogeneous balance system on the component and assembles the
// normalized rotation; tau is filled in by max_weight.
Rotation extract_rotation(const Instance& inst, const Assignment& x, const ActiveStructure& s, const Component& c);

Rational max_weight(const Instance& inst, const Assignment& x, const Rotation& rot);

// All rotations applicable at the stable assignment x, one per maximal component.
std::vector<Rotation> rotations_at(const Instance& inst, const Assignment& x);

// x + lambda * rho, with 0 < lambda <= tau; the result is checked to be stable
// and strictly worse for the firms.
Assignment apply_shift(const Instance& inst, const Assignment& x, const Rotation& rot, const Rational& lambda);

// Simultaneous shifts along vertex-disjoint rotations applicable at x.
Assignment apply_shifts(const Instance& inst, const Assignment& x,
                        const std::vector<std::pair<const Rotation*, Rational>>& shifts);

// Names of the violated structural properties (circulation, aligned,
// normalized, connected); empty when all hold.
std::vector<std::string> rotation_defects(const Instance& inst, const Rotation& rot);

}  // namespace smp
