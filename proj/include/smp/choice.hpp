#pragma once

#include <optional>
#include <vector>

#include "smp/instance.hpp"

namespace smp {

struct ChoiceOutcome {
  // Aligned with vertex(v).edges.
  std::vector<Rational> result;
  std::optional<int> critical_tie;
  std::optional<Rational> cutting_height;
  // Edge index sets, sorted.
  std::vector<int> head;
  std::vector<int> tail;
  std::vector<int> better_edges;
  std::vector<int> worse_edges;
  // Critical tie edges (empty when deficit).
  std::vector<int> critical_edges;

  bool quota_filling() const { return critical_tie.has_value(); }
  bool in_head(int e) const;
  bool in_tail(int e) const;
  bool in_worse(int e) const;
};

// z is aligned with vertex(v).edges. Unbounded edges impose no upper bound.
ChoiceOutcome choose(const Instance& inst, int v, const std::vector<Rational>& z);

// Convenience: choose on the restriction of a full edge vector.
ChoiceOutcome choose_at(const Instance& inst, int v, const Assignment& x);

enum class Preference { strictly_better, equal, strictly_worse, incomparable };

const char* to_string(Preference p);

bool is_stationary(const Instance& inst, int v, const std::vector<Rational>& z);

// z versus z2 from v's point of view. Both must be stationary.
Preference prefers(const Instance& inst, int v, const std::vector<Rational>& z, const std::vector<Rational>& z2);

// Edges of v that are unsaturated and in the tail.
std::vector<int> interesting_edges(const Instance& inst, int v, const std::vector<Rational>& z);

}  // namespace smp
