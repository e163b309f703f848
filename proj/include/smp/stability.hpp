#pragma once

#include <vector>

#include "smp/choice.hpp"
#include "smp/instance.hpp"

namespace smp {

struct StabilityReport {
  bool stable = true;
  std::vector<int> blocking_edges;  // canonical order
  std::vector<bool> fully_filled;   // per vertex: |x_v| = q(v)

  std::vector<int> fully_filled_on(const Instance& inst, Side s) const;
  std::vector<int> deficit_on(const Instance& inst, Side s) const;
};

// Requires x admissible; stationarity follows since |x_v| <= q(v).
StabilityReport stability_report(const Instance& inst, const Assignment& x);

bool is_stable(const Instance& inst, const Assignment& x);

struct SideComparison {
  bool holds = true;
  // Verdicts x_v versus y_v for each vertex of the side, in vertex order.
  std::vector<Preference> verdicts;
};

// x ⪰_side y. Both must be stable; the opposite-side polarity is checked.
SideComparison compare_stable(const Instance& inst, const Assignment& x, const Assignment& y, Side side);

// Per-vertex choice of the componentwise max over vertices of `side`.
Assignment side_join(const Instance& inst, const Assignment& x, const Assignment& y, Side side);

}  // namespace smp
