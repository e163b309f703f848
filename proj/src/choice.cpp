#include "smp/choice.hpp"

#include <algorithm>

#include "smp/errors.hpp"

namespace smp {

namespace {

bool contains(const std::vector<int>& sorted, int e) { return std::binary_search(sorted.begin(), sorted.end(), e); }

void require_in_box(const Instance& inst, int v, const std::vector<Rational>& z) {
  const auto& edges = inst.vertex(v).edges;
  if (z.size() != edges.size()) throw DomainError("restricted vector has wrong length at \"" + inst.vertex(v).id + "\"");
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const Edge& e = inst.edge(edges[k]);
    if (z[k] < 0 || (!e.unbounded && z[k] > e.capacity)) {
      throw DomainError("value on edge \"" + e.id + "\" is outside [0, b(e)]");
    }
  }
}

// Solves sum_k min(r, values[k]) = residual for r, given
// 0 < residual <= sum(values).
Rational cutting_height(std::vector<Rational> values, const Rational& residual) {
  std::sort(values.begin(), values.end());
  Rational below = 0;  // sum of values strictly below the current breakpoint
  const std::size_t m = values.size();
  for (std::size_t j = 0; j < m; ++j) {
    // For r in [values[j-1], values[j]] the sum is below + (m - j) r.
    Rational r = (residual - below) / static_cast<long>(m - j);
    if (r <= values[j]) return r;
    below += values[j];
  }
  throw InvariantError("cutting height not found");
}

}  // namespace

bool ChoiceOutcome::in_head(int e) const { return contains(head, e); }
bool ChoiceOutcome::in_tail(int e) const { return contains(tail, e); }
bool ChoiceOutcome::in_worse(int e) const { return contains(worse_edges, e); }

ChoiceOutcome choose(const Instance& inst, int v, const std::vector<Rational>& z) {
  require_in_box(inst, v, z);
  const Vertex& vx = inst.vertex(v);
  const auto& edges = vx.edges;
  auto pos = [&](int e) {
    return static_cast<std::size_t>(std::lower_bound(edges.begin(), edges.end(), e) - edges.begin());
  };

  ChoiceOutcome out;
  out.result = z;
  Rational sum = 0;
  for (const auto& value : z) sum += value;
  if (sum < vx.quota) {
    out.tail = edges;
    return out;
  }

  Rational before = 0;
  std::size_t c = 0;
  for (; c < vx.ties.size(); ++c) {
    Rational tie_sum = 0;
    for (int e : vx.ties[c]) tie_sum += z[pos(e)];
    if (before + tie_sum >= vx.quota) break;
    before += tie_sum;
  }
  if (c == vx.ties.size()) throw InvariantError("no critical tie although the load reaches the quota");

  std::vector<Rational> values;
  for (int e : vx.ties[c]) values.push_back(z[pos(e)]);
  Rational r = cutting_height(values, vx.quota - before);
  out.critical_tie = static_cast<int>(c);
  out.cutting_height = r;
  for (std::size_t t = 0; t < vx.ties.size(); ++t) {
    for (int e : vx.ties[t]) {
      std::size_t k = pos(e);
      if (t < c) {
        out.better_edges.push_back(e);
        out.tail.push_back(e);
      } else if (t > c) {
        out.worse_edges.push_back(e);
        out.result[k] = 0;
      } else {
        out.critical_edges.push_back(e);
        if (z[k] >= r) {
          out.result[k] = r;
          out.head.push_back(e);
        } else {
          out.tail.push_back(e);
        }
      }
    }
  }
  for (auto* s : {&out.head, &out.tail, &out.better_edges, &out.worse_edges, &out.critical_edges}) {
    std::sort(s->begin(), s->end());
  }
  if (out.head.empty()) throw InvariantError("quota-filling vertex with empty head");
  return out;
}

ChoiceOutcome choose_at(const Instance& inst, int v, const Assignment& x) {
  return choose(inst, v, restrict_to(inst, x.values(), v));
}

const char* to_string(Preference p) {
  switch (p) {
    case Preference::strictly_better:
      return "strictly_better";
    case Preference::equal:
      return "equal";
    case Preference::strictly_worse:
      return "strictly_worse";
    case Preference::incomparable:
      return "incomparable";
  }
  return "incomparable";
}

bool is_stationary(const Instance& inst, int v, const std::vector<Rational>& z) {
  return choose(inst, v, z).result == z;
}

namespace {

void require_stationary(const Instance& inst, int v, const std::vector<Rational>& z) {
  if (!is_stationary(inst, v, z)) throw DomainError("restriction at \"" + inst.vertex(v).id + "\" is not stationary");
}

// z ⪰ z2 as C(z ∨ z2) = z.
bool weakly_prefers_by_join(const Instance& inst, int v, const std::vector<Rational>& z, const std::vector<Rational>& z2) {
  std::vector<Rational> join(z.size());
  for (std::size_t k = 0; k < z.size(); ++k) join[k] = std::max(z[k], z2[k]);
  return choose(inst, v, join).result == z;
}

// z ⪰ z2 as z >= z2 on the tail of z.
bool weakly_prefers_by_tail(const Instance& inst, int v, const std::vector<Rational>& z, const std::vector<Rational>& z2) {
  const auto& edges = inst.vertex(v).edges;
  ChoiceOutcome c = choose(inst, v, z);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (c.in_tail(edges[k]) && z[k] < z2[k]) return false;
  }
  return true;
}

}  // namespace

Preference prefers(const Instance& inst, int v, const std::vector<Rational>& z, const std::vector<Rational>& z2) {
  require_stationary(inst, v, z);
  require_stationary(inst, v, z2);
  bool fwd = weakly_prefers_by_join(inst, v, z, z2);
  bool bwd = weakly_prefers_by_join(inst, v, z2, z);
  if (fwd != weakly_prefers_by_tail(inst, v, z, z2) || bwd != weakly_prefers_by_tail(inst, v, z2, z)) {
    throw InvariantError("join test and tail test disagree at \"" + inst.vertex(v).id + "\"");
  }
  if (fwd && bwd) return Preference::equal;
  if (fwd) return Preference::strictly_better;
  if (bwd) return Preference::strictly_worse;
  return Preference::incomparable;
}

std::vector<int> interesting_edges(const Instance& inst, int v, const std::vector<Rational>& z) {
  require_stationary(inst, v, z);
  ChoiceOutcome c = choose(inst, v, z);
  const auto& edges = inst.vertex(v).edges;
  std::vector<int> out;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const Edge& e = inst.edge(edges[k]);
    if ((e.unbounded || z[k] < e.capacity) && c.in_tail(edges[k])) out.push_back(edges[k]);
  }
  return out;
}

}  // namespace smp
