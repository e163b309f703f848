#include "smp/simplex.hpp"

#include <optional>

#include "smp/errors.hpp"

namespace smp {

namespace {

struct Tableau {
  std::vector<std::vector<Rational>> rows;  // last entry is the rhs
  std::vector<int> basis;
  int width = 0;  // number of structural columns

  void pivot(int r, int c) {
    Rational inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c];
      for (int k = 0; k <= width; ++k) rows[i][k] -= f * rows[r][k];
    }
    basis[r] = c;
  }

  Rational reduced_cost(const std::vector<Rational>& cost, int c) const {
    Rational z = cost[c];
    for (std::size_t i = 0; i < rows.size(); ++i) z -= cost[basis[i]] * rows[i][c];
    return z;
  }

  // Returns false if unbounded. Columns with allowed[c] == false never enter.
  bool optimize(const std::vector<Rational>& cost, const std::vector<bool>& allowed) {
    for (;;) {
      std::optional<int> enter;
      for (int c = 0; c < width; ++c) {
        if (allowed[c] && reduced_cost(cost, c) > 0) {
          enter = c;
          break;
        }
      }
      if (!enter) return true;
      std::optional<int> leave;
      Rational best;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][*enter] <= 0) continue;
        Rational ratio = rows[i][width] / rows[i][*enter];
        if (!leave || ratio < best || (ratio == best && basis[i] < basis[*leave])) {
          leave = static_cast<int>(i);
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }
};

}  // namespace

LpResult simplex_maximize(const LinearProgram& lp) {
  const int n = static_cast<int>(lp.objective.size());
  std::vector<bool> nonneg = lp.nonnegative;
  if (nonneg.empty()) nonneg.assign(n, true);
  if (static_cast<int>(nonneg.size()) != n) throw DomainError("nonnegativity flags have wrong length");
  for (const auto& c : lp.constraints) {
    if (static_cast<int>(c.coefficients.size()) != n) throw DomainError("constraint has wrong width");
  }

  // Structural columns: x_j (or x_j+ and x_j- when free), then one slack or
  // surplus per inequality, then one artificial per row that needs it.
  std::vector<int> plus_col(n), minus_col(n, -1);
  int width = 0;
  for (int j = 0; j < n; ++j) {
    plus_col[j] = width++;
    if (!nonneg[j]) minus_col[j] = width++;
  }
  const int m = static_cast<int>(lp.constraints.size());
  std::vector<int> slack_col(m, -1), artificial_col(m, -1);
  std::vector<int> sign(m, 1);
  std::vector<Relation> rel(m);
  for (int i = 0; i < m; ++i) {
    rel[i] = lp.constraints[i].relation;
    if (lp.constraints[i].rhs < 0) {
      sign[i] = -1;
      if (rel[i] == Relation::less_equal) {
        rel[i] = Relation::greater_equal;
      } else if (rel[i] == Relation::greater_equal) {
        rel[i] = Relation::less_equal;
      }
    }
    if (rel[i] != Relation::equal) slack_col[i] = width++;
  }
  const int first_artificial = width;
  for (int i = 0; i < m; ++i) {
    if (rel[i] != Relation::less_equal) artificial_col[i] = width++;
  }

  Tableau t;
  t.width = width;
  for (int i = 0; i < m; ++i) {
    std::vector<Rational> row(width + 1);
    for (int j = 0; j < n; ++j) {
      Rational a = lp.constraints[i].coefficients[j] * sign[i];
      row[plus_col[j]] = a;
      if (minus_col[j] >= 0) row[minus_col[j]] = -a;
    }
    if (slack_col[i] >= 0) row[slack_col[i]] = rel[i] == Relation::less_equal ? 1 : -1;
    if (artificial_col[i] >= 0) row[artificial_col[i]] = 1;
    row[width] = lp.constraints[i].rhs * sign[i];
    t.rows.push_back(std::move(row));
    t.basis.push_back(artificial_col[i] >= 0 ? artificial_col[i] : slack_col[i]);
  }

  LpResult result;
  std::vector<bool> allowed(width, true);
  if (first_artificial < width) {
    std::vector<Rational> phase1(width);
    for (int c = first_artificial; c < width; ++c) phase1[c] = -1;
    t.optimize(phase1, allowed);
    Rational value = 0;
    for (std::size_t i = 0; i < t.rows.size(); ++i) value += phase1[t.basis[i]] * t.rows[i][width];
    if (value < 0) return result;
    for (std::size_t i = 0; i < t.rows.size();) {
      if (t.basis[i] < first_artificial) {
        ++i;
        continue;
      }
      int c = 0;
      while (c < first_artificial && t.rows[i][c] == 0) ++c;
      if (c < first_artificial) {
        t.pivot(static_cast<int>(i), c);
        ++i;
      } else {
        t.rows.erase(t.rows.begin() + static_cast<long>(i));
        t.basis.erase(t.basis.begin() + static_cast<long>(i));
      }
    }
    for (int c = first_artificial; c < width; ++c) allowed[c] = false;
  }

  std::vector<Rational> cost(width);
  for (int j = 0; j < n; ++j) {
    cost[plus_col[j]] = lp.objective[j];
    if (minus_col[j] >= 0) cost[minus_col[j]] = -lp.objective[j];
  }
  if (!t.optimize(cost, allowed)) {
    result.status = LpResult::Status::unbounded;
    return result;
  }

  std::vector<Rational> column_value(width);
  for (std::size_t i = 0; i < t.rows.size(); ++i) column_value[t.basis[i]] = t.rows[i][width];
  result.status = LpResult::Status::optimal;
  result.solution.assign(n, Rational(0));
  for (int j = 0; j < n; ++j) {
    result.solution[j] = column_value[plus_col[j]];
    if (minus_col[j] >= 0) result.solution[j] -= column_value[minus_col[j]];
  }
  result.objective = 0;
  for (int j = 0; j < n; ++j) result.objective += lp.objective[j] * result.solution[j];
  for (int i = 0; i < m; ++i) {
    Rational lhs = 0;
    for (int j = 0; j < n; ++j) lhs += lp.constraints[i].coefficients[j] * result.solution[j];
    bool ok = lp.constraints[i].relation == Relation::less_equal      ? lhs <= lp.constraints[i].rhs
              : lp.constraints[i].relation == Relation::greater_equal ? lhs >= lp.constraints[i].rhs
                                                                      : lhs == lp.constraints[i].rhs;
    if (!ok) throw InvariantError("simplex returned an infeasible point");
    if (lhs == lp.constraints[i].rhs) result.tight.push_back(i);
  }
  return result;
}

}  // namespace smp
