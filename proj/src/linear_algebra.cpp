#include "smp/linear_algebra.hpp"

#include "smp/errors.hpp"

namespace smp {

std::vector<Integer> normalize_integer(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& r : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(v.size());
  for (const auto& r : v) out.push_back(Integer(r.get_num() * (l / r.get_den())));
  Integer g = gcd_of(out);
  if (g == 0) throw DomainError("cannot normalize the zero vector");
  int sign = 0;
  for (const auto& x : out) {
    if (x != 0) {
      sign = x > 0 ? 1 : -1;
      break;
    }
  }
  for (auto& x : out) x = x / g * sign;
  return out;
}

GaussianResult gaussian_solve(const LinearSystem& sys) {
  const std::size_t rows = sys.matrix.size();
  const std::size_t cols = rows == 0 ? sys.labels.size() : sys.matrix[0].size();
  if (sys.rhs.size() != rows) throw DomainError("rhs length does not match row count");
  for (const auto& row : sys.matrix) {
    if (row.size() != cols) throw DomainError("ragged matrix");
  }
  std::vector<std::vector<Rational>> a = sys.matrix;
  for (std::size_t i = 0; i < rows; ++i) a[i].push_back(sys.rhs[i]);

  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t k = c; k <= cols; ++k) a[i][k] -= f * a[r][k];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }

  GaussianResult out;
  out.rank = static_cast<int>(r);
  for (std::size_t i = r; i < rows; ++i) {
    if (a[i][cols] != 0) {
      out.status = GaussianResult::Status::infeasible;
      return out;
    }
  }
  out.solution.assign(cols, Rational(0));
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t i = 0; i < r; ++i) {
    out.solution[pivot_col[i]] = a[i][cols];
    is_pivot[pivot_col[i]] = true;
  }
  for (std::size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[c] = 1;
    for (std::size_t i = 0; i < r; ++i) v[pivot_col[i]] = -a[i][c];
    out.nullspace.push_back(normalize_integer(v));
  }
  out.status = out.nullspace.empty() ? GaussianResult::Status::unique : GaussianResult::Status::family;
  return out;
}

}  // namespace smp
