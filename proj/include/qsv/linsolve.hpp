#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "qsv/rational.hpp"

namespace qsv {

struct LinearSolution {
  std::size_t rank{};
  bool consistent{};
  /// A particular solution with free variables set to zero (valid when consistent).
  std::vector<Rational> values;
};

/// Exact Gauss–Jordan elimination of rows·x = rhs over the rationals.
/// Overdetermined systems are fine; consistency of every row is checked.
inline LinearSolution solve_linear(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs) {
  if (rows.size() != rhs.size()) throw std::invalid_argument("solve_linear: row/rhs count mismatch");
  std::size_t m = rows.size();
  std::size_t n = m == 0 ? 0 : rows[0].size();
  for (const auto& r : rows)
    if (r.size() != n) throw std::invalid_argument("solve_linear: ragged matrix");

  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && rows[p][c].is_zero()) ++p;
    if (p == m) continue;
    std::swap(rows[p], rows[r]);
    std::swap(rhs[p], rhs[r]);
    Rational inv = rows[r][c].inverse();
    for (std::size_t j = c; j < n; ++j) rows[r][j] *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      Rational f = rows[i][c];
      for (std::size_t j = c; j < n; ++j) rows[i][j] -= f * rows[r][j];
      rhs[i] -= f * rhs[r];
    }
    pivot_col.push_back(c);
    ++r;
  }

  LinearSolution out;
  out.rank = r;
  out.consistent = true;
  for (std::size_t i = r; i < m; ++i)
    if (!rhs[i].is_zero()) out.consistent = false;
  out.values.assign(n, Rational(0));
  for (std::size_t i = 0; i < r; ++i) out.values[pivot_col[i]] = rhs[i];
  return out;
}

}  // namespace qsv
