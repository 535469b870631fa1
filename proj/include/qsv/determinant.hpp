#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "qsv/ring.hpp"

namespace qsv {

template <class R>
using Matrix = std::vector<std::vector<R>>;

template <class R>
void require_square(const Matrix<R>& m) {
  if (m.empty()) throw std::invalid_argument("determinant: empty matrix");
  for (const auto& row : m)
    if (row.size() != m.size()) throw std::invalid_argument("determinant: matrix is not square");
}

/// Laplace expansion along the first row. Division-free; use for small sizes.
template <CoefficientRing R>
R det_cofactor(const Matrix<R>& m) {
  require_square(m);
  std::size_t n = m.size();
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  R acc = ring_traits<R>::zero_like(m[0][0]);
  for (std::size_t col = 0; col < n; ++col) {
    Matrix<R> minor;
    minor.reserve(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<R> row;
      row.reserve(n - 1);
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    R term = m[0][col] * det_cofactor(minor);
    acc = (col % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

/// Bird's division-free determinant, O(n^4) ring operations.
template <CoefficientRing R>
R det_division_free(const Matrix<R>& a) {
  require_square(a);
  std::size_t n = a.size();
  const R zero = ring_traits<R>::zero_like(a[0][0]);
  Matrix<R> x = a;
  for (std::size_t step = 1; step < n; ++step) {
    // mu(X): strict upper part of X, diagonal -(sum of later diagonal entries), zero below.
    Matrix<R> mu(n, std::vector<R>(n, zero));
    R tail = zero;
    for (std::size_t i = n; i-- > 0;) {
      mu[i][i] = -tail;
      tail = tail + x[i][i];
      for (std::size_t j = i + 1; j < n; ++j) mu[i][j] = x[i][j];
    }
    Matrix<R> next(n, std::vector<R>(n, zero));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = i; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) next[i][j] = next[i][j] + mu[i][k] * a[k][j];
    x = std::move(next);
  }
  return (n % 2 == 1) ? x[0][0] : -x[0][0];
}

template <CoefficientRing R>
R determinant(const Matrix<R>& m) {
  return m.size() <= 4 ? det_cofactor(m) : det_division_free(m);
}

/// Hankel matrix (a_{i+j+offset})_{0<=i,j<n}.
template <class R>
Matrix<R> hankel_matrix(const std::vector<R>& seq, std::size_t n, std::size_t offset = 0) {
  if (n == 0 || seq.size() < 2 * n - 1 + offset) throw std::invalid_argument("hankel_matrix: sequence too short");
  Matrix<R> m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m[i].reserve(n);
    for (std::size_t j = 0; j < n; ++j) m[i].push_back(seq[i + j + offset]);
  }
  return m;
}

}  // namespace qsv
