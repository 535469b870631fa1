#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qsv/ring.hpp"

namespace qsv {

/// Truncated power series in u, c_0 + c_1 u + ... + c_K u^K, over a
/// coefficient ring R (Rational, KPoly or QSeries). Same truncation rule as
/// QSeries: binary operations keep the smaller order.
template <CoefficientRing R>
class USeries {
 public:
  USeries(std::size_t order, std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != order + 1) throw std::invalid_argument("USeries: coefficient count does not match order");
  }

  /// c·u^e truncated at the given order; c also fixes the shape of the zeros.
  static USeries monomial(std::size_t order, std::size_t e, const R& c) {
    std::vector<R> v(order + 1, ring_traits<R>::zero_like(c));
    if (e <= order) v[e] = c;
    return USeries(order, std::move(v));
  }
  static USeries constant(std::size_t order, const R& c) { return monomial(order, 0, c); }

  std::size_t order() const { return coeffs_.size() - 1; }
  const R& operator[](std::size_t k) const { return coeffs_.at(k); }
  const std::vector<R>& coeffs() const { return coeffs_; }
  const R& proto() const { return coeffs_.front(); }

  USeries truncated(std::size_t order) const {
    if (order > this->order()) throw std::invalid_argument("USeries: cannot extend");
    return USeries(order, std::vector<R>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order) + 1));
  }

  friend USeries operator+(const USeries& a, const USeries& b) {
    std::size_t n = std::min(a.order(), b.order());
    std::vector<R> v;
    v.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) v.push_back(a[i] + b[i]);
    return USeries(n, std::move(v));
  }
  friend USeries operator-(const USeries& a, const USeries& b) {
    std::size_t n = std::min(a.order(), b.order());
    std::vector<R> v;
    v.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) v.push_back(a[i] - b[i]);
    return USeries(n, std::move(v));
  }
  friend USeries operator-(const USeries& a) {
    std::vector<R> v;
    v.reserve(a.coeffs_.size());
    for (const auto& c : a.coeffs_) v.push_back(-c);
    return USeries(a.order(), std::move(v));
  }
  friend USeries operator*(const USeries& a, const USeries& b) {
    std::size_t n = std::min(a.order(), b.order());
    std::vector<R> v(n + 1, ring_traits<R>::zero_like(a.proto()));
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = 0; i + j <= n; ++j) v[i + j] = v[i + j] + a[i] * b[j];
    return USeries(n, std::move(v));
  }
  friend USeries operator*(const R& r, const USeries& a) {
    std::vector<R> v;
    v.reserve(a.coeffs_.size());
    for (const auto& c : a.coeffs_) v.push_back(r * c);
    return USeries(a.order(), std::move(v));
  }

  friend bool operator==(const USeries&, const USeries&) = default;

 private:
  std::vector<R> coeffs_;
};

/// a/b where the u^0 coefficient of b is a unit of R.
template <CoefficientRing R>
USeries<R> divide(const USeries<R>& a, const USeries<R>& b) {
  if (!ring_traits<R>::is_unit(b[0])) throw std::domain_error("USeries: divisor's leading coefficient is not a unit");
  std::size_t n = std::min(a.order(), b.order());
  R inv0 = ring_traits<R>::inverse(b[0]);
  std::vector<R> c;
  c.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    R acc = a[k];
    for (std::size_t i = 1; i <= k; ++i) acc = acc - b[i] * c[k - i];
    c.push_back(acc * inv0);
  }
  return USeries<R>(n, std::move(c));
}

}  // namespace qsv
