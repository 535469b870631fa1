#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "qsv/qseries.hpp"
#include "qsv/rational.hpp"

namespace qsv {

/// Polynomial in the modulus parameter κ = k² with rational coefficients.
/// Canonical form: no trailing zeros; the zero polynomial has no coefficients.
class KPoly {
 public:
  KPoly() = default;
  KPoly(const Rational& c) : KPoly(std::vector<Rational>{c}) {}
  KPoly(int c) : KPoly(Rational(c)) {}
  explicit KPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static KPoly monomial(std::size_t degree, const Rational& c) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return KPoly(std::move(v));
  }
  /// The indeterminate κ itself.
  static KPoly kappa() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  std::optional<std::size_t> degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }
  /// Coefficient of κ^d (zero above the degree).
  Rational coeff(std::size_t d) const { return d < coeffs_.size() ? coeffs_[d] : Rational(0); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_constant() const { return coeffs_.size() <= 1; }

  Rational evaluate(const Rational& x) const {
    Rational r;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
    return r;
  }

  /// Horner evaluation at a q-series; the result has the order of x.
  QSeries evaluate(const QSeries& x) const {
    QSeries r(x.order());
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = mul(r, x) + QSeries::monomial(x.order(), 0, *it);
    return r;
  }

  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t d = coeffs_.size(); d-- > 0;) {
      if (coeffs_[d].is_zero()) continue;
      std::string c = coeffs_[d].to_string();
      if (!out.empty()) out += c[0] == '-' ? " - " : " + ";
      else if (c[0] == '-') out += "-";
      if (c[0] == '-') c.erase(0, 1);
      if (d == 0) out += c;
      else {
        if (c != "1") out += c + "*";
        out += d == 1 ? "k" : "k^" + std::to_string(d);
      }
    }
    return out;
  }

  friend KPoly operator+(const KPoly& a, const KPoly& b) {
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
    return KPoly(std::move(v));
  }
  friend KPoly operator-(const KPoly& a, const KPoly& b) {
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
    return KPoly(std::move(v));
  }
  friend KPoly operator-(const KPoly& a) {
    std::vector<Rational> v(a.coeffs_);
    for (auto& c : v) c = -c;
    return KPoly(std::move(v));
  }
  friend KPoly operator*(const KPoly& a, const KPoly& b) {
    if (a.is_zero() || b.is_zero()) return KPoly();
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return KPoly(std::move(v));
  }
  KPoly& operator+=(const KPoly& b) { return *this = *this + b; }
  KPoly& operator-=(const KPoly& b) { return *this = *this - b; }
  KPoly& operator*=(const KPoly& b) { return *this = *this * b; }

  friend bool operator==(const KPoly&, const KPoly&) = default;
  friend std::ostream& operator<<(std::ostream& os, const KPoly& p) { return os << p.to_string(); }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }
  std::vector<Rational> coeffs_;
};

inline KPoly pow(const KPoly& a, unsigned e) {
  KPoly r(1);
  for (unsigned i = 0; i < e; ++i) r *= a;
  return r;
}

}  // namespace qsv
