#pragma once

#include <algorithm>
#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qsv/rational.hpp"

namespace qsv {

/// Truncated power series c_0 + c_1 q + ... + c_N q^N with exact coefficients.
///
/// Binary operations return a result at the smaller of the two operand
/// orders. Nothing beyond q^N is ever inferred.
class QSeries {
 public:
  /// The zero series of the given order.
  explicit QSeries(std::size_t order) : coeffs_(order + 1) {}

  QSeries(std::size_t order, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != order + 1)
      throw std::invalid_argument("QSeries: expected " + std::to_string(order + 1) + " coefficients, got " +
                                  std::to_string(coeffs_.size()));
  }

  static QSeries one(std::size_t order) { return monomial(order, 0, 1); }

  /// c·q^e, or zero if e exceeds the order.
  static QSeries monomial(std::size_t order, std::size_t e, const Rational& c) {
    std::vector<Rational> v(order + 1);
    if (e <= order) v[e] = c;
    return QSeries(order, std::move(v));
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t n) const { return coeffs_.at(n); }
  std::span<const Rational> coeffs() const { return coeffs_; }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
  }
  bool is_integral() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_integer(); });
  }

  /// Smallest exponent with a nonzero coefficient.
  std::optional<std::size_t> valuation() const {
    for (std::size_t n = 0; n < coeffs_.size(); ++n)
      if (!coeffs_[n].is_zero()) return n;
    return std::nullopt;
  }

  friend bool operator==(const QSeries&, const QSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

inline QSeries truncate(const QSeries& a, std::size_t order) {
  if (order > a.order()) throw std::invalid_argument("truncate: cannot extend a series");
  auto c = a.coeffs();
  return QSeries(order, std::vector<Rational>(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(order) + 1));
}

inline QSeries add(const QSeries& a, const QSeries& b) {
  std::size_t n = std::min(a.order(), b.order());
  std::vector<Rational> v(n + 1);
  for (std::size_t i = 0; i <= n; ++i) v[i] = a[i] + b[i];
  return QSeries(n, std::move(v));
}

inline QSeries sub(const QSeries& a, const QSeries& b) {
  std::size_t n = std::min(a.order(), b.order());
  std::vector<Rational> v(n + 1);
  for (std::size_t i = 0; i <= n; ++i) v[i] = a[i] - b[i];
  return QSeries(n, std::move(v));
}

inline QSeries scale(const Rational& r, const QSeries& a) {
  std::vector<Rational> v(a.order() + 1);
  for (std::size_t i = 0; i <= a.order(); ++i) v[i] = r * a[i];
  return QSeries(a.order(), std::move(v));
}

inline QSeries negate(const QSeries& a) { return scale(-1, a); }

/// Schoolbook Cauchy product over the rationals.
inline QSeries mul_reference(const QSeries& a, const QSeries& b) {
  std::size_t n = std::min(a.order(), b.order());
  std::vector<Rational> v(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= n; ++j) v[i + j] += a[i] * b[j];
  }
  return QSeries(n, std::move(v));
}

namespace detail {

// Clears denominators termwise so the convolution runs on integers only.
inline Integer common_denominator(std::span<const Rational> c) {
  Integer l = 1;
  for (const auto& x : c) {
    Integer d = x.denominator();
    if (d != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  return l;
}

inline std::vector<Integer> scaled_integers(std::span<const Rational> c, std::size_t n, const Integer& l) {
  std::vector<Integer> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    const auto& q = c[i].raw();
    if (l == 1) {
      out[i] = q.get_num();
    } else {
      out[i] = l / q.get_den();
      out[i] *= q.get_num();
    }
  }
  return out;
}

}  // namespace detail

/// Cauchy product truncated to the smaller order. Runs the convolution on
/// integers after clearing denominators; agrees exactly with mul_reference.
inline QSeries mul(const QSeries& a, const QSeries& b) {
  std::size_t n = std::min(a.order(), b.order());
  auto ca = a.coeffs().first(n + 1);
  auto cb = b.coeffs().first(n + 1);
  Integer la = detail::common_denominator(ca), lb = detail::common_denominator(cb);
  auto ia = detail::scaled_integers(ca, n, la);
  auto ib = detail::scaled_integers(cb, n, lb);
  std::vector<Integer> acc(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (sgn(ia[i]) == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (sgn(ib[j]) == 0) continue;
      mpz_addmul(acc[i + j].get_mpz_t(), ia[i].get_mpz_t(), ib[j].get_mpz_t());
    }
  }
  Integer den = la * lb;
  std::vector<Rational> v(n + 1);
  for (std::size_t i = 0; i <= n; ++i) v[i] = den == 1 ? Rational(acc[i]) : Rational(acc[i], den);
  return QSeries(n, std::move(v));
}

inline QSeries operator+(const QSeries& a, const QSeries& b) { return add(a, b); }
inline QSeries operator-(const QSeries& a, const QSeries& b) { return sub(a, b); }
inline QSeries operator-(const QSeries& a) { return negate(a); }
inline QSeries operator*(const QSeries& a, const QSeries& b) { return mul(a, b); }
inline QSeries operator*(const Rational& r, const QSeries& a) { return scale(r, a); }

/// a^e by repeated squaring; a^0 = 1.
inline QSeries pow(const QSeries& a, unsigned e) {
  QSeries result = QSeries::one(a.order());
  QSeries base = a;
  while (e > 0) {
    if (e & 1u) result = mul(result, base);
    e >>= 1u;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

/// Reciprocal of a unit: b_0 = 1/a_0, b_n = -(1/a_0) Σ_{k=1}^n a_k b_{n-k}.
inline QSeries invert(const QSeries& a) {
  if (a[0].is_zero()) throw std::domain_error("invert: constant term is zero, series is not a unit");
  std::size_t n = a.order();
  Rational inv0 = a[0].inverse();
  std::vector<Rational> b(n + 1);
  b[0] = inv0;
  for (std::size_t m = 1; m <= n; ++m) {
    Rational s;
    for (std::size_t k = 1; k <= m; ++k)
      if (!a[k].is_zero()) s += a[k] * b[m - k];
    b[m] = -(s * inv0);
  }
  return QSeries(n, std::move(b));
}

/// a(q^m) at order min(target, m·a.order()).
inline QSeries substitute_power(const QSeries& a, std::size_t m, std::size_t target) {
  if (m == 0) throw std::invalid_argument("substitute_power: m must be positive");
  std::size_t n = std::min(target, m * a.order());
  std::vector<Rational> v(n + 1);
  for (std::size_t k = 0; k * m <= n; ++k) v[k * m] = a[k];
  return QSeries(n, std::move(v));
}

/// a(q^m) at the order of a.
inline QSeries substitute_power(const QSeries& a, std::size_t m) { return substitute_power(a, m, a.order()); }

/// a(-q).
inline QSeries alternate_sign(const QSeries& a) {
  std::vector<Rational> v(a.coeffs().begin(), a.coeffs().end());
  for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
  return QSeries(a.order(), std::move(v));
}

/// q^k·a, keeping the order of a.
inline QSeries shift(const QSeries& a, std::size_t k) {
  std::vector<Rational> v(a.order() + 1);
  for (std::size_t i = 0; i + k <= a.order(); ++i) v[i + k] = a[i];
  return QSeries(a.order(), std::move(v));
}

/// a/b for b = q^v·(unit). The low v coefficients of a must vanish; the
/// quotient is known to order min(a.order, b.order) - v.
inline QSeries divide(const QSeries& a, const QSeries& b) {
  auto v = b.valuation();
  if (!v) throw std::domain_error("divide: division by the zero series");
  std::size_t n = std::min(a.order(), b.order());
  if (*v > n) throw std::domain_error("divide: divisor valuation exceeds the available order");
  for (std::size_t i = 0; i < *v; ++i)
    if (!a[i].is_zero())
      throw std::domain_error("divide: q^" + std::to_string(i) + " term of the dividend does not cancel");
  std::size_t out = n - *v;
  auto lower = [&](const QSeries& s) {
    std::vector<Rational> c(out + 1);
    for (std::size_t i = 0; i <= out; ++i) c[i] = s[i + *v];
    return QSeries(out, std::move(c));
  };
  return mul(lower(a), invert(lower(b)));
}

/// First exponent where a and b differ, over the common order.
inline std::optional<std::size_t> first_difference(const QSeries& a, const QSeries& b) {
  std::size_t n = std::min(a.order(), b.order());
  for (std::size_t i = 0; i <= n; ++i)
    if (a[i] != b[i]) return i;
  return std::nullopt;
}

// Dump format: header `qseries order=N`, then one `n p/q` line per exponent.

inline void write_dump(std::ostream& os, const QSeries& a) {
  os << "qseries order=" << a.order() << '\n';
  for (std::size_t n = 0; n <= a.order(); ++n) os << n << ' ' << a[n].to_string() << '\n';
}

inline std::string to_dump(const QSeries& a) {
  std::ostringstream os;
  write_dump(os, a);
  return os.str();
}

inline QSeries read_dump(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("series dump: missing header");
  const std::string prefix = "qseries order=";
  if (line.rfind(prefix, 0) != 0) throw std::runtime_error("series dump: bad header '" + line + "'");
  std::size_t order = 0;
  try {
    std::size_t used = 0;
    order = std::stoul(line.substr(prefix.size()), &used);
    if (used != line.size() - prefix.size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw std::runtime_error("series dump: bad order in '" + line + "'");
  }
  std::vector<Rational> v(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    if (!std::getline(is, line)) throw std::runtime_error("series dump: truncated at exponent " + std::to_string(n));
    auto sp = line.find(' ');
    if (sp == std::string::npos || line.substr(0, sp) != std::to_string(n))
      throw std::runtime_error("series dump: expected exponent " + std::to_string(n) + " in '" + line + "'");
    Rational r = Rational::parse(line.substr(sp + 1));
    if (r.to_string() != line.substr(sp + 1))
      throw std::runtime_error("series dump: coefficient not in reduced form: '" + line + "'");
    v[n] = std::move(r);
  }
  return QSeries(order, std::move(v));
}

inline QSeries from_dump(const std::string& text) {
  std::istringstream is(text);
  return read_dump(is);
}

}  // namespace qsv
