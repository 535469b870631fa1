#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace qsv {

using Integer = mpz_class;

/// Exact rational number in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : value_(static_cast<long>(v)) {}
  Rational(long v) : value_(v) {}
  Rational(const Integer& v) : value_(v) {}
  Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
  }
  explicit Rational(const mpq_class& v) : value_(v) { value_.canonicalize(); }

  /// Parses `p` or `p/q`; the result is reduced.
  static Rational parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("Rational: empty string");
    auto slash = s.find('/');
    Integer num, den(1);
    try {
      if (slash == std::string::npos) {
        num = Integer(s, 10);
      } else {
        num = Integer(s.substr(0, slash), 10);
        den = Integer(s.substr(slash + 1), 10);
      }
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("Rational: malformed '" + s + "'");
    }
    return Rational(num, den);
  }

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// `p` for integers, `p/q` otherwise.
  std::string to_string() const { return value_.get_str(10); }
  double to_double() const { return value_.get_d(); }

  Rational inverse() const {
    if (is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(1) / value_);
  }

  Rational operator-() const { return Rational(canonical_tag{}, -value_); }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(canonical_tag{}, a.value_ + b.value_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(canonical_tag{}, a.value_ - b.value_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(canonical_tag{}, a.value_ * b.value_); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(canonical_tag{}, a.value_ / b.value_);
  }

  Rational& operator+=(const Rational& b) { value_ += b.value_; return *this; }
  Rational& operator-=(const Rational& b) { value_ -= b.value_; return *this; }
  Rational& operator*=(const Rational& b) { value_ *= b.value_; return *this; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  // GMP keeps results of arithmetic on canonical operands canonical.
  struct canonical_tag {};
  template <class Expr>
  Rational(canonical_tag, Expr&& e) : value_(std::forward<Expr>(e)) {}

  mpq_class value_{0};
};

inline Rational pow(const Rational& base, long e) {
  if (e < 0) return pow(base.inverse(), -e);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), static_cast<unsigned long>(e));
  return Rational(num, den);
}

inline Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Integer ipow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

/// Product 1!·2!·…·n!.
inline Integer superfactorial(unsigned long n) {
  Integer r = 1;
  for (unsigned long j = 1; j <= n; ++j) r *= factorial(j);
  return r;
}

}  // namespace qsv
