#pragma once

#include <concepts>
#include <stdexcept>

#include "qsv/kpoly.hpp"
#include "qsv/qseries.hpp"
#include "qsv/rational.hpp"

namespace qsv {

// Coefficient rings used by USeries and the determinant routines. Zero and
// one are produced from a prototype element so that QSeries keeps its order.
template <class R>
struct ring_traits;

template <>
struct ring_traits<Rational> {
  static Rational zero_like(const Rational&) { return 0; }
  static Rational one_like(const Rational&) { return 1; }
  static bool is_zero(const Rational& x) { return x.is_zero(); }
  static bool is_unit(const Rational& x) { return !x.is_zero(); }
  static Rational inverse(const Rational& x) { return x.inverse(); }
};

template <>
struct ring_traits<KPoly> {
  static KPoly zero_like(const KPoly&) { return KPoly(); }
  static KPoly one_like(const KPoly&) { return KPoly(1); }
  static bool is_zero(const KPoly& x) { return x.is_zero(); }
  static bool is_unit(const KPoly& x) { return x.degree() == 0u; }
  static KPoly inverse(const KPoly& x) {
    if (!is_unit(x)) throw std::domain_error("KPoly: only nonzero constants are units");
    return KPoly(x.coeff(0).inverse());
  }
};

template <>
struct ring_traits<QSeries> {
  static QSeries zero_like(const QSeries& p) { return QSeries(p.order()); }
  static QSeries one_like(const QSeries& p) { return QSeries::one(p.order()); }
  static bool is_zero(const QSeries& x) { return x.is_zero(); }
  static bool is_unit(const QSeries& x) { return !x[0].is_zero(); }
  static QSeries inverse(const QSeries& x) { return invert(x); }
};

template <class R>
concept CoefficientRing = requires(const R& a, const R& b) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { ring_traits<R>::zero_like(a) } -> std::convertible_to<R>;
  { ring_traits<R>::one_like(a) } -> std::convertible_to<R>;
  { ring_traits<R>::is_unit(a) } -> std::convertible_to<bool>;
  { ring_traits<R>::inverse(a) } -> std::convertible_to<R>;
};

}  // namespace qsv
