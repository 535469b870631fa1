#pragma once

#include <cstddef>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsv/determinant.hpp"
#include "qsv/generators.hpp"
#include "qsv/kpoly.hpp"
#include "qsv/qseries.hpp"
#include "qsv/report.hpp"
#include "qsv/useries.hpp"

namespace qsv {

using KUSeries = USeries<KPoly>;

/// Taylor expansions of sn, cn, dn in u with coefficients in Q[κ].
struct JacobiTriple {
  KUSeries sn;
  KUSeries cn;
  KUSeries dn;
};

/// Solves sn' = cn·dn, cn' = -sn·dn, dn' = -κ·sn·cn with sn(0) = 0,
/// cn(0) = dn(0) = 1 coefficient by coefficient up to u^K.
inline JacobiTriple jacobi_taylor(std::size_t order) {
  if (order < 1) throw std::invalid_argument("jacobi_taylor: order must be >= 1");
  std::vector<KPoly> sn(order + 1), cn(order + 1), dn(order + 1);
  cn[0] = 1;
  dn[0] = 1;
  const KPoly kappa = KPoly::kappa();
  for (std::size_t k = 0; k < order; ++k) {
    KPoly cd, sd, sc;
    for (std::size_t i = 0; i <= k; ++i) {
      cd += cn[i] * dn[k - i];
      sd += sn[i] * dn[k - i];
      sc += sn[i] * cn[k - i];
    }
    KPoly inv(Rational(1, static_cast<long>(k + 1)));
    sn[k + 1] = inv * cd;
    cn[k + 1] = -(inv * sd);
    dn[k + 1] = -(inv * kappa * sc);
  }
  return {KUSeries(order, std::move(sn)), KUSeries(order, std::move(cn)), KUSeries(order, std::move(dn))};
}

/// c_1..c_M with sn·cn/dn = Σ c_m u^{2m-1}/(2m-1)!.
inline std::vector<KPoly> sncd_coeffs(std::size_t count) {
  if (count < 1) throw std::invalid_argument("sncd_coeffs: need at least one coefficient");
  std::size_t order = 2 * count - 1;
  auto jt = jacobi_taylor(order);
  auto f = divide(jt.sn * jt.cn, jt.dn);
  std::vector<KPoly> c;
  for (std::size_t k = 0; k <= order; ++k) {
    if (k % 2 == 0) {
      if (!f[k].is_zero()) throw std::logic_error("sncd_coeffs: even u-coefficient is nonzero");
      continue;
    }
    c.push_back(KPoly(Rational(factorial(k))) * f[k]);
  }
  return c;
}

/// z = φ²(q) and k² = 16qψ⁴(q²)/φ⁴(q) as q-series.
struct EllipticParams {
  QSeries z;
  QSeries ksq;
};

inline EllipticParams elliptic_params(std::size_t order) {
  auto phi2 = pow(gen_phi(order), 2);
  auto num = scale(16, shift(pow(substitute_power(gen_psi(order), 2), 4), 1));
  return {phi2, num * invert(phi2 * phi2)};
}

/// For m = 1..M: c_m(k²) = 2^{2m+2}(-1)^{m-1}·C_{2m-1}/(k² z^{2m}) to q-order N.
inline VerificationReport verify_fourier(std::size_t m_max, std::size_t order) {
  if (m_max < 1 || order < 1) throw std::invalid_argument("verify_fourier: need M >= 1 and N >= 1");
  Stopwatch sw;
  VerificationReport r;
  r.task = "fourier";
  r.parameters = {{"m", std::to_string(m_max)}, {"order", std::to_string(order)}};
  // Dividing by k² = 16q + ... costs one order, so work one order higher.
  std::size_t work = order + 1;
  auto params = elliptic_params(work);
  auto zinv = invert(params.z);
  auto c = sncd_coeffs(m_max);
  for (std::size_t m = 1; m <= m_max; ++m) {
    auto lhs = truncate(c[m - 1].evaluate(params.ksq), order);
    Rational pre = pow(Rational(2), static_cast<long>(2 * m + 2)) * (m % 2 == 1 ? 1 : -1);
    auto numer = scale(pre, pow(zinv, static_cast<unsigned>(2 * m)) * C_series(static_cast<unsigned>(m), work));
    QSeries rhs(0);
    try {
      rhs = divide(numer, params.ksq);
    } catch (const std::domain_error& e) {
      r.status = Status::fail;
      r.first_mismatch = Mismatch{0, "valuation", e.what()};
      r.parameters["failing_m"] = std::to_string(m);
      break;
    }
    if (auto e = first_difference(lhs, rhs)) {
      r.status = Status::fail;
      r.first_mismatch = Mismatch{*e, lhs[*e].to_string(), rhs[*e].to_string()};
      r.parameters["failing_m"] = std::to_string(m);
      break;
    }
  }
  r.runtime_ms = sw.elapsed_ms();
  return r;
}

/// det(c_{u+v-1})_{1≤u,v≤n} against κ^{n(n-1)}·∏_{r=1}^{2n-1} r!.
inline VerificationReport hankel_check(std::size_t n) {
  if (n < 1) throw std::invalid_argument("hankel_check: n must be >= 1");
  Stopwatch sw;
  auto c = sncd_coeffs(2 * n - 1);
  KPoly det = determinant(hankel_matrix(c, n));
  KPoly expected = KPoly::monomial(n * (n - 1), Rational(superfactorial(2 * n - 1)));
  VerificationReport r;
  r.task = "hankel";
  r.parameters = {{"n", std::to_string(n)}, {"determinant", det.to_string()}, {"expected", expected.to_string()}};
  if (det != expected) {
    std::size_t deg = 0;
    std::size_t top = std::max(det.coeffs().size(), expected.coeffs().size());
    while (deg < top && det.coeff(deg) == expected.coeff(deg)) ++deg;
    r.status = Status::fail;
    r.first_mismatch = Mismatch{deg, det.coeff(deg).to_string(), expected.coeff(deg).to_string()};
  }
  r.runtime_ms = sw.elapsed_ms();
  return r;
}

/// H_n({t^m a_m}) = t^{n²} H_n({a_m}) on random integer sequences and rational t.
inline VerificationReport hankel_scaling_check(std::size_t n, std::size_t trials, unsigned seed = 20261014u) {
  if (n < 1) throw std::invalid_argument("hankel_scaling_check: n must be >= 1");
  Stopwatch sw;
  VerificationReport r;
  r.task = "hankel-scaling";
  r.parameters = {{"n", std::to_string(n)}, {"trials", std::to_string(trials)}, {"seed", std::to_string(seed)}};
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> coeff(-20, 20), num(-9, 9), den(1, 7);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::vector<Rational> a(2 * n - 1), ta(2 * n - 1);
    long tn = 0;
    while (tn == 0) tn = num(rng);
    Rational t(Integer(tn), Integer(den(rng)));
    for (std::size_t m = 0; m < a.size(); ++m) {
      a[m] = coeff(rng);
      ta[m] = pow(t, static_cast<long>(m + 1)) * a[m];
    }
    Rational lhs = determinant(hankel_matrix(ta, n));
    Rational rhs = pow(t, static_cast<long>(n * n)) * determinant(hankel_matrix(a, n));
    if (lhs != rhs) {
      r.status = Status::fail;
      r.first_mismatch = Mismatch{trial, lhs.to_string(), rhs.to_string()};
      break;
    }
  }
  r.runtime_ms = sw.elapsed_ms();
  return r;
}

/// Continued fraction t²/(b_1 + a_2/(b_2 + a_3/(b_3 + ...))) with
/// a_n = -(2n-1)(2n-2)²(2n-3)κ²t⁴ and b_n = 1 + (2n-1)²(4-2κ)t².
struct CFracSpec {
  std::size_t depth;

  KPoly numerator_coeff(std::size_t n) const {
    long v = static_cast<long>(n);
    return KPoly::monomial(2, Rational(-(2 * v - 1) * (2 * v - 2) * (2 * v - 2) * (2 * v - 3)));
  }
  KPoly denominator_t2_coeff(std::size_t n) const {
    long v = static_cast<long>(n);
    return KPoly(Rational((2 * v - 1) * (2 * v - 1))) * (KPoly(4) - KPoly::monomial(1, 2));
  }
  /// a_n as a polynomial in t, truncated at t^order.
  KUSeries partial_numerator(std::size_t n, std::size_t order) const {
    return KUSeries::monomial(order, 4, numerator_coeff(n));
  }
  KUSeries partial_denominator(std::size_t n, std::size_t order) const {
    return KUSeries::constant(order, KPoly(1)) + KUSeries::monomial(order, 2, denominator_t2_coeff(n));
  }
};

/// Power series in t of the depth-limited fraction, to t^order. Numerator and
/// denominator come from the three-term convergent recurrence.
inline KUSeries cf_series(const CFracSpec& spec, std::size_t order) {
  if (spec.depth < 1) throw std::invalid_argument("cf_series: depth must be >= 1");
  // A_0 = 0, B_0 = 1; A_1 = t², B_1 = b_1; A_n = b_n A_{n-1} + a_n A_{n-2}.
  KUSeries a_prev = KUSeries::constant(order, KPoly());
  KUSeries b_prev = KUSeries::constant(order, KPoly(1));
  KUSeries a_cur = KUSeries::monomial(order, 2, KPoly(1));
  KUSeries b_cur = spec.partial_denominator(1, order);
  for (std::size_t n = 2; n <= spec.depth; ++n) {
    auto bn = spec.partial_denominator(n, order);
    auto an = spec.partial_numerator(n, order);
    KUSeries a_next = bn * a_cur + an * a_prev;
    KUSeries b_next = bn * b_cur + an * b_prev;
    a_prev = std::move(a_cur);
    b_prev = std::move(b_cur);
    a_cur = std::move(a_next);
    b_cur = std::move(b_next);
  }
  return divide(a_cur, b_cur);
}

/// Compares the fraction's expansion with Σ_{m≤M} c_m t^{2m} and checks that
/// one more level leaves it unchanged.
inline VerificationReport cf_expand(std::size_t depth, std::size_t m_max) {
  if (m_max < 1 || depth < m_max + 1) throw std::invalid_argument("cf_expand: need M >= 1 and depth >= M + 1");
  Stopwatch sw;
  VerificationReport r;
  r.task = "cf";
  r.parameters = {{"depth", std::to_string(depth)}, {"torder", std::to_string(2 * m_max)}};
  std::size_t order = 2 * m_max;
  auto series = cf_series({depth}, order);
  auto deeper = cf_series({depth + 1}, order);
  auto c = sncd_coeffs(m_max);
  std::vector<KPoly> expected(order + 1);
  for (std::size_t m = 1; m <= m_max; ++m) expected[2 * m] = c[m - 1];
  for (std::size_t k = 0; k <= order; ++k) {
    if (series[k] != expected[k]) {
      r.status = Status::fail;
      r.first_mismatch = Mismatch{k, series[k].to_string(), expected[k].to_string()};
      break;
    }
  }
  if (r.passed() && !(series == deeper)) {
    std::size_t k = 0;
    while (series[k] == deeper[k]) ++k;
    r.status = Status::fail;
    r.first_mismatch = Mismatch{k, series[k].to_string(), deeper[k].to_string()};
    r.notes.push_back("depth-stability failed");
  }
  r.runtime_ms = sw.elapsed_ms();
  return r;
}

/// sn² + cn² = 1 and dn² + κ·sn² = 1 to u^K.
inline VerificationReport pythagorean_check(std::size_t order) {
  Stopwatch sw;
  auto jt = jacobi_taylor(order);
  auto one = KUSeries::constant(order, KPoly(1));
  VerificationReport r;
  r.task = "pythagorean";
  r.parameters = {{"order", std::to_string(order)}};
  auto first = jt.sn * jt.sn + jt.cn * jt.cn;
  auto second = jt.dn * jt.dn + KPoly::kappa() * (jt.sn * jt.sn);
  for (const auto* lhs : {&first, &second}) {
    for (std::size_t k = 0; k <= order && r.passed(); ++k) {
      if ((*lhs)[k] != one[k]) {
        r.status = Status::fail;
        r.first_mismatch = Mismatch{k, (*lhs)[k].to_string(), one[k].to_string()};
      }
    }
  }
  r.runtime_ms = sw.elapsed_ms();
  return r;
}

}  // namespace qsv
