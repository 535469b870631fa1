#include <gtest/gtest.h>

#include "qsv/elliptic_cf.hpp"
#include "qsv/milne_det.hpp"

using namespace qsv;

namespace {

// Tangent numbers: tanh u = Σ (-1)^{m-1} T_m u^{2m-1}/(2m-1)!.
const long kTangent[] = {1, 2, 16, 272, 7936, 353792};

}  // namespace

TEST(JacobiTaylor, LeadingTerms) {
  auto jt = jacobi_taylor(5);
  auto k = KPoly::kappa();
  EXPECT_EQ(jt.sn[1], KPoly(1));
  EXPECT_EQ(jt.sn[3], Rational(-1, 6) * (KPoly(1) + k));
  EXPECT_EQ(jt.cn[2], KPoly(Rational(-1, 2)));
  EXPECT_EQ(jt.dn[2], Rational(-1, 2) * k);
  EXPECT_THROW(jacobi_taylor(0), std::invalid_argument);
}

TEST(JacobiTaylor, DegenerateModuliAreCircularAndHyperbolic) {
  const std::size_t order = 13;
  auto jt = jacobi_taylor(order);
  for (std::size_t n = 0; n <= order; ++n) {
    // κ = 0: sn = sin, cn = cos, dn = 1.
    Rational sin_n = n % 2 == 1 ? Rational(Integer(((n - 1) / 2) % 2 == 0 ? 1 : -1), factorial(n)) : Rational(0);
    Rational cos_n = n % 2 == 0 ? Rational(Integer((n / 2) % 2 == 0 ? 1 : -1), factorial(n)) : Rational(0);
    EXPECT_EQ(jt.sn[n].evaluate(0), sin_n) << n;
    EXPECT_EQ(jt.cn[n].evaluate(0), cos_n) << n;
    EXPECT_EQ(jt.dn[n].evaluate(0), Rational(n == 0 ? 1 : 0)) << n;
    // κ = 1: cn = dn = sech.
    EXPECT_EQ(jt.cn[n].evaluate(1), jt.dn[n].evaluate(1)) << n;
  }
  for (std::size_t m = 1; m <= 6; ++m) {
    std::size_t n = 2 * m - 1;
    Rational tanh_n(Integer((m % 2 == 1 ? 1 : -1) * kTangent[m - 1]), factorial(n));
    EXPECT_EQ(jt.sn[n].evaluate(1), tanh_n) << n;
  }
}

TEST(JacobiTaylor, Pythagorean) { EXPECT_TRUE(pythagorean_check(13).passed()); }

TEST(SnCdCoefficients, Values) {
  auto c = sncd_coeffs(4);
  auto k = KPoly::kappa();
  EXPECT_EQ(c[0], KPoly(1));
  EXPECT_EQ(c[1], KPoly(2) * k - KPoly(4));
  // From H_2 = c_1 c_3 - c_2² = 12κ².
  EXPECT_EQ(c[2], KPoly(12) * k * k + c[1] * c[1]);
  for (std::size_t m = 1; m <= 4; ++m) {
    long sign = m % 2 == 1 ? 1 : -1;
    EXPECT_EQ(c[m - 1].evaluate(0), Rational(sign * (1L << (2 * m - 2)))) << m;
    EXPECT_EQ(c[m - 1].evaluate(1), Rational(sign * kTangent[m - 1])) << m;
  }
}

TEST(Hankel, Determinants) {
  auto h3 = hankel_check(3);
  EXPECT_TRUE(h3.passed());
  EXPECT_EQ(h3.parameters.at("determinant"), "34560*k^6");
  EXPECT_EQ(hankel_check(2).parameters.at("determinant"), "12*k^2");
  EXPECT_EQ(hankel_check(1).parameters.at("determinant"), "1");
  for (std::size_t n = 4; n <= 6; ++n) EXPECT_TRUE(hankel_check(n).passed()) << n;
}

TEST(Hankel, ScalingExamples) {
  std::vector<Rational> a{1, 2, 5}, ta{3, 18, 135};
  EXPECT_EQ(determinant(hankel_matrix(ta, 2)), Rational(81));
  EXPECT_EQ(determinant(hankel_matrix(a, 2)), Rational(1));
  std::vector<Rational> singular{1, 1, 1};
  EXPECT_TRUE(determinant(hankel_matrix(singular, 2)).is_zero());
  EXPECT_TRUE(hankel_scaling_check(3, 50).passed());
  EXPECT_THROW(hankel_matrix(a, 3), std::invalid_argument);
}

TEST(Hankel, CommutesWithModulusSubstitution) {
  const std::size_t order = 60;
  auto params = elliptic_params(order);
  auto c = sncd_coeffs(3);
  std::vector<QSeries> evaluated;
  for (const auto& cm : c) evaluated.push_back(cm.evaluate(params.ksq));
  auto det_series = determinant(hankel_matrix(evaluated, 2));
  auto det_poly = determinant(hankel_matrix(c, 2));
  EXPECT_EQ(det_series, det_poly.evaluate(params.ksq));
}

TEST(Fourier, ModulusSeries) {
  auto p = elliptic_params(5);
  EXPECT_EQ(p.z, pow(gen_phi(5), 2));
  EXPECT_TRUE(p.ksq[0].is_zero());
  EXPECT_EQ(p.ksq[1], Rational(16));
  EXPECT_EQ(p.ksq[2], Rational(-128));
  EXPECT_EQ(p.ksq[3], Rational(704));
}

TEST(Fourier, FirstCoefficientIsPsiFour) { EXPECT_EQ(C_series(1, 100), q_psi4_q2(100)); }

TEST(Fourier, HoldsForSixCoefficients) {
  auto r = verify_fourier(6, 60);
  EXPECT_TRUE(r.passed());
  EXPECT_THROW(verify_fourier(0, 10), std::invalid_argument);
}

TEST(ContinuedFraction, Expansion) {
  auto f = cf_series({3}, 6);
  auto k = KPoly::kappa();
  EXPECT_TRUE(f[0].is_zero());
  EXPECT_EQ(f[2], KPoly(1));
  EXPECT_EQ(f[4], -(KPoly(4) - KPoly(2) * k));
  EXPECT_TRUE(f[3].is_zero());
  EXPECT_TRUE(cf_expand(12, 10).passed());
  EXPECT_THROW(cf_expand(3, 3), std::invalid_argument);
  EXPECT_THROW(cf_series({0}, 4), std::invalid_argument);
}

TEST(ContinuedFraction, ShallowDepthTruncatesEarly) {
  auto shallow = cf_series({1}, 8);
  auto c = sncd_coeffs(4);
  EXPECT_EQ(shallow[4], c[1]);
  EXPECT_NE(shallow[6], c[2]);
}
