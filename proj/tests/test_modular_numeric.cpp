#include <gtest/gtest.h>

#include <cmath>

#include "qsv/generators.hpp"
#include "qsv/modular_numeric.hpp"

using namespace qsv;

namespace {

const Complex kI(0, 1);

double residual(const VerificationReport& r) { return std::stod(r.parameters.at("residual")); }

}  // namespace

TEST(NumEval, PsiAtOneTenth) {
  auto v = num_eval(NumericSeries::psi, 0.1, 1e-15);
  long double direct = 0;
  for (int k = 0; k < 8; ++k) direct += std::pow(0.1L, k * (k + 1) / 2);
  EXPECT_NEAR(v.value.real(), static_cast<double>(direct), 1e-15);
  EXPECT_NEAR(v.value.real(), 1.101001000100001, 1e-15);
  EXPECT_EQ(v.value.imag(), 0.0);
  EXPECT_LE(v.tail_bound, 1e-16);
}

TEST(NumEval, PhiAndE4SmallNome) {
  auto phi = num_eval(NumericSeries::phi, 0.01, 1e-14);
  EXPECT_NEAR(phi.value.real(), 1 + 2 * 0.01 + 2 * 1e-8, 1e-14);
  auto e4 = num_eval(NumericSeries::E4, 1e-3, 1e-12);
  EXPECT_NEAR(e4.value.real(), 1 + 240e-3 + 240 * 9e-6 + 240 * 28e-9, 1e-7);
  EXPECT_EQ(num_eval(NumericSeries::E4, 0.0, 1e-12).value, Complex(1.0));
}

TEST(NumEval, DomainErrors) {
  EXPECT_THROW(num_eval(NumericSeries::phi, 1.0, 1e-10), std::domain_error);
  EXPECT_THROW(num_eval(NumericSeries::psi, Complex(0.8, 0.8), 1e-10), std::domain_error);
  EXPECT_THROW(num_eval(NumericSeries::psi, 0.5, 0.0), std::invalid_argument);
  EXPECT_THROW(UpperHalfPoint(Complex(1, 0)), std::domain_error);
  EXPECT_THROW(UpperHalfPoint(Complex(0, -1)), std::domain_error);
}

TEST(NumEval, TailBoundsShrinkWithEps) {
  Complex w = UpperHalfPoint(Complex(0.2, 0.6)).nome2();
  for (auto which : {NumericSeries::phi, NumericSeries::psi, NumericSeries::E4}) {
    double prev = 1e9;
    std::size_t terms = 0;
    for (double eps = 1e-2; eps > 1e-13; eps /= 2) {
      auto v = num_eval(which, w, eps);
      EXPECT_LE(v.tail_bound, eps / 10);
      EXPECT_LE(v.tail_bound, prev);
      EXPECT_GE(v.terms_used, terms);
      prev = v.tail_bound;
      terms = v.terms_used;
    }
  }
}

TEST(NumEval, ResidualsMonotoneUpToRoundOff) {
  UpperHalfPoint p(Complex(0.1, 0.35));
  double prev = 1e9;
  for (double eps = 1e-2; eps > 1e-13; eps /= 2) {
    double res = std::abs(ts_sides(p, eps).lhs - ts_sides(p, eps).rhs);
    EXPECT_LE(res, std::max(prev, 1e-14)) << eps;
    prev = res;
  }
}

TEST(ParseComplex, Forms) {
  EXPECT_EQ(parse_complex("i"), Complex(0, 1));
  EXPECT_EQ(parse_complex("-i"), Complex(0, -1));
  EXPECT_EQ(parse_complex("0.5+1.5i"), Complex(0.5, 1.5));
  EXPECT_EQ(parse_complex("2-3i"), Complex(2, -3));
  EXPECT_EQ(parse_complex("1e-1+2e+0i"), Complex(0.1, 2));
  EXPECT_EQ(parse_complex("3"), Complex(3, 0));
  EXPECT_THROW(parse_complex(""), std::invalid_argument);
  EXPECT_THROW(parse_complex("1+xi"), std::invalid_argument);
}

TEST(Modular, ThetaTransform) {
  for (Complex tau : {kI, Complex(0.5, 1.5), Complex(-0.3, 0.8), Complex(0.1, 0.6)}) {
    auto r = verify_ts(UpperHalfPoint(tau), 1e-12);
    EXPECT_TRUE(r.passed()) << format_complex(tau) << " residual " << r.parameters.at("residual");
  }
}

TEST(Modular, PrintedExponentSignFails) {
  auto sides = ts_sides(UpperHalfPoint(kI), 1e-12, +1);
  EXPECT_GT(std::abs(sides.lhs - sides.rhs), 1.0);
}

TEST(Modular, E4WeightFour) {
  for (Complex tau : {kI, Complex(0.5, 1.5), Complex(-0.3, 0.8), Complex(0.25, 1.1)}) {
    auto r = verify_E4_modular(UpperHalfPoint(tau), 1e-10);
    EXPECT_TRUE(r.passed()) << format_complex(tau) << " residual " << r.parameters.at("residual");
  }
}

TEST(Modular, EightTrianglesNumeric) {
  for (Complex tau : {kI, Complex(0.5, 1.5), Complex(0.2, 0.7)}) {
    auto r = verify_8t_numeric(UpperHalfPoint(tau), 1e-12);
    EXPECT_TRUE(r.passed()) << format_complex(tau);
    EXPECT_LT(residual(r), 1e-12);
  }
}

TEST(Modular, TruncatedExactSeriesMatchesNumeric) {
  UpperHalfPoint p(Complex(0, 1.5));
  Complex w = p.nome2();
  const std::size_t order = 40;
  auto exact = scale(256, shift(pow(gen_psi(order), 8), 1));
  auto e1 = num_eval(NumericSeries::E4, w, 1e-14);
  auto e2 = num_eval(NumericSeries::E4, w * w, 1e-14);
  Complex numeric = (16.0 / 15.0) * (e1.value - e2.value);
  // |w| ≈ 8e-5, so truncating at q^40 leaves far less than double precision.
  EXPECT_LT(std::abs(evaluate_truncated(exact, w) - numeric), 1e-14 * std::abs(numeric) + e1.tail_bound + e2.tail_bound);
  auto phi = num_eval(NumericSeries::phi, w, 1e-15);
  EXPECT_NEAR(std::abs(evaluate_truncated(gen_phi(order), w) - phi.value), 0.0, 1e-15);
}
