#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "qsv/acceptance.hpp"
#include "qsv/determinant.hpp"
#include "qsv/milne_det.hpp"

using namespace qsv;

namespace {

// Leibniz formula: sum over permutations with their signs.
template <class R>
R leibniz(const Matrix<R>& m) {
  std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  R acc = ring_traits<R>::zero_like(m[0][0]);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    R term = m[0][perm[0]];
    for (std::size_t i = 1; i < n; ++i) term = term * m[i][perm[i]];
    acc = inversions % 2 == 0 ? acc + term : acc - term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

Matrix<Rational> random_matrix(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  Matrix<Rational> m(n, std::vector<Rational>(n));
  for (auto& row : m)
    for (auto& e : row) e = Rational(Integer(num(rng)), Integer(den(rng)));
  return m;
}

}  // namespace

TEST(Determinant, SmallCases) {
  Matrix<Rational> one{{Rational(7)}};
  EXPECT_EQ(determinant(one), Rational(7));
  Matrix<Rational> two{{1, 2}, {3, 4}};
  EXPECT_EQ(determinant(two), Rational(-2));
  Matrix<Rational> equal_rows{{1, 2, 3}, {4, 5, 6}, {1, 2, 3}};
  EXPECT_TRUE(determinant(equal_rows).is_zero());
  EXPECT_THROW(determinant(Matrix<Rational>{{1, 2}}), std::invalid_argument);
  EXPECT_THROW(determinant(Matrix<Rational>{}), std::invalid_argument);
}

TEST(Determinant, AlgorithmsAgreeWithLeibniz) {
  std::mt19937 rng(99);
  for (std::size_t n = 1; n <= 6; ++n)
    for (int trial = 0; trial < 5; ++trial) {
      auto m = random_matrix(rng, n);
      auto expected = leibniz(m);
      EXPECT_EQ(det_division_free(m), expected) << n;
      if (n <= 5) {
        EXPECT_EQ(det_cofactor(m), expected) << n;
      }
      EXPECT_EQ(determinant(m), expected) << n;
    }
}

TEST(Determinant, SeriesEntriesAgreeWithLeibniz) {
  std::mt19937 rng(17);
  for (std::size_t n = 2; n <= 5; ++n) {
    Matrix<QSeries> m(n);
    for (auto& row : m)
      for (std::size_t j = 0; j < n; ++j) row.push_back(random_series(rng, 12));
    auto expected = leibniz(m);
    EXPECT_EQ(det_division_free(m), expected);
    EXPECT_EQ(series_det(SeriesMatrix(m)), expected);
  }
}

TEST(MilneDet, TwoByTwoExample) {
  auto det = series_det(milne_c_matrix(2, 10));
  EXPECT_EQ(det[4], Rational(192));
  EXPECT_EQ(C_series(2, 3)[3], Rational(28));
  EXPECT_EQ(C_series(3, 3)[3], Rational(244));
}

TEST(MilneDet, SeriesMatrixRejectsMixedOrders) {
  Matrix<QSeries> m{{QSeries::one(3), QSeries::one(3)}, {QSeries::one(3), QSeries::one(4)}};
  EXPECT_THROW(SeriesMatrix{m}, std::invalid_argument);
  Matrix<QSeries> ragged{{QSeries::one(3), QSeries::one(3)}, {QSeries::one(3)}};
  EXPECT_THROW(SeriesMatrix{ragged}, std::invalid_argument);
}

TEST(MilneDet, FourSquaredTriangles) {
  auto s1 = verify_milne_4s2(1, 60);
  EXPECT_TRUE(s1.passed());
  EXPECT_EQ(q_psi4_q2(5)[3], Rational(4));
  auto rhs2 = milne_4s2_rhs(2, 10);
  EXPECT_EQ(rhs2[4], Rational(1));
  EXPECT_EQ(rhs2[5], Rational(0));
  EXPECT_EQ(pow(q_psi4_q2(10), 4), rhs2);
  for (unsigned s = 1; s <= 4; ++s) EXPECT_TRUE(verify_milne_4s2(s, 120).passed()) << s;
}

TEST(MilneDet, FourSSPlusOneTriangles) {
  auto d3 = D_series(1, 10);
  auto q2psi8 = shift(pow(substitute_power(gen_psi(10), 2), 8), 2);
  EXPECT_EQ(d3[4], Rational(8));
  EXPECT_EQ(q2psi8[4], Rational(8));
  for (unsigned s = 1; s <= 4; ++s) EXPECT_TRUE(verify_milne_4ss1(s, 120).passed()) << s;
  auto s2 = milne_4ss1_rhs(2, 12);
  auto scaled = scale(Rational(Integer(1), ipow(Integer(2), 24)), s2);
  EXPECT_EQ(scaled[6], Rational(1));
}

TEST(MilneDet, Psi24AndEta24) {
  auto rhs = psi24_rhs(10);
  EXPECT_EQ(rhs[6], Rational(1));
  EXPECT_EQ(rhs[8], Rational(24));
  EXPECT_EQ(rhs[4], Rational(0));
  EXPECT_TRUE(verify_psi24(150).passed());
  auto eta = eta24_rhs(5);
  EXPECT_EQ(eta[0], Rational(0));
  EXPECT_EQ(eta[1], Rational(1));
  EXPECT_EQ(eta[2], Rational(-24));
  EXPECT_TRUE(verify_eta24(150).passed());
}

TEST(MilneDet, Psi24MatchesRescaledMilneDeterminant) {
  auto milne = scale(Rational(Integer(1), ipow(Integer(2), 24)), milne_4ss1_rhs(2, 80));
  EXPECT_EQ(milne, psi24_rhs(80));
}
