#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qsv/chan_chua.hpp"
#include "qsv/linsolve.hpp"

using namespace qsv;

TEST(LinearSolve, UniqueSolution) {
  auto ls = solve_linear({{2, 1}, {1, -1}, {3, 0}}, {5, 1, 6});
  EXPECT_TRUE(ls.consistent);
  EXPECT_EQ(ls.rank, 2u);
  EXPECT_EQ(ls.values, (std::vector<Rational>{2, 1}));
}

TEST(LinearSolve, InconsistentIsReported) {
  auto ls = solve_linear({{1, 1}, {1, 1}}, {1, 2});
  EXPECT_FALSE(ls.consistent);
}

TEST(LinearSolve, RankDeficient) {
  auto ls = solve_linear({{1, 2}, {2, 4}}, {3, 6});
  EXPECT_TRUE(ls.consistent);
  EXPECT_EQ(ls.rank, 1u);
  EXPECT_THROW(solve_linear({{1, 2}}, {1, 2}), std::invalid_argument);
}

TEST(ChanChua, TwoSquaredMatchesTOnePair) {
  auto lhs = chan_chua_lhs(2, 10);
  EXPECT_EQ(lhs[4], Rational(oracle::t_triangles(16, 0)));
  EXPECT_EQ(lhs[6], Rational(oracle::t_triangles(16, 1)));
  EXPECT_EQ(lhs[8], Rational(oracle::t_triangles(16, 2)));
  EXPECT_EQ(lhs[8], Rational(120));
  auto sol = solve_cc(2, 4 * 2 + 80);
  ASSERT_EQ(sol.basis.size(), 1u);
  EXPECT_EQ(sol.basis[0], (std::pair<unsigned, unsigned>{2, 2}));
  EXPECT_EQ(sol.values[0], Rational(1));
}

TEST(ChanChua, ThreeMatchesPrintedCoefficients) {
  auto sol = solve_cc(3, 4 * 3 + 80);
  ASSERT_EQ(sol.basis.size(), 2u);
  EXPECT_EQ(sol.basis[0], (std::pair<unsigned, unsigned>{4, 2}));
  EXPECT_EQ(sol.values[0], Rational(1, 72));
  EXPECT_EQ(sol.values[1], Rational(-1, 72));
}

TEST(ChanChua, SolverUniqueWithZeroResidual) {
  for (unsigned s = 2; s <= 6; ++s) {
    auto sol = solve_cc(s, 4 * s + 80);
    EXPECT_TRUE(sol.consistent) << s;
    EXPECT_TRUE(sol.unique) << s;
    EXPECT_TRUE(sol.residual_ok) << s;
    EXPECT_EQ(sol.basis.size(), s - 1);
    auto lhs = chan_chua_lhs(s, sol.order_used);
    for (std::size_t e = 1; e <= sol.order_used; e += 2) EXPECT_TRUE(lhs[e].is_zero()) << e;
  }
}

TEST(ChanChua, InsufficientOrderThrows) {
  EXPECT_THROW(solve_cc(4, chan_chua_min_order(4) - 1), std::invalid_argument);
  EXPECT_THROW(solve_cc(1, 100), std::invalid_argument);
  EXPECT_NO_THROW(solve_cc(4, chan_chua_min_order(4)));
}

TEST(Identity32, PrintedFormHasSignError) {
  auto printed = identity32_printed_rhs(12);
  EXPECT_TRUE(printed[4].is_zero());
  EXPECT_EQ(printed[8], Rational(-1));
  EXPECT_EQ(chan_chua_lhs(4, 12)[8], Rational(1));
  auto r = verify_identity32(120);
  EXPECT_EQ(r.status, Status::mismatch_recorded);
  ASSERT_TRUE(r.first_mismatch.has_value());
  EXPECT_EQ(r.first_mismatch->exponent, 8u);
  EXPECT_EQ(r.first_mismatch->lhs_value, "1");
  EXPECT_EQ(r.first_mismatch->rhs_value, "-1");
  EXPECT_EQ(r.parameters.at("a_6_2"), "1/75600");
  EXPECT_EQ(r.parameters.at("a_5_3"), "-1/12096");
  EXPECT_EQ(r.parameters.at("a_4_4"), "1/14400");
  EXPECT_EQ(r.parameters.at("solver_residual_ok"), "true");
}

TEST(Identity32, NegatedPrintedFormHolds) {
  EXPECT_EQ(chan_chua_lhs(4, 150), -identity32_printed_rhs(150));
}

TEST(TRecurrence, LowCoefficients) {
  auto t8 = T_series(4, 6);
  auto rhs = T2_series(6) * T_series(3, 6) + scale(72, T_series(2, 6) * T_series(2, 6));
  EXPECT_EQ(t8[2], Rational(1));
  EXPECT_EQ(rhs[2], Rational(1));
  EXPECT_EQ(t8[4], Rational(128));
  EXPECT_EQ(rhs[4], Rational(128));
  EXPECT_EQ(t8[6], Rational(2188));
  EXPECT_EQ(rhs[6], Rational(2188));
  EXPECT_EQ(T2_series(4)[2], Rational(24));
  EXPECT_EQ(T2_series(4)[4], Rational(24));
}

TEST(TRecurrence, HoldsThroughSix) {
  auto r = verify_t_recurrence(6, 200);
  EXPECT_TRUE(r.passed());
}
