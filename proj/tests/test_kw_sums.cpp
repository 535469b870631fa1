#include <gtest/gtest.h>

#include <algorithm>
#include <array>

#include "qsv/counts.hpp"
#include "qsv/kw_sums.hpp"

using namespace qsv;

namespace {

// Unpruned enumeration over all (a_1, a_2, r_1, r_2) with the given parities.
template <class W>
Integer naive_pair_sum(long target, bool a_odd, bool r_odd, W weight) {
  Integer acc = 0;
  auto ok = [](long v, bool odd) { return !odd || v % 2 == 1; };
  for (long a1 = 1; a1 <= target; ++a1)
    for (long a2 = 1; a2 <= target; ++a2)
      for (long r1 = 1; r1 <= target; ++r1)
        for (long r2 = 1; r2 <= target; ++r2)
          if (ok(a1, a_odd) && ok(a2, a_odd) && ok(r1, r_odd) && ok(r2, r_odd) && a1 * r1 + a2 * r2 == target)
            acc += weight(a1, a2);
  return acc;
}

Integer P2(long a, long b) { return Integer(a * b) * Integer(a * a - b * b) * Integer(a * a - b * b); }
Integer P2_prime(long a, long b) { return Integer(a) * Integer(b * b * b) * Integer(a * a - b * b); }

}  // namespace

TEST(KwSums, Examples) {
  EXPECT_EQ(eval_kw_4s2(1, 1), Rational(4));
  EXPECT_EQ(eval_kw_4s2(2, 0), Rational(1));
  EXPECT_EQ(eval_kw_4s2(1, 0), Rational(1));
  EXPECT_EQ(eval_kw_4ss1(1, 1), Rational(8));
  EXPECT_EQ(eval_kw_4ss1(1, 0), Rational(1));
  EXPECT_EQ(eval_kw_4ss1(2, 0), Rational(1));
  EXPECT_EQ(eval_cc(2, 0), Rational(1));
  EXPECT_EQ(eval_cc(1, 1), Rational(4));
  EXPECT_EQ(eval_cc(2, 1), Rational(16));
}

TEST(KwSums, SymmetrizationExamples) {
  auto r = symmetrize_check(2, 4);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.parameters.at("R_P"), "384");
  EXPECT_EQ(r.parameters.at("R_P_prime"), "-192");
  EXPECT_TRUE(symmetrize_check(3, 9).passed());
  for (long m = 1; m <= 12; ++m) EXPECT_TRUE(symmetrize_check(1, m).passed()) << m;
  auto empty = symmetrize_check(2, 5);
  EXPECT_TRUE(empty.passed());
  EXPECT_EQ(empty.parameters.at("R_P"), "0");
}

TEST(KwSums, PrunedEnumerationMatchesNaive) {
  for (long m = 2; m <= 24; m += 2) {
    EXPECT_EQ(R_sum(2, m, weight_P), naive_pair_sum(m, true, true, P2)) << m;
    EXPECT_EQ(R_sum(2, m, weight_P_prime), naive_pair_sum(m, true, true, P2_prime)) << m;
  }
}

TEST(KwSums, AgreesWithTriangleCounts) {
  auto t4 = oracle_counts(CountKind::triangles, 4, 40);
  auto t16 = oracle_counts(CountKind::triangles, 16, 40);
  auto t36 = oracle_counts(CountKind::triangles, 36, 15);
  auto t8 = oracle_counts(CountKind::triangles, 8, 40);
  auto t24 = oracle_counts(CountKind::triangles, 24, 40);
  for (long n = 0; n <= 40; ++n) {
    EXPECT_EQ(eval_kw_4s2(1, n), t4[n]) << n;
    EXPECT_EQ(eval_kw_4s2(2, n), t16[n]) << n;
    EXPECT_EQ(eval_kw_4ss1(1, n), t8[n]) << n;
    EXPECT_EQ(eval_kw_4ss1(2, n), t24[n]) << n;
  }
  for (long n = 0; n <= 15; ++n) EXPECT_EQ(eval_kw_4s2(3, n), t36[n]) << n;
}

TEST(KwSums, AlternativeFormulaAgrees) {
  for (unsigned s = 1; s <= 3; ++s)
    for (long n = 0; n <= 20; ++n) {
      auto v = eval_cc(s, n);
      EXPECT_EQ(v, eval_kw_4s2(s, n)) << s << "," << n;
      EXPECT_TRUE(v.is_integer());
    }
}

TEST(KwSums, SymmetricWeightIsPermutationInvariant) {
  std::array<long, 3> a{1, 5, 3};
  Integer base = weight_P(a);
  std::sort(a.begin(), a.end());
  do {
    EXPECT_EQ(weight_P(a), base);
  } while (std::next_permutation(a.begin(), a.end()));
  std::array<long, 2> b{1, 3}, c{3, 1};
  EXPECT_EQ(weight_P_prime(b), -216);
  EXPECT_EQ(weight_P_prime(c), 24);
  EXPECT_EQ(vandermonde_squares(std::array<long, 2>{2, 2}), 0);
}

TEST(KwSums, Preconditions) {
  EXPECT_THROW(eval_kw_4s2(0, 1), std::invalid_argument);
  EXPECT_THROW(eval_kw_4ss1(1, -1), std::invalid_argument);
  EXPECT_THROW(symmetrize_check(0, 3), std::invalid_argument);
}
