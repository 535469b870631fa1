#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsv/generators.hpp"
#include "qsv/qseries.hpp"
#include "qsv/report.hpp"

namespace qsv {

enum class CountKind { squares, triangles };

inline std::string to_string(CountKind k) { return k == CountKind::squares ? "squares" : "triangles"; }

struct CountRecord {
  CountKind kind{};
  unsigned s{};
  std::size_t n{};
  Integer value;
};

/// φ^s (squares) or ψ^s (triangles); coefficient n is r_s(n) or t_s(n).
inline QSeries oracle_counts(CountKind kind, unsigned s, std::size_t order) {
  if (s < 1) throw std::invalid_argument("oracle_counts: s must be >= 1");
  return pow(kind == CountKind::squares ? gen_phi(order) : gen_psi(order), s);
}

namespace detail {
template <class F>
void for_each_divisor(std::int64_t n, F&& f) {
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    f(d);
    if (d != n / d) f(n / d);
  }
}
inline void require_positive(std::int64_t n, const char* who) {
  if (n < 1) throw std::invalid_argument(std::string(who) + ": n must be >= 1");
}
}  // namespace detail

/// r_2(n) = 4(d_1(n) - d_3(n)), d_j counting divisors ≡ j (mod 4).
inline std::int64_t r2_divisor(std::int64_t n) {
  detail::require_positive(n, "r2_divisor");
  std::int64_t d1 = 0, d3 = 0;
  detail::for_each_divisor(n, [&](std::int64_t d) {
    if (d % 4 == 1) ++d1;
    else if (d % 4 == 3) ++d3;
  });
  return 4 * (d1 - d3);
}

/// r_4(n) = 8·Σ_{d|n, 4∤d} d.
inline std::int64_t r4_divisor(std::int64_t n) {
  detail::require_positive(n, "r4_divisor");
  std::int64_t s = 0;
  detail::for_each_divisor(n, [&](std::int64_t d) {
    if (d % 4 != 0) s += d;
  });
  return 8 * s;
}

/// Which sign to use in the alternating Lambert sums for φ² and φ⁶.
/// `corrected` is (-1)^(k-1) and agrees with the theta-power oracle;
/// `printed` keeps (-1)^k, which is off already at q^1.
enum class SignConvention { corrected, printed };

/// Lambert-series right-hand side for φ^which, which ∈ {2, 4, 6, 8}.
inline QSeries jacobi_rhs(unsigned which, std::size_t order, SignConvention conv = SignConvention::corrected) {
  Sign alt = conv == SignConvention::corrected ? Sign::alternating_shifted : Sign::alternating;
  switch (which) {
    case 2:
      return lambert_combination(1, 4, {0, 1, 1, Sign::plus, IndexMap::odd, alt}, order);
    case 4:
      // 1 + (-q)^k = 1 - σq^k with σ = (-1)^(k-1)
      return lambert_combination(1, 8, {1, 1, 1, Sign::alternating_shifted, IndexMap::identity, Sign::plus}, order);
    case 6:
      return lambert_combination(1, 16, {2, 1, 2, Sign::minus, IndexMap::identity, Sign::plus}, order) -
             scale(4, gen_lambert({2, 1, 1, Sign::plus, IndexMap::odd, alt}, order));
    case 8:
      return lambert_combination(1, 16, {3, 1, 1, Sign::alternating, IndexMap::identity, Sign::plus}, order);
    default:
      throw std::invalid_argument("jacobi_rhs: which must be 2, 4, 6 or 8");
  }
}

inline VerificationReport verify_jacobi(unsigned which, std::size_t order,
                                        SignConvention conv = SignConvention::corrected) {
  Stopwatch sw;
  auto rhs = jacobi_rhs(which, order, conv);
  auto lhs = oracle_counts(CountKind::squares, which, order);
  auto r = compare_series("jacobi" + std::to_string(which), lhs, rhs,
                          {{"which", std::to_string(which)},
                           {"order", std::to_string(order)},
                           {"sign_convention", conv == SignConvention::corrected ? "corrected" : "printed"}});
  if (which == 2 || which == 6) {
    if (conv == SignConvention::corrected)
      r.notes.push_back("sign correction applied: alternating odd-index sum uses (-1)^(k-1); the (-1)^k form gives q^1 coefficient " +
                        jacobi_rhs(which, 1, SignConvention::printed)[1].to_string() + " against r_" +
                        std::to_string(which) + "(1) = " + lhs[1].to_string());
    else
      r.notes.push_back("uncorrected (-1)^k sign convention");
  }
  r.runtime_ms = sw.elapsed_ms();
  return r;
}

/// Liouville's φ^10 formula: two Lambert sums plus (32/5)·qφ²(q)φ⁴(-q)ψ⁴(q²).
inline QSeries liouville10_rhs(std::size_t order) {
  auto odd = gen_lambert({4, 1, 1, Sign::plus, IndexMap::odd, Sign::alternating_shifted}, order);
  auto even = gen_lambert({4, 1, 2, Sign::minus, IndexMap::identity, Sign::plus}, order);
  auto phi = gen_phi(order);
  auto cusp = shift(pow(phi, 2) * pow(alternate_sign(phi), 4) * pow(substitute_power(gen_psi(order), 2), 4), 1);
  return QSeries::one(order) + scale(Rational(4, 5), odd) + scale(Rational(64, 5), even) +
         scale(Rational(32, 5), cusp);
}

inline VerificationReport verify_liouville10(std::size_t order) {
  Stopwatch sw;
  auto r = compare_series("liouville10", oracle_counts(CountKind::squares, 10, order), liouville10_rhs(order),
                          {{"order", std::to_string(order)}});
  r.runtime_ms = sw.elapsed_ms();
  return r;
}

/// (S_4 S_8 - 8 S_6²)/9.
inline QSeries milne24_rhs(std::size_t order) {
  auto s6 = S6_series(order);
  return scale(Rational(1, 9), S4_series(order) * S8_series(order) - scale(8, s6 * s6));
}

inline VerificationReport verify_milne24(std::size_t order) {
  Stopwatch sw;
  auto r = compare_series("milne24", oracle_counts(CountKind::squares, 24, order), milne24_rhs(order),
                          {{"order", std::to_string(order)}});
  r.runtime_ms = sw.elapsed_ms();
  return r;
}

/// r_4(n) > 0 for 1 ≤ n ≤ N via the divisor formula, cross-checked with the oracle.
inline VerificationReport lagrange_check(std::size_t n_max) {
  if (n_max < 2) throw std::invalid_argument("lagrange_check: N must be >= 2");
  Stopwatch sw;
  VerificationReport r;
  r.task = "lagrange";
  r.parameters["N"] = std::to_string(n_max);
  auto oracle = oracle_counts(CountKind::squares, 4, n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    auto v = r4_divisor(static_cast<std::int64_t>(n));
    if (v <= 0 || oracle[n] != Rational(static_cast<long>(v))) {
      r.status = Status::fail;
      r.first_mismatch = Mismatch{n, oracle[n].to_string(), std::to_string(v)};
      break;
    }
  }
  r.runtime_ms = sw.elapsed_ms();
  return r;
}

inline bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// For odd primes p ≤ N: r_2(p) > 0 exactly when p ≡ 1 (mod 4).
inline VerificationReport fermat_check(std::size_t n_max) {
  if (n_max < 2) throw std::invalid_argument("fermat_check: N must be >= 2");
  Stopwatch sw;
  VerificationReport r;
  r.task = "fermat";
  r.parameters["N"] = std::to_string(n_max);
  r.notes.push_back("p = 2 excluded");
  for (std::size_t p = 3; p <= n_max; p += 2) {
    if (!is_prime(p)) continue;
    bool representable = r2_divisor(static_cast<std::int64_t>(p)) > 0;
    if (representable != (p % 4 == 1)) {
      r.status = Status::fail;
      r.first_mismatch = Mismatch{p, std::to_string(r2_divisor(static_cast<std::int64_t>(p))), p % 4 == 1 ? ">0" : "0"};
      break;
    }
  }
  r.runtime_ms = sw.elapsed_ms();
  return r;
}

}  // namespace qsv
