#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsv/rational.hpp"
#include "qsv/report.hpp"

namespace qsv {

// Weighted sums over tuples (a_1..a_s, r_1..r_s) of positive integers with
// a_1 r_1 + ... + a_s r_s = target, optionally restricting a_i and/or r_i to
// odd values. Each admissible a-tuple is counted once per r-tuple.

using TupleWeight = std::function<Integer(std::span<const long>)>;

struct TupleSum {
  unsigned s = 1;
  long target = 1;
  bool a_odd = true;
  bool r_odd = true;
  TupleWeight weight;
};

namespace detail {

// Number of r-tuples (r_i ≥ 1, odd if requested) with Σ a_i r_i = rem.
inline long count_r_solutions(std::span<const long> a, std::size_t i, long rem, bool r_odd) {
  long step = r_odd ? 2 : 1;
  if (i + 1 == a.size()) {
    if (rem <= 0 || rem % a[i] != 0) return 0;
    long r = rem / a[i];
    return (!r_odd || r % 2 == 1) ? 1 : 0;
  }
  long total = 0;
  // Later variables need at least a_j each.
  long reserve = 0;
  for (std::size_t j = i + 1; j < a.size(); ++j) reserve += a[j];
  for (long r = 1; a[i] * r + reserve <= rem; r += step) total += count_r_solutions(a, i + 1, rem - a[i] * r, r_odd);
  return total;
}

inline void enumerate_a(const TupleSum& spec, std::vector<long>& a, long budget, Integer& acc) {
  long step = spec.a_odd ? 2 : 1;
  if (a.size() == spec.s) {
    Integer w = spec.weight(a);
    if (sgn(w) == 0) return;
    long count = count_r_solutions(a, 0, spec.target, spec.r_odd);
    if (count != 0) acc += w * count;
    return;
  }
  std::size_t left = spec.s - a.size() - 1;
  for (long v = 1; v + static_cast<long>(left) <= budget; v += step) {
    a.push_back(v);
    enumerate_a(spec, a, budget - v, acc);
    a.pop_back();
  }
}

}  // namespace detail

/// Σ weight(a) over all admissible (a, r); a-tuples satisfy Σ a_i ≤ target.
inline Integer tuple_sum(const TupleSum& spec) {
  if (spec.s < 1) throw std::invalid_argument("tuple_sum: s must be >= 1");
  Integer acc = 0;
  if (spec.target < static_cast<long>(spec.s)) return acc;
  std::vector<long> a;
  a.reserve(spec.s);
  detail::enumerate_a(spec, a, spec.target, acc);
  return acc;
}

/// ∏ (a_i² - a_j²) over i < j.
inline Integer vandermonde_squares(std::span<const long> a) {
  Integer p = 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) p *= Integer(a[i] * a[i] - a[j] * a[j]);
  return p;
}

/// P_s = ∏ X_i · ∏_{i<j} (X_i² - X_j²)².
inline Integer weight_P(std::span<const long> a) {
  Integer p = 1;
  for (long v : a) p *= v;
  Integer v = vandermonde_squares(a);
  return p * v * v;
}

/// P'_s = ∏ X_i^{2i-1} · ∏_{i<j} (X_i² - X_j²).
inline Integer weight_P_prime(std::span<const long> a) {
  Integer p = 1;
  for (std::size_t i = 0; i < a.size(); ++i) p *= ipow(Integer(a[i]), 2 * i + 1);
  return p * vandermonde_squares(a);
}

/// (∏ X_i)³ · ∏_{i<j} (X_i² - X_j²)².
inline Integer weight_kw2(std::span<const long> a) {
  Integer p = 1;
  for (long v : a) p *= v;
  Integer v = vandermonde_squares(a);
  return p * p * p * v * v;
}

/// R_s(m, P) over odd a_i, r_i.
inline Integer R_sum(unsigned s, long m, const TupleWeight& w) { return tuple_sum({s, m, true, true, w}); }

inline int vandermonde_sign(unsigned s) { return (s * (s - 1) / 2) % 2 == 0 ? 1 : -1; }

/// Kac–Wakimoto sum for t_{4s²}(n).
inline Rational eval_kw_4s2(unsigned s, long n) {
  if (s < 1 || n < 0) throw std::invalid_argument("eval_kw_4s2: need s >= 1, n >= 0");
  long target = 2 * n + static_cast<long>(s) * s;
  Integer sum = R_sum(s, target, weight_P);
  Integer den = factorial(s) * ipow(Integer(4), s * (s - 1)) * superfactorial(2 * s - 1);
  return Rational(sum, den);
}

/// Kac–Wakimoto sum for t_{4s(s+1)}(n); a_i unrestricted, r_i odd.
inline Rational eval_kw_4ss1(unsigned s, long n) {
  if (s < 1 || n < 0) throw std::invalid_argument("eval_kw_4ss1: need s >= 1, n >= 0");
  long target = n + static_cast<long>(s) * (s + 1) / 2;
  Integer sum = tuple_sum({s, target, false, true, weight_kw2});
  Integer num = ipow(Integer(2), s) * sum;
  Integer den = factorial(s) * superfactorial(2 * s);
  return Rational(num, den);
}

/// The non-symmetric variant for t_{4s²}(n) with weight P'_s.
inline Rational eval_cc(unsigned s, long n) {
  if (s < 1 || n < 0) throw std::invalid_argument("eval_cc: need s >= 1, n >= 0");
  long target = 2 * n + static_cast<long>(s) * s;
  Integer sum = R_sum(s, target, weight_P_prime);
  Integer den = ipow(Integer(4), s * (s - 1)) * superfactorial(2 * s - 1);
  return Rational(vandermonde_sign(s) * sum, den);
}

/// R_s(m, P_s) = (-1)^{s(s-1)/2} s! R_s(m, P'_s).
inline VerificationReport symmetrize_check(unsigned s, long m) {
  if (s < 1) throw std::invalid_argument("symmetrize_check: s must be >= 1");
  Stopwatch sw;
  VerificationReport r;
  r.task = "symmetrize";
  r.parameters = {{"s", std::to_string(s)}, {"m", std::to_string(m)}};
  Integer lhs = R_sum(s, m, weight_P);
  Integer prime = R_sum(s, m, weight_P_prime);
  Integer rhs = vandermonde_sign(s) * factorial(s) * prime;
  r.parameters["R_P"] = lhs.get_str();
  r.parameters["R_P_prime"] = prime.get_str();
  if ((m - static_cast<long>(s)) % 2 != 0) r.notes.push_back("m and s differ in parity: both sums are empty");
  if (lhs != rhs) {
    r.status = Status::fail;
    r.first_mismatch = Mismatch{static_cast<std::size_t>(m), lhs.get_str(), rhs.get_str()};
  }
  r.runtime_ms = sw.elapsed_ms();
  return r;
}

}  // namespace qsv
