#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsv/determinant.hpp"
#include "qsv/generators.hpp"
#include "qsv/qseries.hpp"
#include "qsv/report.hpp"

namespace qsv {

/// Square matrix of q-series sharing one truncation order.
class SeriesMatrix {
 public:
  explicit SeriesMatrix(Matrix<QSeries> entries) : entries_(std::move(entries)) {
    require_square(entries_);
    std::size_t order = entries_[0][0].order();
    for (const auto& row : entries_)
      for (const auto& e : row)
        if (e.order() != order) throw std::invalid_argument("SeriesMatrix: entries must share one order");
  }
  std::size_t dimension() const { return entries_.size(); }
  std::size_t order() const { return entries_[0][0].order(); }
  const Matrix<QSeries>& entries() const { return entries_; }

 private:
  Matrix<QSeries> entries_;
};

inline QSeries series_det(const SeriesMatrix& m) { return determinant(m.entries()); }

/// q·ψ⁴(q²).
inline QSeries q_psi4_q2(std::size_t order) { return shift(pow(substitute_power(gen_psi(order), 2), 4), 1); }

/// (C_{2(u+v-1)-1})_{1≤u,v≤s}.
inline SeriesMatrix milne_c_matrix(unsigned s, std::size_t order) {
  Matrix<QSeries> m(s);
  for (unsigned u = 1; u <= s; ++u)
    for (unsigned v = 1; v <= s; ++v) m[u - 1].push_back(C_series(u + v - 1, order));
  return SeriesMatrix(std::move(m));
}

/// (D_{2(u+v-1)+1})_{1≤u,v≤s}.
inline SeriesMatrix milne_d_matrix(unsigned s, std::size_t order) {
  Matrix<QSeries> m(s);
  for (unsigned u = 1; u <= s; ++u)
    for (unsigned v = 1; v <= s; ++v) m[u - 1].push_back(D_series(u + v - 1, order));
  return SeriesMatrix(std::move(m));
}

/// 4^{-s(s-1)}/∏_{j=1}^{2s-1} j! · det(C-matrix).
inline QSeries milne_4s2_rhs(unsigned s, std::size_t order) {
  Rational pre(1, ipow(Integer(4), s * (s - 1)) * superfactorial(2 * s - 1));
  return scale(pre, series_det(milne_c_matrix(s, order)));
}

/// 2^{s(4s+5)}/∏_{j=1}^{2s} j! · det(D-matrix).
inline QSeries milne_4ss1_rhs(unsigned s, std::size_t order) {
  Rational pre(ipow(Integer(2), s * (4 * s + 5)), superfactorial(2 * s));
  return scale(pre, series_det(milne_d_matrix(s, order)));
}

inline VerificationReport verify_milne_4s2(unsigned s, std::size_t order) {
  if (s < 1 || order < s * s) throw std::invalid_argument("verify_milne_4s2: need s >= 1 and order >= s^2");
  Stopwatch sw;
  auto lhs = pow(q_psi4_q2(order), s * s);
  auto r = compare_series("milne-4s2", lhs, milne_4s2_rhs(s, order),
                          {{"s", std::to_string(s)}, {"order", std::to_string(order)}});
  r.runtime_ms = sw.elapsed_ms();
  return r;
}

inline VerificationReport verify_milne_4ss1(unsigned s, std::size_t order) {
  if (s < 1 || order < s * (s + 1)) throw std::invalid_argument("verify_milne_4ss1: need s >= 1 and order >= s(s+1)");
  Stopwatch sw;
  auto lhs = pow(scale(16, q_psi4_q2(order)), s * (s + 1));
  auto r = compare_series("milne-4ss1", lhs, milne_4ss1_rhs(s, order),
                          {{"s", std::to_string(s)}, {"order", std::to_string(order)}});
  r.runtime_ms = sw.elapsed_ms();
  return r;
}

/// (T_8 T_4 - T_6²)/72.
inline QSeries psi24_rhs(std::size_t order) {
  auto t6 = T_series(3, order);
  return scale(Rational(1, 72), T_series(4, order) * T_series(2, order) - t6 * t6);
}

/// q⁶ψ²⁴(q²).
inline QSeries psi24_lhs(std::size_t order) { return shift(pow(substitute_power(gen_psi(order), 2), 24), 6); }

inline VerificationReport verify_psi24(std::size_t order) {
  if (order < 6) throw std::invalid_argument("verify_psi24: order must be >= 6");
  Stopwatch sw;
  auto r = compare_series("psi24", psi24_lhs(order), psi24_rhs(order), {{"order", std::to_string(order)}});
  r.runtime_ms = sw.elapsed_ms();
  return r;
}

/// (E_4 E_8 - E_6²)/1728.
inline QSeries eta24_rhs(std::size_t order) {
  auto e6 = E6_series(order);
  return scale(Rational(1, 1728), E4_series(order) * E8_series(order) - e6 * e6);
}

/// q·f(-q)^24.
inline QSeries eta24_lhs(std::size_t order) { return shift(pow(gen_eta_f(order), 24), 1); }

inline VerificationReport verify_eta24(std::size_t order) {
  if (order < 1) throw std::invalid_argument("verify_eta24: order must be >= 1");
  Stopwatch sw;
  auto lhs = eta24_lhs(order);
  auto r = compare_series("eta24", lhs, eta24_rhs(order), {{"order", std::to_string(order)}});
  if (order >= 2) r.parameters["q2_coefficient"] = lhs[2].to_string();
  r.runtime_ms = sw.elapsed_ms();
  return r;
}

}  // namespace qsv
