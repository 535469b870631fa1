#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qsv/generators.hpp"
#include "qsv/linsolve.hpp"
#include "qsv/qseries.hpp"
#include "qsv/report.hpp"

namespace qsv {

/// Coefficients a_{m,n} with q^{2s}ψ^{8s}(q²) = Σ_{m+n=2s, m≥n≥2} a_{m,n} T_{2m} T_{2n}.
struct CoeffSolution {
  unsigned s{};
  std::vector<std::pair<unsigned, unsigned>> basis;
  std::vector<Rational> values;
  bool consistent{};
  bool unique{};
  std::size_t order_used{};
  bool residual_ok{};
};

inline std::vector<std::pair<unsigned, unsigned>> chan_chua_basis(unsigned s) {
  std::vector<std::pair<unsigned, unsigned>> b;
  for (unsigned n = 2; n <= s; ++n) b.emplace_back(2 * s - n, n);
  return b;
}

/// Number of sampled even exponents: basis size plus ten spare rows.
inline std::size_t chan_chua_rows(unsigned s) { return (s - 1) + 10; }

/// Smallest order that holds every sampled row (exponents 4, 6, ...).
inline std::size_t chan_chua_min_order(unsigned s) { return 4 + 2 * (chan_chua_rows(s) - 1); }

/// q^{2s}ψ^{8s}(q²).
inline QSeries chan_chua_lhs(unsigned s, std::size_t order) {
  return shift(pow(substitute_power(gen_psi(order), 2), 8 * s), 2 * s);
}

inline QSeries chan_chua_rhs(const CoeffSolution& sol, std::size_t order) {
  QSeries acc(order);
  for (std::size_t i = 0; i < sol.basis.size(); ++i) {
    auto [m, n] = sol.basis[i];
    acc = acc + scale(sol.values[i], T_series(m, order) * T_series(n, order));
  }
  return acc;
}

/// Fits the basis against the left side on sampled even exponents by exact
/// elimination, then checks every coefficient up to `order`.
inline CoeffSolution solve_cc(unsigned s, std::size_t order) {
  if (s < 2) throw std::invalid_argument("solve_cc: s must be >= 2");
  if (order < chan_chua_min_order(s))
    throw std::invalid_argument("solve_cc: order " + std::to_string(order) + " too small, need >= " +
                                std::to_string(chan_chua_min_order(s)));
  CoeffSolution sol;
  sol.s = s;
  sol.order_used = order;
  sol.basis = chan_chua_basis(s);

  auto lhs = chan_chua_lhs(s, order);
  std::vector<QSeries> products;
  for (auto [m, n] : sol.basis) products.push_back(T_series(m, order) * T_series(n, order));

  std::size_t rows = chan_chua_rows(s);
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(products.size()));
  std::vector<Rational> b(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    std::size_t e = 4 + 2 * r;
    for (std::size_t c = 0; c < products.size(); ++c) a[r][c] = products[c][e];
    b[r] = lhs[e];
  }
  auto ls = solve_linear(std::move(a), std::move(b));
  sol.consistent = ls.consistent;
  sol.unique = ls.consistent && ls.rank == products.size();
  sol.values = std::move(ls.values);

  QSeries rhs(order);
  for (std::size_t c = 0; c < products.size(); ++c) rhs = rhs + scale(sol.values[c], products[c]);
  sol.residual_ok = sol.consistent && rhs == lhs;
  return sol;
}

/// The printed weight-16 combination (25/4·T_10T_6 - 21/4·T_8² - T_4T_12)/75600.
inline QSeries identity32_printed_rhs(std::size_t order) {
  auto t8 = T_series(4, order);
  auto combo = scale(Rational(25, 4), T_series(5, order) * T_series(3, order)) - scale(Rational(21, 4), t8 * t8) -
               T_series(2, order) * T_series(6, order);
  return scale(Rational(1, 75600), combo);
}

/// Audits the printed identity for q⁸ψ³²(q²) against the left side and
/// against the solver's own s = 4 coefficients.
inline VerificationReport verify_identity32(std::size_t order) {
  if (order < 8) throw std::invalid_argument("verify_identity32: order must be >= 8");
  Stopwatch sw;
  auto lhs = chan_chua_lhs(4, order);
  auto r = compare_series("eq32", lhs, identity32_printed_rhs(order), {{"order", std::to_string(order)}});
  std::size_t solver_order = std::max(order, chan_chua_min_order(4));
  auto sol = solve_cc(4, solver_order);
  r.parameters["solver_order"] = std::to_string(solver_order);
  r.parameters["solver_unique"] = sol.unique ? "true" : "false";
  r.parameters["solver_residual_ok"] = sol.residual_ok ? "true" : "false";
  for (std::size_t i = 0; i < sol.basis.size(); ++i)
    r.parameters["a_" + std::to_string(sol.basis[i].first) + "_" + std::to_string(sol.basis[i].second)] =
        sol.values[i].to_string();
  if (!sol.residual_ok) {
    r.status = Status::fail;
    if (!r.first_mismatch) r.first_mismatch = Mismatch{0, "solver", "residual nonzero"};
    r.notes.push_back("solver residual nonzero for s = 4");
  } else if (r.status == Status::fail) {
    r.status = Status::mismatch_recorded;
    r.notes.push_back("printed coefficients disagree with the left side; solver coefficients reproduce it exactly");
  }
  r.runtime_ms = sw.elapsed_ms();
  return r;
}

/// T_{2n+8} = T_2 T_{2n+6} + 12 Σ_{j=0}^{n} C(2n+4, 2j+2) T_{2j+4} T_{2n-2j+4}.
inline VerificationReport verify_t_recurrence(unsigned n_max, std::size_t order) {
  if (order < 4) throw std::invalid_argument("verify_t_recurrence: order must be >= 4");
  Stopwatch sw;
  VerificationReport r;
  r.task = "t-recurrence";
  r.parameters = {{"n_max", std::to_string(n_max)}, {"order", std::to_string(order)}};
  auto t2 = T2_series(order);
  std::map<unsigned, QSeries> t;
  auto T = [&](unsigned k) -> const QSeries& {
    auto it = t.find(k);
    if (it == t.end()) it = t.emplace(k, T_series(k, order)).first;
    return it->second;
  };
  for (unsigned n = 0; n <= n_max; ++n) {
    QSeries rhs = t2 * T(n + 3);
    for (unsigned j = 0; j <= n; ++j)
      rhs = rhs + scale(Rational(Integer(12 * binomial(2 * n + 4, 2 * j + 2))), T(j + 2) * T(n - j + 2));
    const QSeries& lhs = T(n + 4);
    if (auto e = first_difference(lhs, rhs)) {
      r.status = Status::fail;
      r.first_mismatch = Mismatch{*e, lhs[*e].to_string(), rhs[*e].to_string()};
      r.parameters["failing_n"] = std::to_string(n);
      break;
    }
  }
  r.runtime_ms = sw.elapsed_ms();
  return r;
}

}  // namespace qsv
