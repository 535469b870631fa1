#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qsv/chan_chua.hpp"
#include "qsv/counts.hpp"
#include "qsv/elliptic_cf.hpp"
#include "qsv/kw_sums.hpp"
#include "qsv/milne_det.hpp"
#include "qsv/modular_numeric.hpp"
#include "qsv/parallel.hpp"
#include "qsv/qseries.hpp"

namespace qsv {

struct CriterionResult {
  int id{};
  std::string name;
  bool passed{};
  std::string detail;
  double time_limit_s{};  // 0 = no limit
  double runtime_ms{};
};

inline void to_json(nlohmann::json& j, const CriterionResult& c) {
  j = {{"id", c.id},           {"name", c.name},
       {"passed", c.passed},   {"detail", c.detail},
       {"time_limit_s", c.time_limit_s}, {"runtime_ms", c.runtime_ms}};
}

/// Random series with small rational coefficients; `unit` forces a nonzero constant term.
inline QSeries random_series(std::mt19937& rng, std::size_t order, bool unit = false) {
  std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
  std::vector<Rational> v(order + 1);
  for (auto& c : v) c = Rational(Integer(num(rng)), Integer(den(rng)));
  if (unit && v[0].is_zero()) v[0] = 1;
  return QSeries(order, std::move(v));
}

namespace acceptance {

// Each check fills `detail` and returns pass/fail. Details carry no timing so
// repeated runs print identical text.
using Check = std::function<bool(std::string&)>;

inline bool report_ok(const VerificationReport& r, std::ostringstream& os) {
  if (!r.passed()) {
    os << r.task;
    for (const auto& [k, v] : r.parameters)
      if (k == "s" || k == "which" || k == "m" || k == "n" || k == "tau") os << ' ' << k << '=' << v;
    if (r.first_mismatch)
      os << " mismatch@" << r.first_mismatch->exponent << " lhs=" << r.first_mismatch->lhs_value
         << " rhs=" << r.first_mismatch->rhs_value;
    os << "; ";
  }
  return r.passed();
}

inline bool divisor_formulas(std::string& detail) {
  constexpr std::size_t n_max = 2000;
  auto r2 = oracle_counts(CountKind::squares, 2, n_max);
  auto r4 = oracle_counts(CountKind::squares, 4, n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    auto a = r2_divisor(static_cast<std::int64_t>(n));
    auto b = r4_divisor(static_cast<std::int64_t>(n));
    if (r2[n] != Rational(static_cast<long>(a)) || r4[n] != Rational(static_cast<long>(b))) {
      detail = "first disagreement at n=" + std::to_string(n);
      return false;
    }
  }
  detail = "r2, r4 divisor formulas = oracle for 1<=n<=2000";
  return true;
}

inline bool jacobi_suite(std::string& detail) {
  constexpr std::size_t order = 200;
  std::ostringstream os;
  bool ok = true;
  for (unsigned w : {2u, 4u, 6u, 8u}) ok &= report_ok(verify_jacobi(w, order), os);
  ok &= report_ok(verify_liouville10(order), os);
  ok &= report_ok(verify_milne24(order), os);
  detail = ok ? "jacobi2/4/6/8 (sign-corrected 2, 6), liouville10, milne24 exact to q^200" : os.str();
  return ok;
}

inline bool kac_wakimoto(std::string& detail) {
  std::ostringstream os;
  bool ok = true;
  auto check = [&](const char* what, unsigned s, long n, const Rational& got, const Rational& want) {
    if (got != want) {
      ok = false;
      os << what << " s=" << s << " n=" << n << " got " << got << " want " << want << "; ";
    }
  };
  std::size_t points = 0;
  for (unsigned s : {1u, 2u, 3u}) {
    long n_max = s == 3 ? 15 : 40;
    auto oracle = oracle_counts(CountKind::triangles, 4 * s * s, static_cast<std::size_t>(n_max));
    for (long n = 0; n <= n_max; ++n) {
      auto kw = eval_kw_4s2(s, n);
      check("kw4s2", s, n, kw, oracle[static_cast<std::size_t>(n)]);
      check("cc", s, n, eval_cc(s, n), kw);
      points += 2;
    }
  }
  for (unsigned s : {1u, 2u}) {
    auto oracle = oracle_counts(CountKind::triangles, 4 * s * (s + 1), 40);
    for (long n = 0; n <= 40; ++n) {
      check("kw4ss1", s, n, eval_kw_4ss1(s, n), oracle[static_cast<std::size_t>(n)]);
      ++points;
    }
  }
  detail = ok ? std::to_string(points) + " exact comparisons agree" : os.str();
  return ok;
}

inline bool symmetrization(std::string& detail) {
  std::ostringstream os;
  bool ok = true;
  std::size_t cases = 0;
  for (unsigned s : {2u, 3u})
    for (long m = static_cast<long>(s); m <= 25; m += 2) {
      ok &= report_ok(symmetrize_check(s, m), os);
      ++cases;
    }
  detail = ok ? std::to_string(cases) + " (s, m) cases hold exactly" : os.str();
  return ok;
}

inline bool milne_determinants(std::string& detail) {
  constexpr std::size_t order = 150;
  std::ostringstream os;
  bool ok = true;
  for (unsigned s : {1u, 2u, 3u}) ok &= report_ok(verify_milne_4s2(s, order), os);
  for (unsigned s : {1u, 2u}) ok &= report_ok(verify_milne_4ss1(s, order), os);
  detail = ok ? "milne-4s2 s=1,2,3 and milne-4ss1 s=1,2 exact to q^150" : os.str();
  return ok;
}

inline bool psi24_eta24(std::string& detail) {
  constexpr std::size_t order = 200;
  std::ostringstream os;
  bool ok = report_ok(verify_psi24(order), os);
  auto eta = verify_eta24(order);
  ok &= report_ok(eta, os);
  bool tau2 = eta.parameters.at("q2_coefficient") == "-24";
  if (!tau2) os << "eta24 q^2 coefficient " << eta.parameters.at("q2_coefficient") << " != -24; ";
  ok &= tau2;
  detail = ok ? "psi24, eta24 exact to q^200; q^2 coefficient of q*f^24 = -24" : os.str();
  return ok;
}

inline bool chan_chua_solver(std::string& detail) {
  std::ostringstream os;
  bool ok = true;
  for (unsigned s = 2; s <= 6; ++s) {
    auto sol = solve_cc(s, 4 * s + 80);
    if (!sol.unique || !sol.residual_ok) {
      ok = false;
      os << "s=" << s << " unique=" << sol.unique << " residual_ok=" << sol.residual_ok << "; ";
    }
    if (s == 2 && sol.values.at(0) != Rational(1)) {
      ok = false;
      os << "s=2 coefficient " << sol.values[0] << " != 1; ";
    }
    if (s == 3 && (sol.values.at(0) != Rational(1, 72) || sol.values.at(1) != Rational(-1, 72))) {
      ok = false;
      os << "s=3 coefficients " << sol.values[0] << ", " << sol.values[1] << "; ";
    }
  }
  detail = ok ? "s=2..6 unique with zero residual; s=2: 1; s=3: 1/72, -1/72" : os.str();
  return ok;
}

inline bool identity32_audit(std::string& detail) {
  auto r = verify_identity32(120);
  bool ok = r.status == Status::mismatch_recorded && r.first_mismatch && r.first_mismatch->exponent == 8 &&
            r.first_mismatch->lhs_value == "1" && r.first_mismatch->rhs_value == "-1" &&
            r.parameters.at("solver_residual_ok") == "true";
  std::ostringstream os;
  os << "status=" << to_string(r.status);
  if (r.first_mismatch)
    os << " witness q^" << r.first_mismatch->exponent << " lhs=" << r.first_mismatch->lhs_value
       << " printed=" << r.first_mismatch->rhs_value;
  os << " solver a_6_2=" << r.parameters.at("a_6_2") << " a_5_3=" << r.parameters.at("a_5_3")
     << " a_4_4=" << r.parameters.at("a_4_4") << " residual_ok=" << r.parameters.at("solver_residual_ok");
  detail = os.str();
  return ok;
}

inline bool t_recurrence(std::string& detail) {
  std::ostringstream os;
  bool ok = report_ok(verify_t_recurrence(6, 200), os);
  detail = ok ? "n=0..6 exact to q^200" : os.str();
  return ok;
}

inline bool elliptic_suite(std::string& detail) {
  std::ostringstream os;
  bool ok = true;
  for (std::size_t n = 1; n <= 4; ++n) ok &= report_ok(hankel_check(n), os);
  auto h2 = hankel_check(2), h3 = hankel_check(3);
  if (h2.parameters.at("determinant") != "12*k^2" || h3.parameters.at("determinant") != "34560*k^6") {
    ok = false;
    os << "H2=" << h2.parameters.at("determinant") << " H3=" << h3.parameters.at("determinant") << "; ";
  }
  ok &= report_ok(verify_fourier(6, 100), os);
  ok &= report_ok(cf_expand(10, 8), os);
  ok &= report_ok(pythagorean_check(13), os);
  detail = ok ? "hankel n<=4 (H2=12k^2, H3=34560k^6), fourier m<=6 to q^100, cf to t^16 depth 10 stable, "
                "pythagorean to u^13"
              : os.str();
  return ok;
}

inline bool numeric_suite(std::string& detail) {
  std::ostringstream os;
  bool ok = true;
  constexpr double eps = 1e-9;
  for (Complex tau : {Complex(0, 1), Complex(0, 2), Complex(0.3, 0.8)}) {
    UpperHalfPoint p(tau);
    ok &= report_ok(verify_ts(p, eps), os);
    ok &= report_ok(verify_E4_modular(p, eps), os);
    ok &= report_ok(verify_8t_numeric(p, eps), os);
  }
  detail = ok ? "ts, e4mod, 8t residuals < 1e-9 at tau = i, 2i, 0.3+0.8i" : os.str();
  return ok;
}

inline bool property_suite(std::string& detail) {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<std::size_t> ord(0, 64);
  std::ostringstream os;
  bool ok = true;
  auto expect = [&](bool cond, const char* what, int trial) {
    if (!cond) {
      ok = false;
      os << what << " trial " << trial << "; ";
    }
  };
  for (int t = 0; t < 25; ++t) {
    auto a = random_series(rng, ord(rng)), b = random_series(rng, ord(rng)), c = random_series(rng, ord(rng));
    expect((a + b) + c == a + (b + c), "associativity(+)", t);
    expect((a * b) * c == a * (b * c), "associativity(*)", t);
    expect(a * (b + c) == a * b + a * c, "distributivity", t);
    expect(a * b == b * a, "commutativity", t);
    expect(mul(a, b) == mul_reference(a, b), "fast mul = reference", t);
    expect(alternate_sign(alternate_sign(a)) == a, "involution", t);
    expect(alternate_sign(a * b) == alternate_sign(a) * alternate_sign(b), "homomorphism", t);
    auto u = random_series(rng, ord(rng), true);
    expect(u * invert(u) == QSeries::one(u.order()), "right inverse", t);
    expect(invert(u) * u == QSeries::one(u.order()), "left inverse", t);
    expect(substitute_power(a, 1) == a, "substitute identity", t);
    expect(substitute_power(substitute_power(a, 2), 3) == substitute_power(a, 6), "substitute composition", t);
    unsigned e = static_cast<unsigned>(t % 9);
    QSeries it = QSeries::one(a.order());
    for (unsigned k = 0; k < e; ++k) it = it * a;
    expect(pow(a, e) == it, "pow = iterated mul", t);
  }
  for (std::size_t n = 1; n <= 4; ++n) ok &= report_ok(hankel_scaling_check(n, 100), os);
  detail = ok ? "ring axioms, involution, inversion, substitution, pow, hankel scaling (4x100 trials) exact"
              : os.str();
  return ok;
}

struct Criterion {
  int id;
  const char* name;
  double time_limit_s;
  Check check;
};

inline std::vector<Criterion> criteria() {
  return {
      {1, "divisor formulas r2/r4 vs oracle, n<=2000", 5, divisor_formulas},
      {2, "jacobi/liouville/milne24 identities to q^200", 30, jacobi_suite},
      {3, "Kac-Wakimoto sums vs oracle; CC = KW", 60, kac_wakimoto},
      {4, "symmetrization lemma s=2,3, m<=25", 0, symmetrization},
      {5, "Milne determinant formulas to q^150", 60, milne_determinants},
      {6, "psi24 and eta24 identities to q^200", 0, psi24_eta24},
      {7, "Chan-Chua solver s=2..6", 0, chan_chua_solver},
      {8, "identity (32) audit with q^8 witness", 0, identity32_audit},
      {9, "T-recurrence n=0..6 to q^200", 0, t_recurrence},
      {10, "elliptic suite: hankel, fourier, continued fraction, pythagorean", 0, elliptic_suite},
      {11, "numeric modular checks at tau = i, 2i, 0.3+0.8i", 1, numeric_suite},
      {12, "property suites", 0, property_suite},
  };
}

}  // namespace acceptance

/// Runs every acceptance criterion, in parallel across QSV_THREADS workers.
inline std::vector<CriterionResult> run_acceptance(unsigned threads = thread_count()) {
  auto list = acceptance::criteria();
  std::vector<CriterionResult> out(list.size());
  parallel_for(
      list.size(),
      [&](std::size_t i) {
        const auto& c = list[i];
        CriterionResult r{c.id, c.name, false, {}, c.time_limit_s, 0};
        Stopwatch sw;
        try {
          r.passed = c.check(r.detail);
        } catch (const std::exception& e) {
          r.passed = false;
          r.detail = std::string("exception: ") + e.what();
        }
        r.runtime_ms = sw.elapsed_ms();
        if (c.time_limit_s > 0 && r.runtime_ms > 1000 * c.time_limit_s) {
          r.passed = false;
          r.detail += " [time limit " + std::to_string(static_cast<int>(c.time_limit_s)) + " s exceeded]";
        }
        out[i] = std::move(r);
      },
      threads);
  return out;
}

}  // namespace qsv
