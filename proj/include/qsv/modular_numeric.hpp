#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <iomanip>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>

#include "qsv/qseries.hpp"
#include "qsv/report.hpp"

namespace qsv {

using Complex = std::complex<double>;

/// A point τ of the upper half-plane.
class UpperHalfPoint {
 public:
  explicit UpperHalfPoint(Complex tau) : tau_(tau) {
    if (!(tau.imag() > 0)) throw std::domain_error("UpperHalfPoint: Im(tau) must be positive");
  }
  Complex tau() const { return tau_; }
  /// e^{πiτ}.
  Complex nome() const { return std::exp(Complex(0, std::numbers::pi) * tau_); }
  /// e^{2πiτ}.
  Complex nome2() const { return std::exp(Complex(0, 2 * std::numbers::pi) * tau_); }
  /// -1/τ, again in the upper half-plane.
  UpperHalfPoint inverted() const { return UpperHalfPoint(-1.0 / tau_); }

 private:
  Complex tau_;
};

/// Parses `a+bi`, `a-bi`, `bi`, `i`, `-i` or a plain real `a`.
inline Complex parse_complex(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ') s += ch;
  if (s.empty()) throw std::invalid_argument("parse_complex: empty");
  auto number = [&](const std::string& t) -> double {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    std::size_t used = 0;
    double v = std::stod(t, &used);
    if (used != t.size()) throw std::invalid_argument("parse_complex: malformed '" + text + "'");
    return v;
  };
  try {
    if (s.back() != 'i') return {number(s), 0.0};
    std::string body = s.substr(0, s.size() - 1);
    // Split at the last sign that is not the leading one and not an exponent sign.
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
      if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
        split = k;
        break;
      }
    }
    if (split == std::string::npos) return {0.0, number(body)};
    return {number(body.substr(0, split)), number(body.substr(split))};
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("parse_complex: malformed '" + text + "'");
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("parse_complex: out of range '" + text + "'");
  }
}

inline std::string format_complex(Complex z) {
  std::ostringstream os;
  os << std::setprecision(17) << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

enum class NumericSeries { phi, psi, E4 };

struct NumericSeriesEval {
  Complex value;
  std::size_t terms_used{};
  double tail_bound{};
};

/// Partial sum of φ, ψ or E_4 at nome w, stopped once a geometric bound on
/// the omitted tail drops to ε/10.
inline NumericSeriesEval num_eval(NumericSeries which, Complex w, double eps) {
  double r = std::abs(w);
  if (!(r < 1)) throw std::domain_error("num_eval: nome must satisfy |w| < 1");
  if (!(eps > 0)) throw std::invalid_argument("num_eval: eps must be positive");
  double target = eps / 10;
  NumericSeriesEval out{1.0, 1, 0.0};
  if (r == 0) return out;
  switch (which) {
    case NumericSeries::phi:
      // Omitted |k| > K: at most 2 r^{(K+1)²}/(1 - r).
      for (std::size_t k = 1;; ++k) {
        out.value += 2.0 * std::pow(w, static_cast<double>(k * k));
        out.terms_used = k + 1;
        out.tail_bound = 2 * std::pow(r, static_cast<double>((k + 1) * (k + 1))) / (1 - r);
        if (out.tail_bound <= target) break;
      }
      break;
    case NumericSeries::psi:
      for (std::size_t k = 1;; ++k) {
        out.value += std::pow(w, static_cast<double>(k * (k + 1) / 2));
        out.terms_used = k + 1;
        out.tail_bound = std::pow(r, static_cast<double>((k + 1) * (k + 2) / 2)) / (1 - r);
        if (out.tail_bound <= target) break;
      }
      break;
    case NumericSeries::E4:
      // σ_3(n) ≤ n⁴; past N the terms n⁴ r^n shrink by at most ρ = ((N+2)/(N+1))⁴ r.
      Complex wn = 1.0;
      for (std::size_t n = 1;; ++n) {
        wn *= w;
        double sigma3 = 0;
        for (std::size_t d = 1; d * d <= n; ++d) {
          if (n % d != 0) continue;
          sigma3 += std::pow(static_cast<double>(d), 3);
          if (d * d != n) sigma3 += std::pow(static_cast<double>(n / d), 3);
        }
        out.value += 240.0 * sigma3 * wn;
        out.terms_used = n + 1;
        double rho = std::pow((n + 2.0) / (n + 1.0), 4) * r;
        if (rho < 1) {
          out.tail_bound = 240 * std::pow(n + 1.0, 4) * std::pow(r, static_cast<double>(n + 1)) / (1 - rho);
          if (out.tail_bound <= target) break;
        }
      }
      break;
  }
  return out;
}

namespace detail {
inline VerificationReport residual_report(std::string task, const UpperHalfPoint& p, double eps, Complex lhs,
                                          Complex rhs, double tails) {
  VerificationReport r;
  r.task = std::move(task);
  double residual = std::abs(lhs - rhs);
  std::ostringstream res, eps_s, tail_s;
  res << std::setprecision(6) << std::scientific << residual;
  eps_s << std::setprecision(6) << std::scientific << eps;
  tail_s << std::setprecision(6) << std::scientific << tails;
  r.parameters = {{"tau", format_complex(p.tau())},
                  {"eps", eps_s.str()},
                  {"residual", res.str()},
                  {"tail_bound", tail_s.str()},
                  {"lhs", format_complex(lhs)},
                  {"rhs", format_complex(rhs)}};
  if (!(residual < eps)) {
    r.status = Status::fail;
    r.first_mismatch = Mismatch{0, format_complex(lhs), format_complex(rhs)};
  }
  return r;
}
}  // namespace detail

struct IdentitySides {
  Complex lhs;
  Complex rhs;
  double tails{};
};

/// Both sides of 4e^{σπi/(2τ)}ψ²(e^{-2πi/τ}) = (τ/i)φ²(-e^{πiτ}); σ = -1 is the valid form.
inline IdentitySides ts_sides(const UpperHalfPoint& p, double eps, int exponent_sign = -1) {
  const Complex tau = p.tau();
  const Complex i(0, 1);
  auto psi = num_eval(NumericSeries::psi, p.inverted().nome2(), eps);
  auto phi = num_eval(NumericSeries::phi, -p.nome(), eps);
  return {4.0 * std::exp(double(exponent_sign) * std::numbers::pi * i / (2.0 * tau)) * psi.value * psi.value,
          (tau / i) * phi.value * phi.value, psi.tail_bound + phi.tail_bound};
}

inline VerificationReport verify_ts(const UpperHalfPoint& p, double eps) {
  Stopwatch sw;
  auto sides = ts_sides(p, eps);
  auto r = detail::residual_report("ts", p, eps, sides.lhs, sides.rhs, sides.tails);
  auto other = ts_sides(p, eps, +1);
  std::ostringstream os;
  os << std::setprecision(3) << std::scientific << std::abs(other.lhs - other.rhs);
  r.notes.push_back("prefactor exponent taken as -pi*i/(2tau); the +pi*i/(2tau) form leaves residual " + os.str());
  r.runtime_ms = sw.elapsed_ms();
  return r;
}

/// Residual of E_4(-1/τ) = τ⁴E_4(τ), both with nome e^{2πiτ}.
inline VerificationReport verify_E4_modular(const UpperHalfPoint& p, double eps) {
  Stopwatch sw;
  auto inv = num_eval(NumericSeries::E4, p.inverted().nome2(), eps);
  auto dir = num_eval(NumericSeries::E4, p.nome2(), eps);
  Complex t4 = std::pow(p.tau(), 4);
  auto r = detail::residual_report("e4mod", p, eps, inv.value, t4 * dir.value,
                                   inv.tail_bound + std::abs(t4) * dir.tail_bound);
  r.runtime_ms = sw.elapsed_ms();
  return r;
}

/// Residual of 4⁴e^{2πiτ}ψ⁸(e^{2πiτ}) = (16/15)(E_4(τ) - E_4(2τ)).
inline VerificationReport verify_8t_numeric(const UpperHalfPoint& p, double eps) {
  Stopwatch sw;
  Complex w = p.nome2();
  auto psi = num_eval(NumericSeries::psi, w, eps);
  auto e1 = num_eval(NumericSeries::E4, w, eps);
  auto e2 = num_eval(NumericSeries::E4, w * w, eps);
  Complex lhs = 256.0 * w * std::pow(psi.value, 8);
  Complex rhs = (16.0 / 15.0) * (e1.value - e2.value);
  auto r = detail::residual_report("8t", p, eps, lhs, rhs, psi.tail_bound + e1.tail_bound + e2.tail_bound);
  r.runtime_ms = sw.elapsed_ms();
  return r;
}

/// Evaluates a truncated exact series at a complex nome (Horner).
inline Complex evaluate_truncated(const QSeries& a, Complex w) {
  Complex v = 0;
  for (std::size_t n = a.order() + 1; n-- > 0;) v = v * w + a[n].to_double();
  return v;
}

}  // namespace qsv
