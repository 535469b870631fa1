#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsv/qseries.hpp"
#include "qsv/rational.hpp"

namespace qsv {

/// Theta function φ(q) = Σ_{k∈Z} q^{k²}.
inline QSeries gen_phi(std::size_t order) {
  std::vector<Rational> v(order + 1);
  v[0] = 1;
  for (std::size_t k = 1; k * k <= order; ++k) v[k * k] = 2;
  return QSeries(order, std::move(v));
}

/// Theta function ψ(q) = Σ_{k≥0} q^{k(k+1)/2}.
inline QSeries gen_psi(std::size_t order) {
  std::vector<Rational> v(order + 1);
  for (std::size_t k = 0; k * (k + 1) / 2 <= order; ++k) v[k * (k + 1) / 2] = 1;
  return QSeries(order, std::move(v));
}

/// f(-q) = ∏_{n≥1} (1 - q^n), by incremental multiplication.
inline QSeries gen_eta_f(std::size_t order) {
  std::vector<Integer> c(order + 1);
  c[0] = 1;
  for (std::size_t n = 1; n <= order; ++n)
    for (std::size_t e = order; e >= n; --e) c[e] -= c[e - n];
  std::vector<Rational> v(c.begin(), c.end());
  return QSeries(order, std::move(v));
}

/// Sign patterns available to Lambert-series terms, as functions of the
/// raw summation index k.
enum class Sign { plus, minus, alternating /* (-1)^k */, alternating_shifted /* (-1)^(k-1) */ };

inline int sign_value(Sign s, std::size_t k) {
  switch (s) {
    case Sign::plus: return 1;
    case Sign::minus: return -1;
    case Sign::alternating: return k % 2 == 0 ? 1 : -1;
    case Sign::alternating_shifted: return k % 2 == 0 ? -1 : 1;
  }
  return 1;
}

enum class IndexMap { identity /* k */, odd /* 2k-1 */ };

/// Shape of Σ_{k≥1} χ(k)·i^m·q^{a·i}/(1 - σ(k)·q^{b·i}) with i = index_map(k).
struct LambertSpec {
  unsigned exponent_weight = 0;     // m
  std::size_t numerator_stride = 1;   // a
  std::size_t denominator_stride = 1; // b
  Sign denominator_sign = Sign::plus; // σ(k)
  IndexMap index_map = IndexMap::identity;
  Sign term_sign = Sign::plus;        // χ(k)
};

/// Expands the Lambert series termwise: index k contributes
/// σ(k)^j·χ(k)·i^m at exponent a·i + j·b·i for j ≥ 0.
inline QSeries gen_lambert(const LambertSpec& spec, std::size_t order) {
  if (spec.numerator_stride == 0 || spec.denominator_stride == 0)
    throw std::invalid_argument("gen_lambert: strides must be positive");
  std::vector<Integer> c(order + 1);
  for (std::size_t k = 1;; ++k) {
    std::size_t i = spec.index_map == IndexMap::odd ? 2 * k - 1 : k;
    std::size_t first = spec.numerator_stride * i;
    if (first > order) break;
    Integer weight = ipow(Integer(static_cast<unsigned long>(i)), spec.exponent_weight);
    if (sign_value(spec.term_sign, k) < 0) weight = -weight;
    int sigma = sign_value(spec.denominator_sign, k);
    std::size_t step = spec.denominator_stride * i;
    bool positive = true;
    for (std::size_t e = first; e <= order; e += step) {
      if (positive) c[e] += weight;
      else c[e] -= weight;
      if (sigma < 0) positive = !positive;
    }
  }
  std::vector<Rational> v(c.begin(), c.end());
  return QSeries(order, std::move(v));
}

/// A + B·(Lambert series).
inline QSeries lambert_combination(const Rational& constant, const Rational& factor, const LambertSpec& spec,
                                   std::size_t order) {
  return QSeries::monomial(order, 0, constant) + scale(factor, gen_lambert(spec, order));
}

/// C_{2j-1} = Σ_{r≥1} (2r-1)^{2j-1} q^{2r-1}/(1 - q^{2(2r-1)}), j ≥ 1.
inline QSeries C_series(unsigned j, std::size_t order) {
  if (j < 1) throw std::invalid_argument("C_series: j must be >= 1");
  return gen_lambert({2 * j - 1, 1, 2, Sign::plus, IndexMap::odd, Sign::plus}, order);
}

/// D_{2j+1} = Σ_{r≥1} r^{2j+1} q^{2r}/(1 - q^{4r}), j ≥ 1.
inline QSeries D_series(unsigned j, std::size_t order) {
  if (j < 1) throw std::invalid_argument("D_series: j must be >= 1");
  return gen_lambert({2 * j + 1, 2, 4, Sign::plus, IndexMap::identity, Sign::plus}, order);
}

/// T_{2k} = Σ_{n≥1} n^{2k-1} q^{2n}/(1 - q^{4n}), k ≥ 2.
inline QSeries T_series(unsigned k, std::size_t order) {
  if (k < 2) throw std::invalid_argument("T_series: k must be >= 2 (use T2_series for T_2)");
  return gen_lambert({2 * k - 1, 2, 4, Sign::plus, IndexMap::identity, Sign::plus}, order);
}

/// T_2 = 1 + 24 Σ_{j≥1} j q^{2j}/(1 + q^{2j}).
inline QSeries T2_series(std::size_t order) {
  return lambert_combination(1, 24, {1, 2, 2, Sign::minus, IndexMap::identity, Sign::plus}, order);
}

// S_w = A + B Σ k^{w-1} q^k/(1 - (-q)^k).
inline QSeries S4_series(std::size_t order) {
  return lambert_combination(1, 16, {3, 1, 1, Sign::alternating, IndexMap::identity, Sign::plus}, order);
}
inline QSeries S6_series(std::size_t order) {
  return lambert_combination(1, -8, {5, 1, 1, Sign::alternating, IndexMap::identity, Sign::plus}, order);
}
inline QSeries S8_series(std::size_t order) {
  return lambert_combination(17, 32, {7, 1, 1, Sign::alternating, IndexMap::identity, Sign::plus}, order);
}

/// Eisenstein series 1 + c·Σ σ_{w-1}(n) q^n with c = 240, -504, 480 for w = 4, 6, 8.
inline QSeries E_series(unsigned weight, std::size_t order) {
  Rational c;
  switch (weight) {
    case 4: c = 240; break;
    case 6: c = -504; break;
    case 8: c = 480; break;
    default: throw std::invalid_argument("E_series: weight must be 4, 6 or 8");
  }
  return lambert_combination(1, c, {weight - 1, 1, 1, Sign::plus, IndexMap::identity, Sign::plus}, order);
}
inline QSeries E4_series(std::size_t order) { return E_series(4, order); }
inline QSeries E6_series(std::size_t order) { return E_series(6, order); }
inline QSeries E8_series(std::size_t order) { return E_series(8, order); }

/// Resolves a CLI key: phi, psi, eta_f, C:<odd>, D:<odd≥3>, T:<even≥4>, T2,
/// S4, S6, S8, E4, E6, E8.
inline QSeries series_by_key(const std::string& key, std::size_t order) {
  if (key == "phi") return gen_phi(order);
  if (key == "psi") return gen_psi(order);
  if (key == "eta_f") return gen_eta_f(order);
  if (key == "T2") return T2_series(order);
  if (key == "S4") return S4_series(order);
  if (key == "S6") return S6_series(order);
  if (key == "S8") return S8_series(order);
  if (key == "E4") return E4_series(order);
  if (key == "E6") return E6_series(order);
  if (key == "E8") return E8_series(order);
  auto colon = key.find(':');
  if (colon == 1 && key.size() > 2) {
    unsigned long idx = 0;
    try {
      std::size_t used = 0;
      idx = std::stoul(key.substr(2), &used);
      if (used != key.size() - 2) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw std::invalid_argument("unknown series key '" + key + "'");
    }
    switch (key[0]) {
      case 'C':
        if (idx % 2 == 1) return C_series(static_cast<unsigned>((idx + 1) / 2), order);
        break;
      case 'D':
        if (idx % 2 == 1 && idx >= 3) return D_series(static_cast<unsigned>((idx - 1) / 2), order);
        break;
      case 'T':
        if (idx % 2 == 0 && idx >= 4) return T_series(static_cast<unsigned>(idx / 2), order);
        if (idx == 2) return T2_series(order);
        break;
      default: break;
    }
  }
  throw std::invalid_argument("unknown series key '" + key + "'");
}

}  // namespace qsv
