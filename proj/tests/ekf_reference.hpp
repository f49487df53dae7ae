#pragma once
// Test-only reference model of u_zeta(sl2) in the E^a K^b F^(c) basis.
// Multiplication here is driven purely by the defining relations
//   K E = z^2 E K,  K F^(c) = z^{-2c} F^(c) K,
//   E F^(n) = F^(n) E + F^(n-1) (z^{1-n} K - z^{n-1} K^{-1}),
//   F^(a) F^(b) = qbinom(a+b, a) F^(a+b),  E^r = 0,  K^r = 1,
// and never through the reordering formulas used by the main library, so
// it is an independent oracle for products in the integral basis.

#include <array>
#include <map>

#include "mcgrep/qcalc.hpp"
#include "mcgrep/uqsl2.hpp"

namespace mcgrep::testing {

using EkfTerms = std::map<std::array<int, 3>, Cyc>;  // (a, b, c) -> coeff

inline void ekf_add(EkfTerms& t, int a, int b, int c, const Cyc& v, int r) {
  if (a < 0 || a >= r || c < 0 || c >= r || v.is_zero()) return;
  int bb = ((b % r) + r) % r;
  std::array<int, 3> k{a, bb, c};
  auto it = t.find(k);
  if (it == t.end()) {
    t.emplace(k, v);
  } else {
    it->second += v;
    if (it->second.is_zero()) t.erase(it);
  }
}

// Right-multiply by one E.
inline EkfTerms ekf_mul_E(const EkfTerms& x, int r) {
  EkfTerms out;
  for (const auto& [k, v] : x) {
    int a = k[0], b = k[1], c = k[2];
    ekf_add(out, a + 1, b, c, v * Cyc::zeta_pow(r, 2 * b), r);
    if (c > 0) {
      ekf_add(out, a, b + 1, c - 1, -(v * Cyc::zeta_pow(r, c - 1)), r);
      ekf_add(out, a, b - 1, c - 1, v * Cyc::zeta_pow(r, 1 - c), r);
    }
  }
  return out;
}

inline EkfTerms ekf_mul_Kpow(const EkfTerms& x, int j, int r) {
  EkfTerms out;
  for (const auto& [k, v] : x)
    ekf_add(out, k[0], k[1] + j, k[2], v * Cyc::zeta_pow(r, 2L * j * k[2]), r);
  return out;
}

inline EkfTerms ekf_mul_Fdiv(const EkfTerms& x, int n, int r) {
  EkfTerms out;
  for (const auto& [k, v] : x) {
    Cyc fused = qbinom_z(r, k[2] + n, n);
    if (fused.is_zero()) continue;
    ekf_add(out, k[0], k[1], k[2] + n, v * fused, r);
  }
  return out;
}

inline EkfTerms ekf_mul(const EkfTerms& x, const EkfTerms& y, int r) {
  EkfTerms out;
  for (const auto& [ky, vy] : y) {
    EkfTerms part = x;
    for (int i = 0; i < ky[0]; ++i) part = ekf_mul_E(part, r);
    part = ekf_mul_Kpow(part, ky[1], r);
    part = ekf_mul_Fdiv(part, ky[2], r);
    for (const auto& [k, v] : part) ekf_add(out, k[0], k[1], k[2], v * vy, r);
  }
  return out;
}

// Expand an integral-basis element into the E K F reference basis via
// T_m = (1/r) sum_b z^{2mb} K^b.
inline EkfTerms ekf_from_etf(const AlgElem& x) {
  const int r = x.r();
  EkfTerms out;
  Rational inv_r(1, r);
  for (const auto& [k, c] : x.terms())
    for (int b = 0; b < r; ++b) {
      Cyc v = c * Cyc::zeta_pow(r, 2L * k[1] * b);
      v *= inv_r;
      ekf_add(out, k[0], b, k[2], v, r);
    }
  return out;
}

}  // namespace mcgrep::testing
