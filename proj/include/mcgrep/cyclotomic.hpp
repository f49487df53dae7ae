#pragma once
// Exact arithmetic in the cyclotomic field Q(zeta_r) for odd r >= 3.
// An element is a rational coordinate vector in the power basis
// 1, zeta, ..., zeta^{phi(r)-1}, kept reduced modulo the r-th cyclotomic
// polynomial. Reduction tables are shared per r through a registry, so
// values only carry a pointer and their coordinates.

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace mcgrep {

using Rational = mpq_class;
using BigInt = mpz_class;

// Monic integer polynomial Phi_r, ascending coefficients, degree phi(r).
// Rejects even r and r < 3.
std::vector<BigInt> cyclotomic_polynomial(int r);

class CycContext {
 public:
  // Registry lookup; contexts live for the program duration.
  static const CycContext& get(int r);

  int r() const { return r_; }
  int phi() const { return phi_; }
  // Coordinates of zeta^k in the power basis, 0 <= k <= max_pow().
  const std::vector<Rational>& power_row(int k) const { return rows_[k]; }
  int max_pow() const { return static_cast<int>(rows_.size()) - 1; }
  const std::vector<BigInt>& min_poly() const { return min_poly_; }

 private:
  explicit CycContext(int r);
  int r_;
  int phi_;
  std::vector<BigInt> min_poly_;
  std::vector<std::vector<Rational>> rows_;
};

class Cyc {
 public:
  Cyc() = default;  // zero, field adopted on first combination
  explicit Cyc(int r) : ctx_(&CycContext::get(r)), c_(ctx_->phi()) {}
  Cyc(int r, const Rational& q);
  Cyc(int r, long n) : Cyc(r, Rational(n)) {}

  static Cyc zeta_pow(int r, long e);
  static Cyc from_coords(int r, std::vector<Rational> coords);

  int r() const { return ctx_ ? ctx_->r() : 0; }
  bool is_zero() const;
  bool is_rational() const;
  bool is_integral() const;  // lies in Z[zeta]
  // Rational part when is_rational(), otherwise throws.
  Rational rational_value() const;
  const std::vector<Rational>& coords() const { return c_; }

  Cyc& operator+=(const Cyc& o);
  Cyc& operator-=(const Cyc& o);
  Cyc& operator*=(const Cyc& o);
  Cyc operator-() const;
  friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
  friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
  friend Cyc operator*(const Cyc& a, const Cyc& b);
  friend bool operator==(const Cyc& a, const Cyc& b);
  friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }
  friend bool operator<(const Cyc& a, const Cyc& b);  // arbitrary total order

  Cyc& operator*=(const Rational& q);
  friend Cyc operator*(Cyc a, const Rational& q) { return a *= q; }

  Cyc inv() const;                    // throws on zero
  Cyc operator/(const Cyc& b) const { return *this * b.inv(); }
  Cyc conj(long k) const;             // zeta -> zeta^k, gcd(k, r) = 1
  Cyc pow(long e) const;              // negative e via inv

  // Human-readable polynomial in z, e.g. "1/2 - z + 2*z^3".
  std::string str() const;
  // Floating embedding zeta -> exp(2*pi*i/r); debug output only, never
  // used in any comparison.
  std::complex<double> embed() const;

 private:
  const CycContext* ctx_ = nullptr;
  std::vector<Rational> c_;
  void match(const Cyc& o);  // adopt or check field
};

std::string rational_str(const Rational& q);
Rational rational_parse(const std::string& s);

}  // namespace mcgrep
