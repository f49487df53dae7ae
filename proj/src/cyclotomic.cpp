#include "mcgrep/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mcgrep {

namespace {

// Quotient of exact division of integer polynomials (ascending coeffs).
std::vector<BigInt> poly_div_exact(const std::vector<BigInt>& num,
                                   const std::vector<BigInt>& den) {
  std::vector<BigInt> rem = num;
  if (den.empty() || den.back() == 0)
    throw std::logic_error("poly_div_exact: bad divisor");
  if (rem.size() < den.size()) throw std::logic_error("poly_div_exact: degree");
  std::vector<BigInt> quo(rem.size() - den.size() + 1);
  for (int k = static_cast<int>(quo.size()) - 1; k >= 0; --k) {
    BigInt lead = rem[k + den.size() - 1];
    if (lead % den.back() != 0)
      throw std::logic_error("poly_div_exact: inexact");
    quo[k] = lead / den.back();
    for (size_t i = 0; i < den.size(); ++i) rem[k + i] -= quo[k] * den[i];
  }
  for (const auto& c : rem)
    if (c != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
  return quo;
}

std::vector<BigInt> cyclotomic_rec(int n) {
  // x^n - 1 divided by the product of Phi_d over proper divisors d of n.
  std::vector<BigInt> num(n + 1);
  num[0] = -1;
  num[n] = 1;
  std::vector<BigInt> den{1};  // constant 1
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    std::vector<BigInt> phid = cyclotomic_rec(d);
    std::vector<BigInt> prod(den.size() + phid.size() - 1);
    for (size_t i = 0; i < den.size(); ++i)
      for (size_t j = 0; j < phid.size(); ++j) prod[i + j] += den[i] * phid[j];
    den = std::move(prod);
  }
  return poly_div_exact(num, den);
}

}  // namespace

std::vector<BigInt> cyclotomic_polynomial(int r) {
  if (r < 3 || r % 2 == 0)
    throw std::invalid_argument("cyclotomic_polynomial: r must be odd and >= 3");
  return cyclotomic_rec(r);
}

CycContext::CycContext(int r) : r_(r) {
  min_poly_ = cyclotomic_polynomial(r);
  phi_ = static_cast<int>(min_poly_.size()) - 1;
  // Rows for zeta^k up to what a product of two reduced elements, or a bare
  // power zeta^{r-1}, can need.
  int maxk = std::max(2 * phi_ - 2, r - 1);
  rows_.resize(maxk + 1);
  for (int k = 0; k < phi_; ++k) {
    rows_[k].assign(phi_, Rational(0));
    rows_[k][k] = 1;
  }
  for (int k = phi_; k <= maxk; ++k) {
    // zeta^k = zeta * zeta^{k-1}, then fold the overflow coefficient
    // using x^phi = -(Phi_r - x^phi).
    std::vector<Rational> v(phi_ + 1, Rational(0));
    for (int i = 0; i < phi_; ++i) v[i + 1] = rows_[k - 1][i];
    Rational top = v[phi_];
    v.pop_back();
    if (top != 0)
      for (int i = 0; i < phi_; ++i) v[i] -= top * Rational(min_poly_[i]);
    rows_[k] = std::move(v);
  }
}

const CycContext& CycContext::get(int r) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CycContext>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto it = registry.find(r);
  if (it == registry.end())
    it = registry.emplace(r, std::unique_ptr<CycContext>(new CycContext(r))).first;
  return *it->second;
}

Cyc::Cyc(int r, const Rational& q) : ctx_(&CycContext::get(r)), c_(ctx_->phi()) {
  c_[0] = q;
}

Cyc Cyc::zeta_pow(int r, long e) {
  const CycContext& ctx = CycContext::get(r);
  long m = e % r;
  if (m < 0) m += r;
  Cyc out(r);
  out.c_ = ctx.power_row(static_cast<int>(m));
  return out;
}

Cyc Cyc::from_coords(int r, std::vector<Rational> coords) {
  Cyc out(r);
  if (coords.size() != out.c_.size())
    throw std::invalid_argument("Cyc::from_coords: wrong length");
  out.c_ = std::move(coords);
  return out;
}

bool Cyc::is_zero() const {
  for (const auto& q : c_)
    if (q != 0) return false;
  return true;
}

bool Cyc::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool Cyc::is_integral() const {
  for (const auto& q : c_)
    if (q.get_den() != 1) return false;
  return true;
}

Rational Cyc::rational_value() const {
  if (!ctx_) return Rational(0);
  if (!is_rational()) throw std::logic_error("Cyc: not rational");
  return c_[0];
}

void Cyc::match(const Cyc& o) {
  if (!o.ctx_) return;
  if (!ctx_) {
    ctx_ = o.ctx_;
    c_.assign(ctx_->phi(), Rational(0));
    return;
  }
  if (ctx_ != o.ctx_) throw std::invalid_argument("Cyc: mixed roots of unity");
}

Cyc& Cyc::operator+=(const Cyc& o) {
  match(o);
  if (!o.ctx_) return *this;
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) {
  match(o);
  if (!o.ctx_) return *this;
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Cyc operator*(const Cyc& a, const Cyc& b) {
  if (!a.ctx_ || !b.ctx_) return Cyc();  // zero times anything
  if (a.ctx_ != b.ctx_) throw std::invalid_argument("Cyc: mixed roots of unity");
  const CycContext& ctx = *a.ctx_;
  int phi = ctx.phi();
  std::vector<Rational> conv(2 * phi - 1, Rational(0));
  for (int i = 0; i < phi; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; j < phi; ++j) {
      if (b.c_[j] == 0) continue;
      conv[i + j] += a.c_[i] * b.c_[j];
    }
  }
  Cyc out;
  out.ctx_ = a.ctx_;
  out.c_.assign(phi, Rational(0));
  for (int k = 0; k < phi; ++k) out.c_[k] = conv[k];
  for (int k = phi; k < 2 * phi - 1; ++k) {
    if (conv[k] == 0) continue;
    const auto& row = ctx.power_row(k);
    for (int i = 0; i < phi; ++i) out.c_[i] += conv[k] * row[i];
  }
  return out;
}

Cyc& Cyc::operator*=(const Cyc& o) { return *this = *this * o; }

Cyc Cyc::operator-() const {
  Cyc out = *this;
  for (auto& q : out.c_) q = -q;
  return out;
}

Cyc& Cyc::operator*=(const Rational& q) {
  for (auto& c : c_) c *= q;
  return *this;
}

bool operator==(const Cyc& a, const Cyc& b) {
  if (!a.ctx_) return b.is_zero();
  if (!b.ctx_) return a.is_zero();
  if (a.ctx_ != b.ctx_) return false;
  return a.c_ == b.c_;
}

bool operator<(const Cyc& a, const Cyc& b) {
  if (a.r() != b.r()) return a.r() < b.r();
  for (size_t i = 0; i < a.c_.size(); ++i)
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
  return false;
}

Cyc Cyc::inv() const {
  if (!ctx_ || is_zero()) throw std::domain_error("Cyc::inv: zero element");
  // Extended Euclid in Q[x] against Phi_r: find s with s*a = 1 mod Phi_r.
  int phi = ctx_->phi();
  std::vector<Rational> r0(phi + 1), r1 = c_;
  for (int i = 0; i <= phi; ++i) r0[i] = Rational(ctx_->min_poly()[i]);
  while (!r1.empty() && r1.back() == 0) r1.pop_back();
  std::vector<Rational> s0{}, s1{Rational(1)};  // s0 = 0, tracks coeff of a
  auto deg = [](const std::vector<Rational>& p) {
    return static_cast<int>(p.size()) - 1;
  };
  while (deg(r1) > 0) {
    // divide r0 by r1
    std::vector<Rational> q(deg(r0) - deg(r1) + 1, Rational(0));
    std::vector<Rational> rem = r0;
    for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
      Rational f = rem[k + deg(r1)] / r1.back();
      q[k] = f;
      if (f == 0) continue;
      for (int i = 0; i <= deg(r1); ++i) rem[k + i] -= f * r1[i];
    }
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    // s_new = s0 - q * s1
    std::vector<Rational> snew = s0;
    snew.resize(std::max(s0.size(), q.size() + s1.size() - 1), Rational(0));
    for (size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (size_t j = 0; j < s1.size(); ++j) snew[i + j] -= q[i] * s1[j];
    }
    while (!snew.empty() && snew.back() == 0) snew.pop_back();
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(snew);
    if (r1.empty()) throw std::logic_error("Cyc::inv: gcd degenerated");
  }
  // r1 is a nonzero constant; s1 / r1[0] inverts a mod Phi_r.
  Cyc out(ctx_->r());
  for (size_t i = 0; i < s1.size() && i < out.c_.size(); ++i)
    out.c_[i] = s1[i] / r1[0];
  // s1 may have degree >= phi in pathological steps; reduce via rows.
  for (size_t k = out.c_.size(); k < s1.size(); ++k) {
    const auto& row = ctx_->power_row(static_cast<int>(k));
    for (int i = 0; i < ctx_->phi(); ++i) out.c_[i] += (s1[k] / r1[0]) * row[i];
  }
  return out;
}

Cyc Cyc::conj(long k) const {
  if (!ctx_) return *this;
  long kk = k % ctx_->r();
  if (kk < 0) kk += ctx_->r();
  if (std::gcd(kk, static_cast<long>(ctx_->r())) != 1)
    throw std::invalid_argument("Cyc::conj: k not coprime to r");
  Cyc out(ctx_->r());
  for (int i = 0; i < ctx_->phi(); ++i) {
    if (c_[i] == 0) continue;
    Cyc t = zeta_pow(ctx_->r(), static_cast<long>(i) * kk);
    t *= c_[i];
    out += t;
  }
  return out;
}

Cyc Cyc::pow(long e) const {
  if (!ctx_) {
    if (e == 0) throw std::domain_error("Cyc::pow: 0^0 of empty element");
    return Cyc();
  }
  Cyc base = *this;
  if (e < 0) {
    base = base.inv();
    e = -e;
  }
  Cyc out(ctx_->r(), Rational(1));
  while (e > 0) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

std::string rational_str(const Rational& q) {
  std::ostringstream os;
  os << q.get_num();
  os << "/" << q.get_den();
  return os.str();
}

Rational rational_parse(const std::string& s) {
  Rational q(s);
  q.canonicalize();
  return q;
}

std::string Cyc::str() const {
  if (!ctx_ || is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Rational a = c_[i];
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool unit = (a == 1);
    if (i == 0) {
      os << a;
    } else {
      if (!unit) os << a << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::complex<double> Cyc::embed() const {
  if (!ctx_) return {0.0, 0.0};
  std::complex<double> out(0.0, 0.0);
  const double tau = 6.283185307179586476925287;
  for (size_t i = 0; i < c_.size(); ++i) {
    double x = c_[i].get_d();
    double ang = tau * static_cast<double>(i) / ctx_->r();
    out += x * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return out;
}

}  // namespace mcgrep
