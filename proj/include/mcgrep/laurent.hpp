#pragma once
// Laurent polynomial rings over an exact coefficient ring: integer exponent
// vectors mapped to coefficients, with no stored zero terms. Used with
// Rational coefficients for the generic q ring (one variable) and with Cyc
// coefficients for the deformation ring in s_1, t_1, ..., s_g, t_g.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "mcgrep/cyclotomic.hpp"

namespace mcgrep {

template <class C>
class Laurent {
 public:
  using Exps = std::vector<int>;
  using Terms = std::map<Exps, C>;

  Laurent() : nvars_(0) {}
  explicit Laurent(int nvars) : nvars_(nvars) {}

  static Laurent constant(int nvars, const C& c) {
    Laurent p(nvars);
    if (!(c == C())) p.terms_[Exps(nvars, 0)] = c;
    return p;
  }
  static Laurent monomial(int nvars, const Exps& e, const C& c) {
    Laurent p(nvars);
    if (e.size() != static_cast<size_t>(nvars))
      throw std::invalid_argument("Laurent::monomial: exponent arity");
    if (!(c == C())) p.terms_[e] = c;
    return p;
  }
  // Single-variable power of the lone variable, exponent e.
  static Laurent var_pow(int nvars, int var, int e, const C& one) {
    Exps ex(nvars, 0);
    ex[var] = e;
    return monomial(nvars, ex, one);
  }

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exps& e, const C& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      if (!(c == C())) terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == C()) terms_.erase(it);
    }
  }

  Laurent& operator+=(const Laurent& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) {
      C neg = c;
      neg = C() - neg;
      add_term(e, neg);
    }
    return *this;
  }
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    a.check(b);
    Laurent out(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exps e(a.nvars_);
        for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
  Laurent& operator*=(const C& s) {
    Laurent out(nvars_);
    for (const auto& [e, c] : terms_) out.add_term(e, c * s);
    return *this = std::move(out);
  }
  Laurent operator-() const {
    Laurent out(nvars_);
    for (const auto& [e, c] : terms_) out.add_term(e, C() - c);
    return out;
  }

  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

  std::string str(const std::vector<std::string>& names) const;

 private:
  void check(const Laurent& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("Laurent: arity mismatch");
  }
  int nvars_;
  Terms terms_;
};

template <class C>
std::string Laurent<C>::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += "(";
    if constexpr (std::is_same_v<C, Rational>)
      out += rational_str(c);
    else
      out += c.str();
    out += ")";
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      out += "*" + names[i];
      if (e[i] != 1) out += "^" + std::to_string(e[i]);
    }
  }
  return out;
}

// The generic one-variable q ring with exact rational coefficients.
using QPoly = Laurent<Rational>;

inline QPoly qone() { return QPoly::constant(1, Rational(1)); }
inline QPoly qpow(int e) { return QPoly::var_pow(1, 0, e, Rational(1)); }

// Exact division in the one-variable ring; throws if not exact.
QPoly qpoly_div_exact(const QPoly& num, const QPoly& den);

// Substitute q = zeta_r and reduce into Q(zeta_r).
Cyc specialize(const QPoly& p, int r);

// Substitute every variable by 1 (deformation ring at s = t = 1).
Cyc laurent_eval_at_one(const Laurent<Cyc>& p, int r);

}  // namespace mcgrep
