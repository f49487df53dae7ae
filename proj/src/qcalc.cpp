#include "mcgrep/qcalc.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace mcgrep {

QPoly qpoly_div_exact(const QPoly& num, const QPoly& den) {
  if (den.is_zero()) throw std::domain_error("qpoly_div_exact: zero divisor");
  if (num.is_zero()) return QPoly(1);
  int nlo = num.terms().begin()->first[0];
  int nhi = num.terms().rbegin()->first[0];
  int dlo = den.terms().begin()->first[0];
  int dhi = den.terms().rbegin()->first[0];
  int ddeg = dhi - dlo;
  int qdeg = (nhi - nlo) - ddeg;
  if (qdeg < 0) throw std::logic_error("qpoly_div_exact: inexact (degree)");
  std::vector<Rational> n(nhi - nlo + 1), d(ddeg + 1);
  for (const auto& [e, c] : num.terms()) n[e[0] - nlo] = c;
  for (const auto& [e, c] : den.terms()) d[e[0] - dlo] = c;
  std::vector<Rational> q(qdeg + 1);
  for (int k = qdeg; k >= 0; --k) {
    Rational f = n[k + ddeg] / d[ddeg];
    q[k] = f;
    if (f == 0) continue;
    for (int i = 0; i <= ddeg; ++i) n[k + i] -= f * d[i];
  }
  for (const auto& c : n)
    if (c != 0) throw std::logic_error("qpoly_div_exact: nonzero remainder");
  QPoly out(1);
  for (int k = 0; k <= qdeg; ++k)
    if (q[k] != 0) out.add_term({k + nlo - dlo}, q[k]);
  return out;
}

Cyc specialize(const QPoly& p, int r) {
  Cyc out(r);
  for (const auto& [e, c] : p.terms()) {
    Cyc t = Cyc::zeta_pow(r, e[0]);
    t *= c;
    out += t;
  }
  return out;
}

Cyc laurent_eval_at_one(const Laurent<Cyc>& p, int r) {
  Cyc out(r);
  for (const auto& [e, c] : p.terms()) out += c;
  return out;
}

QPoly qbrace(long n) {
  QPoly p(1);
  if (n == 0) return p;
  p.add_term({static_cast<int>(n)}, Rational(1));
  p.add_term({static_cast<int>(-n)}, Rational(-1));
  return p;
}

QPoly qint(long n) {
  QPoly p(1);
  if (n == 0) return p;
  long a = n < 0 ? -n : n;
  Rational sign(n < 0 ? -1 : 1);
  for (long j = 0; j < a; ++j)
    p.add_term({static_cast<int>(a - 1 - 2 * j)}, sign);
  return p;
}

QPoly qfact(long k) {
  if (k < 0) throw std::invalid_argument("qfact: negative argument");
  QPoly p = qone();
  for (long j = 1; j <= k; ++j) p *= qint(j);
  return p;
}

QPoly qbinom(long k, long l) {
  if (l < 0 || l > k) return QPoly(1);
  return qpoly_div_exact(qfact(k), qfact(l) * qfact(k - l));
}

QPoly qmultinom(long k, const std::vector<long>& parts) {
  long sum = 0;
  for (long p : parts) {
    if (p < 0) return QPoly(1);
    sum += p;
  }
  if (k < 0 || sum > k) return QPoly(1);
  QPoly out = qone();
  long rest = k;
  for (long p : parts) {
    out *= qbinom(rest, p);
    rest -= p;
  }
  return out;
}

QPoly qbrace_falling(long n, long k) {
  if (k < 0) throw std::invalid_argument("qbrace_falling: negative k");
  QPoly out = qone();
  for (long j = 0; j < k; ++j) out *= qbrace(n - j);
  return out;
}

Cyc qbrace_z(int r, long n) {
  return Cyc::zeta_pow(r, n) - Cyc::zeta_pow(r, -n);
}

Cyc qint_z(int r, long n) { return specialize(qint(n), r); }

Cyc qfact_z(int r, long k) { return specialize(qfact(k), r); }

Cyc qbinom_z(int r, long k, long l) {
  if (l < 0 || l > k) return Cyc(r);
  static std::mutex mu;
  static std::map<std::tuple<int, long, long>, Cyc> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(r, k, l);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, specialize(qbinom(k, l), r)).first;
  return it->second;
}

Cyc qmultinom_z(int r, long k, const std::vector<long>& parts) {
  long sum = 0;
  for (long p : parts) {
    if (p < 0) return Cyc(r);
    sum += p;
  }
  if (k < 0 || sum > k) return Cyc(r);
  Cyc out(r, 1L);
  long rest = k;
  for (long p : parts) {
    out *= qbinom_z(r, rest, p);
    rest -= p;
  }
  return out;
}

Cyc qbrace_falling_z(int r, long n, long k) {
  Cyc out(r, 1L);
  for (long j = 0; j < k; ++j) out *= qbrace_z(r, n - j);
  return out;
}

Cyc gauss_sum(long c, int r) {
  Cyc out(r);
  for (long l = 0; l < r; ++l)
    out += Cyc::zeta_pow(r, -2 * l * (l - 1) + 4 * c * l);
  return out;
}

}  // namespace mcgrep
