#include "mcgrep/uqsl2.hpp"

#include <cassert>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "mcgrep/qcalc.hpp"

namespace mcgrep {

namespace {

int modr(long x, int r) {
  long m = x % r;
  if (m < 0) m += r;
  return static_cast<int>(m);
}

// Per-r structure cache: generator coproduct/antipode powers, inverse
// quantum factorials, and memoized coproducts/antipodes of basis monomials.
struct UqCache {
  int r;
  std::vector<Cyc> inv_qfact;          // 1/[n]!_z for n in [0, r)
  std::vector<TensorElem> dE_pow;      // Delta(E)^l
  std::vector<TensorElem> dF_pow;      // Delta(F1)^n
  std::vector<TensorElem> dT;          // Delta(T_m)
  std::vector<AlgElem> sE_pow;         // S(E)^l
  std::vector<AlgElem> sF_pow;         // S(F1)^n
  mutable std::mutex memo_mu;
  mutable std::map<Idx3, TensorElem> delta_memo;
  mutable std::map<Idx3, AlgElem> antipode_memo;

  explicit UqCache(int rr);
  static const UqCache& get(int r);
};

}  // namespace

// ---------------------------------------------------------------- AlgElem

AlgElem AlgElem::unit(int r) {
  AlgElem x(r);
  Cyc one(r, 1L);
  for (int m = 0; m < r; ++m) x.t_[{0, m, 0}] = one;
  return x;
}

AlgElem AlgElem::gen_E(int r) {
  AlgElem x(r);
  Cyc one(r, 1L);
  for (int m = 0; m < r; ++m) x.t_[{1, m, 0}] = one;
  return x;
}

AlgElem AlgElem::gen_F1(int r) {
  AlgElem x(r);
  Cyc one(r, 1L);
  for (int m = 0; m < r; ++m) x.t_[{0, m, 1}] = one;
  return x;
}

AlgElem AlgElem::k_power(int r, long a) {
  AlgElem x(r);
  for (int b = 0; b < r; ++b) x.t_[{0, b, 0}] = Cyc::zeta_pow(r, -2 * a * b);
  return x;
}

AlgElem AlgElem::t_proj(int r, long m) {
  AlgElem x(r);
  x.t_[{0, modr(m, r), 0}] = Cyc(r, 1L);
  return x;
}

AlgElem AlgElem::monomial(int r, long l, long m, long n, const Cyc& c) {
  AlgElem x(r);
  if (l < 0 || l >= r || n < 0 || n >= r || c.is_zero()) return x;
  x.t_[{static_cast<int>(l), modr(m, r), static_cast<int>(n)}] = c;
  return x;
}

void AlgElem::add_term(long l, long m, long n, const Cyc& c) {
  if (l < 0 || l >= r_ || n < 0 || n >= r_ || c.is_zero()) return;
  Idx3 k{static_cast<int>(l), modr(m, r_), static_cast<int>(n)};
  auto it = t_.find(k);
  if (it == t_.end()) {
    t_.emplace(k, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

AlgElem& AlgElem::operator+=(const AlgElem& o) {
  if (r_ == 0) r_ = o.r_;
  if (o.r_ != 0 && o.r_ != r_) throw std::invalid_argument("AlgElem: mixed r");
  for (const auto& [k, c] : o.t_) add_term(k[0], k[1], k[2], c);
  return *this;
}

AlgElem& AlgElem::operator-=(const AlgElem& o) {
  if (r_ == 0) r_ = o.r_;
  if (o.r_ != 0 && o.r_ != r_) throw std::invalid_argument("AlgElem: mixed r");
  for (const auto& [k, c] : o.t_) add_term(k[0], k[1], k[2], -c);
  return *this;
}

AlgElem AlgElem::scaled(const Cyc& c) const {
  AlgElem out(r_);
  if (c.is_zero()) return out;
  for (const auto& [k, v] : t_) out.t_[k] = v * c;
  return out;
}

// Monomial product in ETF normal form; see the T-shift and reordering
// relations of the integral basis. Emits into `into`.
static void mono_product_into(int r, const Idx3& x, const Cyc& cx,
                              const Idx3& y, const Cyc& cy, AlgElem& into) {
  const int l1 = x[0], m1 = x[1], n1 = x[2];
  const int l2 = y[0], m2 = y[1], n2 = y[2];
  if (modr(m1 + l2, r) != modr(m2 + n1, r)) return;  // T projector collision
  Cyc c0 = cx * cy;
  if (c0.is_zero()) return;
  int kmax = std::min(n1, l2);
  for (int k = 0; k <= kmax; ++k) {
    int le = l1 + l2 - k;
    int nf = n1 + n2 - k;
    if (le >= r) continue;  // E^r = 0
    if (nf >= r) continue;  // divided power out of range, coefficient vanishes
    Cyc coeff = qbinom_z(r, l2, k);
    if (coeff.is_zero()) continue;
    coeff *= qbrace_falling_z(r, n1 - l2 + 2 * m2, k);
    if (coeff.is_zero()) continue;
    coeff *= qbinom_z(r, nf, n2);
    if (coeff.is_zero()) continue;
    into.add_term(le, modr(m1 + l2 - k, r), nf, c0 * coeff);
  }
}

AlgElem normal_product(const AlgElem& x, const AlgElem& y) {
  if (x.r() != y.r()) throw std::invalid_argument("normal_product: mixed r");
  AlgElem out(x.r());
  for (const auto& [kx, cx] : x.terms())
    for (const auto& [ky, cy] : y.terms())
      mono_product_into(x.r(), kx, cx, ky, cy, out);
  return out;
}

AlgElem alg_power(const AlgElem& x, long e) {
  if (e < 0) throw std::invalid_argument("alg_power: negative exponent");
  AlgElem out = AlgElem::unit(x.r());
  AlgElem base = x;
  while (e > 0) {
    if (e & 1) out = normal_product(out, base);
    base = normal_product(base, base);
    e >>= 1;
  }
  return out;
}

// ------------------------------------------------------------- TensorElem

void TensorElem::add_term(const Key& k, const Cyc& c) {
  if (c.is_zero()) return;
  auto it = t_.find(k);
  if (it == t_.end()) {
    t_.emplace(k, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

TensorElem& TensorElem::operator+=(const TensorElem& o) {
  if (r_ == 0) {
    r_ = o.r_;
    arity_ = o.arity_;
  }
  if (o.r_ != r_ || o.arity_ != arity_)
    throw std::invalid_argument("TensorElem: shape mismatch");
  for (const auto& [k, c] : o.t_) add_term(k, c);
  return *this;
}

TensorElem& TensorElem::operator-=(const TensorElem& o) {
  if (r_ == 0) {
    r_ = o.r_;
    arity_ = o.arity_;
  }
  if (o.r_ != r_ || o.arity_ != arity_)
    throw std::invalid_argument("TensorElem: shape mismatch");
  for (const auto& [k, c] : o.t_) add_term(k, -c);
  return *this;
}

TensorElem TensorElem::scaled(const Cyc& c) const {
  TensorElem out(r_, arity_);
  if (c.is_zero()) return out;
  for (const auto& [k, v] : t_) out.t_[k] = v * c;
  return out;
}

TensorElem tensor_of(const AlgElem& a, const AlgElem& b) {
  if (a.r() != b.r()) throw std::invalid_argument("tensor_of: mixed r");
  TensorElem out(a.r(), 2);
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) out.add_term({ka, kb}, ca * cb);
  return out;
}

TensorElem tensor_mul(const TensorElem& x, const TensorElem& y) {
  if (x.r() != y.r() || x.arity() != y.arity())
    throw std::invalid_argument("tensor_mul: shape mismatch");
  const int r = x.r();
  const int ar = x.arity();
  TensorElem out(r, ar);
  // Per-leg partial products, computed leg by leg with early exit.
  std::vector<AlgElem> leg(ar, AlgElem(r));
  for (const auto& [kx, cx] : x.terms())
    for (const auto& [ky, cy] : y.terms()) {
      bool dead = false;
      for (int i = 0; i < ar && !dead; ++i) {
        leg[i] = AlgElem(r);
        mono_product_into(r, kx[i], Cyc(r, 1L), ky[i], Cyc(r, 1L), leg[i]);
        dead = leg[i].is_zero();
      }
      if (dead) continue;
      // distribute
      Cyc c0 = cx * cy;
      std::vector<TensorElem::Key> keys{TensorElem::Key{}};
      std::vector<Cyc> coeffs{c0};
      for (int i = 0; i < ar; ++i) {
        std::vector<TensorElem::Key> nk;
        std::vector<Cyc> nc;
        for (size_t t = 0; t < keys.size(); ++t)
          for (const auto& [ki, ci] : leg[i].terms()) {
            TensorElem::Key kk = keys[t];
            kk.push_back(ki);
            nk.push_back(std::move(kk));
            nc.push_back(coeffs[t] * ci);
          }
        keys = std::move(nk);
        coeffs = std::move(nc);
      }
      for (size_t t = 0; t < keys.size(); ++t) out.add_term(keys[t], coeffs[t]);
    }
  return out;
}

TensorElem tensor_swap(const TensorElem& x, int i, int j) {
  TensorElem out(x.r(), x.arity());
  for (const auto& [k, c] : x.terms()) {
    TensorElem::Key kk = k;
    std::swap(kk[i], kk[j]);
    out.add_term(kk, c);
  }
  return out;
}

TensorElem tensor_widen(const TensorElem& x, int pos) {
  TensorElem out(x.r(), x.arity() + 1);
  const int r = x.r();
  for (const auto& [k, c] : x.terms())
    for (int m = 0; m < r; ++m) {
      TensorElem::Key kk = k;
      kk.insert(kk.begin() + pos, Idx3{0, m, 0});
      out.add_term(kk, c);
    }
  return out;
}

// ---------------------------------------------------------- Hopf structure

namespace {

const TensorElem& delta_mono(const UqCache& cache, const Idx3& k);
const AlgElem& antipode_mono(const UqCache& cache, const Idx3& k);

UqCache::UqCache(int rr) : r(rr) {
  inv_qfact.resize(r);
  for (int n = 0; n < r; ++n) inv_qfact[n] = qfact_z(r, n).inv();

  AlgElem E = AlgElem::gen_E(r), F1 = AlgElem::gen_F1(r);
  AlgElem K = AlgElem::k_power(r, 1), Kinv = AlgElem::k_power(r, -1);
  AlgElem one = AlgElem::unit(r);

  TensorElem dE = tensor_of(E, K) + tensor_of(one, E);
  TensorElem dF = tensor_of(Kinv, F1) + tensor_of(F1, one);
  TensorElem dOne = tensor_of(one, one);
  dE_pow.assign(1, dOne);
  dF_pow.assign(1, dOne);
  for (int i = 1; i < r; ++i) {
    dE_pow.push_back(tensor_mul(dE_pow.back(), dE));
    dF_pow.push_back(tensor_mul(dF_pow.back(), dF));
  }
  // Delta(T_m) = (1/r) sum_b zeta^{2mb} K^b (x) K^b, expanded in the basis.
  dT.assign(r, TensorElem(r, 2));
  Rational inv_r(1, r);
  for (int m = 0; m < r; ++m) {
    TensorElem acc(r, 2);
    for (int b = 0; b < r; ++b) {
      TensorElem kb = tensor_of(AlgElem::k_power(r, b), AlgElem::k_power(r, b));
      acc += kb.scaled(Cyc::zeta_pow(r, 2L * m * b));
    }
    for (const auto& [k, c] : acc.terms()) {
      Cyc cc = c;
      cc *= inv_r;
      dT[m].add_term(k, cc);
    }
  }

  AlgElem sE = normal_product(E, Kinv).scaled(Cyc(r, -1L));   // S(E) = -E K^{-1}
  AlgElem sF = normal_product(K, F1).scaled(Cyc(r, -1L));     // S(F1) = -K F1
  sE_pow.assign(1, one);
  sF_pow.assign(1, one);
  for (int i = 1; i < r; ++i) {
    sE_pow.push_back(normal_product(sE, sE_pow.back()));
    sF_pow.push_back(normal_product(sF, sF_pow.back()));
  }
}

const UqCache& UqCache::get(int r) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<UqCache>> reg;
  std::lock_guard<std::mutex> lock(mu);
  auto it = reg.find(r);
  if (it == reg.end())
    it = reg.emplace(r, std::make_unique<UqCache>(r)).first;
  return *it->second;
}

const TensorElem& delta_mono(const UqCache& cache, const Idx3& k) {
  std::lock_guard<std::mutex> lock(cache.memo_mu);
  auto it = cache.delta_memo.find(k);
  if (it != cache.delta_memo.end()) return it->second;
  TensorElem d = tensor_mul(cache.dE_pow[k[0]], cache.dT[k[1]]);
  d = tensor_mul(d, cache.dF_pow[k[2]]);
  d = d.scaled(cache.inv_qfact[k[2]]);
  return cache.delta_memo.emplace(k, std::move(d)).first->second;
}

const AlgElem& antipode_mono(const UqCache& cache, const Idx3& k) {
  std::lock_guard<std::mutex> lock(cache.memo_mu);
  auto it = cache.antipode_memo.find(k);
  if (it != cache.antipode_memo.end()) return it->second;
  // S(E^l T_m F^(n)) = S(F1)^n S(T_m) S(E)^l / [n]! with S(T_m) = T_{-m}.
  AlgElem s = normal_product(cache.sF_pow[k[2]],
                             AlgElem::t_proj(cache.r, -k[1]));
  s = normal_product(s, cache.sE_pow[k[0]]);
  s = s.scaled(cache.inv_qfact[k[2]]);
  return cache.antipode_memo.emplace(k, std::move(s)).first->second;
}

}  // namespace

TensorElem coproduct(const AlgElem& x) {
  const UqCache& cache = UqCache::get(x.r());
  TensorElem out(x.r(), 2);
  for (const auto& [k, c] : x.terms()) out += delta_mono(cache, k).scaled(c);
  return out;
}

AlgElem antipode(const AlgElem& x) {
  const UqCache& cache = UqCache::get(x.r());
  AlgElem out(x.r());
  for (const auto& [k, c] : x.terms()) out += antipode_mono(cache, k).scaled(c);
  return out;
}

Cyc counit(const AlgElem& x) {
  Cyc out(x.r());
  for (const auto& [k, c] : x.terms())
    if (k[0] == 0 && k[1] == 0 && k[2] == 0) out += c;
  return out;
}

TensorElem coproduct_leg(const TensorElem& x, int leg) {
  const UqCache& cache = UqCache::get(x.r());
  TensorElem out(x.r(), x.arity() + 1);
  for (const auto& [k, c] : x.terms()) {
    const TensorElem& d = delta_mono(cache, k[leg]);
    for (const auto& [dk, dc] : d.terms()) {
      TensorElem::Key kk;
      kk.reserve(k.size() + 1);
      for (int i = 0; i < leg; ++i) kk.push_back(k[i]);
      kk.push_back(dk[0]);
      kk.push_back(dk[1]);
      for (size_t i = leg + 1; i < k.size(); ++i) kk.push_back(k[i]);
      out.add_term(kk, c * dc);
    }
  }
  return out;
}

TensorElem antipode_leg(const TensorElem& x, int leg) {
  const UqCache& cache = UqCache::get(x.r());
  TensorElem out(x.r(), x.arity());
  for (const auto& [k, c] : x.terms()) {
    const AlgElem& s = antipode_mono(cache, k[leg]);
    for (const auto& [sk, sc] : s.terms()) {
      TensorElem::Key kk = k;
      kk[leg] = sk;
      out.add_term(kk, c * sc);
    }
  }
  return out;
}

TensorElem counit_leg(const TensorElem& x, int leg) {
  TensorElem out(x.r(), x.arity() - 1);
  for (const auto& [k, c] : x.terms()) {
    const Idx3& kl = k[leg];
    if (kl[0] != 0 || kl[1] != 0 || kl[2] != 0) continue;
    TensorElem::Key kk;
    for (size_t i = 0; i < k.size(); ++i)
      if (static_cast<int>(i) != leg) kk.push_back(k[i]);
    out.add_term(kk, c);
  }
  return out;
}

TensorElem iterated_coproduct(const AlgElem& x, int k) {
  if (k == 0) {
    TensorElem out(x.r(), 1);
    for (const auto& [idx, c] : x.terms()) out.add_term({idx}, c);
    return out;
  }
  TensorElem out = coproduct(x);
  for (int i = 1; i < k; ++i) out = coproduct_leg(out, 0);
  return out;
}

// ---------------------------------------------------------- basis orders

namespace {

// F^(a) E^b T_c expressed in the canonical ETF order.
AlgElem fet_mono_to_etf(int r, int a, int b, int c, const Cyc& coeff) {
  AlgElem out(r);
  int kmax = std::min(a, b);
  for (int k = 0; k <= kmax; ++k) {
    Cyc co = qbinom_z(r, b, k);
    if (co.is_zero()) continue;
    co *= qbrace_falling_z(r, a - b + 2 * c, k);
    if (co.is_zero()) continue;
    out.add_term(b - k, c + a - k, a - k, coeff * co);
  }
  return out;
}

AlgElem fet_map_to_etf(int r, const TermMap& terms) {
  AlgElem out(r);
  for (const auto& [k, c] : terms) out += fet_mono_to_etf(r, k[0], k[1], k[2], c);
  return out;
}

}  // namespace

TermMap convert_from_etf(const AlgElem& x, Order target) {
  const int r = x.r();
  TermMap out;
  switch (target) {
    case Order::ETF:
      for (const auto& [k, c] : x.terms()) out[k] = c;
      return out;
    case Order::EFT:
      // E^l T_m F^(n) = E^l F^(n) T_{m-n}
      for (const auto& [k, c] : x.terms())
        out[{k[0], k[2], modr(k[1] - k[2], r)}] = c;
      return out;
    case Order::FET: {
      // Invert the FET -> ETF change of basis; the leading (k = 0) part is
      // the monomial bijection (a,b,c) -> (b, c+a, a), corrections lower
      // the E and F degrees together.
      AlgElem err = x;
      TermMap fet;
      int guard = 0;
      while (!err.is_zero()) {
        if (++guard > 4 * r + 8)
          throw std::logic_error("convert_from_etf: FET inversion stalled");
        TermMap delta;
        for (const auto& [k, c] : err.terms())
          delta[{k[2], k[0], modr(k[1] - k[2], r)}] = c;
        for (const auto& [k, c] : delta) {
          auto it = fet.find(k);
          if (it == fet.end()) {
            fet.emplace(k, c);
          } else {
            it->second += c;
            if (it->second.is_zero()) fet.erase(it);
          }
        }
        err = x - fet_map_to_etf(r, fet);
      }
      return fet;
    }
  }
  throw std::logic_error("convert_from_etf: bad order");
}

AlgElem convert_to_etf(int r, const TermMap& terms, Order source) {
  AlgElem out(r);
  switch (source) {
    case Order::ETF:
      for (const auto& [k, c] : terms) out.add_term(k[0], k[1], k[2], c);
      return out;
    case Order::EFT:
      // E^a F^(b) T_c = E^a T_{c+b} F^(b)
      for (const auto& [k, c] : terms) out.add_term(k[0], k[2] + k[1], k[1], c);
      return out;
    case Order::FET:
      return fet_map_to_etf(r, terms);
  }
  throw std::logic_error("convert_to_etf: bad order");
}

// ------------------------------------------------- structural constants

TensorElem r_matrix(int r) {
  // R = sum_{a,b} zeta^{a(a-1)/2} K^{-b} E^a (x) T_b F^(a)
  //   = sum_{a,b,c} zeta^{a(a-1)/2 + 2bc} E^a T_{c+a} (x) T_b F^(a).
  TensorElem R(r, 2);
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c) {
        long e = static_cast<long>(a) * (a - 1) / 2 + 2L * b * c;
        R.add_term({Idx3{a, modr(c + a, r), 0}, Idx3{0, b, a}},
                   Cyc::zeta_pow(r, e));
      }
  return R;
}

TensorElem m_matrix(int r) { return UqData::get(r).M; }

AlgElem drinfeld_u(int r) { return UqData::get(r).u; }

AlgElem pivot(int r) { return AlgElem::k_power(r, 1); }

AlgElem ribbon_v(int r) {
  // Closed form: v = sum_{a,b} (-1)^a zeta^{-(a+3)a/2 + 2(a-b+1)b} F^(a) E^a T_b.
  TermMap fet;
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) {
      long e = -static_cast<long>(a + 3) * a / 2 + 2L * (a - b + 1) * b;
      Cyc c = Cyc::zeta_pow(r, e);
      if (a % 2 == 1) c = -c;
      fet[{a, a, b}] = c;
    }
  return convert_to_etf(r, fet, Order::FET);
}

AlgElem ribbon_v_inv(int r) {
  // v^{-1} = sum_{a,b} zeta^{(a+3)a/2 - 2(a-b+1)b} F^(a) E^a T_b.
  TermMap fet;
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) {
      long e = static_cast<long>(a + 3) * a / 2 - 2L * (a - b + 1) * b;
      fet[{a, a, b}] = Cyc::zeta_pow(r, e);
    }
  return convert_to_etf(r, fet, Order::FET);
}

Cyc integral_lambda(const AlgElem& x) {
  const int r = x.r();
  TermMap eft = convert_from_etf(x, Order::EFT);
  Cyc out(r);
  for (const auto& [k, c] : eft) {
    if (k[0] != r - 1 || k[1] != r - 1) continue;
    out += c * Cyc::zeta_pow(r, -2L * k[2]);
  }
  return out;
}

AlgElem cointegral(int r) {
  // Lambda' = E^{r-1} F^(r-1) T_0 = E^{r-1} T_{r-1} F^(r-1).
  return AlgElem::monomial(r, r - 1, r - 1, r - 1, Cyc(r, 1L));
}

const UqData& UqData::get(int r) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<UqData>> reg;
  std::lock_guard<std::mutex> lock(mu);
  auto it = reg.find(r);
  if (it != reg.end()) return *it->second;
  auto d = std::make_unique<UqData>();
  d->r = r;
  d->unit = AlgElem::unit(r);
  d->E = AlgElem::gen_E(r);
  d->F1 = AlgElem::gen_F1(r);
  d->K = AlgElem::k_power(r, 1);
  d->Kinv = AlgElem::k_power(r, -1);
  d->R = r_matrix(r);
  d->R21 = tensor_swap(d->R, 0, 1);
  d->M = tensor_mul(d->R21, d->R);
  // Drinfeld element u = S(R''_i) R'_i, inverse u^{-1} = R''_i S^2(R'_i).
  AlgElem u(r), u_inv(r);
  for (const auto& [k, c] : d->R.terms()) {
    AlgElem first(r), second(r);
    first.add_term(k[0][0], k[0][1], k[0][2], Cyc(r, 1L));
    second.add_term(k[1][0], k[1][1], k[1][2], Cyc(r, 1L));
    u += normal_product(antipode(second), first).scaled(c);
    u_inv += normal_product(second, antipode(antipode(first))).scaled(c);
  }
  d->u = u;
  d->u_inv = u_inv;
  d->v = ribbon_v(r);
  d->v_inv = ribbon_v_inv(r);
  d->Lambda = cointegral(r);
  d->Delta_v = coproduct(d->v);
  d->Delta_vinv = coproduct(d->v_inv);
  return *reg.emplace(r, std::move(d)).first->second;
}

int etf_flat(int r, const Idx3& i) { return (i[0] * r + i[1]) * r + i[2]; }

Idx3 etf_unflat(int r, int flat) {
  return Idx3{flat / (r * r), (flat / r) % r, flat % r};
}

SparseMat<Cyc> drinfeld_map_matrix(int r) {
  const TensorElem& M = UqData::get(r).M;
  SparseMat<Cyc> D(r * r * r, r * r * r);
  for (const auto& [k, c] : M.terms())
    D.add(etf_flat(r, k[1]), etf_flat(r, k[0]), c);
  return D;
}

bool factorizability_check(int r, std::string* detail) {
  const UqData& d = UqData::get(r);
  SparseMat<Cyc> D = drinfeld_map_matrix(r);
  int rk = D.rank();
  bool rank_ok = (rk == r * r * r);
  // (id (x) lambda')(M) = r * Lambda'
  AlgElem lhs(r);
  for (const auto& [k, c] : d.M.terms()) {
    AlgElem second(r);
    second.add_term(k[1][0], k[1][1], k[1][2], Cyc(r, 1L));
    Cyc lam = integral_lambda(second);
    if (lam.is_zero()) continue;
    lhs.add_term(k[0][0], k[0][1], k[0][2], c * lam);
  }
  AlgElem rhs = d.Lambda.scaled(Cyc(r, static_cast<long>(r)));
  bool coint_ok = (lhs == rhs);
  if (detail) {
    std::ostringstream os;
    os << "rank=" << rk << "/" << r * r * r
       << " cointegral-identity=" << (coint_ok ? "ok" : "FAIL");
    *detail = os.str();
  }
  return rank_ok && coint_ok;
}

// ------------------------------------------------------------ axiom suite

Report hopf_axiom_suite(int r) {
  Report rep;
  const UqData& d = UqData::get(r);
  const int n = r * r * r;

  // Coassociativity and counit/antipode axioms, exhaustively in x.
  bool coassoc = true, counit_ax = true, antipode_ax = true;
  std::string co_detail, cu_detail, an_detail;
  for (int f = 0; f < n && (coassoc || counit_ax || antipode_ax); ++f) {
    Idx3 idx = etf_unflat(r, f);
    AlgElem x(r);
    x.add_term(idx[0], idx[1], idx[2], Cyc(r, 1L));
    TensorElem dx = coproduct(x);
    if (coassoc) {
      TensorElem a = coproduct_leg(dx, 0);
      TensorElem b = coproduct_leg(dx, 1);
      if (a != b) {
        coassoc = false;
        co_detail = "first failure at basis index " + std::to_string(f);
      }
    }
    if (counit_ax) {
      TensorElem left = counit_leg(dx, 0);
      TensorElem right = counit_leg(dx, 1);
      TensorElem xt = iterated_coproduct(x, 0);
      if (left != xt || right != xt) {
        counit_ax = false;
        cu_detail = "first failure at basis index " + std::to_string(f);
      }
    }
    if (antipode_ax) {
      AlgElem left(r), right(r);
      for (const auto& [k, c] : dx.terms()) {
        AlgElem a(r), b(r);
        a.add_term(k[0][0], k[0][1], k[0][2], Cyc(r, 1L));
        b.add_term(k[1][0], k[1][1], k[1][2], Cyc(r, 1L));
        left += normal_product(antipode(a), b).scaled(c);
        right += normal_product(a, antipode(b)).scaled(c);
      }
      AlgElem eps = d.unit.scaled(counit(x));
      if (left != eps || right != eps) {
        antipode_ax = false;
        an_detail = "first failure at basis index " + std::to_string(f);
      }
    }
  }
  rep.add("hopf.coassociativity", coassoc, co_detail);
  rep.add("hopf.counit-axiom", counit_ax, cu_detail);
  rep.add("hopf.antipode-axiom", antipode_ax, an_detail);

  // Quasi-triangularity on generators: Delta^op(x) R = R Delta(x).
  {
    bool ok = true;
    std::string which;
    const AlgElem* gens[3] = {&d.E, &d.F1, &d.K};
    const char* names[3] = {"E", "F1", "K"};
    for (int i = 0; i < 3 && ok; ++i) {
      TensorElem dx = coproduct(*gens[i]);
      TensorElem dop = tensor_swap(dx, 0, 1);
      if (tensor_mul(dop, d.R) != tensor_mul(d.R, dx)) {
        ok = false;
        which = names[i];
      }
    }
    rep.add("hopf.quasi-triangularity", ok, which);
  }

  // Hexagon identities: (Delta (x) id)(R) = R13 R23 and
  // (id (x) Delta)(R) = R13 R12.
  {
    TensorElem R13 = tensor_widen(d.R, 1);
    TensorElem R23 = tensor_widen(d.R, 0);
    TensorElem R12 = tensor_widen(d.R, 2);
    rep.add("hopf.hexagon-coproduct-first",
            coproduct_leg(d.R, 0) == tensor_mul(R13, R23), "");
    rep.add("hopf.hexagon-coproduct-second",
            coproduct_leg(d.R, 1) == tensor_mul(R13, R12), "");
  }

  // Left integral: lambda'(x_(2)) x_(1) = lambda'(x) 1, exhaustively.
  {
    bool ok = true;
    std::string detail;
    for (int f = 0; f < n && ok; ++f) {
      Idx3 idx = etf_unflat(r, f);
      AlgElem x(r);
      x.add_term(idx[0], idx[1], idx[2], Cyc(r, 1L));
      TensorElem dx = coproduct(x);
      AlgElem lhs(r);
      for (const auto& [k, c] : dx.terms()) {
        AlgElem second(r);
        second.add_term(k[1][0], k[1][1], k[1][2], Cyc(r, 1L));
        Cyc lam = integral_lambda(second);
        if (lam.is_zero()) continue;
        lhs.add_term(k[0][0], k[0][1], k[0][2], c * lam);
      }
      if (lhs != d.unit.scaled(integral_lambda(x))) {
        ok = false;
        detail = "first failure at basis index " + std::to_string(f);
      }
    }
    rep.add("integral.left-integral-axiom", ok, detail);
  }

  // lambda'(x y) = lambda'(y S^2(x)), exhaustively over basis pairs.
  {
    bool ok = true;
    std::string detail;
    for (int fx = 0; fx < n && ok; ++fx) {
      Idx3 ix = etf_unflat(r, fx);
      AlgElem x(r);
      x.add_term(ix[0], ix[1], ix[2], Cyc(r, 1L));
      AlgElem s2x = antipode(antipode(x));
      for (int fy = 0; fy < n && ok; ++fy) {
        Idx3 iy = etf_unflat(r, fy);
        AlgElem y(r);
        y.add_term(iy[0], iy[1], iy[2], Cyc(r, 1L));
        if (integral_lambda(normal_product(x, y)) !=
            integral_lambda(normal_product(y, s2x))) {
          ok = false;
          detail = "pair (" + std::to_string(fx) + "," + std::to_string(fy) + ")";
        }
      }
    }
    rep.add("integral.quantum-character", ok, detail);
  }

  // Cointegral: x Lambda' = eps(x) Lambda' exhaustively; S(Lambda') = Lambda'.
  {
    bool ok = true;
    std::string detail;
    for (int f = 0; f < n && ok; ++f) {
      Idx3 idx = etf_unflat(r, f);
      AlgElem x(r);
      x.add_term(idx[0], idx[1], idx[2], Cyc(r, 1L));
      if (normal_product(x, d.Lambda) != d.Lambda.scaled(counit(x))) {
        ok = false;
        detail = "first failure at basis index " + std::to_string(f);
      }
    }
    rep.add("integral.cointegral-axiom", ok, detail);
    rep.add("integral.antipode-fixes-cointegral",
            antipode(d.Lambda) == d.Lambda, "");
    rep.add("integral.lambda-of-cointegral-is-one",
            integral_lambda(d.Lambda) == Cyc(r, 1L), "");
  }

  return rep;
}

}  // namespace mcgrep
