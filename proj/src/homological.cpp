#include "mcgrep/homological.hpp"

#include <cassert>

#include "mcgrep/qcalc.hpp"

namespace mcgrep {

namespace {

// Inject a one-variable integer Laurent polynomial as powers of the central
// q inside Z[H_g].
HeisRingElem heis_from_qpoly(int g, const QPoly& p) {
  HeisRingElem out(g);
  for (const auto& [e, c] : p.terms()) {
    if (c.get_den() != 1)
      throw std::logic_error("heis_from_qpoly: non-integer coefficient");
    HeisWord w = HeisWord::one(g);
    w.c = e[0];
    out.add_term(w, c.get_num());
  }
  return out;
}

HeisRingElem heis_qint(int g, long n) { return heis_from_qpoly(g, qint(n)); }

int sum_range(const std::vector<int>& a, const std::vector<int>& b, int lo,
              int hi) {
  int s = 0;
  for (int j = lo; j < hi; ++j) s += a[j] + b[j];
  return s;
}

}  // namespace

HomGeneric HomGeneric::basis(const GenIdx& idx) {
  HomGeneric x(static_cast<int>(idx.a.size()));
  x.t_.emplace(idx, HeisRingElem::one(x.g_));
  return x;
}

void HomGeneric::add_term(const GenIdx& idx, const HeisRingElem& h) {
  if (h.is_zero()) return;
  for (int v : idx.a)
    if (v < 0) return;
  for (int v : idx.b)
    if (v < 0) return;
  auto it = t_.find(idx);
  if (it == t_.end()) {
    t_.emplace(idx, h);
  } else {
    it->second += h;
    if (it->second.is_zero()) t_.erase(it);
  }
}

HomGeneric& HomGeneric::operator+=(const HomGeneric& o) {
  if (g_ == 0) g_ = o.g_;
  if (o.g_ != g_) throw std::invalid_argument("HomGeneric: mixed genus");
  for (const auto& [k, h] : o.t_) add_term(k, h);
  return *this;
}

HomGeneric& HomGeneric::operator-=(const HomGeneric& o) {
  if (g_ == 0) g_ = o.g_;
  if (o.g_ != g_) throw std::invalid_argument("HomGeneric: mixed genus");
  for (const auto& [k, h] : o.t_) {
    HeisRingElem neg(g_);
    neg -= h;
    add_term(k, neg);
  }
  return *this;
}

HomGeneric op_E_generic(const HomGeneric& x) {
  const int g = x.genus();
  HomGeneric out(g);
  for (const auto& [idx, h] : x.terms()) {
    for (int j = 0; j < g; ++j) {
      HeisRingElem tailq =
          HeisRingElem::q_power(g, 2 * sum_range(idx.a, idx.b, j + 1, g));
      // Gamma(a - e_j, b) (x) (q^{2 b_j} - q^{-2(a_j - b_j - 1)} alpha_j)
      if (idx.a[j] >= 1) {
        HeisRingElem coeff = HeisRingElem::q_power(g, 2 * idx.b[j]);
        coeff -= HeisRingElem::q_power(g, -2 * (idx.a[j] - idx.b[j] - 1)) *
                 HeisRingElem::alpha(g, j + 1);
        GenIdx t = idx;
        t.a[j] -= 1;
        out.add_term(t, coeff * tailq * h);
      }
      // Gamma(a, b - e_j) (x) (1 - q^{2(b_j - 1)} beta_j)
      if (idx.b[j] >= 1) {
        HeisRingElem coeff = HeisRingElem::one(g);
        coeff -= HeisRingElem::q_power(g, 2 * (idx.b[j] - 1)) *
                 HeisRingElem::beta(g, j + 1);
        GenIdx t = idx;
        t.b[j] -= 1;
        out.add_term(t, coeff * tailq * h);
      }
    }
  }
  return out;
}

HomGeneric op_F1_generic(const HomGeneric& x) {
  const int g = x.genus();
  HomGeneric out(g);
  for (const auto& [idx, h] : x.terms()) {
    for (int j = 0; j < g; ++j) {
      HeisRingElem pref = HeisRingElem::q_power(
          g, -2 * sum_range(idx.a, idx.b, 0, j) + 2 * (g - 2 * j));
      // Gamma(a + e_j, b) (x) [a_j + 1] (-q^{a_j} + q^{-a_j-4} beta_j)
      {
        HeisRingElem coeff(g);
        coeff -= HeisRingElem::q_power(g, idx.a[j]);
        coeff += HeisRingElem::q_power(g, -idx.a[j] - 4) *
                 HeisRingElem::beta(g, j + 1);
        coeff = heis_qint(g, idx.a[j] + 1) * coeff;
        GenIdx t = idx;
        t.a[j] += 1;
        out.add_term(t, coeff * pref * h);
      }
      // Gamma(a, b + e_j) (x) [b_j + 1] (q^{-2a_j-b_j-4} - q^{-2a_j+b_j} alpha_j)
      {
        HeisRingElem coeff =
            HeisRingElem::q_power(g, -2 * idx.a[j] - idx.b[j] - 4);
        coeff -= HeisRingElem::q_power(g, -2 * idx.a[j] + idx.b[j]) *
                 HeisRingElem::alpha(g, j + 1);
        coeff = heis_qint(g, idx.b[j] + 1) * coeff;
        GenIdx t = idx;
        t.b[j] += 1;
        out.add_term(t, coeff * pref * h);
      }
    }
  }
  return out;
}

HomGeneric op_K_generic(const HomGeneric& x) {
  const int g = x.genus();
  HomGeneric out(g);
  for (const auto& [idx, h] : x.terms())
    out.add_term(idx, HeisRingElem::q_power(
                          g, -2 * (sum_range(idx.a, idx.b, 0, g) + g)) *
                          h);
  return out;
}

HomGeneric op_K_inv_generic(const HomGeneric& x) {
  const int g = x.genus();
  HomGeneric out(g);
  for (const auto& [idx, h] : x.terms())
    out.add_term(idx, HeisRingElem::q_power(
                          g, 2 * (sum_range(idx.a, idx.b, 0, g) + g)) *
                          h);
  return out;
}

HomGeneric op_Ftilde_k(const HomGeneric& x, int k) {
  if (x.genus() != 1)
    throw std::invalid_argument("op_Ftilde_k: defined for genus 1 only");
  if (k < 0) throw std::invalid_argument("op_Ftilde_k: negative k");
  HomGeneric out(1);
  for (const auto& [idx, h] : x.terms()) {
    const long a = idx.a[0], b = idx.b[0];
    long global = -(k + 3L) * k - (2 * a + b) * k;
    for (long j = 0; j <= k; ++j)
      for (long i = 0; i + j <= k; ++i) {
        QPoly qc = qbinom(a + i, a) * qmultinom(b + k - i, {b, j});
        if (qc.is_zero()) continue;
        long e = global + i * j + (a + b) * i + (2 * b + k + 3) * j;
        HeisRingElem coeff = heis_from_qpoly(1, qc * qpow(static_cast<int>(e)));
        coeff = coeff * HeisRingElem::beta(1, 1, i) * HeisRingElem::alpha(1, 1, j);
        if (j % 2 == 1) {
          HeisRingElem neg(1);
          neg -= coeff;
          coeff = neg;
        }
        GenIdx t{{static_cast<int>(a + i)}, {static_cast<int>(b + k - i)}};
        out.add_term(t, coeff * h);
      }
  }
  return out;
}

int hom_flat(int r, const std::vector<int>& a, const std::vector<int>& b,
             const std::vector<int>& c) {
  long f = 0;
  for (size_t j = 0; j < a.size(); ++j)
    f = ((f * r + a[j]) * r + b[j]) * r + c[j];
  return static_cast<int>(f);
}

void hom_unflat(int g, int r, int flat, std::vector<int>& a,
                std::vector<int>& b, std::vector<int>& c) {
  a.assign(g, 0);
  b.assign(g, 0);
  c.assign(g, 0);
  long f = flat;
  for (int j = g - 1; j >= 0; --j) {
    c[j] = static_cast<int>(f % r);
    f /= r;
    b[j] = static_cast<int>(f % r);
    f /= r;
    a[j] = static_cast<int>(f % r);
    f /= r;
  }
}

SparseVec<Cyc> specialize_hom(const HomGeneric& x, int r,
                              const std::vector<int>& c) {
  const int g = x.genus();
  SparseVec<Cyc> out;
  // Out-of-range basis targets must carry coefficients that cancel at the
  // root; cancellation happens across words, so totals are tracked.
  std::map<std::pair<GenIdx, std::vector<int>>, Cyc> overflow;
  for (const auto& [idx, h] : x.terms()) {
    bool in_range = true;
    for (int j = 0; j < g; ++j)
      if (idx.a[j] >= r || idx.b[j] >= r) in_range = false;
    for (const auto& [w, n] : h.terms()) {
      // The stored triple multiplies by the matrix-coordinate law, under
      // which (c, a, b) labels q^c beta^b alpha^a: alpha reads the base
      // index before beta shifts it.
      std::vector<int> tc(g);
      long e = w.c;
      for (int j = 0; j < g; ++j) {
        tc[j] = static_cast<int>((((c[j] + w.b[j]) % r) + r) % r);
        e += 4 * w.a[j] * c[j];
      }
      Cyc coeff = Cyc::zeta_pow(r, e);
      coeff *= Rational(n);
      if (!in_range) {
        overflow[{idx, tc}] += coeff;
        continue;
      }
      sparse_add(out, hom_flat(r, idx.a, idx.b, tc), coeff);
    }
  }
  for (const auto& [key, total] : overflow) {
    (void)key;
    assert(total.is_zero());
    (void)total;
  }
  return out;
}

DefVec deform_hom(const HomGeneric& x, int r, const std::vector<int>& c) {
  const int g = x.genus();
  DefVec out;
  std::map<std::pair<GenIdx, std::vector<int>>, Laurent<Cyc>> overflow;
  for (const auto& [idx, h] : x.terms()) {
    bool in_range = true;
    for (int j = 0; j < g; ++j)
      if (idx.a[j] >= r || idx.b[j] >= r) in_range = false;
    for (const auto& [w, n] : h.terms()) {
      std::vector<int> tc(g);
      long e = w.c;
      std::vector<int> exps(2 * g, 0);
      for (int j = 0; j < g; ++j) {
        tc[j] = static_cast<int>((((c[j] + w.b[j]) % r) + r) % r);
        e += 4 * w.a[j] * c[j];
        exps[2 * j] = static_cast<int>(w.a[j]);      // s_j
        exps[2 * j + 1] = static_cast<int>(w.b[j]);  // t_j
      }
      Cyc coeff = Cyc::zeta_pow(r, e);
      coeff *= Rational(n);
      Laurent<Cyc> mono = Laurent<Cyc>::monomial(2 * g, exps, coeff);
      if (!in_range) {
        auto key = std::make_pair(idx, tc);
        auto ot = overflow.find(key);
        if (ot == overflow.end())
          overflow.emplace(key, mono);
        else
          ot->second += mono;
        continue;
      }
      int flat = hom_flat(r, idx.a, idx.b, tc);
      auto it = out.find(flat);
      if (it == out.end()) {
        if (!mono.is_zero()) out.emplace(flat, mono);
      } else {
        it->second += mono;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  for (const auto& [key, total] : overflow) {
    (void)key;
    assert(total.is_zero());
    (void)total;
  }
  return out;
}

SparseVec<Cyc> op_spec(QGen gen, int g, int r, int flat) {
  std::vector<int> a, b, c;
  hom_unflat(g, r, flat, a, b, c);
  SparseVec<Cyc> out;
  auto emit = [&](const std::vector<int>& ta, const std::vector<int>& tb,
                  const std::vector<int>& tc, const Cyc& coeff) {
    if (coeff.is_zero()) return;
    for (int j = 0; j < g; ++j)
      if (ta[j] < 0 || ta[j] >= r || tb[j] < 0 || tb[j] >= r) return;
    sparse_add(out, hom_flat(r, ta, tb, tc), coeff);
  };

  if (gen == QGen::K) {
    long n = sum_range(a, b, 0, g);
    sparse_add(out, flat, Cyc::zeta_pow(r, -2 * (n + g)));
    return out;
  }

  for (int j = 0; j < g; ++j) {
    if (gen == QGen::E) {
      Cyc pref = Cyc::zeta_pow(r, 2 * sum_range(a, b, j + 1, g));
      if (a[j] >= 1) {
        std::vector<int> ta = a;
        ta[j] -= 1;
        Cyc coeff = qbrace_z(r, a[j] - 2L * c[j] - 1) *
                    Cyc::zeta_pow(r, -a[j] + 2L * b[j] + 2L * c[j] + 1);
        emit(ta, b, c, pref * coeff);
      }
      if (b[j] >= 1) {
        std::vector<int> tb = b;
        tb[j] -= 1;
        emit(a, tb, c, pref);
        std::vector<int> tc = c;
        tc[j] = (tc[j] + 1) % r;
        emit(a, tb, tc, -(pref * Cyc::zeta_pow(r, 2L * b[j] - 2)));
      }
    } else {
      Cyc pref =
          Cyc::zeta_pow(r, -2 * sum_range(a, b, 0, j) + 2 * (g - 2 * j));
      Cyc qa1 = qint_z(r, a[j] + 1);
      if (a[j] + 1 >= r) assert(qa1.is_zero());
      if (!qa1.is_zero()) {
        std::vector<int> ta = a;
        ta[j] += 1;
        emit(ta, b, c, -(pref * qa1 * Cyc::zeta_pow(r, a[j])));
        std::vector<int> tc = c;
        tc[j] = (tc[j] + 1) % r;
        emit(ta, b, tc, pref * qa1 * Cyc::zeta_pow(r, -a[j] - 4L));
      }
      Cyc qb1 = qint_z(r, b[j] + 1);
      if (b[j] + 1 >= r) assert(qb1.is_zero());
      if (!qb1.is_zero()) {
        std::vector<int> tb = b;
        tb[j] += 1;
        Cyc coeff = qb1 * qbrace_z(r, b[j] + 2L * c[j] + 2) *
                    Cyc::zeta_pow(r, -2L * a[j] + 2L * c[j] - 2);
        emit(a, tb, c, -(pref * coeff));
      }
    }
  }
  return out;
}

SparseMat<Cyc> op_spec_matrix(QGen gen, int g, int r) {
  const long dim = hom_dim(g, r);
  SparseMat<Cyc> op(static_cast<int>(dim), static_cast<int>(dim));
  for (long col = 0; col < dim; ++col)
    op.col(static_cast<int>(col)) = op_spec(gen, g, r, static_cast<int>(col));
  return op;
}

DefVec op_deformed(QGen gen, int g, int r, int flat) {
  std::vector<int> a, b, c;
  hom_unflat(g, r, flat, a, b, c);
  HomGeneric x = HomGeneric::basis(GenIdx{a, b});
  HomGeneric img;
  switch (gen) {
    case QGen::E: img = op_E_generic(x); break;
    case QGen::F1: img = op_F1_generic(x); break;
    case QGen::K: img = op_K_generic(x); break;
  }
  return deform_hom(img, r, c);
}

namespace {

SparseMat<Cyc> hom_alpha_one_factor(int r) {
  const int dim = r * r * r;
  SparseMat<Cyc> op(dim, dim);
  for (int col = 0; col < dim; ++col) {
    int a = col / (r * r), b = (col / r) % r, c = col % r;
    Cyc global = Cyc::zeta_pow(r, 2L * (c + 1) * c);
    for (int i = 0; i <= b; ++i) {
      if (a + i >= r) {
        assert(qbinom_z(r, a + i, a).is_zero());
        continue;
      }
      Cyc coeff = qbinom_z(r, a + i, a);
      if (coeff.is_zero()) continue;
      coeff *= Cyc::zeta_pow(r, static_cast<long>(a) * i);
      int row = ((a + i) * r + (b - i)) * r + (c + i) % r;
      op.add(row, col, global * coeff);
    }
  }
  return op;
}

SparseMat<Cyc> hom_beta_one_factor(int r) {
  const int dim = r * r * r;
  SparseMat<Cyc> op(dim, dim);
  for (int col = 0; col < dim; ++col) {
    int a = col / (r * r), b = (col / r) % r, c = col % r;
    for (int i = 0; i <= a; ++i) {
      if (b + i >= r) {
        assert(qbinom_z(r, b + i, b).is_zero());
        continue;
      }
      Cyc bi = qbinom_z(r, b + i, b);
      if (bi.is_zero()) continue;
      for (int j = 0; j < r; ++j) {
        long e = static_cast<long>(i + 1) * i - 2L * (j + 1) * j -
                 static_cast<long>(2 * a - b - 4 * c) * i;
        Cyc coeff = bi * Cyc::zeta_pow(r, e);
        if (i % 2 == 1) coeff = -coeff;
        int row = ((a - i) * r + (b + i)) * r + (c + j) % r;
        op.add(row, col, coeff);
      }
    }
  }
  return op;
}

SparseMat<Cyc> hom_gamma_two_factor(int r) {
  const int dim1 = r * r * r;
  const int dim = dim1 * dim1;
  SparseMat<Cyc> op(dim, dim);
  for (int col = 0; col < dim; ++col) {
    int col1 = col / dim1, col2 = col % dim1;
    int a1 = col1 / (r * r), b1 = (col1 / r) % r, c1 = col1 % r;
    int a2 = col2 / (r * r), b2 = (col2 / r) % r, c2 = col2 % r;
    long base = b1 + c1 + a2 - c2;
    Cyc global = Cyc::zeta_pow(r, 2 * (base + 1) * base);
    for (int k2 = 0; k2 <= a2; ++k2)
      for (int j2 = 0; j2 <= b2; ++j2)
        for (int i2 = k2; i2 <= a2; ++i2)
          for (int k1 = 0; k1 <= b1; ++k1)
            for (int l = -k1; l <= i2 + j2; ++l)
              for (int j1 = 0; j1 <= k1 + l; ++j1)
                for (int i1 = 0; i1 <= k1 - j1 + l; ++i1) {
                  int ta1 = a1 + i1, tb1 = b1 - i1 + l;
                  int ta2 = a2 - l + j2, tb2 = b2 - j2;
                  if (ta1 >= r || tb1 < 0 || tb1 >= r) continue;
                  if (ta2 < 0 || ta2 >= r) continue;
                  Cyc coeff = qbinom_z(r, ta1, a1);
                  if (coeff.is_zero()) continue;
                  coeff *= qmultinom_z(r, tb1, {b1 - k1, j1});
                  if (coeff.is_zero()) continue;
                  coeff *= qbinom_z(r, ta2, a2 - i2);
                  if (coeff.is_zero()) continue;
                  coeff *= qmultinom_z(r, k1 + i2 + j2, {k1, j2, k2});
                  if (coeff.is_zero()) continue;
                  long e1 = static_cast<long>(k1) * (k1 - 2) +
                            static_cast<long>(l + 1) * l +
                            static_cast<long>(i1) * j1 -
                            static_cast<long>(i1) * k1 -
                            static_cast<long>(j1) * k1 +
                            static_cast<long>(j1) * l -
                            static_cast<long>(k1) * l +
                            static_cast<long>(k1) * i2 +
                            static_cast<long>(k1) * j2 -
                            static_cast<long>(l) * i2 - 2L * l * j2 +
                            static_cast<long>(i2) * k2 + 2L * j2 * k2;
                  long e2 = static_cast<long>(a1 + b1) * i1 +
                            (2L * b1 + 4 * c1 + 3) * j1 -
                            (3L * b1 + 4 * c1) * k1 +
                            static_cast<long>(b1 - a2) * l -
                            (4L * b1 + 4 * c1 + a2 + 3) * i2 -
                            (4L * b1 + 4 * c1 + a2 + 4) * j2 -
                            (2L * a2 - 4 * c2 - 1) * k2;
                  coeff *= Cyc::zeta_pow(r, e1 + e2);
                  if ((j1 + l + i2 + k2) % 2 != 0) coeff = -coeff;
                  int row1 = (ta1 * r + tb1) * r + (c1 + i1) % r;
                  int row2 = (ta2 * r + tb2) * r + (c2 + j2) % r;
                  op.add(row1 * dim1 + row2, col, global * coeff);
                }
  }
  return op;
}

}  // namespace

SparseMat<Cyc> hom_twist(const Twist& t, int g, int r) {
  validate_twist(t, g);
  switch (t.kind) {
    case Twist::Alpha:
      return embed_factor_op(hom_alpha_one_factor(r), 1, t.index, g, r);
    case Twist::Beta:
      return embed_factor_op(hom_beta_one_factor(r), 1, t.index, g, r);
    case Twist::Gamma:
      return embed_factor_op(hom_gamma_two_factor(r), 2, t.index, g, r);
  }
  throw std::logic_error("hom_twist: bad kind");
}

}  // namespace mcgrep
