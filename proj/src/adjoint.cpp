#include "mcgrep/adjoint.hpp"

#include <cassert>

#include "mcgrep/qcalc.hpp"

namespace mcgrep {

int ad_flat(int r, const std::vector<Idx3>& idx) {
  long f = 0;
  for (const Idx3& t : idx) f = ((f * r + t[0]) * r + t[1]) * r + t[2];
  return static_cast<int>(f);
}

std::vector<Idx3> ad_unflat(int g, int r, int flat) {
  std::vector<Idx3> out(g);
  long f = flat;
  for (int j = g - 1; j >= 0; --j) {
    out[j][2] = static_cast<int>(f % r);
    f /= r;
    out[j][1] = static_cast<int>(f % r);
    f /= r;
    out[j][0] = static_cast<int>(f % r);
    f /= r;
  }
  return out;
}

namespace {

// Single-factor adjoint action z |> y = z_(1) y S(z_(2)) for monomials.
AlgElem ad_single(int r, const Idx3& z, const Idx3& y) {
  AlgElem zel(r);
  zel.add_term(z[0], z[1], z[2], Cyc(r, 1L));
  AlgElem yel(r);
  yel.add_term(y[0], y[1], y[2], Cyc(r, 1L));
  TensorElem dz = coproduct(zel);
  AlgElem out(r);
  for (const auto& [k, c] : dz.terms()) {
    AlgElem first(r), second(r);
    first.add_term(k[0][0], k[0][1], k[0][2], Cyc(r, 1L));
    second.add_term(k[1][0], k[1][1], k[1][2], Cyc(r, 1L));
    out += normal_product(normal_product(first, yel), antipode(second)).scaled(c);
  }
  return out;
}

}  // namespace

SparseVec<Cyc> adjoint_act_generic(const AlgElem& x, int g,
                                   const std::vector<Idx3>& factors) {
  const int r = x.r();
  TensorElem legs = iterated_coproduct(x, g - 1);
  SparseVec<Cyc> out;
  for (const auto& [k, c] : legs.terms()) {
    // cartesian product of per-factor actions
    std::vector<std::pair<std::vector<Idx3>, Cyc>> partial{{{}, c}};
    for (int j = 0; j < g; ++j) {
      AlgElem img = ad_single(r, k[j], factors[j]);
      std::vector<std::pair<std::vector<Idx3>, Cyc>> next;
      for (const auto& [pref, pc] : partial)
        for (const auto& [ik, ic] : img.terms()) {
          auto key = pref;
          key.push_back(ik);
          next.emplace_back(std::move(key), pc * ic);
        }
      partial = std::move(next);
      if (partial.empty()) break;
    }
    for (const auto& [key, pc] : partial) sparse_add(out, ad_flat(r, key), pc);
  }
  return out;
}

SparseVec<Cyc> adjoint_act_closed(QGen gen, int g, int r,
                                  const std::vector<Idx3>& factors) {
  SparseVec<Cyc> out;
  auto emit = [&](int j, long dl, long dm, long dn, const Cyc& coeff) {
    if (coeff.is_zero()) return;
    std::vector<Idx3> t = factors;
    long l = t[j][0] + dl, n = t[j][2] + dn;
    if (l < 0 || l >= r || n < 0 || n >= r) return;  // zero element of u_zeta
    t[j][0] = static_cast<int>(l);
    t[j][1] = static_cast<int>(((t[j][1] + dm) % r + r) % r);
    t[j][2] = static_cast<int>(n);
    sparse_add(out, ad_flat(r, t), coeff);
  };

  if (gen == QGen::K) {
    long e = 0;
    for (int j = 0; j < g; ++j) e += factors[j][0] - factors[j][2];
    std::vector<Idx3> t = factors;
    sparse_add(out, ad_flat(r, t), Cyc::zeta_pow(r, 2 * e));
    return out;
  }

  for (int j = 0; j < g; ++j) {
    const int l = factors[j][0], m = factors[j][1], n = factors[j][2];
    long tail = 0, head = 0;
    for (int k = j + 1; k < g; ++k) tail += factors[k][0] - factors[k][2];
    for (int k = 0; k < j; ++k) head += factors[k][0] - factors[k][2];
    if (gen == QGen::E) {
      Cyc pref = Cyc::zeta_pow(r, 2 * tail);
      emit(j, 1, 0, 0, pref * Cyc::zeta_pow(r, 2L * (m - n)));
      emit(j, 1, 1, 0, -(pref * Cyc::zeta_pow(r, 2L * (m - n + 1))));
      emit(j, 0, 0, -1,
           -(pref * qbrace_z(r, 2L * m - n + 1) *
             Cyc::zeta_pow(r, 2L * (m - n + 1))));
    } else {
      Cyc pref = Cyc::zeta_pow(r, -2 * head);
      Cyc qn1 = qint_z(r, n + 1);
      if (n + 1 >= r) assert(qn1.is_zero());
      emit(j, 0, 0, 1, -(pref * qn1 * Cyc::zeta_pow(r, -2L * (l - n))));
      emit(j, 0, 1, 1, pref * qn1);
      emit(j, -1, 0, 0,
           -(pref * qint_z(r, l) * qbrace_z(r, l - 2L * m - 1)));
    }
  }
  return out;
}

SparseMat<Cyc> adjoint_operator_generic(const AlgElem& x, int g) {
  const int r = x.r();
  const long dim = ad_dim(g, r);
  SparseMat<Cyc> op(static_cast<int>(dim), static_cast<int>(dim));
  for (long col = 0; col < dim; ++col)
    op.col(static_cast<int>(col)) =
        adjoint_act_generic(x, g, ad_unflat(g, r, static_cast<int>(col)));
  return op;
}

SparseMat<Cyc> adjoint_operator_closed(QGen gen, int g, int r) {
  const long dim = ad_dim(g, r);
  SparseMat<Cyc> op(static_cast<int>(dim), static_cast<int>(dim));
  for (long col = 0; col < dim; ++col)
    op.col(static_cast<int>(col)) =
        adjoint_act_closed(gen, g, r, ad_unflat(g, r, static_cast<int>(col)));
  return op;
}

SparseMat<Cyc> embed_factor_op(const SparseMat<Cyc>& op, int arity, int j,
                               int g, int r) {
  if (j < 1 || j + arity - 1 > g)
    throw std::invalid_argument("embed_factor_op: factor out of range");
  long left = 1, right = 1;
  for (int i = 0; i < 3 * (j - 1); ++i) left *= r;
  for (int i = 0; i < 3 * (g - j - arity + 1); ++i) right *= r;
  Cyc one(r, 1L);
  SparseMat<Cyc> out =
      kron(SparseMat<Cyc>::identity(static_cast<int>(left), one), op);
  out = kron(out, SparseMat<Cyc>::identity(static_cast<int>(right), one));
  return out;
}

}  // namespace mcgrep
