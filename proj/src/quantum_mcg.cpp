#include "mcgrep/quantum_mcg.hpp"

#include <set>
#include <sstream>

#include "mcgrep/qcalc.hpp"

namespace mcgrep {

std::string Twist::str() const {
  const char* k = kind == Alpha ? "a" : kind == Beta ? "b" : "g";
  return std::string(k) + std::to_string(index);
}

void validate_twist(const Twist& t, int g) {
  int hi = (t.kind == Twist::Gamma) ? g - 1 : g;
  if (t.index < 1 || t.index > hi)
    throw std::invalid_argument("twist generator index out of range: " + t.str());
}

TwistWord parse_twist_word(const std::string& text, int g) {
  TwistWord out;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    int exp = 1;
    auto caret = tok.find('^');
    if (caret != std::string::npos) {
      std::string e = tok.substr(caret + 1);
      if (e != "-1" && e != "1")
        throw std::invalid_argument("bad exponent in token: " + tok);
      if (e == "-1") exp = -1;
      tok = tok.substr(0, caret);
    }
    if (tok.size() < 2) throw std::invalid_argument("bad token: " + tok);
    Twist t{};
    switch (tok[0]) {
      case 'a': t.kind = Twist::Alpha; break;
      case 'b': t.kind = Twist::Beta; break;
      case 'g': t.kind = Twist::Gamma; break;
      default: throw std::invalid_argument("bad token: " + tok);
    }
    size_t pos = 0;
    int idx;
    try {
      idx = std::stoi(tok.substr(1), &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad token: " + tok);
    }
    if (pos != tok.size() - 1) throw std::invalid_argument("bad token: " + tok);
    t.index = idx;
    validate_twist(t, g);
    out.push_back({t, exp});
  }
  return out;
}

namespace {

// One-factor operator x -> v^{-1} x.
SparseMat<Cyc> alpha_one_factor(int r) {
  const UqData& d = UqData::get(r);
  const int dim = r * r * r;
  SparseMat<Cyc> op(dim, dim);
  for (int col = 0; col < dim; ++col) {
    Idx3 y = etf_unflat(r, col);
    AlgElem yel(r);
    yel.add_term(y[0], y[1], y[2], Cyc(r, 1L));
    AlgElem img = normal_product(d.v_inv, yel);
    for (const auto& [k, c] : img.terms()) op.add(etf_flat(r, k), col, c);
  }
  return op;
}

// One-factor operator x -> lambda'(v_(2) x) S(v_(1)).
SparseMat<Cyc> beta_one_factor(int r) {
  const UqData& d = UqData::get(r);
  const int dim = r * r * r;
  // precompute (S(v_(1)), v_(2) monomial, coeff)
  struct Piece {
    AlgElem s_first;
    Idx3 second;
    Cyc coeff;
  };
  std::vector<Piece> pieces;
  for (const auto& [k, c] : d.Delta_v.terms()) {
    AlgElem first(r);
    first.add_term(k[0][0], k[0][1], k[0][2], Cyc(r, 1L));
    pieces.push_back({antipode(first), k[1], c});
  }
  SparseMat<Cyc> op(dim, dim);
  for (int col = 0; col < dim; ++col) {
    Idx3 y = etf_unflat(r, col);
    AlgElem yel(r);
    yel.add_term(y[0], y[1], y[2], Cyc(r, 1L));
    for (const Piece& p : pieces) {
      AlgElem second(r);
      second.add_term(p.second[0], p.second[1], p.second[2], Cyc(r, 1L));
      Cyc lam = integral_lambda(normal_product(second, yel));
      if (lam.is_zero()) continue;
      lam *= p.coeff;
      for (const auto& [k, c] : p.s_first.terms())
        op.add(etf_flat(r, k), col, c * lam);
    }
  }
  return op;
}

// Two-factor operator (x, x') -> x S(v^{-1}_(1)) (x) v^{-1}_(2) x'.
SparseMat<Cyc> gamma_two_factor(int r) {
  const UqData& d = UqData::get(r);
  const int dim1 = r * r * r;
  const int dim = dim1 * dim1;
  struct Piece {
    AlgElem s_first;
    AlgElem second;
    Cyc coeff;
  };
  std::vector<Piece> pieces;
  for (const auto& [k, c] : d.Delta_vinv.terms()) {
    AlgElem first(r), second(r);
    first.add_term(k[0][0], k[0][1], k[0][2], Cyc(r, 1L));
    second.add_term(k[1][0], k[1][1], k[1][2], Cyc(r, 1L));
    pieces.push_back({antipode(first), second, c});
  }
  SparseMat<Cyc> op(dim, dim);
  for (int c1 = 0; c1 < dim1; ++c1) {
    Idx3 y1 = etf_unflat(r, c1);
    AlgElem y1el(r);
    y1el.add_term(y1[0], y1[1], y1[2], Cyc(r, 1L));
    for (int c2 = 0; c2 < dim1; ++c2) {
      Idx3 y2 = etf_unflat(r, c2);
      AlgElem y2el(r);
      y2el.add_term(y2[0], y2[1], y2[2], Cyc(r, 1L));
      int col = c1 * dim1 + c2;
      for (const Piece& p : pieces) {
        AlgElem left = normal_product(y1el, p.s_first);
        if (left.is_zero()) continue;
        AlgElem right = normal_product(p.second, y2el);
        if (right.is_zero()) continue;
        for (const auto& [k1, v1] : left.terms())
          for (const auto& [k2, v2] : right.terms())
            op.add(etf_flat(r, k1) * dim1 + etf_flat(r, k2), col,
                   p.coeff * v1 * v2);
      }
    }
  }
  return op;
}

// Closed-form one-factor alpha.
SparseMat<Cyc> alpha_closed_one_factor(int r) {
  const int dim = r * r * r;
  SparseMat<Cyc> op(dim, dim);
  for (int col = 0; col < dim; ++col) {
    Idx3 y = etf_unflat(r, col);
    const int l = y[0], m = y[1], n = y[2];
    Cyc global = Cyc::zeta_pow(r, 2L * (m + 1) * m);
    for (int i = 0; i < r; ++i) {
      if (l + i >= r || n + i >= r) continue;
      Cyc c = qbinom_z(r, n + i, n);
      if (c.is_zero()) continue;
      c *= Cyc::zeta_pow(r, static_cast<long>(i + 3) * i / 2 + 2L * m * i);
      op.add(etf_flat(r, {l + i, (m + i) % r, n + i}), col, global * c);
    }
  }
  return op;
}

// Closed-form one-factor beta (global scalar dropped).
SparseMat<Cyc> beta_closed_one_factor(int r) {
  const int dim = r * r * r;
  SparseMat<Cyc> op(dim, dim);
  for (int col = 0; col < dim; ++col) {
    Idx3 y = etf_unflat(r, col);
    const int l = y[0], m = y[1], n = y[2];
    for (int i = 0; i < r; ++i) {
      if (l - i < 0 || n - i < 0) continue;
      Cyc bi = qbinom_z(r, l, i);
      if (bi.is_zero()) continue;
      for (int j = 0; j < r; ++j) {
        long e = -static_cast<long>(i) * (i - 5) / 2 - 2L * j * (j - 1) -
                 2L * i * j + static_cast<long>(l + 2 * m - n) * i + 2L * l * j;
        op.add(etf_flat(r, {l - i, (m + j) % r, n - i}), col,
               bi * Cyc::zeta_pow(r, e));
      }
    }
  }
  return op;
}

// Closed-form two-factor gamma (global scalar dropped).
SparseMat<Cyc> gamma_closed_two_factor(int r) {
  const int dim1 = r * r * r;
  const int dim = dim1 * dim1;
  SparseMat<Cyc> op(dim, dim);
  for (int c1 = 0; c1 < dim1; ++c1) {
    Idx3 y1 = etf_unflat(r, c1);
    const int l1 = y1[0], m1 = y1[1], n1 = y1[2];
    for (int c2 = 0; c2 < dim1; ++c2) {
      Idx3 y2 = etf_unflat(r, c2);
      const int l2 = y2[0], m2 = y2[1], n2 = y2[2];
      int col = c1 * dim1 + c2;
      Cyc global = Cyc::zeta_pow(
          r, 2L * (m1 - n1 + l2 - m2 + 1) * (m1 - n1 + l2 - m2));
      for (int j1 = 0; j1 < r; ++j1)
        for (int i1 = 0; i1 + j1 <= r - 1; ++i1)
          for (int k2 = 0; i1 + j1 + k2 <= r - 1; ++k2)
            for (int b = -k2; b <= i1 + j1; ++b)
              for (int i2 = 0; i2 <= b + k2; ++i2) {
                // target indices
                int tl1 = l1 + j1, tn1 = n1 + j1 - b;
                int tl2 = l2 - b + i2, tn2 = n2 + i2;
                if (tl1 >= r || tn1 < 0 || tn1 >= r) continue;
                if (tl2 < 0 || tl2 >= r || tn2 >= r) continue;
                Cyc coeff = qmultinom_z(r, i1 + j1 + k2, {i1, j1});
                if (coeff.is_zero()) continue;
                coeff *= qbinom_z(r, l2 + k2, b - i2 + k2);
                if (coeff.is_zero()) continue;
                coeff *= qbinom_z(r, n1 - b + j1, n1 - i1);
                if (coeff.is_zero()) continue;
                coeff *= qbinom_z(r, n2 + i2, n2);
                if (coeff.is_zero()) continue;
                coeff *= qbrace_falling_z(r, 2L * m1 - n1 + i1 + j1, i1);
                if (coeff.is_zero()) continue;
                coeff *= qbrace_falling_z(r, -static_cast<long>(l2) + 2 * m2 + b,
                                          b - i2 + k2);
                if (coeff.is_zero()) continue;
                long s = i1 + j1 + k2;
                long e = (s + 3) * s / 2 - (s - 1) * b +
                         2L * (m1 - n1 + 2 * (l2 - m2)) * (i1 + j1) +
                         2L * (l2 - m2) * k2;
                if (b % 2 != 0) coeff = -coeff;
                coeff *= Cyc::zeta_pow(r, e);
                int row = (((tl1 * r + (m1 + j1) % r) * r + tn1) * r + tl2) * r *
                              r +
                          ((m2 + i2) % r) * r + tn2;
                op.add(row, col, global * coeff);
              }
    }
  }
  return op;
}

}  // namespace

SparseMat<Cyc> twist_hopf(const Twist& t, int g, int r) {
  validate_twist(t, g);
  switch (t.kind) {
    case Twist::Alpha:
      return embed_factor_op(alpha_one_factor(r), 1, t.index, g, r);
    case Twist::Beta:
      return embed_factor_op(beta_one_factor(r), 1, t.index, g, r);
    case Twist::Gamma:
      return embed_factor_op(gamma_two_factor(r), 2, t.index, g, r);
  }
  throw std::logic_error("twist_hopf: bad kind");
}

SparseMat<Cyc> twist_closed(const Twist& t, int g, int r) {
  validate_twist(t, g);
  switch (t.kind) {
    case Twist::Alpha:
      return embed_factor_op(alpha_closed_one_factor(r), 1, t.index, g, r);
    case Twist::Beta:
      return embed_factor_op(beta_closed_one_factor(r), 1, t.index, g, r);
    case Twist::Gamma:
      return embed_factor_op(gamma_closed_two_factor(r), 2, t.index, g, r);
  }
  throw std::logic_error("twist_closed: bad kind");
}

const SparseMat<Cyc>& TwistOps::op(const Twist& t) {
  auto it = ops_.find(t);
  if (it == ops_.end()) it = ops_.emplace(t, builder_(t, g_, r_)).first;
  return it->second;
}

const SparseMat<Cyc>& TwistOps::op_inv(const Twist& t) {
  auto it = inv_ops_.find(t);
  if (it == inv_ops_.end()) it = inv_ops_.emplace(t, op(t).inverse()).first;
  return it->second;
}

SparseMat<Cyc> evaluate_word(const TwistWord& w, TwistOps& ops) {
  SparseMat<Cyc> out =
      SparseMat<Cyc>::identity(ops.dim(), Cyc(ops.root_order(), 1L));
  for (const WordToken& tok : w) {
    const SparseMat<Cyc>& m =
        tok.exp >= 0 ? ops.op(tok.twist) : ops.op_inv(tok.twist);
    out = out * m;
  }
  return out;
}

RelationResult braid_relation_check(const Twist& x, const Twist& y,
                                    TwistOps& ops) {
  RelationResult res;
  const SparseMat<Cyc>&X = ops.op(x), &Y = ops.op(y);
  SparseMat<Cyc> lhs = X * Y * X;
  SparseMat<Cyc> rhs = Y * X * Y;
  auto pr = SparseMat<Cyc>::compare_projective(lhs, rhs);
  res.pass = pr.witness.has_value();
  res.witness = pr.witness;
  if (res.pass) {
    res.detail = "witness " + pr.witness->str();
  } else {
    res.detail = "mismatch at (" + std::to_string(pr.row) + "," +
                 std::to_string(pr.col) + ")";
  }
  return res;
}

RelationResult commute_relation_check(const Twist& x, const Twist& y,
                                      TwistOps& ops) {
  RelationResult res;
  const SparseMat<Cyc>&X = ops.op(x), &Y = ops.op(y);
  SparseMat<Cyc> lhs = X * Y;
  SparseMat<Cyc> rhs = Y * X;
  auto pr = SparseMat<Cyc>::compare_projective(lhs, rhs);
  res.pass = pr.witness.has_value();
  res.witness = pr.witness;
  if (res.pass) {
    res.detail = "witness " + pr.witness->str();
  } else {
    res.detail = "mismatch at (" + std::to_string(pr.row) + "," +
                 std::to_string(pr.col) + ")";
  }
  return res;
}

bool torelli_integral(const SparseMat<Cyc>& M, const SparseMat<Cyc>& Minv,
                      std::string* detail) {
  std::set<Cyc> entries;
  for (int j = 0; j < M.cols(); ++j)
    for (const auto& [i, v] : M.col(j)) entries.insert(v);
  auto all_integral = [](const SparseMat<Cyc>& A) {
    for (int j = 0; j < A.cols(); ++j)
      for (const auto& [i, v] : A.col(j))
        if (!v.is_integral()) return false;
    return true;
  };
  for (const Cyc& e : entries) {
    Cyc c = e.inv();
    if (!all_integral(M.scaled(c))) continue;
    if (!all_integral(Minv.scaled(e))) continue;
    if (detail) *detail = "normalizer 1/(" + e.str() + ")";
    return true;
  }
  if (detail) {
    *detail = "no entry normalizes the pair; " +
              std::to_string(entries.size()) + " candidates tried";
  }
  return false;
}

TwistWord torelli_word(int j) {
  TwistWord w;
  for (int i = 0; i < 6; ++i) {
    w.push_back({Twist{Twist::Alpha, j}, 1});
    w.push_back({Twist{Twist::Beta, j}, 1});
  }
  return w;
}

}  // namespace mcgrep
