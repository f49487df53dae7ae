#include "mcgrep/heisenberg.hpp"

#include <sstream>

namespace mcgrep {

HeisWord operator*(const HeisWord& x, const HeisWord& y) {
  if (x.a.size() != y.a.size())
    throw std::invalid_argument("HeisWord: mixed genus");
  HeisWord out = x;
  long cross = 0;
  for (size_t j = 0; j < x.a.size(); ++j) cross += x.a[j] * y.b[j];
  out.c = x.c + y.c + 4 * cross;
  for (size_t j = 0; j < x.a.size(); ++j) {
    out.a[j] += y.a[j];
    out.b[j] += y.b[j];
  }
  return out;
}

HeisWord HeisWord::inverse() const {
  HeisWord out = *this;
  long cross = 0;
  for (size_t j = 0; j < a.size(); ++j) cross += a[j] * b[j];
  out.c = -c + 4 * cross;
  for (size_t j = 0; j < a.size(); ++j) {
    out.a[j] = -a[j];
    out.b[j] = -b[j];
  }
  return out;
}

HeisRingElem HeisRingElem::one(int g) { return word(HeisWord::one(g)); }

HeisRingElem HeisRingElem::word(const HeisWord& w, const BigInt& coeff) {
  HeisRingElem x(w.genus());
  if (coeff != 0) x.t_.emplace(w, coeff);
  return x;
}

HeisRingElem HeisRingElem::q_power(int g, long m) {
  HeisWord w = HeisWord::one(g);
  w.c = m;
  return word(w);
}

HeisRingElem HeisRingElem::alpha(int g, int j, long e) {
  HeisWord w = HeisWord::one(g);
  w.a[j - 1] = e;
  return word(w);
}

HeisRingElem HeisRingElem::beta(int g, int j, long e) {
  HeisWord w = HeisWord::one(g);
  w.b[j - 1] = e;
  return word(w);
}

void HeisRingElem::add_term(const HeisWord& w, const BigInt& n) {
  if (n == 0) return;
  auto it = t_.find(w);
  if (it == t_.end()) {
    t_.emplace(w, n);
  } else {
    it->second += n;
    if (it->second == 0) t_.erase(it);
  }
}

HeisRingElem& HeisRingElem::operator+=(const HeisRingElem& o) {
  if (g_ == 0) g_ = o.g_;
  if (o.g_ != g_) throw std::invalid_argument("HeisRingElem: mixed genus");
  for (const auto& [w, n] : o.t_) add_term(w, n);
  return *this;
}

HeisRingElem& HeisRingElem::operator-=(const HeisRingElem& o) {
  if (g_ == 0) g_ = o.g_;
  if (o.g_ != g_) throw std::invalid_argument("HeisRingElem: mixed genus");
  for (const auto& [w, n] : o.t_) add_term(w, -n);
  return *this;
}

HeisRingElem operator*(const HeisRingElem& x, const HeisRingElem& y) {
  if (x.g_ != y.g_) throw std::invalid_argument("HeisRingElem: mixed genus");
  HeisRingElem out(x.g_);
  for (const auto& [wx, nx] : x.t_)
    for (const auto& [wy, ny] : y.t_) out.add_term(wx * wy, nx * ny);
  return out;
}

std::string HeisRingElem::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, n] : t_) {
    if (!first) os << " + ";
    first = false;
    os << n << "*q^" << w.c;
    for (size_t j = 0; j < w.a.size(); ++j) {
      if (w.a[j] != 0) os << "*a" << j + 1 << "^" << w.a[j];
      if (w.b[j] != 0) os << "*b" << j + 1 << "^" << w.b[j];
    }
  }
  return os.str();
}

namespace {

long vg_dim(int g, int r) {
  long d = 1;
  for (int i = 0; i < g; ++i) d *= r;
  return d;
}

int vg_flat(int r, const std::vector<int>& c) {
  long f = 0;
  for (int cj : c) f = f * r + cj;
  return static_cast<int>(f);
}

std::vector<int> vg_unflat(int g, int r, int flat) {
  std::vector<int> c(g);
  long f = flat;
  for (int j = g - 1; j >= 0; --j) {
    c[j] = static_cast<int>(f % r);
    f /= r;
  }
  return c;
}

}  // namespace

SparseMat<Cyc> schrodinger_A(int g, int r, int j) {
  const long dim = vg_dim(g, r);
  SparseMat<Cyc> A(static_cast<int>(dim), static_cast<int>(dim));
  for (int col = 0; col < dim; ++col) {
    std::vector<int> c = vg_unflat(g, r, col);
    A.set(col, col, Cyc::zeta_pow(r, 4L * c[j - 1]));
  }
  return A;
}

SparseMat<Cyc> schrodinger_B(int g, int r, int j) {
  const long dim = vg_dim(g, r);
  SparseMat<Cyc> B(static_cast<int>(dim), static_cast<int>(dim));
  Cyc one(r, 1L);
  for (int col = 0; col < dim; ++col) {
    std::vector<int> c = vg_unflat(g, r, col);
    c[j - 1] = (c[j - 1] + 1) % r;
    B.set(vg_flat(r, c), col, one);
  }
  return B;
}

SparseMat<Cyc> heis_specialize_word(const HeisWord& w, int r) {
  // The triple (c, a, b) carries the matrix-coordinate product law, under
  // which it labels the group element q^c beta^b alpha^a: the clock part
  // reads the basis index before the shift.
  const int g = w.genus();
  const long dim = vg_dim(g, r);
  SparseMat<Cyc> out(static_cast<int>(dim), static_cast<int>(dim));
  for (int col = 0; col < dim; ++col) {
    std::vector<int> c = vg_unflat(g, r, col);
    long e = w.c;
    std::vector<int> target = c;
    for (int j = 0; j < g; ++j) {
      e += 4 * w.a[j] * c[j];
      target[j] = static_cast<int>(((target[j] + w.b[j]) % r + r) % r);
    }
    out.add(vg_flat(r, target), col, Cyc::zeta_pow(r, e));
  }
  return out;
}

SparseMat<Cyc> heis_specialize(const HeisRingElem& x, int r) {
  const long dim = vg_dim(x.genus(), r);
  SparseMat<Cyc> out(static_cast<int>(dim), static_cast<int>(dim));
  for (const auto& [w, n] : x.terms()) {
    Cyc coeff(r, 1L);
    coeff *= Rational(n);
    SparseMat<Cyc> m = heis_specialize_word(w, r).scaled(coeff);
    out = out + m;
  }
  return out;
}

std::string BraidGen::str() const {
  static const char* names[] = {"sigma", "alpha", "beta", "alpha~", "gamma",
                                "delta"};
  return std::string(names[kind]) + "_" + std::to_string(index);
}

namespace {

// Expand a braid generator into a word in {sigma, alpha_j, beta_j}.
void expand_braid(const BraidGen& gen, int g, int exp, BraidWord& out) {
  if (gen.kind == BraidGen::Sigma || gen.kind == BraidGen::Alpha ||
      gen.kind == BraidGen::Beta) {
    out.push_back({gen, exp});
    return;
  }
  BraidWord word;
  switch (gen.kind) {
    case BraidGen::AlphaTilde:
      // beta_j^{-1} alpha_j beta_j
      word = {{BraidGen{BraidGen::Beta, gen.index}, -1},
              {BraidGen{BraidGen::Alpha, gen.index}, 1},
              {BraidGen{BraidGen::Beta, gen.index}, 1}};
      break;
    case BraidGen::Gamma: {
      // alpha_{k+1} alpha~_k^{-1}
      BraidWord tilde;
      expand_braid(BraidGen{BraidGen::AlphaTilde, gen.index}, g, -1, tilde);
      word.push_back({BraidGen{BraidGen::Alpha, gen.index + 1}, 1});
      // inverse of a word reverses with flipped exponents; expand_braid with
      // exp = -1 below handles simple generators, so assemble manually here
      word.insert(word.end(), tilde.begin(), tilde.end());
      break;
    }
    case BraidGen::Delta: {
      // delta_1 = alpha_1, delta_j = gamma_{j-1} ... gamma_1 alpha_1
      for (int k = gen.index - 1; k >= 1; --k) {
        BraidWord gk;
        expand_braid(BraidGen{BraidGen::Gamma, k}, g, 1, gk);
        word.insert(word.end(), gk.begin(), gk.end());
      }
      word.push_back({BraidGen{BraidGen::Alpha, 1}, 1});
      break;
    }
    default:
      throw std::logic_error("expand_braid: bad kind");
  }
  if (exp == 1) {
    out.insert(out.end(), word.begin(), word.end());
  } else {
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      out.push_back({it->first, -it->second});
  }
}

}  // namespace

SparseMat<Cyc> phi_braid(const BraidGen& gen, int g, int r) {
  BraidWord flat;
  expand_braid(gen, g, 1, flat);
  const long dim = vg_dim(g, r);
  SparseMat<Cyc> out = SparseMat<Cyc>::identity(static_cast<int>(dim), Cyc(r, 1L));
  for (const auto& [bg, e] : flat) {
    SparseMat<Cyc> m(static_cast<int>(dim), static_cast<int>(dim));
    switch (bg.kind) {
      case BraidGen::Sigma:
        m = SparseMat<Cyc>::identity(
            static_cast<int>(dim),
            e == -1 ? -Cyc::zeta_pow(r, 2) : -Cyc::zeta_pow(r, -2));
        break;
      case BraidGen::Alpha:
        m = schrodinger_A(g, r, bg.index);
        if (e == -1) m = m.pow(r - 1);  // A^r = I
        break;
      case BraidGen::Beta:
        m = schrodinger_B(g, r, bg.index);
        if (e == -1) m = m.pow(r - 1);  // B^r = I
        break;
      default:
        throw std::logic_error("phi_braid: unexpanded generator");
    }
    out = out * m;
  }
  return out;
}

SparseMat<Cyc> phi_braid_word(const BraidWord& w, int g, int r) {
  const long dim = vg_dim(g, r);
  SparseMat<Cyc> out = SparseMat<Cyc>::identity(static_cast<int>(dim), Cyc(r, 1L));
  for (const auto& [gen, e] : w) {
    SparseMat<Cyc> m = phi_braid(gen, g, r);
    if (e == -1) m = m.inverse();
    out = out * m;
  }
  return out;
}

SparseMat<Cyc> psi_matrix(const Twist& t, int g, int r) {
  validate_twist(t, g);
  const long dim = vg_dim(g, r);
  SparseMat<Cyc> out(static_cast<int>(dim), static_cast<int>(dim));
  switch (t.kind) {
    case Twist::Alpha: {
      SparseMat<Cyc> A = schrodinger_A(g, r, t.index);
      SparseMat<Cyc> Al = SparseMat<Cyc>::identity(static_cast<int>(dim), Cyc(r, 1L));
      for (int l = 0; l < r; ++l) {
        out = out + Al.scaled(Cyc::zeta_pow(r, -2L * l * (l - 1)));
        Al = Al * A;
      }
      return out;
    }
    case Twist::Beta: {
      SparseMat<Cyc> B = schrodinger_B(g, r, t.index);
      SparseMat<Cyc> Bl = SparseMat<Cyc>::identity(static_cast<int>(dim), Cyc(r, 1L));
      for (int l = 0; l < r; ++l) {
        out = out + Bl.scaled(Cyc::zeta_pow(r, -2L * (l + 1) * l));
        Bl = Bl * B;
      }
      return out;
    }
    case Twist::Gamma: {
      SparseMat<Cyc> Akinv = schrodinger_A(g, r, t.index).pow(r - 1);
      SparseMat<Cyc> Ak1 = schrodinger_A(g, r, t.index + 1);
      SparseMat<Cyc> step = Akinv * Ak1;
      SparseMat<Cyc> Ml = SparseMat<Cyc>::identity(static_cast<int>(dim), Cyc(r, 1L));
      for (int l = 0; l < r; ++l) {
        out = out + Ml.scaled(Cyc::zeta_pow(r, -2L * (l + 1) * l));
        Ml = Ml * step;
      }
      return out;
    }
  }
  throw std::logic_error("psi_matrix: bad kind");
}

SparseMat<Cyc> psi_inverse(const Twist& t, int g, int r) {
  validate_twist(t, g);
  const long dim = vg_dim(g, r);
  SparseMat<Cyc> out(static_cast<int>(dim), static_cast<int>(dim));
  Cyc inv_r(r, 1L);
  inv_r *= Rational(1, r);
  switch (t.kind) {
    case Twist::Alpha: {
      SparseMat<Cyc> A = schrodinger_A(g, r, t.index);
      SparseMat<Cyc> Al = SparseMat<Cyc>::identity(static_cast<int>(dim), Cyc(r, 1L));
      for (int l = 0; l < r; ++l) {
        out = out + Al.scaled(Cyc::zeta_pow(r, 2L * (l + 1) * l) * inv_r);
        Al = Al * A;
      }
      return out;
    }
    case Twist::Beta: {
      SparseMat<Cyc> B = schrodinger_B(g, r, t.index);
      SparseMat<Cyc> Bl = SparseMat<Cyc>::identity(static_cast<int>(dim), Cyc(r, 1L));
      for (int l = 0; l < r; ++l) {
        out = out + Bl.scaled(Cyc::zeta_pow(r, 2L * l * (l - 1)) * inv_r);
        Bl = Bl * B;
      }
      return out;
    }
    case Twist::Gamma: {
      SparseMat<Cyc> Akinv = schrodinger_A(g, r, t.index).pow(r - 1);
      SparseMat<Cyc> Ak1 = schrodinger_A(g, r, t.index + 1);
      SparseMat<Cyc> step = Akinv * Ak1;
      SparseMat<Cyc> Ml = SparseMat<Cyc>::identity(static_cast<int>(dim), Cyc(r, 1L));
      for (int l = 0; l < r; ++l) {
        out = out + Ml.scaled(Cyc::zeta_pow(r, 2L * l * (l - 1)) * inv_r);
        Ml = Ml * step;
      }
      return out;
    }
  }
  throw std::logic_error("psi_inverse: bad kind");
}

BraidWord braid_pushforward(const Twist& t, const BraidGen& gen, int g) {
  validate_twist(t, g);
  if (gen.kind != BraidGen::Sigma && gen.kind != BraidGen::Beta &&
      gen.kind != BraidGen::Delta)
    throw std::invalid_argument("braid_pushforward: generator not tabulated");
  if (t.kind == Twist::Alpha && gen.kind == BraidGen::Beta &&
      gen.index == t.index)
    return {{BraidGen{BraidGen::Alpha, t.index}, 1}, {gen, 1}};
  if (t.kind == Twist::Beta && gen.kind == BraidGen::Delta &&
      gen.index == t.index)
    return {{BraidGen{BraidGen::Beta, t.index}, -1}, {gen, 1}};
  if (t.kind == Twist::Gamma && gen.kind == BraidGen::Beta) {
    if (gen.index == t.index)
      return {{gen, 1}, {BraidGen{BraidGen::Gamma, t.index}, -1}};
    if (gen.index == t.index + 1)
      return {{BraidGen{BraidGen::Gamma, t.index}, 1}, {gen, 1}};
  }
  return {{gen, 1}};
}

int commutant_dimension(int g, int r) {
  const int n = static_cast<int>(vg_dim(g, r));
  std::vector<SparseMat<Cyc>> gens;
  for (int j = 1; j <= g; ++j) {
    gens.push_back(schrodinger_A(g, r, j));
    gens.push_back(schrodinger_B(g, r, j));
  }
  // Unknown X with M X - X M = 0 for every generator M; unknown index
  // (i, j) -> i * n + j, equation rows stacked per generator and (p, q).
  SparseMat<Cyc> sys(static_cast<int>(gens.size()) * n * n, n * n);
  int row0 = 0;
  for (const auto& M : gens) {
    // (M X)_{p q} = sum_k M_{p k} X_{k q}; (X M)_{p q} = sum_k X_{p k} M_{k q}
    for (int c = 0; c < n; ++c)
      for (const auto& [p, v] : M.col(c)) {
        // term M_{p c} X_{c q} contributes to equation (p, q)
        for (int q = 0; q < n; ++q)
          sys.add(row0 + p * n + q, c * n + q, v);
        // term  - X_{p' c'} M_{c' q'}: here M_{p c} sits as M_{c' q'} with
        // c' = p, q' = c: contributes -v X_{p' p} to equation (p', c)
        for (int pp = 0; pp < n; ++pp)
          sys.add(row0 + pp * n + c, pp * n + p, -v);
      }
    row0 += n * n;
  }
  return n * n - sys.rank();
}

}  // namespace mcgrep
