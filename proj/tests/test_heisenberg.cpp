#include <doctest.h>

#include <random>

#include "mcgrep/heisenberg.hpp"

using namespace mcgrep;

namespace {

// (g+2)x(g+2) integer matrix picture of a Heisenberg word, used as an
// independent cross-check of the product law. The stored triple (c, a, b)
// is exactly the matrix coordinate: upper row 2a, right column 2b,
// corner c.
struct HeisMatrix {
  int g;
  std::vector<std::vector<long>> m;

  static HeisMatrix from_word(const HeisWord& w) {
    int g = w.genus();
    HeisMatrix out{g, std::vector<std::vector<long>>(
                          g + 2, std::vector<long>(g + 2, 0))};
    for (int i = 0; i < g + 2; ++i) out.m[i][i] = 1;
    for (int j = 0; j < g; ++j) {
      out.m[0][1 + j] = 2 * w.a[j];
      out.m[1 + j][g + 1] = 2 * w.b[j];
    }
    out.m[0][g + 1] = w.c;
    return out;
  }
  friend HeisMatrix operator*(const HeisMatrix& x, const HeisMatrix& y) {
    int n = x.g + 2;
    HeisMatrix out{x.g, std::vector<std::vector<long>>(
                            n, std::vector<long>(n, 0))};
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) out.m[i][j] += x.m[i][k] * y.m[k][j];
    return out;
  }
  friend bool operator==(const HeisMatrix& a, const HeisMatrix& b) {
    return a.m == b.m;
  }
};

HeisWord rnd_word(int g, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-4, 4);
  HeisWord w = HeisWord::one(g);
  w.c = d(rng);
  for (int j = 0; j < g; ++j) {
    w.a[j] = d(rng);
    w.b[j] = d(rng);
  }
  return w;
}

}  // namespace

TEST_CASE("normal form product law against the matrix picture") {
  for (int g : {1, 2, 3}) {
    std::mt19937_64 rng(31 + g);
    for (int trial = 0; trial < 50; ++trial) {
      HeisWord x = rnd_word(g, rng), y = rnd_word(g, rng);
      CHECK(HeisMatrix::from_word(x * y) ==
            HeisMatrix::from_word(x) * HeisMatrix::from_word(y));
      CHECK(x * x.inverse() == HeisWord::one(g));
    }
  }
}

TEST_CASE("heisenberg group relations") {
  int g = 2;
  HeisRingElem a1 = HeisRingElem::alpha(g, 1), b1 = HeisRingElem::beta(g, 1);
  HeisRingElem a2 = HeisRingElem::alpha(g, 2);
  // alpha_1 beta_1 = q^4 beta_1 alpha_1
  CHECK(a1 * b1 == HeisRingElem::q_power(g, 4) * b1 * a1);
  CHECK(a1 * a2 == a2 * a1);
  CHECK(HeisRingElem::q_power(g, 3) * a1 == a1 * HeisRingElem::q_power(g, 3));
}

TEST_CASE("clock and shift matrices") {
  for (int r : {3, 5}) {
    SparseMat<Cyc> A = schrodinger_A(1, r, 1), B = schrodinger_B(1, r, 1);
    // A = diag(1, z^4, z^8, ...)
    for (int c = 0; c < r; ++c) {
      REQUIRE(A.col(c).size() == 1);
      CHECK(A.col(c).at(c) == Cyc::zeta_pow(r, 4 * c));
      REQUIRE(B.col(c).size() == 1);
      CHECK(B.col(c).count((c + 1) % r) == 1);
    }
    SparseMat<Cyc> id = SparseMat<Cyc>::identity(r, Cyc(r, 1L));
    // A B A^{-1} B^{-1} = z^4 I
    SparseMat<Cyc> comm = A * B * A.pow(r - 1) * B.pow(r - 1);
    CHECK(comm == id.scaled(Cyc::zeta_pow(r, 4)));
    CHECK(A.pow(r) == id);
    CHECK(B.pow(r) == id);
  }
}

TEST_CASE("local system properties at higher genus") {
  int g = 2, r = 3;
  std::vector<SparseMat<Cyc>> As, Bs;
  for (int j = 1; j <= g; ++j) {
    As.push_back(schrodinger_A(g, r, j));
    Bs.push_back(schrodinger_B(g, r, j));
  }
  for (int j = 0; j < g; ++j)
    for (int k = 0; k < g; ++k) {
      CHECK(As[j] * As[k] == As[k] * As[j]);
      CHECK(Bs[j] * Bs[k] == Bs[k] * Bs[j]);
      if (j == k)
        CHECK(As[j] * Bs[k] == (Bs[k] * As[j]).scaled(Cyc::zeta_pow(r, 4)));
      else
        CHECK(As[j] * Bs[k] == Bs[k] * As[j]);
    }
}

TEST_CASE("commutant of the clock-and-shift family is scalar") {
  CHECK(commutant_dimension(1, 3) == 1);
  CHECK(commutant_dimension(1, 5) == 1);
  CHECK(commutant_dimension(2, 3) == 1);
}

TEST_CASE("specialization is a ring homomorphism") {
  for (int g : {1, 2}) {
    int r = 3;
    std::mt19937_64 rng(17 * g);
    for (int trial = 0; trial < 25; ++trial) {
      HeisWord x = rnd_word(g, rng), y = rnd_word(g, rng);
      CHECK(heis_specialize_word(x * y, r) ==
            heis_specialize_word(x, r) * heis_specialize_word(y, r));
    }
    // sigma |-> -z^{-2} I commutes with everything and squares correctly
    HeisRingElem sigma(g);
    sigma -= HeisRingElem::q_power(g, -2);
    SparseMat<Cyc> S = heis_specialize(sigma, r);
    CHECK(S == SparseMat<Cyc>::identity(static_cast<int>(S.rows()),
                                        -Cyc::zeta_pow(r, -2)));
  }
}

TEST_CASE("derived braid generator images") {
  int g = 2, r = 3;
  SparseMat<Cyc> A1 = schrodinger_A(g, r, 1), A2 = schrodinger_A(g, r, 2);
  CHECK(phi_braid(BraidGen{BraidGen::AlphaTilde, 1}, g, r) ==
        A1.scaled(Cyc::zeta_pow(r, 4)));
  CHECK(phi_braid(BraidGen{BraidGen::Gamma, 1}, g, r) ==
        (A1.pow(r - 1) * A2).scaled(Cyc::zeta_pow(r, -4)));
  CHECK(phi_braid(BraidGen{BraidGen::Delta, 1}, g, r) == A1);
  CHECK(phi_braid(BraidGen{BraidGen::Delta, 2}, g, r) ==
        A2.scaled(Cyc::zeta_pow(r, -4)));
}

TEST_CASE("psi matrices and inverses") {
  struct Case {
    int g, r;
  };
  for (Case cs : {Case{1, 3}, Case{1, 5}, Case{2, 3}}) {
    std::vector<Twist> gens;
    for (int j = 1; j <= cs.g; ++j) {
      gens.push_back(Twist{Twist::Alpha, j});
      gens.push_back(Twist{Twist::Beta, j});
    }
    for (int k = 1; k < cs.g; ++k) gens.push_back(Twist{Twist::Gamma, k});
    for (const Twist& t : gens) {
      SparseMat<Cyc> P = psi_matrix(t, cs.g, cs.r);
      SparseMat<Cyc> Pinv = psi_inverse(t, cs.g, cs.r);
      SparseMat<Cyc> id =
          SparseMat<Cyc>::identity(P.rows(), Cyc(cs.r, 1L));
      CHECK(P * Pinv == id);
      CHECK(Pinv * P == id);
    }
  }
  // psi(tau_alpha) at g=1, r=3 is I + A + z^2 A^2
  int r = 3;
  SparseMat<Cyc> A = schrodinger_A(1, r, 1);
  SparseMat<Cyc> expect = SparseMat<Cyc>::identity(r, Cyc(r, 1L)) + A +
                          (A * A).scaled(Cyc::zeta_pow(r, 2));
  CHECK(psi_matrix(Twist{Twist::Alpha, 1}, 1, r) == expect);
}

TEST_CASE("pushforward table") {
  int g = 2;
  // (tau_alpha_1, beta_1) -> alpha_1 * beta_1
  BraidWord w =
      braid_pushforward(Twist{Twist::Alpha, 1}, BraidGen{BraidGen::Beta, 1}, g);
  REQUIRE(w.size() == 2);
  CHECK(w[0].first.kind == BraidGen::Alpha);
  CHECK(w[1].first.kind == BraidGen::Beta);
  // (tau_beta_1, sigma_1) -> sigma_1
  w = braid_pushforward(Twist{Twist::Beta, 1}, BraidGen{BraidGen::Sigma, 1}, g);
  REQUIRE(w.size() == 1);
  CHECK(w[0].first.kind == BraidGen::Sigma);
  // (tau_gamma_1, beta_2) -> gamma_1 * beta_2
  w = braid_pushforward(Twist{Twist::Gamma, 1}, BraidGen{BraidGen::Beta, 2}, g);
  REQUIRE(w.size() == 2);
  CHECK(w[0].first.kind == BraidGen::Gamma);
  CHECK_THROWS_AS(braid_pushforward(Twist{Twist::Alpha, 1},
                                    BraidGen{BraidGen::Alpha, 1}, g),
                  std::invalid_argument);
}

TEST_CASE("crossed identity for every tabulated pair") {
  struct Case {
    int g, r;
  };
  for (Case cs : {Case{1, 3}, Case{1, 5}, Case{2, 3}}) {
    std::vector<Twist> twists;
    for (int j = 1; j <= cs.g; ++j) {
      twists.push_back(Twist{Twist::Alpha, j});
      twists.push_back(Twist{Twist::Beta, j});
    }
    for (int k = 1; k < cs.g; ++k) twists.push_back(Twist{Twist::Gamma, k});
    std::vector<BraidGen> braids;
    braids.push_back(BraidGen{BraidGen::Sigma, 1});
    for (int j = 1; j <= cs.g; ++j) {
      braids.push_back(BraidGen{BraidGen::Beta, j});
      braids.push_back(BraidGen{BraidGen::Delta, j});
    }
    for (const Twist& t : twists) {
      SparseMat<Cyc> P = psi_matrix(t, cs.g, cs.r);
      for (const BraidGen& gen : braids) {
        SparseMat<Cyc> lhs = P * phi_braid(gen, cs.g, cs.r);
        SparseMat<Cyc> rhs =
            phi_braid_word(braid_pushforward(t, gen, cs.g), cs.g, cs.r) * P;
        INFO(t.str(), " on ", gen.str());
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("psi satisfies braid relations projectively") {
  struct Case {
    int g, r;
  };
  for (Case cs : {Case{1, 3}, Case{1, 5}}) {
    SparseMat<Cyc> X = psi_matrix(Twist{Twist::Alpha, 1}, cs.g, cs.r);
    SparseMat<Cyc> Y = psi_matrix(Twist{Twist::Beta, 1}, cs.g, cs.r);
    auto pr = SparseMat<Cyc>::compare_projective(X * Y * X, Y * X * Y);
    CHECK(pr.witness.has_value());
  }
}

TEST_CASE("basis action of the matrices") {
  int g = 2, r = 3;
  // A_j v_c = z^{4 c_j} v_c and B_j v_c = v_{c + e_j} via the word picture
  std::mt19937_64 rng(5);
  for (int j = 1; j <= g; ++j) {
    HeisWord alpha = HeisWord::one(g);
    alpha.a[j - 1] = 1;
    CHECK(heis_specialize_word(alpha, r) == schrodinger_A(g, r, j));
    HeisWord beta = HeisWord::one(g);
    beta.b[j - 1] = 1;
    CHECK(heis_specialize_word(beta, r) == schrodinger_B(g, r, j));
  }
}
