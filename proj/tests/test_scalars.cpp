#include <doctest.h>

#include <random>

#include "mcgrep/cyclotomic.hpp"
#include "mcgrep/qcalc.hpp"

using namespace mcgrep;

namespace {

Cyc rnd_cyc(int r, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  int phi = static_cast<int>(cyclotomic_polynomial(r).size()) - 1;
  std::vector<Rational> c(phi);
  for (auto& q : c) {
    q = Rational(num(rng), den(rng));
    q.canonicalize();
  }
  return Cyc::from_coords(r, std::move(c));
}

}  // namespace

TEST_CASE("cyclotomic polynomials for small odd r") {
  auto p3 = cyclotomic_polynomial(3);
  CHECK(p3 == std::vector<BigInt>{1, 1, 1});
  auto p5 = cyclotomic_polynomial(5);
  CHECK(p5 == std::vector<BigInt>{1, 1, 1, 1, 1});
  auto p9 = cyclotomic_polynomial(9);
  CHECK(p9 == std::vector<BigInt>{1, 0, 0, 1, 0, 0, 1});
  CHECK_THROWS_AS(cyclotomic_polynomial(4), std::invalid_argument);
  CHECK_THROWS_AS(cyclotomic_polynomial(1), std::invalid_argument);
}

TEST_CASE("field arithmetic basics in Q(zeta_3)") {
  int r = 3;
  Cyc one(r, 1L);
  Cyc z = Cyc::zeta_pow(r, 1);
  // (1 + z)(1 + z^2) = 2 + z + z^2 = 1 since 1 + z + z^2 = 0
  CHECK((one + z) * (one + Cyc::zeta_pow(r, 2)) == one);
  // zeta^r reduces to 1, and the geometric sum vanishes for prime r
  CHECK(Cyc::zeta_pow(r, 3) == one);
  Cyc s(r);
  for (int k = 0; k < r; ++k) s += Cyc::zeta_pow(r, k);
  CHECK(s.is_zero());
}

TEST_CASE("inverse and conjugation") {
  for (int r : {3, 5, 7, 9}) {
    Cyc z = Cyc::zeta_pow(r, 1);
    CHECK(z.inv() == Cyc::zeta_pow(r, r - 1));
    for (int a = 0; a < r; ++a)
      CHECK(Cyc::zeta_pow(r, a).conj(r - 1) == Cyc::zeta_pow(r, -a));
    CHECK_THROWS_AS(Cyc(r).inv(), std::domain_error);
  }
  CHECK_THROWS_AS(Cyc::zeta_pow(9, 1).conj(3), std::invalid_argument);
}

TEST_CASE("ring axioms on random elements") {
  for (int r : {3, 5, 7, 9}) {
    std::mt19937_64 rng(2024 + r);
    for (int i = 0; i < 200; ++i) {
      Cyc a = rnd_cyc(r, rng), b = rnd_cyc(r, rng), c = rnd_cyc(r, rng);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a + b) * c == a * c + b * c);
      if (!a.is_zero()) CHECK(a * a.inv() == Cyc(r, 1L));
    }
  }
}

TEST_CASE("quantum integers and braces") {
  QPoly expected(1);
  expected.add_term({1}, Rational(1));
  expected.add_term({-1}, Rational(1));
  CHECK(qint(2) == expected);
  CHECK(qint(-2) == -expected);
  CHECK(qbrace(0).is_zero());
  CHECK(qint(1) == qone());
  // {n}_q = [n]_q * {1}_q
  for (long n = -6; n <= 6; ++n) CHECK(qbrace(n) == qint(n) * qbrace(1));
}

TEST_CASE("quantum binomial by exact division") {
  QPoly b42(1);
  for (int e : {4, 2, -2, -4}) b42.add_term({e}, Rational(1));
  b42.add_term({0}, Rational(2));
  CHECK(qbinom(4, 2) == b42);
  CHECK(qbinom(3, -1).is_zero());
  CHECK(qbinom(3, 4).is_zero());
  CHECK(qbinom(5, 0) == qone());
  CHECK(qbinom(5, 5) == qone());
}

TEST_CASE("Pascal identity for quantum binomials") {
  for (long k = 1; k <= 8; ++k)
    for (long l = 0; l <= k; ++l) {
      QPoly rhs = qbinom(k - 1, l - 1) * qpow(static_cast<int>(-k + l)) +
                  qbinom(k - 1, l) * qpow(static_cast<int>(l));
      CHECK(qbinom(k, l) == rhs);
    }
}

TEST_CASE("specialization at the root of unity") {
  for (int r : {3, 5, 7}) {
    CHECK(specialize(qint(r), r).is_zero());
    CHECK(specialize(qpow(2 * r), r) == Cyc(r, 1L));
  }
  CHECK(specialize(qbinom(3, 1), 3).is_zero());
}

TEST_CASE("binomials vanish at the root when the top overflows") {
  for (int r : {3, 5, 7})
    for (long k = 0; k <= r - 1; ++k)
      for (long l = 0; l <= r - 1; ++l) {
        Cyc v = qbinom_z(r, k + l, k);
        if (k + l >= r)
          CHECK(v.is_zero());
        else
          CHECK_FALSE(v.is_zero());
      }
}

TEST_CASE("signed binomial values at the root") {
  // qbinom(r-1, n) specializes to (-1)^n
  for (int r : {3, 5, 7})
    for (long nn = 0; nn <= r - 1; ++nn) {
      Cyc expect(r, (nn % 2 == 0) ? 1L : -1L);
      CHECK(qbinom_z(r, r - 1, nn) == expect);
    }
  CHECK(qbinom_z(5, 4, 2) == Cyc(5, 1L));
  CHECK(qbinom_z(5, 4, 1) == Cyc(5, -1L));
}

TEST_CASE("multinomials factor through binomials") {
  CHECK(qmultinom(5, {2, 1}) == qbinom(5, 2) * qbinom(3, 1));
  CHECK(qmultinom(4, {5}).is_zero());
  CHECK(qmultinom(4, {2, -1}).is_zero());
  CHECK(qmultinom(6, {}) == qone());
}

TEST_CASE("falling brace product and the alternating-sum expansion") {
  // {n;k}_q = sum_l (-1)^{k+l} qbinom(k,l) q^{k(k-1)/2 - n(k-2l) - (k-1)l}
  for (long n = -5; n <= 5; ++n)
    for (long k = 0; k <= 6; ++k) {
      QPoly rhs(1);
      for (long l = 0; l <= k; ++l) {
        long e = k * (k - 1) / 2 - n * (k - 2 * l) - (k - 1) * l;
        QPoly t = qbinom(k, l) * qpow(static_cast<int>(e));
        if ((k + l) % 2 == 1) t = -t;
        rhs += t;
      }
      CHECK(qbrace_falling(n, k) == rhs);
    }
}

TEST_CASE("gauss sum facts that stay inside the field") {
  for (int r : {3, 5, 7}) {
    Cyc g0 = gauss_sum(0, r);
    for (long c = 0; c < r; ++c) {
      Cyc g = gauss_sum(c, r);
      CHECK(g * g.conj(r - 1) == Cyc(r, static_cast<long>(r)));
      CHECK(g == Cyc::zeta_pow(r, 2 * c * (c + 1)) * g0);
    }
  }
  // direct evaluation at r=3, c=0: terms zeta^0, zeta^0, zeta^{-4}
  Cyc direct = Cyc::zeta_pow(3, 0) + Cyc::zeta_pow(3, -2 * 1 * 0) +
               Cyc::zeta_pow(3, -2 * 2 * 1);
  CHECK(gauss_sum(0, 3) == direct);
  CHECK(direct == Cyc(3, 2L) + Cyc::zeta_pow(3, 2));
}

TEST_CASE("rational string round trip") {
  CHECK(rational_str(Rational(-2, 3)) == "-2/3");
  CHECK(rational_parse("7/2") == Rational(7, 2));
  CHECK(rational_parse("-4/8") == Rational(-1, 2));
}
