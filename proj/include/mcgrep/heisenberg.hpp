#pragma once
// The discrete Heisenberg group H_g in the normal form q^c alpha^a beta^b,
// its integral group ring, the representation phi of surface braid
// generators by clock-and-shift matrices A_j, B_j over Z[zeta], the Dehn
// twist matrices psi, and the push-forward table coupling the two.

#include <map>
#include <string>
#include <vector>

#include "mcgrep/cyclotomic.hpp"
#include "mcgrep/quantum_mcg.hpp"
#include "mcgrep/sparse.hpp"

namespace mcgrep {

struct HeisWord {
  long c = 0;
  std::vector<long> a, b;  // length g

  static HeisWord one(int g) { return {0, std::vector<long>(g, 0), std::vector<long>(g, 0)}; }
  int genus() const { return static_cast<int>(a.size()); }
  friend bool operator<(const HeisWord& x, const HeisWord& y) {
    if (x.c != y.c) return x.c < y.c;
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  }
  friend bool operator==(const HeisWord& x, const HeisWord& y) {
    return x.c == y.c && x.a == y.a && x.b == y.b;
  }
  // (q^c a^a b^b)(q^c' a^a' b^b') = q^{c+c'+4 a.b'} a^{a+a'} b^{b+b'}
  friend HeisWord operator*(const HeisWord& x, const HeisWord& y);
  HeisWord inverse() const;
};

class HeisRingElem {
 public:
  HeisRingElem() : g_(0) {}
  explicit HeisRingElem(int g) : g_(g) {}
  static HeisRingElem one(int g);
  static HeisRingElem word(const HeisWord& w, const BigInt& coeff = 1);
  // q^m as a ring element
  static HeisRingElem q_power(int g, long m);
  static HeisRingElem alpha(int g, int j, long e = 1);  // alpha_j^e
  static HeisRingElem beta(int g, int j, long e = 1);

  int genus() const { return g_; }
  const std::map<HeisWord, BigInt>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  void add_term(const HeisWord& w, const BigInt& n);

  HeisRingElem& operator+=(const HeisRingElem& o);
  HeisRingElem& operator-=(const HeisRingElem& o);
  friend HeisRingElem operator+(HeisRingElem a, const HeisRingElem& b) { return a += b; }
  friend HeisRingElem operator-(HeisRingElem a, const HeisRingElem& b) { return a -= b; }
  friend HeisRingElem operator*(const HeisRingElem& x, const HeisRingElem& y);
  friend bool operator==(const HeisRingElem& a, const HeisRingElem& b) {
    return a.g_ == b.g_ && a.t_ == b.t_;
  }
  friend bool operator!=(const HeisRingElem& a, const HeisRingElem& b) {
    return !(a == b);
  }
  std::string str() const;

 private:
  int g_;
  std::map<HeisWord, BigInt> t_;
};

// Clock matrix A_j and shift matrix B_j on (C^r)^(x)g; A_j v_c =
// zeta^{4 c_j} v_c and B_j v_c = v_{c + e_j}, factor 1 slowest.
SparseMat<Cyc> schrodinger_A(int g, int r, int j);
SparseMat<Cyc> schrodinger_B(int g, int r, int j);

// phi on a normal-form word: zeta^c A^a B^b applied in that order.
SparseMat<Cyc> heis_specialize_word(const HeisWord& w, int r);
SparseMat<Cyc> heis_specialize(const HeisRingElem& x, int r);

// Surface braid generators, including the derived ones.
struct BraidGen {
  enum Kind { Sigma, Alpha, Beta, AlphaTilde, Gamma, Delta } kind;
  int index;  // 1-based; Gamma requires index <= g-1
  std::string str() const;
};
using BraidWord = std::vector<std::pair<BraidGen, int>>;  // (generator, +-1)

// phi of a braid generator: derived generators expand through their
// defining words before specializing.
SparseMat<Cyc> phi_braid(const BraidGen& gen, int g, int r);
SparseMat<Cyc> phi_braid_word(const BraidWord& w, int g, int r);

// Dehn twist matrices psi and their exact inverses.
SparseMat<Cyc> psi_matrix(const Twist& t, int g, int r);
SparseMat<Cyc> psi_inverse(const Twist& t, int g, int r);

// Push-forward of a braid generator under a twist generator. Only braid
// generators from the set {sigma_i, beta_j, delta_j} are tabulated; other
// inputs throw.
BraidWord braid_pushforward(const Twist& t, const BraidGen& gen, int g);

// Dimension of the joint commutant of {A_j, B_j} inside r^g x r^g matrices.
int commutant_dimension(int g, int r);

}  // namespace mcgrep
