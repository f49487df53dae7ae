#pragma once
// The small quantum group u_zeta(sl2) at an odd root of unity, in the
// integral basis E^l T_m F^(n). Elements are finitely supported maps from
// index triples to Q(zeta_r) scalars; the canonical storage order is
// E-T-F, with FET and EFT available as conversion targets. Also provides
// the tensor-square machinery (R-matrix, M-matrix, ribbon, coproducts)
// and the integral / cointegral pair, rescaled so every value stays in
// Q(zeta_r).

#include <array>
#include <map>
#include <vector>

#include "mcgrep/cyclotomic.hpp"
#include "mcgrep/report.hpp"
#include "mcgrep/sparse.hpp"

namespace mcgrep {

using Idx3 = std::array<int, 3>;

enum class Order { ETF, FET, EFT };

class AlgElem {
 public:
  using Terms = std::map<Idx3, Cyc>;

  AlgElem() : r_(0) {}
  explicit AlgElem(int r) : r_(r) {}

  static AlgElem unit(int r);                      // sum of all T_m
  static AlgElem gen_E(int r);                     // E
  static AlgElem gen_F1(int r);                    // F^(1)
  static AlgElem k_power(int r, long a);           // K^a via the T-expansion
  static AlgElem t_proj(int r, long m);            // T_m
  // E^l T_m F^(n); l, n outside [0, r) give zero, m reduces mod r.
  static AlgElem monomial(int r, long l, long m, long n, const Cyc& c);

  int r() const { return r_; }
  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  void add_term(long l, long m, long n, const Cyc& c);

  AlgElem& operator+=(const AlgElem& o);
  AlgElem& operator-=(const AlgElem& o);
  friend AlgElem operator+(AlgElem a, const AlgElem& b) { return a += b; }
  friend AlgElem operator-(AlgElem a, const AlgElem& b) { return a -= b; }
  AlgElem scaled(const Cyc& c) const;
  friend bool operator==(const AlgElem& a, const AlgElem& b) {
    return a.r_ == b.r_ && a.t_ == b.t_;
  }
  friend bool operator!=(const AlgElem& a, const AlgElem& b) { return !(a == b); }

 private:
  int r_;
  Terms t_;
};

// Product in the canonical E-T-F normal form. Intermediate E powers >= r,
// F divided-power indices >= r, and T-index collisions annihilate.
AlgElem normal_product(const AlgElem& x, const AlgElem& y);
AlgElem alg_power(const AlgElem& x, long e);

class TensorElem {
 public:
  using Key = std::vector<Idx3>;
  using Terms = std::map<Key, Cyc>;

  TensorElem() : r_(0), arity_(0) {}
  TensorElem(int r, int arity) : r_(r), arity_(arity) {}

  int r() const { return r_; }
  int arity() const { return arity_; }
  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  void add_term(const Key& k, const Cyc& c);

  TensorElem& operator+=(const TensorElem& o);
  TensorElem& operator-=(const TensorElem& o);
  friend TensorElem operator+(TensorElem a, const TensorElem& b) { return a += b; }
  friend TensorElem operator-(TensorElem a, const TensorElem& b) { return a -= b; }
  TensorElem scaled(const Cyc& c) const;
  friend bool operator==(const TensorElem& a, const TensorElem& b) {
    return a.r_ == b.r_ && a.arity_ == b.arity_ && a.t_ == b.t_;
  }
  friend bool operator!=(const TensorElem& a, const TensorElem& b) {
    return !(a == b);
  }

 private:
  int r_;
  int arity_;
  Terms t_;
};

TensorElem tensor_of(const AlgElem& a, const AlgElem& b);
// Componentwise algebra product of equal-arity tensors.
TensorElem tensor_mul(const TensorElem& x, const TensorElem& y);
// Swap legs i and j.
TensorElem tensor_swap(const TensorElem& x, int i, int j);
// Insert the unit into a new leg at position pos (arity grows by one).
TensorElem tensor_widen(const TensorElem& x, int pos);

// Hopf structure, extended from generator values (the primary route).
TensorElem coproduct(const AlgElem& x);
AlgElem antipode(const AlgElem& x);
Cyc counit(const AlgElem& x);
// Apply Delta / antipode / counit to one leg of a tensor.
TensorElem coproduct_leg(const TensorElem& x, int leg);
TensorElem antipode_leg(const TensorElem& x, int leg);
TensorElem counit_leg(const TensorElem& x, int leg);  // arity drops by one
// Left-nested iterated coproduct with k + 1 output legs (k >= 0).
TensorElem iterated_coproduct(const AlgElem& x, int k);

// Basis conversions from the canonical ETF order. Non-ETF term maps are
// plain (first, second, T) exponent triples in the given order.
using TermMap = std::map<Idx3, Cyc>;
TermMap convert_from_etf(const AlgElem& x, Order target);
AlgElem convert_to_etf(int r, const TermMap& terms, Order source);

// Structural constants, computed once per r behind a read-only handle.
struct UqData {
  int r = 0;
  AlgElem unit, E, F1, K, Kinv;
  TensorElem R, R21, M;       // R-matrix, flip, double braiding
  AlgElem u, u_inv;           // Drinfeld element and inverse
  AlgElem v, v_inv;           // ribbon element (closed form) and inverse
  AlgElem Lambda;             // rescaled cointegral
  TensorElem Delta_v, Delta_vinv;
  static const UqData& get(int r);
};

TensorElem r_matrix(int r);
TensorElem m_matrix(int r);
AlgElem drinfeld_u(int r);
AlgElem pivot(int r);  // K
AlgElem ribbon_v(int r);
AlgElem ribbon_v_inv(int r);

// Left integral, normalized so that all of its values lie in Z[zeta]
// (the sqrt(r)-free rescaling; the cointegral below absorbs the factor).
Cyc integral_lambda(const AlgElem& x);
// Rescaled two-sided cointegral Lambda' with lambda'(Lambda') = 1.
AlgElem cointegral(int r);

// Flat index of an ETF monomial: l * r^2 + m * r + n.
int etf_flat(int r, const Idx3& i);
Idx3 etf_unflat(int r, int flat);

// Matrix of the Drinfeld map f -> (f (x) id)(M) in the integral basis.
SparseMat<Cyc> drinfeld_map_matrix(int r);
// Full rank of the Drinfeld map plus the rescaled cointegral identity
// (id (x) lambda')(M) = r * Lambda'.
bool factorizability_check(int r, std::string* detail = nullptr);

// Exhaustive Hopf/ribbon/integral axiom verification.
Report hopf_axiom_suite(int r);

}  // namespace mcgrep
