#pragma once
// Dehn twist operators on ad^(x)g: the Hopf-algebraic form (ribbon element,
// integral) and the closed-form sums, plus formal word evaluation, braid and
// commutation relation checks, and the Torelli integrality scan.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mcgrep/adjoint.hpp"
#include "mcgrep/sparse.hpp"

namespace mcgrep {

struct Twist {
  enum Kind { Alpha, Beta, Gamma } kind;
  int index;  // 1-based; Gamma requires 1 <= index <= g-1

  friend bool operator<(const Twist& a, const Twist& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.index < b.index;
  }
  friend bool operator==(const Twist& a, const Twist& b) {
    return a.kind == b.kind && a.index == b.index;
  }
  std::string str() const;
};

struct WordToken {
  Twist twist;
  int exp;  // +1 or -1
};
using TwistWord = std::vector<WordToken>;

// Whitespace-separated tokens a<j>, b<j>, g<k>, each optionally ^-1.
// Leftmost token acts last (function composition order). Throws
// std::invalid_argument on malformed input or out-of-range indices.
TwistWord parse_twist_word(const std::string& text, int g);

void validate_twist(const Twist& t, int g);

// Hopf-form twist operators:
//   alpha_j : x_j -> v^{-1} x_j
//   beta_j  : x_j -> lambda'(v_(2) x_j) S(v_(1))     (projective only)
//   gamma_k : x_k (x) x_{k+1} -> x_k S(v^{-1}_(1)) (x) v^{-1}_(2) x_{k+1}
SparseMat<Cyc> twist_hopf(const Twist& t, int g, int r);

// Closed-form twist operators; alpha is exact, beta and gamma carry the
// printed coefficient sums with their global scalars dropped.
SparseMat<Cyc> twist_closed(const Twist& t, int g, int r);

// Provides cached generator operators and their inverses (by exact solve).
class TwistOps {
 public:
  using Builder = std::function<SparseMat<Cyc>(const Twist&, int g, int r)>;
  TwistOps(Builder builder, int g, int r, int dim)
      : builder_(std::move(builder)), g_(g), r_(r), dim_(dim) {}

  int dim() const { return dim_; }
  int genus() const { return g_; }
  int root_order() const { return r_; }
  const SparseMat<Cyc>& op(const Twist& t);
  const SparseMat<Cyc>& op_inv(const Twist& t);

 private:
  Builder builder_;
  int g_, r_, dim_;
  std::map<Twist, SparseMat<Cyc>> ops_, inv_ops_;
};

SparseMat<Cyc> evaluate_word(const TwistWord& w, TwistOps& ops);

struct RelationResult {
  bool pass = false;
  std::optional<Cyc> witness;
  std::string detail;
};

// Braid relation rho(x) rho(y) rho(x) = c rho(y) rho(x) rho(y).
RelationResult braid_relation_check(const Twist& x, const Twist& y,
                                    TwistOps& ops);
// Commutation [rho(x), rho(y)] = 0 projectively; witness 1 means exact.
RelationResult commute_relation_check(const Twist& x, const Twist& y,
                                      TwistOps& ops);

// Normalize-and-scan integrality: find c = 1/e over distinct nonzero
// entries e of M such that all entries of cM and (cM)^{-1} lie in Z[zeta].
bool torelli_integral(const SparseMat<Cyc>& M, const SparseMat<Cyc>& Minv,
                      std::string* detail = nullptr);

// The shipped boundary-parallel Torelli word (tau_alpha_j tau_beta_j)^6.
TwistWord torelli_word(int j);

}  // namespace mcgrep
