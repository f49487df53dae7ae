#pragma once
// Homological modules: the generic module over Z[H_g] spanned by Gamma(a,b)
// with the operators that realize the quantum sl2 generators, its
// specialization onto the basis Gamma(a,b) (x) v_c, the deformed variant
// over Z[zeta][s_j, t_j], and the homological Dehn twist operators.
//
// Coefficient convention for the generic flavor: operators multiply new
// Heisenberg factors on the LEFT of existing coefficients. Basis targets
// with a negative entry are dropped; in the specialized module, targets
// with an entry >= r are dropped and the accompanying coefficient vanishes
// at the root.

#include <map>
#include <vector>

#include "mcgrep/heisenberg.hpp"
#include "mcgrep/laurent.hpp"
#include "mcgrep/quantum_mcg.hpp"
#include "mcgrep/sparse.hpp"

namespace mcgrep {

struct GenIdx {
  std::vector<int> a, b;
  friend bool operator<(const GenIdx& x, const GenIdx& y) {
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  }
  friend bool operator==(const GenIdx& x, const GenIdx& y) {
    return x.a == y.a && x.b == y.b;
  }
};

class HomGeneric {
 public:
  HomGeneric() : g_(0) {}
  explicit HomGeneric(int g) : g_(g) {}
  static HomGeneric basis(const GenIdx& idx);

  int genus() const { return g_; }
  const std::map<GenIdx, HeisRingElem>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  void add_term(const GenIdx& idx, const HeisRingElem& h);

  HomGeneric& operator+=(const HomGeneric& o);
  HomGeneric& operator-=(const HomGeneric& o);
  friend HomGeneric operator+(HomGeneric a, const HomGeneric& b) { return a += b; }
  friend HomGeneric operator-(HomGeneric a, const HomGeneric& b) { return a -= b; }
  friend bool operator==(const HomGeneric& a, const HomGeneric& b) {
    return a.g_ == b.g_ && a.t_ == b.t_;
  }
  friend bool operator!=(const HomGeneric& a, const HomGeneric& b) {
    return !(a == b);
  }

 private:
  int g_;
  std::map<GenIdx, HeisRingElem> t_;
};

HomGeneric op_E_generic(const HomGeneric& x);
HomGeneric op_F1_generic(const HomGeneric& x);
HomGeneric op_K_generic(const HomGeneric& x);
HomGeneric op_K_inv_generic(const HomGeneric& x);
// The one-variable right-multiplication family, genus 1 only.
HomGeneric op_Ftilde_k(const HomGeneric& x, int k);

// Specialized flavor: flat index runs lexicographically over the factor
// triples (a_1, b_1, c_1, ..., a_g, b_g, c_g), all entries in [0, r).
inline long hom_dim(int g, int r) {
  long d = 1;
  for (int i = 0; i < 3 * g; ++i) d *= r;
  return d;
}
int hom_flat(int r, const std::vector<int>& a, const std::vector<int>& b,
             const std::vector<int>& c);
void hom_unflat(int g, int r, int flat, std::vector<int>& a,
                std::vector<int>& b, std::vector<int>& c);

// Specialization of a generic vector against a base c-index: q -> zeta,
// alpha_j -> zeta^{4 c_j}, beta_j -> shift of c_j.
SparseVec<Cyc> specialize_hom(const HomGeneric& x, int r,
                              const std::vector<int>& c);

// Deformed coefficients live in Z[zeta][s_1,t_1,...,s_g,t_g] with variable
// order (s_1, t_1, ..., s_g, t_g).
using DefVec = std::map<int, Laurent<Cyc>>;
DefVec deform_hom(const HomGeneric& x, int r, const std::vector<int>& c);

// Specialized operators in closed form.
SparseVec<Cyc> op_spec(QGen gen, int g, int r, int flat);
SparseMat<Cyc> op_spec_matrix(QGen gen, int g, int r);

// Deformed operators (generic route followed by the deformed substitution).
DefVec op_deformed(QGen gen, int g, int r, int flat);

// Homological Dehn twists on the specialized module, printed sums with
// their global scalars dropped; alpha/beta act on factor j, gamma on
// factors (k, k+1).
SparseMat<Cyc> hom_twist(const Twist& t, int g, int r);

}  // namespace mcgrep
