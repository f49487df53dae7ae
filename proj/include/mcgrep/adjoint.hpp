#pragma once
// Tensor powers of the adjoint representation of u_zeta(sl2). Basis vectors
// of ad^(x)g are g-tuples of integral-basis triples; the flat index is
// lexicographic in (l_1, m_1, n_1, ..., l_g, m_g, n_g), which fixes the
// matrix serialization. Operators are built column by column.

#include <vector>

#include "mcgrep/sparse.hpp"
#include "mcgrep/uqsl2.hpp"

namespace mcgrep {

inline long ad_dim(int g, int r) {
  long d = 1;
  for (int i = 0; i < 3 * g; ++i) d *= r;
  return d;
}

int ad_flat(int r, const std::vector<Idx3>& idx);
std::vector<Idx3> ad_unflat(int g, int r, int flat);

enum class QGen { E, F1, K };

// x acting on the basis vector with the given factors, through the
// iterated coproduct and the factorwise y -> x' y S(x'') threading.
SparseVec<Cyc> adjoint_act_generic(const AlgElem& x, int g,
                                   const std::vector<Idx3>& factors);

// Closed-form action of a generator on a basis vector.
SparseVec<Cyc> adjoint_act_closed(QGen gen, int g, int r,
                                  const std::vector<Idx3>& factors);

SparseMat<Cyc> adjoint_operator_generic(const AlgElem& x, int g);
SparseMat<Cyc> adjoint_operator_closed(QGen gen, int g, int r);

// Embed a one-factor operator (dimension r^3) at factor j (1-based) of
// ad^(x)g, or a two-factor operator (dimension r^6) at factors (j, j+1).
SparseMat<Cyc> embed_factor_op(const SparseMat<Cyc>& op, int arity, int j,
                               int g, int r);

}  // namespace mcgrep
