#pragma once
// The monomial basis correspondence between the small homological module
// and ad^(x)g: index transform (a, b, c) -> (iota(bar b), bar c, bar a)
// with the unit normalization N(a, b, c), plus the intertwining reports
// for the quantum group action (exact) and the Dehn twist actions
// (projective, with witness scalars).

#include "mcgrep/homological.hpp"
#include "mcgrep/report.hpp"

namespace mcgrep {

// Exponent of zeta in N(a, b, c), computed over the integers.
long phi_normalization_exponent(const std::vector<int>& a,
                                const std::vector<int>& b,
                                const std::vector<int>& c);

// Monomial matrix: homological flat index (columns) to ad flat index (rows).
SparseMat<Cyc> phi_matrix(int g, int r);
SparseMat<Cyc> phi_inverse_matrix(int g, int r);

// Exact intertwining of E, F^(1), K through the correspondence.
Report intertwine_quantum_group(int g, int r);

// The quantum-side label matching a homological twist generator through the
// basis correspondence, which reverses the handle enumeration.
Twist quantum_label(const Twist& t, int g);

// Projective intertwining of every Dehn twist generator; witness scalars
// are reported in the detail strings.
Report intertwine_mcg(int g, int r);

}  // namespace mcgrep
