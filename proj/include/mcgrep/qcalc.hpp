#pragma once
// Quantum combinatorics: braces {n} = q^n - q^{-n}, quantum integers,
// factorials, binomials, multinomials and falling brace products, in the
// generic one-variable ring and specialized at zeta_r. Binomials are
// produced by exact polynomial division in the generic ring; specialized
// values always go through the generic computation first.

#include <vector>

#include "mcgrep/cyclotomic.hpp"
#include "mcgrep/laurent.hpp"

namespace mcgrep {

QPoly qbrace(long n);                 // {n}_q
QPoly qint(long n);                   // [n]_q, odd symmetry in n
QPoly qfact(long k);                  // [k]_q!, k >= 0
QPoly qbinom(long k, long l);         // 0 unless 0 <= l <= k
QPoly qmultinom(long k, const std::vector<long>& parts);
QPoly qbrace_falling(long n, long k);  // {n;k}_q, k >= 0

// Specializations at zeta_r (cached per r where it pays off).
Cyc qbrace_z(int r, long n);
Cyc qint_z(int r, long n);
Cyc qfact_z(int r, long k);
Cyc qbinom_z(int r, long k, long l);
Cyc qmultinom_z(int r, long k, const std::vector<long>& parts);
Cyc qbrace_falling_z(int r, long n, long k);

// The literal sum G(c) = sum_{l=0}^{r-1} zeta^{-2l(l-1) + 4cl}.
Cyc gauss_sum(long c, int r);

}  // namespace mcgrep
