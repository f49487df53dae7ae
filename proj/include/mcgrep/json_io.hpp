#pragma once
// Serialization of scalars, algebra elements, vectors and operators. JSON
// schemas are stable: coefficients are arrays of exact "p/q" strings in the
// power basis of Q(zeta_r), term lists are sorted, and matrix entries are
// ordered by (column, row) so identical inputs produce identical bytes.

#include <string>

#include "mcgrep/heisenberg.hpp"
#include "mcgrep/laurent.hpp"
#include "mcgrep/report.hpp"
#include "mcgrep/sparse.hpp"
#include "mcgrep/uqsl2.hpp"

namespace mcgrep {

std::string cyc_to_json(const Cyc& c);
Cyc cyc_from_json(int r, const std::string& text);

std::string laurent_to_json(const Laurent<Rational>& p);
std::string laurent_cyc_to_json(const Laurent<Cyc>& p);

std::string alg_to_json(const AlgElem& x);
AlgElem alg_from_json(const std::string& text);

std::string heis_word_to_json(const HeisWord& w);
HeisWord heis_word_from_json(const std::string& text);

// {"r":..., "g":..., "basis":"ETF-lex", "entries":[[row, col, coeff], ...]}
std::string matrix_to_json(const SparseMat<Cyc>& m, int g, int r);
// row,col,coefficient-string lines, coefficient printed as a polynomial in z.
std::string matrix_to_csv(const SparseMat<Cyc>& m);

// Monomial map export: {"dims":..., "perm":[...], "scalars":[...]}.
std::string monomial_map_to_json(const SparseMat<Cyc>& m);

std::string report_to_json(const Report& rep);
std::string report_to_markdown(const Report& rep);

// Write-to-temp plus atomic rename; throws std::runtime_error on I/O errors.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace mcgrep
