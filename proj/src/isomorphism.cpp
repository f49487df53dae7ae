#include "mcgrep/isomorphism.hpp"

#include <cassert>

#include "mcgrep/adjoint.hpp"

namespace mcgrep {

long phi_normalization_exponent(const std::vector<int>& a,
                                const std::vector<int>& b,
                                const std::vector<int>& c) {
  const int g = static_cast<int>(a.size());
  long e = 0;
  for (int j = 0; j < g; ++j) {
    assert(static_cast<long>(a[j]) * (a[j] - 1) % 2 == 0);
    e += 2L * (a[j] + b[j]) * j + static_cast<long>(a[j]) * (a[j] - 1) / 2 +
         2L * a[j] * b[j] - 2L * (b[j] - 1) * c[j];
  }
  for (int j = 0; j < g; ++j)
    for (int k = j + 1; k < g; ++k) e += 2L * (a[j] + b[j]) * (a[k] + b[k]);
  return e;
}

SparseMat<Cyc> phi_matrix(int g, int r) {
  const long dim = hom_dim(g, r);
  SparseMat<Cyc> phi(static_cast<int>(dim), static_cast<int>(dim));
  std::vector<int> a, b, c;
  for (long col = 0; col < dim; ++col) {
    hom_unflat(g, r, static_cast<int>(col), a, b, c);
    // quantum factor j carries (r - 1 - b_{g+1-j}, c_{g+1-j}, a_{g+1-j})
    std::vector<Idx3> target(g);
    for (int j = 0; j < g; ++j) {
      int src = g - 1 - j;
      target[j] = Idx3{r - 1 - b[src], c[src], a[src]};
    }
    phi.add(ad_flat(r, target), static_cast<int>(col),
            Cyc::zeta_pow(r, phi_normalization_exponent(a, b, c)));
  }
  return phi;
}

SparseMat<Cyc> phi_inverse_matrix(int g, int r) {
  const long dim = hom_dim(g, r);
  SparseMat<Cyc> inv(static_cast<int>(dim), static_cast<int>(dim));
  SparseMat<Cyc> phi = phi_matrix(g, r);
  for (int col = 0; col < dim; ++col) {
    const auto& column = phi.col(col);
    assert(column.size() == 1);
    const auto& [row, scalar] = *column.begin();
    inv.add(col, row, scalar.inv());
  }
  return inv;
}

Report intertwine_quantum_group(int g, int r) {
  Report rep;
  SparseMat<Cyc> phi = phi_matrix(g, r);
  struct Case {
    QGen gen;
    const char* name;
  };
  for (const Case& cs : {Case{QGen::E, "E"}, Case{QGen::F1, "F1"},
                         Case{QGen::K, "K"}}) {
    SparseMat<Cyc> lhs = phi * op_spec_matrix(cs.gen, g, r);
    SparseMat<Cyc> rhs = adjoint_operator_closed(cs.gen, g, r) * phi;
    bool ok = (lhs == rhs);
    std::string detail;
    if (!ok) {
      auto diff = lhs - rhs;
      for (int j = 0; j < diff.cols() && detail.empty(); ++j)
        if (!diff.col(j).empty())
          detail = "first mismatch at column " + std::to_string(j);
    }
    rep.add(std::string("iso.intertwine-exact.") + cs.name, ok, detail);
  }
  return rep;
}

Twist quantum_label(const Twist& t, int g) {
  // The basis correspondence reverses the handle enumeration: homological
  // factor j meets quantum tensor factor g + 1 - j, so generator labels
  // reverse accordingly (gamma_k sits between handles k and k + 1, hence
  // maps to gamma_{g-k}).
  switch (t.kind) {
    case Twist::Alpha:
    case Twist::Beta:
      return Twist{t.kind, g + 1 - t.index};
    case Twist::Gamma:
      return Twist{t.kind, g - t.index};
  }
  throw std::logic_error("quantum_label: bad kind");
}

Report intertwine_mcg(int g, int r) {
  Report rep;
  SparseMat<Cyc> phi = phi_matrix(g, r);
  SparseMat<Cyc> phi_inv = phi_inverse_matrix(g, r);
  std::vector<Twist> gens;
  for (int j = 1; j <= g; ++j) {
    gens.push_back(Twist{Twist::Alpha, j});
    gens.push_back(Twist{Twist::Beta, j});
  }
  for (int k = 1; k <= g - 1; ++k) gens.push_back(Twist{Twist::Gamma, k});
  for (const Twist& t : gens) {
    SparseMat<Cyc> hom_side = phi * hom_twist(t, g, r) * phi_inv;
    SparseMat<Cyc> quantum_side = twist_hopf(quantum_label(t, g), g, r);
    auto pr = SparseMat<Cyc>::compare_projective(hom_side, quantum_side);
    std::string detail;
    if (pr.witness.has_value())
      detail = "witness " + pr.witness->str();
    else
      detail = "mismatch at (" + std::to_string(pr.row) + "," +
               std::to_string(pr.col) + ")";
    rep.add("iso.intertwine-projective." + t.str(), pr.witness.has_value(),
            detail);
  }
  return rep;
}

}  // namespace mcgrep
