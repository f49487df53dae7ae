#include <doctest.h>

#include "mcgrep/isomorphism.hpp"

using namespace mcgrep;

TEST_CASE("phi is a monomial matrix with unit scalars") {
  for (int r : {3, 5}) {
    SparseMat<Cyc> phi = phi_matrix(1, r);
    std::vector<bool> row_hit(static_cast<size_t>(hom_dim(1, r)), false);
    for (int j = 0; j < phi.cols(); ++j) {
      REQUIRE(phi.col(j).size() == 1);
      const auto& [row, scalar] = *phi.col(j).begin();
      CHECK_FALSE(row_hit[row]);
      row_hit[row] = true;
      // scalar is a power of zeta
      bool is_unit = false;
      for (int e = 0; e < r; ++e)
        if (scalar == Cyc::zeta_pow(r, e)) is_unit = true;
      CHECK(is_unit);
    }
    SparseMat<Cyc> id =
        SparseMat<Cyc>::identity(static_cast<int>(hom_dim(1, r)), Cyc(r, 1L));
    CHECK(phi * phi_inverse_matrix(1, r) == id);
    CHECK(phi_inverse_matrix(1, r) * phi == id);
  }
}

TEST_CASE("phi basis examples at g=1 r=3") {
  int r = 3;
  SparseMat<Cyc> phi = phi_matrix(1, r);
  // Gamma(0,0) (x) v_0 -> E^2 T_0 F^(0) with unit normalization
  {
    int col = hom_flat(r, {0}, {0}, {0});
    REQUIRE(phi.col(col).size() == 1);
    const auto& [row, scalar] = *phi.col(col).begin();
    CHECK(row == ad_flat(r, {Idx3{2, 0, 0}}));
    CHECK(scalar == Cyc(r, 1L));
  }
  // Gamma(1,1) (x) v_1 -> z^2 E^{r-2} T_1 F^(1)
  {
    int col = hom_flat(r, {1}, {1}, {1});
    REQUIRE(phi.col(col).size() == 1);
    const auto& [row, scalar] = *phi.col(col).begin();
    CHECK(row == ad_flat(r, {Idx3{r - 2, 1, 1}}));
    CHECK(scalar == Cyc::zeta_pow(r, 2));
  }
}

TEST_CASE("quantum group intertwining is exact at (1,3)") {
  Report rep = intertwine_quantum_group(1, 3);
  for (const auto& c : rep.checks) {
    INFO(c.name, " ", c.detail);
    CHECK(c.pass);
  }
}

TEST_CASE("mcg intertwining is projective at (1,3)") {
  Report rep = intertwine_mcg(1, 3);
  for (const auto& c : rep.checks) {
    INFO(c.name, " ", c.detail);
    CHECK(c.pass);
  }
}
