// Acceptance gate: ten fixed criteria, each printed as one pass/fail line.
// All comparisons are exact (zero tolerance); projective comparisons demand
// a single scalar witness. The optional large extended run at (g, r) =
// (2, 5) is enabled with MCGREP_ACCEPT_EXTENDED=1.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <vector>

#include "ekf_reference.hpp"
#include "mcgrep/isomorphism.hpp"
#include "mcgrep/json_io.hpp"
#include "mcgrep/qcalc.hpp"
#include "mcgrep/verify.hpp"

using namespace mcgrep;

namespace {

struct GR {
  int g, r;
};

const std::vector<GR> desk_small{{1, 3}, {1, 5}, {2, 3}};
const std::vector<GR> desk_full{{1, 3}, {1, 5}, {1, 7}, {2, 3}};

bool all_pass_or_print(const Report& rep, std::string* why) {
  if (rep.all_pass()) return true;
  const CheckResult* f = rep.first_failure();
  *why = f->name + (f->detail.empty() ? "" : " [" + f->detail + "]");
  return false;
}

bool criterion_hopf_ribbon_integral(std::string* why) {
  for (int r : {3, 5, 7}) {
    SuiteConfig cfg{r, 1, 100, 0};
    Report rep = suite_hopf(cfg);
    rep.merge(suite_ribbon(cfg));
    rep.merge(suite_integral(cfg));
    if (!all_pass_or_print(rep, why)) {
      *why += " at r=" + std::to_string(r);
      return false;
    }
  }
  return true;
}

bool criterion_adjoint(std::string* why) {
  for (GR c : desk_full) {
    SuiteConfig cfg{c.r, c.g, 50, 0};
    Report rep = suite_adjoint(cfg);
    if (!all_pass_or_print(rep, why)) {
      *why += " at (g,r)=(" + std::to_string(c.g) + "," + std::to_string(c.r) + ")";
      return false;
    }
  }
  return true;
}

bool twist_forms_case(int g, int r, std::string* why) {
  for (int j = 1; j <= g; ++j) {
    Twist a{Twist::Alpha, j};
    if (twist_closed(a, g, r) != twist_hopf(a, g, r)) {
      *why = "closed alpha_" + std::to_string(j) + " differs from the ribbon route";
      return false;
    }
    Twist b{Twist::Beta, j};
    auto pr = SparseMat<Cyc>::compare_projective(twist_closed(b, g, r),
                                                 twist_hopf(b, g, r));
    if (!pr.witness.has_value()) {
      *why = "closed beta_" + std::to_string(j) + " has no projective witness";
      return false;
    }
  }
  for (int k = 1; k <= g - 1; ++k) {
    Twist t{Twist::Gamma, k};
    auto pr = SparseMat<Cyc>::compare_projective(twist_closed(t, g, r),
                                                 twist_hopf(t, g, r));
    if (!pr.witness.has_value()) {
      *why = "closed gamma_" + std::to_string(k) + " has no projective witness";
      return false;
    }
  }
  return true;
}

bool criterion_twist_forms(std::string* why) {
  for (GR c : desk_full) {
    if (!twist_forms_case(c.g, c.r, why)) {
      *why += " at (g,r)=(" + std::to_string(c.g) + "," + std::to_string(c.r) + ")";
      return false;
    }
  }
  return true;
}

bool criterion_homological_ops(std::string* why) {
  for (GR c : desk_small) {
    SuiteConfig cfg{c.r, c.g, 50, 0};
    Report rep = suite_homological(cfg);
    // this criterion covers the operator checks; twist relations are
    // covered below, but a failure anywhere here is still a failure
    if (!all_pass_or_print(rep, why)) {
      *why += " at (g,r)=(" + std::to_string(c.g) + "," + std::to_string(c.r) + ")";
      return false;
    }
  }
  return true;
}

bool criterion_crossed_identity(std::string* why) {
  for (GR c : desk_small) {
    SuiteConfig cfg{c.r, c.g, 40, 0};
    Report rep = suite_heisenberg(cfg);
    if (!all_pass_or_print(rep, why)) {
      *why += " at (g,r)=(" + std::to_string(c.g) + "," + std::to_string(c.r) + ")";
      return false;
    }
  }
  return true;
}

bool criterion_mcg_relations(std::string* why) {
  for (GR c : desk_small) {
    SuiteConfig cfg{c.r, c.g, 40, 0};
    // quantum side relations, including alpha-power non-scalarity at r in {3,5}
    Report rep = suite_quantum_mcg(cfg);
    if (!all_pass_or_print(rep, why)) {
      *why += " quantum side at (g,r)=(" + std::to_string(c.g) + "," +
              std::to_string(c.r) + ")";
      return false;
    }
  }
  return true;
}

bool criterion_correspondence(std::string* why) {
  std::vector<GR> cases = desk_full;
  if (const char* env = std::getenv("MCGREP_ACCEPT_EXTENDED"))
    if (std::string(env) == "1") cases.push_back(GR{2, 5});
  for (GR c : cases) {
    Report rep = intertwine_quantum_group(c.g, c.r);
    rep.merge(intertwine_mcg(c.g, c.r));
    if (!all_pass_or_print(rep, why)) {
      *why += " at (g,r)=(" + std::to_string(c.g) + "," + std::to_string(c.r) + ")";
      return false;
    }
  }
  return true;
}

bool criterion_torelli(std::string* why) {
  for (GR c : desk_small) {
    TwistOps hopf(
        [](const Twist& t, int gg, int rr) { return twist_hopf(t, gg, rr); },
        c.g, c.r, static_cast<int>(ad_dim(c.g, c.r)));
    SparseMat<Cyc> phi = phi_matrix(c.g, c.r);
    SparseMat<Cyc> phi_inv = phi_inverse_matrix(c.g, c.r);
    TwistWord w = torelli_word(1), winv;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
      winv.push_back({it->twist, -it->exp});
    SparseMat<Cyc> M = phi_inv * evaluate_word(w, hopf) * phi;
    SparseMat<Cyc> Minv = phi_inv * evaluate_word(winv, hopf) * phi;
    std::string detail;
    if (!torelli_integral(M, Minv, &detail)) {
      *why = "integrality scan failed at (g,r)=(" + std::to_string(c.g) + "," +
             std::to_string(c.r) + "): " + detail;
      return false;
    }
  }
  return true;
}

bool criterion_deformed(std::string* why) {
  SuiteConfig cfg{3, 1, 50, 0};
  Report rep = suite_deformed(cfg);
  return all_pass_or_print(rep, why);
}

bool criterion_appendix_identities(std::string* why) {
  // falling-brace alternating expansion, exhaustively on the stated window
  for (long n = -5; n <= 5; ++n)
    for (long k = 0; k <= 6; ++k) {
      QPoly rhs(1);
      for (long l = 0; l <= k; ++l) {
        long e = k * (k - 1) / 2 - n * (k - 2 * l) - (k - 1) * l;
        QPoly t = qbinom(k, l) * qpow(static_cast<int>(e));
        if ((k + l) % 2 == 1) t = -t;
        rhs += t;
      }
      if (qbrace_falling(n, k) != rhs) {
        *why = "falling-brace expansion fails at n=" + std::to_string(n) +
               ", k=" + std::to_string(k);
        return false;
      }
    }

  for (int r : {3, 5}) {
    // closed-form coproducts and antipodes against the generator route
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b)
        for (int c = 0; c < r; ++c) {
          TermMap fet;
          fet[{a, b, c}] = Cyc(r, 1L);
          AlgElem x = convert_to_etf(r, fet, Order::FET);
          TensorElem closed(r, 2);
          for (int d = 0; d < r; ++d)
            for (int i = 0; i <= a; ++i)
              for (int j = 0; j <= b; ++j) {
                Cyc co = qbinom_z(r, b, j);
                if (co.is_zero()) continue;
                long e = static_cast<long>(a + 2 * c) * i +
                         static_cast<long>(b) * j - 2L * d * (i + j) -
                         static_cast<long>(i + j) * (i + j);
                co *= Cyc::zeta_pow(r, e);
                TermMap left, right;
                left[{a - i, j, ((c - d) % r + r) % r}] = co;
                right[{i, b - j, d}] = Cyc(r, 1L);
                closed += tensor_of(convert_to_etf(r, left, Order::FET),
                                    convert_to_etf(r, right, Order::FET));
              }
          if (coproduct(x) != closed) {
            *why = "closed coproduct differs at r=" + std::to_string(r);
            return false;
          }
          Cyc sc = Cyc::zeta_pow(
              r, static_cast<long>(a - b + 2 * c - 1) * (a - b));
          if ((a + b) % 2 == 1) sc = -sc;
          if (antipode(x) != AlgElem::monomial(r, b, b - c, a, sc)) {
            *why = "closed antipode differs at r=" + std::to_string(r);
            return false;
          }
        }

    // ribbon closed forms against the Drinfeld-element route
    const UqData& d = UqData::get(r);
    if (d.v != normal_product(d.u, AlgElem::k_power(r, -1)) ||
        d.v_inv != normal_product(d.u_inv, AlgElem::k_power(r, 1))) {
      *why = "ribbon closed form differs from the Drinfeld route at r=" +
             std::to_string(r);
      return false;
    }

    // both printed reordering identities against the reference model
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b)
        for (int c = 0; c < r; ++c) {
          using testing::EkfTerms;
          EkfTerms Fa;
          testing::ekf_add(Fa, 0, 0, a, Cyc(r, 1L), r);
          EkfTerms lhs = Fa;
          for (int i = 0; i < b; ++i) lhs = testing::ekf_mul_E(lhs, r);
          lhs = testing::ekf_mul(
              lhs, testing::ekf_from_etf(AlgElem::t_proj(r, c)), r);
          AlgElem rhs(r);
          for (int k = 0; k <= std::min(a, b); ++k)
            rhs += AlgElem::monomial(
                r, b - k, c + a - k, a - k,
                qbinom_z(r, b, k) * qbrace_falling_z(r, a - b + 2 * c, k));
          if (lhs != testing::ekf_from_etf(rhs)) {
            *why = "right reordering differs at r=" + std::to_string(r);
            return false;
          }
          // T_a F^(b) E^c = sum_k qbinom(c,k) {2a-b+c;k} T_a E^{c-k} F^(b-k)
          EkfTerms lhs2 = testing::ekf_from_etf(AlgElem::t_proj(r, a));
          lhs2 = testing::ekf_mul_Fdiv(lhs2, b, r);
          for (int i = 0; i < c; ++i) lhs2 = testing::ekf_mul_E(lhs2, r);
          AlgElem rhs2(r);
          for (int k = 0; k <= std::min(b, c); ++k) {
            Cyc co = qbinom_z(r, c, k) *
                     qbrace_falling_z(r, 2L * a - b + c, k);
            // T_a E^{c-k} F^(b-k) = E^{c-k} T_{a+c-k} F^(b-k)
            rhs2 += AlgElem::monomial(r, c - k, a + c - k, b - k, co);
          }
          if (lhs2 != testing::ekf_from_etf(rhs2)) {
            *why = "left reordering differs at r=" + std::to_string(r);
            return false;
          }
        }
  }
  return true;
}

struct Criterion {
  const char* name;
  bool (*run)(std::string*);
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"hopf-ribbon-integral axioms and factorizability, r in {3,5,7}",
       criterion_hopf_ribbon_integral},
      {"closed-form adjoint action equals the Hopf route, desk cases",
       criterion_adjoint},
      {"Dehn twist closed forms: alpha exact, beta/gamma projective",
       criterion_twist_forms},
      {"homological operator suite: generic, specialized, nilpotency",
       criterion_homological_ops},
      {"crossed identity and clock-shift local system",
       criterion_crossed_identity},
      {"mapping class group relations on the state spaces",
       criterion_mcg_relations},
      {"basis correspondence intertwines both actions",
       criterion_correspondence},
      {"Torelli boundary word integrality in the lattice basis",
       criterion_torelli},
      {"deformed two-parameter operators at (1,3)", criterion_deformed},
      {"integral-basis identities against independent routes",
       criterion_appendix_identities},
  };

  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    std::string why;
    bool ok = false;
    try {
      ok = criteria[i].run(&why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    double secs = std::chrono::duration<double>(t1 - t0).count();
    std::printf("criterion %02zu %-4s %6.1fs  %s%s%s\n", i + 1,
                ok ? "PASS" : "FAIL", secs, criteria[i].name,
                why.empty() ? "" : " -- ", why.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  if (failures == 0) {
    std::printf("ACCEPTANCE: all %zu criteria passed\n", criteria.size());
    return 0;
  }
  std::printf("ACCEPTANCE: %d criteria FAILED\n", failures);
  return 1;
}
