// Command-line front end: verification suites, Dehn twist word evaluation,
// basis-correspondence export, and aggregate reports.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#include "mcgrep/isomorphism.hpp"
#include "mcgrep/json_io.hpp"
#include "mcgrep/verify.hpp"

namespace {

using namespace mcgrep;

int config_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return 2;
}

bool check_rg(int r, int g, std::string* msg) {
  if (r < 3 || r % 2 == 0) {
    *msg = "r must be odd >= 3";
    return false;
  }
  if (g < 1) {
    *msg = "g must be >= 1";
    return false;
  }
  return true;
}

// r^{3g} guard, overridable by --force or the MCGREP_MAX_DIM variable.
bool check_dim(int r, int g, bool force, std::string* msg) {
  double dim = 1;
  for (int i = 0; i < 3 * g; ++i) dim *= r;
  double limit = 1e6;
  if (const char* env = std::getenv("MCGREP_MAX_DIM")) {
    try {
      limit = std::stod(env);
    } catch (const std::exception&) {
      *msg = "MCGREP_MAX_DIM is not a number";
      return false;
    }
  }
  if (!force && dim > limit) {
    *msg = "state space dimension r^(3g) = " + std::to_string((long)dim) +
           " exceeds the resource guard (" + std::to_string((long)limit) +
           "); pass --force to proceed";
    return false;
  }
  return true;
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty())
    std::cout << content;
  else
    write_file_atomic(out_path, content);
}

std::string report_to_text(const Report& rep) {
  std::string out;
  for (const auto& c : rep.checks) {
    out += (c.pass ? "PASS  " : "FAIL  ") + c.name;
    if (!c.detail.empty()) out += "  [" + c.detail + "]";
    out += "\n";
  }
  out += rep.all_pass() ? "all checks passed\n" : "FAILURES present\n";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of mapping-class-group representations"};
  app.require_subcommand(1);

  int r = 3, g = 1, samples = 200, jobs = 1;
  unsigned long seed = 0;
  bool force = false;
  std::string suite = "all", out_path;
  std::string verify_format = "text", twist_format = "json", report_format = "markdown";
  std::string word, side = "quantum";
  bool conjugate_phi = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--r", r, "order of the root of unity (odd, >= 3)");
    cmd->add_option("--g", g, "genus (>= 1)");
    cmd->add_flag("--force", force, "bypass the dimension guard");
    cmd->add_option("--out", out_path, "output file (stdout when absent)");
  };

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  add_common(verify);
  verify->add_option("--suite", suite, "suite name or 'all'");
  verify->add_option("--samples", samples, "sample count for randomized checks");
  verify->add_option("--seed", seed, "seed for randomized checks");
  verify->add_option("--jobs", jobs, "worker pool size for suite fan-out");
  verify->add_option("--format", verify_format, "text | json");

  CLI::App* twist = app.add_subcommand("twist", "evaluate a twist word");
  add_common(twist);
  twist->add_option("--word", word,
                    "whitespace-separated tokens a<j> b<j> g<k>, optional "
                    "^-1; the leftmost token acts last");
  twist->add_option("--side", side, "quantum | homological");
  twist->add_flag("--conjugate-phi", conjugate_phi,
                  "express the operator in the other side's basis");
  twist->add_option("--format", twist_format, "json | csv");

  CLI::App* iso = app.add_subcommand("iso", "export the basis correspondence");
  add_common(iso);

  CLI::App* report = app.add_subcommand("report", "aggregate suite report");
  add_common(report);
  report->add_option("--samples", samples, "sample count for randomized checks");
  report->add_option("--seed", seed, "seed for randomized checks");
  report->add_option("--jobs", jobs, "worker pool size for suite fan-out");
  report->add_option("--format", report_format, "markdown | json");

  CLI11_PARSE(app, argc, argv);

  std::string msg;
  if (!check_rg(r, g, &msg)) return config_error(msg);
  if (!check_dim(r, g, force, &msg)) return config_error(msg);

  try {
    if (verify->parsed()) {
      SuiteConfig cfg{r, g, samples, seed};
      Report rep;
      try {
        rep = run_suite(suite, cfg, jobs);
      } catch (const std::invalid_argument& e) {
        return config_error(e.what());
      }
      emit(out_path, verify_format == "json" ? report_to_json(rep)
                                             : report_to_text(rep));
      return rep.all_pass() ? 0 : 1;
    }

    if (twist->parsed()) {
      if (side != "quantum" && side != "homological")
        return config_error("side must be quantum or homological");
      if (twist_format != "json" && twist_format != "csv")
        return config_error("format must be json or csv");
      TwistWord w;
      try {
        w = parse_twist_word(word, g);
      } catch (const std::invalid_argument& e) {
        return config_error(e.what());
      }
      TwistOps ops(side == "quantum"
                       ? TwistOps::Builder([](const Twist& t, int gg, int rr) {
                           return twist_hopf(t, gg, rr);
                         })
                       : TwistOps::Builder([](const Twist& t, int gg, int rr) {
                           return hom_twist(t, gg, rr);
                         }),
                   g, r, static_cast<int>(ad_dim(g, r)));
      SparseMat<Cyc> m = evaluate_word(w, ops);
      if (conjugate_phi) {
        SparseMat<Cyc> phi = phi_matrix(g, r);
        SparseMat<Cyc> phi_inv = phi_inverse_matrix(g, r);
        m = (side == "homological") ? phi * m * phi_inv : phi_inv * m * phi;
      }
      emit(out_path, twist_format == "csv" ? matrix_to_csv(m)
                                           : matrix_to_json(m, g, r));
      return 0;
    }

    if (iso->parsed()) {
      emit(out_path, monomial_map_to_json(phi_matrix(g, r)));
      return 0;
    }

    if (report->parsed()) {
      if (report_format != "markdown" && report_format != "json")
        return config_error("format must be markdown or json");
      SuiteConfig cfg{r, g, samples, seed};
      Report rep = run_suite("all", cfg, jobs);
      emit(out_path, report_format == "json" ? report_to_json(rep)
                                             : report_to_markdown(rep));
      return rep.all_pass() ? 0 : 1;
    }
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
