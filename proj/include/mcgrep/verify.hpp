#pragma once
// Named verification suites. Every suite returns a deterministic Report;
// randomized checks take an explicit sample count and seed, exhaustive
// ones ignore them.

#include <string>
#include <vector>

#include "mcgrep/report.hpp"

namespace mcgrep {

struct SuiteConfig {
  int r = 3;
  int g = 1;
  int samples = 200;
  unsigned long seed = 0;
};

Report suite_scalars(const SuiteConfig& cfg);
Report suite_hopf(const SuiteConfig& cfg);
Report suite_ribbon(const SuiteConfig& cfg);
Report suite_integral(const SuiteConfig& cfg);
Report suite_adjoint(const SuiteConfig& cfg);
Report suite_quantum_mcg(const SuiteConfig& cfg);
Report suite_heisenberg(const SuiteConfig& cfg);
Report suite_homological(const SuiteConfig& cfg);
Report suite_deformed(const SuiteConfig& cfg);
Report suite_iso(const SuiteConfig& cfg);

std::vector<std::string> suite_names();  // includes "all"
// Runs one suite by name ("all" fans out over every suite, optionally on a
// worker pool of `jobs` threads; results merge in fixed suite order).
Report run_suite(const std::string& name, const SuiteConfig& cfg, int jobs = 1);

}  // namespace mcgrep
