#pragma once
// Shared pass/fail reporting for verification suites.

#include <string>
#include <vector>

namespace mcgrep {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // witness scalar, first failing coordinate, ...
};

struct Report {
  std::vector<CheckResult> checks;

  void add(const std::string& name, bool pass, const std::string& detail = "") {
    checks.push_back({name, pass, detail});
  }
  void merge(const Report& o) {
    checks.insert(checks.end(), o.checks.begin(), o.checks.end());
  }
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  const CheckResult* first_failure() const {
    for (const auto& c : checks)
      if (!c.pass) return &c;
    return nullptr;
  }
};

}  // namespace mcgrep
