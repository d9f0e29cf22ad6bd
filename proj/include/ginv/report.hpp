#pragma once

#include <map>
#include <string>

namespace ginv {

struct CheckResult {
  double residual = 0.0;
  bool pass = false;
};

/// Named residuals with a pass flag each; `overall` is their conjunction.
struct VerificationReport {
  std::map<std::string, CheckResult> checks;
  bool overall = true;

  void add(const std::string& name, double residual, bool pass) {
    checks[name] = CheckResult{residual, pass};
    overall = true;
    for (const auto& [_, c] : checks) overall = overall && c.pass;
  }
  /// Pass iff residual <= bound.
  void add_bounded(const std::string& name, double residual, double bound) {
    add(name, residual, residual <= bound);
  }
  bool passed(const std::string& name) const {
    auto it = checks.find(name);
    return it != checks.end() && it->second.pass;
  }
  double residual(const std::string& name) const {
    auto it = checks.find(name);
    return it == checks.end() ? 0.0 : it->second.residual;
  }
};

}  // namespace ginv
