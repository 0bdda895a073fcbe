#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace majorana {

struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  std::vector<std::string> info;
};

struct SuiteOptions {
  std::uint64_t seed = 7;
  /// Multiplies every sample count (1 = full size).
  double scale = 1.0;
};

struct Check {
  int id;
  std::string name;
  std::function<CheckResult(const SuiteOptions&)> run;
};

/// The twelve acceptance checks, in order. Each one is deterministic given
/// the options.
const std::vector<Check>& acceptance_checks();

std::vector<CheckResult> run_acceptance(const SuiteOptions& options = {});

/// "PASS" / "FAIL" line per check plus indented info lines.
std::string format_report(const std::vector<CheckResult>& results);

}  // namespace majorana
