#pragma once

/// @file verify.hpp
/// Property suites behind `cpvortex verify`.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cpv::cli {

struct CheckResult {
  std::string suite;
  std::string name;
  double defect = 0.0;     ///< worst value seen (inf if the check threw)
  double tolerance = 0.0;  ///< after scaling
  std::string worst;       ///< description of the worst input
  bool gating = true;      ///< reports never fail a suite
  std::string note;
  double seconds = 0.0;  ///< wall time of the check
  bool passed() const { return !gating || defect <= tolerance; }
};

/// Suite names accepted by run_suite, in execution order of "all".
const std::vector<std::string>& suite_names();

/// Runs one suite ("all" runs every suite). Tolerances are multiplied by
/// tolerance_scale. Unknown suite names raise ConfigurationError.
std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed,
                                   double tolerance_scale = 1.0);

/// One line per check: status, qualified name, defect, tolerance, worst input.
void print_results(std::ostream& os, const std::vector<CheckResult>& results);

/// Reads CPVORTEX_TOL_SCALE; 1 when unset. Throws ConfigurationError when the
/// value is not a positive number.
double tolerance_scale_from_env();

}  // namespace cpv::cli
