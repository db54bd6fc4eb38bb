#pragma once

/// @file config.hpp
/// Run configuration for `cpvortex simulate`, read from a JSON document.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "cpvortex/dynamics.hpp"
#include "cpvortex/vortex_system.hpp"

namespace cpv::cli {

struct RunConfig {
  explicit RunConfig(VortexSystem s) : system(std::move(s)) {}

  VortexSystem system;
  Integrator method = Integrator::rk4;
  IntegratorOptions options;
  double dt = 1e-3;
  long steps = 0;
  std::string trajectory_path = "trajectory.csv";
  std::optional<std::string> monitor_path;
  std::optional<std::string> summary_path;
  std::uint64_t seed = 1;
};

/// Parses a configuration document. `source` names the input in diagnostics.
/// Throws ConfigurationError with "source:line:column: ..." for syntax errors
/// and "source: /json/pointer: ..." for invalid fields.
RunConfig parse_run_config(const std::string& text, const std::string& source = "config");

/// Reads and parses a file; unreadable files raise ConfigurationError.
RunConfig load_run_config(const std::string& path);

}  // namespace cpv::cli
