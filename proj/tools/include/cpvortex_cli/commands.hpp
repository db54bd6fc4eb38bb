#pragma once

/// @file commands.hpp
/// Bodies of the `simulate` and `tabulate` subcommands.

#include <iosfwd>
#include <string>

#include "cpvortex/su3flag.hpp"
#include "cpvortex_cli/config.hpp"

namespace cpv::cli {

/// Integrates the configured system, writes the trajectory CSV (and the
/// monitor CSV when configured) and prints a JSON summary to `out`.
/// Library errors propagate unchanged.
void simulate(const RunConfig& config, std::ostream& out);

/// CSV rows r, G, dG/dr at `samples` equally spaced radii in [rmin, rmax].
/// Throws DomainError for invalid parameters.
void tabulate_greens(std::ostream& out, int n, int samples, double rmin, double rmax);

/// The flag momentum matrix at z, one CSV row per matrix row.
void tabulate_momentum(std::ostream& out, const FlagCoords& z);

/// Parses "re" or "re,im". Throws ConfigurationError otherwise.
Complex parse_complex(const std::string& text);

}  // namespace cpv::cli
