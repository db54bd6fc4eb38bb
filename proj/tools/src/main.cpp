// cpvortex: simulate, verify and tabulate from the command line.

#include <cstdint>
#include <iostream>
#include <numbers>
#include <string>

#include <CLI11.hpp>

#include "cpvortex/errors.hpp"
#include "cpvortex_cli/commands.hpp"
#include "cpvortex_cli/config.hpp"
#include "cpvortex_cli/verify.hpp"

namespace {

constexpr int kExitVerifyFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitCollision = 3;
constexpr int kExitNumeric = 4;

int run_simulate(const std::string& path) {
  try {
    cpv::cli::simulate(cpv::cli::load_run_config(path), std::cout);
    return 0;
  } catch (const cpv::ConfigurationError& e) {
    std::cerr << "cpvortex simulate: " << e.what() << '\n';
    return kExitParse;
  } catch (const cpv::CollisionError& e) {
    std::cerr << "cpvortex simulate: collision at step " << e.step() << ": " << e.what() << '\n';
    return kExitCollision;
  } catch (const std::exception& e) {
    std::cerr << "cpvortex simulate: numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  }
}

int run_verify(const std::string& suite, std::uint64_t seed) {
  try {
    const double scale = cpv::cli::tolerance_scale_from_env();
    if (scale != 1.0) std::cout << "tolerances scaled by " << scale << " (non-normative)\n";
    const auto results = cpv::cli::run_suite(suite, seed, scale);
    cpv::cli::print_results(std::cout, results);
    int failed = 0;
    for (const auto& r : results) {
      if (r.passed()) continue;
      ++failed;
      std::cerr << "cpvortex verify: check " << r.suite << '.' << r.name << " failed at " << r.worst
                << ": defect " << r.defect << " > " << r.tolerance << '\n';
    }
    std::cout << (failed == 0 ? "all checks passed" : std::to_string(failed) + " check(s) failed")
              << " (suite " << suite << ", seed " << seed << ")\n";
    return failed == 0 ? 0 : kExitVerifyFailure;
  } catch (const cpv::ConfigurationError& e) {
    std::cerr << "cpvortex verify: " << e.what() << '\n';
    return kExitParse;
  }
}

template <class F>
int run_tabulate(F&& body) {
  try {
    body();
    return 0;
  } catch (const cpv::ConfigurationError& e) {
    std::cerr << "cpvortex tabulate: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "cpvortex tabulate: " << e.what() << '\n';
    return kExitNumeric;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Point vortices on the plane and on CP^n, SU(3) flag-manifold geometry"};
  app.require_subcommand(1);

  std::string config_path;
  auto* sim = app.add_subcommand("simulate", "Integrate the vortex system described by a JSON config");
  sim->add_option("config", config_path, "Configuration file")->required();

  std::string suite;
  std::uint64_t seed = 1;
  auto* ver = app.add_subcommand("verify", "Run a property suite; exit 1 if any check fails");
  ver->add_option("suite", suite, "greens, momentum, vectorfields, metric, dynamics or all")
      ->required()
      ->check(CLI::IsMember({"greens", "momentum", "vectorfields", "metric", "dynamics", "all"}));
  ver->add_option("--seed", seed, "Seed of the random inputs");

  auto* tab = app.add_subcommand("tabulate", "Print CSV tables to standard output");
  tab->require_subcommand(1);
  int n = 1, samples = 10;
  double rmin = 0.1, rmax = std::numbers::pi / 2;
  auto* tg = tab->add_subcommand("greens", "r, G(r), dG/dr on CP^n");
  tg->add_option("--n", n, "Complex dimension")->required();
  tg->add_option("--samples", samples, "Number of equally spaced radii");
  tg->add_option("--rmin", rmin, "Smallest radius (> 0)");
  tg->add_option("--rmax", rmax, "Largest radius (<= pi/2)");
  std::string z1 = "0", z2 = "0", z3 = "0";
  auto* tm = tab->add_subcommand("momentum", "Flag momentum matrix at (z1, z2, z3)");
  tm->add_option("--z1", z1, "re or re,im");
  tm->add_option("--z2", z2, "re or re,im");
  tm->add_option("--z3", z3, "re or re,im");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  if (*sim) return run_simulate(config_path);
  if (*ver) return run_verify(suite, seed);
  if (*tg) {
    return run_tabulate([&] { cpv::cli::tabulate_greens(std::cout, n, samples, rmin, rmax); });
  }
  return run_tabulate([&] {
    const cpv::FlagCoords z{cpv::cli::parse_complex(z1), cpv::cli::parse_complex(z2),
                            cpv::cli::parse_complex(z3)};
    cpv::cli::tabulate_momentum(std::cout, z);
  });
}
