// Acceptance gate: one PASS/FAIL line per criterion, exit 1 if any gating
// criterion fails. Optional argument: RNG seed (default 1).

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "cpvortex_cli/verify.hpp"

namespace {

using cpv::cli::CheckResult;

struct Criterion {
  int id;
  std::string title;
  std::vector<std::string> checks;  ///< "suite.name" entries backing the criterion
  double time_limit = 0.0;          ///< seconds over all checks, 0 when unlimited
  bool gating = true;
};

const CheckResult* find(const std::vector<CheckResult>& all, const std::string& qualified) {
  for (const CheckResult& r : all) {
    if (r.suite + "." + r.name == qualified) return &r;
  }
  return nullptr;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t seed = 1;
  if (argc > 1) {
    try {
      seed = std::stoull(argv[1]);
    } catch (const std::exception&) {
      std::cerr << "usage: cpvortex_acceptance [seed]\n";
      return 2;
    }
  }

  const std::vector<Criterion> criteria = {
      {1, "Green's function matches its radial ODE by quadrature", {"greens.oracle_equivalence"}, 10.0},
      {2, "log-sine profile differentiates to its integrand", {"greens.antiderivative"}},
      {3, "CP2 momentum spectrum is {-1/3, -1/3, 2/3}", {"momentum.cp2_spectrum"}, 2.0},
      {4, "flag momentum satisfies d<mu, xi> = i_X omega", {"momentum.flag_defining_equation"}},
      {5, "flag vector fields match LU-normalized group action", {"vectorfields.lu_oracle"}},
      {6,
       "metric determinants and Kahler potential Hessians",
       {"metric.flag_determinant", "metric.cpn_determinant", "metric.flag_hessian",
        "metric.cpn_hessian"}},
      {7, "planar co-rotating pair period", {"dynamics.planar_period"}},
      {8,
       "energy, momentum and planar invariants conserved under RK4",
       {"dynamics.energy_drift", "dynamics.momentum_drift", "dynamics.planar_invariants"},
       60.0},
      {9, "Hamiltonian is unitarily invariant", {"dynamics.unitary_invariance"}},
      {10, "Hamiltonian gradient and omega identity", {"dynamics.gradient_fd", "dynamics.omega_identity"}},
      {11,
       "metric discrepancy reports are printed without failing",
       {"metric.inverse_proportionality", "metric.laplacian_coefficients"},
       0.0,
       false},
  };

  const std::vector<CheckResult> all = cpv::cli::run_suite("all", seed);

  bool ok = true;
  for (const Criterion& c : criteria) {
    bool pass = true;
    double seconds = 0.0;
    std::string detail;
    for (const std::string& name : c.checks) {
      const CheckResult* r = find(all, name);
      if (r == nullptr) {
        pass = false;
        detail += " " + name + " missing;";
        continue;
      }
      seconds += r->seconds;
      if (c.gating) {
        if (!r->passed()) pass = false;
        detail += " " + name + " " + fmt(r->defect) + "<=" + fmt(r->tolerance) + ";";
      } else {
        // a report passes when it was computed and carries its annotation
        if (!std::isfinite(r->defect) || r->note.empty() || r->gating) pass = false;
        detail += " " + name + " " + fmt(r->defect) + " [" + r->note + "];";
      }
    }
    if (c.time_limit > 0.0 && seconds > c.time_limit) {
      pass = false;
      detail += " runtime " + fmt(seconds) + " s exceeds " + fmt(c.time_limit) + " s;";
    }
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title
              << (c.gating ? "" : " (non-gating)") << "  " << fmt(seconds) << " s |" << detail
              << '\n';
    if (c.gating && !pass) ok = false;
  }

  // the metric suite as a whole must stay green with its reports included
  bool metric_green = true;
  for (const CheckResult& r : cpv::cli::run_suite("metric", seed)) metric_green &= r.passed();
  std::cout << (metric_green ? "PASS" : "FAIL") << " metric suite passes with reports present\n";
  ok &= metric_green;

  return ok ? 0 : 1;
}
