#include "cpvortex_cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <ostream>

#include <json.hpp>

#include "cpvortex/cpvortex.hpp"

namespace cpv::cli {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigurationError("cannot open output file '" + path + "'");
  return f;
}

// Largest drift of the conserved momenta: weighted momentum matrix on CP^n,
// (p_x, p_y, m) on the plane.
double momentum_drift(const Trajectory& tr) {
  const VortexSystem& s0 = tr.states.front();
  double d = 0.0;
  if (s0.manifold().kind == ManifoldKind::cpn) {
    const ComplexMatrix m0 = weighted_momentum(s0).matrix();
    for (const VortexSystem& s : tr.states) d = std::max(d, (weighted_momentum(s).matrix() - m0).norm());
  } else {
    const PlanarInvariants i0 = planar_conserved(s0);
    for (const VortexSystem& s : tr.states) {
      const PlanarInvariants i = planar_conserved(s);
      d = std::max({d, std::abs(i.px - i0.px), std::abs(i.py - i0.py), std::abs(i.m - i0.m)});
    }
  }
  return d;
}

}  // namespace

void simulate(const RunConfig& config, std::ostream& out) {
  // throws InvariantError if the vector-field sign conventions are miswired
  verify_conventions();
  const auto start = std::chrono::steady_clock::now();
  const Trajectory tr = integrate(config.system, config.dt, config.steps, config.method, config.options);
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  {
    std::ofstream f = open_output(config.trajectory_path);
    write_trajectory_csv(f, tr);
    if (!f) throw ConfigurationError("failed writing '" + config.trajectory_path + "'");
  }
  if (config.monitor_path) {
    std::ofstream f = open_output(*config.monitor_path);
    f << "t,H,momentum_norm,min_dist\n";
    for (std::size_t k = 0; k < tr.states.size(); ++k) {
      const Monitor& m = tr.monitors[k];
      f << num(tr.times[k]) << ',' << num(m.hamiltonian) << ',' << num(m.momentum_norm) << ','
        << num(m.min_distance) << '\n';
    }
  }

  const VortexSystem& s0 = tr.states.front();
  const double h0 = tr.monitors.front().hamiltonian;
  double h_drift = 0.0, min_dist = tr.monitors.front().min_distance;
  for (const Monitor& m : tr.monitors) {
    h_drift = std::max(h_drift, std::abs(m.hamiltonian - h0) / std::max(std::abs(h0), 1e-3));
    min_dist = std::min(min_dist, m.min_distance);
  }

  nlohmann::ordered_json s;
  s["manifold"] = s0.manifold().name();
  s["vortices"] = s0.size();
  s["method"] = config.method == Integrator::rk4 ? "rk4" : "rk45";
  s["dt"] = config.dt;
  s["steps"] = config.steps;
  s["t_end"] = tr.times.back();
  s["hamiltonian_initial"] = h0;
  s["hamiltonian_final"] = tr.monitors.back().hamiltonian;
  s["hamiltonian_relative_drift"] = h_drift;
  s["momentum_drift"] = momentum_drift(tr);
  s["min_distance"] = min_dist;
  s["trajectory_path"] = config.trajectory_path;
  s["wall_time_s"] = wall;

  if (s0.size() == 2) {
    nlohmann::ordered_json pair;
    pair["separation_initial"] = s0.distance(0, 1);
    double sep_drift = 0.0;
    for (const VortexSystem& st : tr.states) {
      sep_drift = std::max(sep_drift, std::abs(st.distance(0, 1) - s0.distance(0, 1)));
    }
    pair["separation_drift"] = sep_drift;
    const double total = s0.strength(0) + s0.strength(1);
    if (s0.manifold().kind == ManifoldKind::plane && total != 0.0 && tr.states.size() > 1) {
      // relative equilibrium: the pair rotates at (G1 + G2) / (2 pi d^2)
      const double d = s0.distance(0, 1);
      const double predicted = 4.0 * std::numbers::pi * std::numbers::pi * d * d / std::abs(total);
      double turned = 0.0;
      for (std::size_t k = 1; k < tr.states.size(); ++k) {
        const Complex a = tr.states[k - 1].planar_position(1) - tr.states[k - 1].planar_position(0);
        const Complex b = tr.states[k].planar_position(1) - tr.states[k].planar_position(0);
        turned += std::arg(b / a);
      }
      pair["period_predicted"] = predicted;
      if (turned != 0.0) {
        const double measured = 2.0 * std::numbers::pi * tr.times.back() / std::abs(turned);
        pair["period_measured"] = measured;
        pair["period_relative_error"] = std::abs(measured / predicted - 1.0);
      }
    }
    s["two_vortex"] = pair;
  }

  const std::string text = s.dump(2) + "\n";
  out << text;
  if (config.summary_path) {
    std::ofstream f = open_output(*config.summary_path);
    f << text;
  }
}

void tabulate_greens(std::ostream& out, int n, int samples, double rmin, double rmax) {
  if (n < 1) throw DomainError("dimension n must be at least 1");
  if (samples < 1) throw DomainError("sample count must be at least 1");
  const double half_pi = std::numbers::pi / 2;
  // accept pi/2 typed with a few digits less
  if (rmax > half_pi && rmax < half_pi + 1e-9) rmax = half_pi;
  if (!(rmin > 0.0) || !(rmin <= rmax) || rmax > half_pi) {
    throw DomainError("radii must satisfy 0 < rmin <= rmax <= pi/2");
  }
  out << "r,G,dG_dr\n";
  for (int k = 0; k < samples; ++k) {
    const double r = samples == 1 ? rmin : rmin + (rmax - rmin) * k / (samples - 1);
    out << num(r) << ',' << num(greens_cpn(n, r)) << ',' << num(greens_cpn_derivative(n, r)) << '\n';
  }
}

void tabulate_momentum(std::ostream& out, const FlagCoords& z) {
  const ComplexMatrix m = momentum_flag(z).matrix();
  out << "row,re_1,im_1,re_2,im_2,re_3,im_3\n";
  for (int i = 0; i < 3; ++i) {
    out << i + 1;
    for (int j = 0; j < 3; ++j) out << ',' << num(m(i, j).real()) << ',' << num(m(i, j).imag());
    out << '\n';
  }
}

Complex parse_complex(const std::string& text) {
  auto parse_real = [&text](const std::string& part) {
    char* end = nullptr;
    const double v = std::strtod(part.c_str(), &end);
    if (part.empty() || end != part.c_str() + part.size() || !std::isfinite(v)) {
      throw ConfigurationError("expected a complex number as re or re,im, got '" + text + "'");
    }
    return v;
  };
  const auto comma = text.find(',');
  if (comma == std::string::npos) return parse_real(text);
  return {parse_real(text.substr(0, comma)), parse_real(text.substr(comma + 1))};
}

}  // namespace cpv::cli
