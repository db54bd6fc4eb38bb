#include "cpvortex/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>
#include <string>

#include "cpvortex/errors.hpp"
#include "cpvortex/greens.hpp"
#include "cpvortex/momentum.hpp"

namespace cpv {

namespace {

constexpr double kPi = std::numbers::pi;

// Positions, charts and strengths of a configuration without the validation
// done by VortexSystem; used inside integrator stages.
struct RawState {
  Manifold manifold;
  const std::vector<ComplexVector>* positions;
  const std::vector<int>* charts;
  const std::vector<double>* strengths;

  int size() const { return static_cast<int>(positions->size()); }
  int n() const { return manifold.n; }
};

RawState raw(const VortexSystem& s) {
  return {s.manifold(), &s.positions(), &s.charts(), &s.strengths()};
}

void require_planar(const VortexSystem& s) {
  if (s.manifold().kind != ManifoldKind::plane) {
    throw ConfigurationError("planar model called on " + s.manifold().name());
  }
}

int usable_chart(const ComplexVector& p, int preferred, int n) {
  if (preferred >= 0 && preferred <= n && std::abs(p[preferred]) > pivot_threshold(n)) {
    return preferred;
  }
  Eigen::Index idx = 0;
  p.cwiseAbs().maxCoeff(&idx);
  return static_cast<int>(idx);
}

AffineChart chart_of(const ComplexVector& p, int chart) {
  const int n = static_cast<int>(p.size()) - 1;
  AffineChart c{chart, ComplexVector(n)};
  for (int i = 0, j = 0; i <= n; ++i) {
    if (i != chart) c.values[j++] = p[i] / p[chart];
  }
  return c;
}

std::vector<Complex> planar_velocities(const RawState& st) {
  const int m = st.size();
  std::vector<Complex> v(m, Complex(0.0));
  const Complex k = 1.0 / (2.0 * kPi * Complex(0.0, 1.0));
  for (int j = 0; j < m; ++j) {
    Complex sum(0.0);
    const Complex zj = (*st.positions)[j][0];
    for (int l = 0; l < m; ++l) {
      if (l == j) continue;
      const Complex d = zj - (*st.positions)[l][0];
      if (std::abs(d) == 0.0) throw CollisionError("coincident planar vortices");
      sum += (*st.strengths)[l] / d;
    }
    v[j] = std::conj(k * sum);
  }
  return v;
}

RealVector planar_gradient(const RawState& st, int a) {
  RealVector g = RealVector::Zero(2);
  const Complex za = (*st.positions)[a][0];
  const double ga = (*st.strengths)[a];
  for (int b = 0; b < st.size(); ++b) {
    if (b == a) continue;
    const Complex d = za - (*st.positions)[b][0];
    const double r2 = std::norm(d);
    if (r2 == 0.0) throw CollisionError("coincident planar vortices");
    const double c = -ga * (*st.strengths)[b] / (2.0 * kPi * r2);
    g[0] += c * d.real();
    g[1] += c * d.imag();
  }
  return g;
}

// d/dzbar of H with respect to the chart coordinates of vortex a, returned as
// the real gradient (2 Re, 2 Im).
RealVector cpn_gradient(const RawState& st, int a, int chart) {
  const int n = st.n();
  const ComplexVector& pa = (*st.positions)[a];
  const AffineChart ch = chart_of(pa, chart);
  const ComplexVector& z = ch.values;
  const ComplexVector s = chart_lift(ch);
  const double bnorm = 1.0 + z.squaredNorm();
  const double ga = (*st.strengths)[a];

  ComplexVector dzbar = ComplexVector::Zero(n);
  for (int b = 0; b < st.size(); ++b) {
    if (b == a) continue;
    const ComplexVector& eta = (*st.positions)[b];
    const Complex amp = hermitian_inner(s, eta);
    const double amp2 = std::norm(amp);
    const double q = amp2 / bnorm;
    const double gq = ga * (*st.strengths)[b] * greens_cpn_dq(n, q);
    for (int i = 0, j = 0; i <= n; ++i) {
      if (i == chart) continue;
      dzbar[j] += gq * (amp * eta[i] * bnorm - amp2 * z[j]) / (bnorm * bnorm);
      ++j;
    }
  }
  RealVector g(2 * n);
  g.head(n) = 2.0 * dzbar.real();
  g.tail(n) = 2.0 * dzbar.imag();
  return g;
}

RealMatrix chart_form(const RawState& st, int a, int chart) {
  if (st.manifold.kind == ManifoldKind::plane) {
    return kahler_form_matrix(ComplexMatrix::Identity(1, 1));
  }
  return kahler_form_matrix(fubini_study_metric(chart_of((*st.positions)[a], chart)));
}

struct VortexField {
  int chart;
  RealVector grad;
  RealVector velocity;
};

VortexField vortex_field(const RawState& st, int a) {
  VortexField f;
  if (st.manifold.kind == ManifoldKind::plane) {
    f.chart = 0;
    f.grad = planar_gradient(st, a);
  } else {
    f.chart = usable_chart((*st.positions)[a], (*st.charts)[a], st.n());
    f.grad = cpn_gradient(st, a, f.chart);
  }
  const RealMatrix w = chart_form(st, a, f.chart);
  f.velocity = w.partialPivLu().solve(f.grad) / (*st.strengths)[a];
  return f;
}

ComplexVector lift_velocity(const ComplexVector& p, int chart, const RealVector& velocity) {
  const int n = static_cast<int>(p.size()) - 1;
  const ComplexVector zdot = to_complex(velocity);
  ComplexVector u = ComplexVector::Zero(n + 1);
  for (int i = 0, j = 0; i <= n; ++i) {
    if (i != chart) u[i] = p[chart] * zdot[j++];
  }
  return u - p * hermitian_inner(u, p);
}

std::vector<ComplexVector> velocities(const RawState& st) {
  std::vector<ComplexVector> out(st.size());
  if (st.manifold.kind == ManifoldKind::plane) {
    const auto v = planar_velocities(st);
    for (int a = 0; a < st.size(); ++a) out[a] = ComplexVector::Constant(1, v[a]);
    return out;
  }
  for (int a = 0; a < st.size(); ++a) {
    const VortexField f = vortex_field(st, a);
    out[a] = lift_velocity((*st.positions)[a], f.chart, f.velocity);
  }
  return out;
}

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

std::vector<Complex> planar_rhs(const VortexSystem& system) {
  require_planar(system);
  return planar_velocities(raw(system));
}

PlanarInvariants planar_conserved(const VortexSystem& system) {
  require_planar(system);
  PlanarInvariants inv;
  for (int j = 0; j < system.size(); ++j) {
    const Complex z = system.planar_position(j);
    const double g = system.strength(j);
    inv.px += g * z.real();
    inv.py += g * z.imag();
    inv.m += 0.5 * g * std::norm(z);
  }
  return inv;
}

double planar_hamiltonian(const VortexSystem& system) {
  require_planar(system);
  double sum = 0.0;
  for (int j = 0; j < system.size(); ++j) {
    for (int k = 0; k < system.size(); ++k) {
      if (j == k) continue;
      const double r = system.distance(j, k);
      if (r == 0.0) throw CollisionError("coincident planar vortices");
      sum += system.strength(j) * system.strength(k) * std::log(r);
    }
  }
  return -sum / (4.0 * kPi);
}

double hamiltonian_prefactor(int n) {
  return 1.0 / (2.0 * n * CrossSpaceSpec::cpn(n).volume);
}

double hamiltonian_prefactor_alternative(int n) {
  if (n < 1) throw DomainError("CP^n requires n >= 1");
  return 1.0 / (2.0 * factorial(n - 1) * std::pow(kPi, n));
}

double hamiltonian_cpn(const VortexSystem& system) {
  if (system.manifold().kind != ManifoldKind::cpn) {
    throw ConfigurationError("hamiltonian_cpn called on " + system.manifold().name());
  }
  const int n = system.manifold().n;
  double h = 0.0;
  for (int a = 0; a < system.size(); ++a) {
    for (int b = a + 1; b < system.size(); ++b) {
      const double q = std::norm(hermitian_inner(system.position(a), system.position(b)));
      if (q >= 1.0) throw CollisionError("coincident vortices on " + system.manifold().name());
      h += system.strength(a) * system.strength(b) * greens_cpn_from_cos2(n, q);
    }
  }
  return h;
}

double hamiltonian(const VortexSystem& system) {
  return system.manifold().kind == ManifoldKind::plane ? planar_hamiltonian(system)
                                                       : hamiltonian_cpn(system);
}

std::vector<ChartVector> grad_hamiltonian(const VortexSystem& system) {
  const RawState st = raw(system);
  std::vector<ChartVector> out;
  out.reserve(st.size());
  for (int a = 0; a < st.size(); ++a) {
    if (st.manifold.kind == ManifoldKind::plane) {
      out.push_back({0, planar_gradient(st, a)});
    } else {
      const int c = usable_chart(system.position(a), system.chart(a), st.n());
      out.push_back({c, cpn_gradient(st, a, c)});
    }
  }
  return out;
}

std::vector<ChartVector> hamiltonian_vector_field(const VortexSystem& system) {
  const RawState st = raw(system);
  std::vector<ChartVector> out;
  out.reserve(st.size());
  for (int a = 0; a < st.size(); ++a) {
    VortexField f = vortex_field(st, a);
    out.push_back({f.chart, std::move(f.velocity)});
  }
  return out;
}

std::vector<ComplexVector> homogeneous_velocity(const VortexSystem& system) {
  return velocities(raw(system));
}

double omega_identity_defect(const VortexSystem& system, int samples, std::uint64_t seed) {
  const RawState st = raw(system);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  double worst = 0.0;
  for (int a = 0; a < st.size(); ++a) {
    const VortexField f = vortex_field(st, a);
    const RealMatrix w = chart_form(st, a, f.chart);
    for (int s = 0; s < samples; ++s) {
      RealVector y(f.grad.size());
      for (Eigen::Index i = 0; i < y.size(); ++i) y[i] = normal(rng);
      // omega(X, Y) = Y^T Omega X
      const double lhs = (*st.strengths)[a] * y.dot(w * f.velocity);
      worst = std::max(worst, std::abs(lhs - f.grad.dot(y)));
    }
  }
  return worst;
}

ConventionReport verify_conventions() {
  ConventionReport rep;
  const Complex i(0.0, 1.0);
  const VortexSystem cp1 = VortexSystem::projective(
      {ProjectivePoint(Eigen::Vector2cd(1.0, 0.3 + 0.2 * i)),
       ProjectivePoint(Eigen::Vector2cd(0.4, 1.0))},
      {1.0, 0.7});
  const VortexSystem cp2 = VortexSystem::projective(
      {ProjectivePoint(Eigen::Vector3cd(1.0, 0.2, -0.1 * i)),
       ProjectivePoint(Eigen::Vector3cd(0.3, 1.0, 0.5)),
       ProjectivePoint(Eigen::Vector3cd(-0.2 * i, 0.4, 1.0))},
      {1.0, -0.5, 2.0});
  const VortexSystem pl = VortexSystem::planar({0.0, 1.0, 0.3 + 0.8 * i}, {1.0, 2.0, -0.7});

  rep.omega_defect = std::max({omega_identity_defect(cp1), omega_identity_defect(cp2),
                               omega_identity_defect(pl)});
  const auto xh = hamiltonian_vector_field(pl);
  const auto rhs = planar_rhs(pl);
  for (int a = 0; a < pl.size(); ++a) {
    rep.planar_rhs_mismatch =
        std::max(rep.planar_rhs_mismatch,
                 std::abs(Complex(xh[a].components[0], xh[a].components[1]) - rhs[a]));
  }
  for (int n = 1; n <= 4; ++n) {
    rep.prefactor_ratio.push_back(hamiltonian_prefactor(n) / hamiltonian_prefactor_alternative(n));
  }
  if (!(rep.omega_defect <= 1e-8)) {
    throw InvariantError("Hamiltonian vector field violates omega(X, Y) = dH(Y): defect " +
                         std::to_string(rep.omega_defect));
  }
  if (!(rep.planar_rhs_mismatch <= 1e-8)) {
    throw InvariantError("Hamiltonian vector field disagrees with the planar vortex equations");
  }
  return rep;
}

Monitor monitor(const VortexSystem& system) {
  Monitor m;
  m.hamiltonian = hamiltonian(system);
  if (system.manifold().kind == ManifoldKind::cpn) {
    m.momentum_norm = weighted_momentum(system).frobenius();
  } else {
    const PlanarInvariants p = planar_conserved(system);
    m.momentum_norm = std::sqrt(p.px * p.px + p.py * p.py + p.m * p.m);
  }
  m.min_distance = system.min_distance();
  return m;
}

namespace {

class Stepper {
 public:
  Stepper(const VortexSystem& s) : manifold_(s.manifold()), strengths_(s.strengths()) {
    block_ = manifold_.kind == ManifoldKind::plane ? 1 : manifold_.n + 1;
    count_ = s.size();
  }

  void set_charts(const std::vector<int>& charts) { charts_ = charts; }

  ComplexVector pack(const VortexSystem& s) const {
    ComplexVector y(block_ * count_);
    for (int a = 0; a < count_; ++a) y.segment(a * block_, block_) = s.position(a);
    return y;
  }

  std::vector<ComplexVector> unpack(const ComplexVector& y) const {
    std::vector<ComplexVector> p(count_);
    for (int a = 0; a < count_; ++a) p[a] = y.segment(a * block_, block_);
    return p;
  }

  // Homogeneous of degree one in each projective block.
  ComplexVector rhs(const ComplexVector& y) const {
    std::vector<ComplexVector> pos = unpack(y);
    std::vector<double> scale(count_, 1.0);
    if (manifold_.kind == ManifoldKind::cpn) {
      for (int a = 0; a < count_; ++a) {
        scale[a] = pos[a].norm();
        pos[a] /= scale[a];
      }
    }
    const RawState st{manifold_, &pos, &charts_, &strengths_};
    const std::vector<ComplexVector> v = velocities(st);
    ComplexVector out(y.size());
    for (int a = 0; a < count_; ++a) out.segment(a * block_, block_) = scale[a] * v[a];
    return out;
  }

  void renormalize(ComplexVector& y) const {
    if (manifold_.kind != ManifoldKind::cpn) return;
    for (int a = 0; a < count_; ++a) y.segment(a * block_, block_).normalize();
  }

  // Smallest pairwise distance of a normalized packed state.
  double min_separation(const ComplexVector& y) const {
    double d = std::numeric_limits<double>::infinity();
    for (int a = 0; a < count_; ++a) {
      for (int b = a + 1; b < count_; ++b) {
        const auto ya = y.segment(a * block_, block_), yb = y.segment(b * block_, block_);
        const double r = manifold_.kind == ManifoldKind::plane
                             ? std::abs(ya[0] - yb[0])
                             : std::acos(std::min(1.0, std::abs(yb.dot(ya))));
        d = std::min(d, r);
      }
    }
    return d;
  }

  ComplexVector rk4(const ComplexVector& y, double h) const {
    const ComplexVector k1 = rhs(y);
    const ComplexVector k2 = rhs(y + 0.5 * h * k1);
    const ComplexVector k3 = rhs(y + 0.5 * h * k2);
    const ComplexVector k4 = rhs(y + h * k3);
    ComplexVector out = y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    renormalize(out);
    return out;
  }

  // One Dormand-Prince 5(4) attempt; returns the scaled error norm.
  double dopri(const ComplexVector& y, double h, ComplexVector& out,
               const IntegratorOptions& o) const {
    const ComplexVector k1 = rhs(y);
    const ComplexVector k2 = rhs(y + h * (1.0 / 5) * k1);
    const ComplexVector k3 = rhs(y + h * ((3.0 / 40) * k1 + (9.0 / 40) * k2));
    const ComplexVector k4 = rhs(y + h * ((44.0 / 45) * k1 - (56.0 / 15) * k2 + (32.0 / 9) * k3));
    const ComplexVector k5 =
        rhs(y + h * ((19372.0 / 6561) * k1 - (25360.0 / 2187) * k2 + (64448.0 / 6561) * k3 -
                     (212.0 / 729) * k4));
    const ComplexVector k6 =
        rhs(y + h * ((9017.0 / 3168) * k1 - (355.0 / 33) * k2 + (46732.0 / 5247) * k3 +
                     (49.0 / 176) * k4 - (5103.0 / 18656) * k5));
    out = y + h * ((35.0 / 384) * k1 + (500.0 / 1113) * k3 + (125.0 / 192) * k4 -
                   (2187.0 / 6784) * k5 + (11.0 / 84) * k6);
    const ComplexVector k7 = rhs(out);
    const ComplexVector err =
        h * ((35.0 / 384 - 5179.0 / 57600) * k1 + (500.0 / 1113 - 7571.0 / 16695) * k3 +
             (125.0 / 192 - 393.0 / 640) * k4 + (-2187.0 / 6784 + 92097.0 / 339200) * k5 +
             (11.0 / 84 - 187.0 / 2100) * k6 - (1.0 / 40) * k7);
    double e = 0.0;
    for (Eigen::Index i = 0; i < y.size(); ++i) {
      const double sc = o.atol + o.rtol * std::max(std::abs(y[i]), std::abs(out[i]));
      e = std::max(e, std::abs(err[i]) / sc);
    }
    return e;
  }

 private:
  Manifold manifold_;
  std::vector<double> strengths_;
  std::vector<int> charts_;
  int block_ = 1;
  int count_ = 0;
};

}  // namespace

Trajectory integrate(const VortexSystem& system, double dt, long steps, Integrator method,
                     const IntegratorOptions& options) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw DomainError("time step must be positive and finite");
  if (steps < 0) throw DomainError("step count must be non-negative");

  Trajectory traj;
  traj.times.reserve(steps + 1);
  traj.states.reserve(steps + 1);
  traj.monitors.reserve(steps + 1);
  traj.times.push_back(0.0);
  traj.states.push_back(system);
  traj.monitors.push_back(monitor(system));

  Stepper stepper(system);
  double h_adapt = dt;
  for (long step = 1; step <= steps; ++step) {
    const VortexSystem& cur = traj.states.back();
    stepper.set_charts(cur.charts());
    ComplexVector y = stepper.pack(cur);
    try {
      if (method == Integrator::rk4) {
        y = stepper.rk4(y, dt);
      } else {
        double t = 0.0;
        while (t < dt) {
          double h = std::min(h_adapt, dt - t);
          if (h < options.min_step) {
            throw StepSizeUnderflowError("adaptive step fell below " +
                                         std::to_string(options.min_step) + " at step " +
                                         std::to_string(step));
          }
          ComplexVector trial;
          const double e = stepper.dopri(y, h, trial, options);
          const double factor =
              e == 0.0 ? 5.0 : std::clamp(options.safety * std::pow(e, -0.2), 0.2, 5.0);
          if (e <= 1.0 && trial.allFinite()) {
            stepper.renormalize(trial);
            y = std::move(trial);
            // substeps shrink toward a collapse, so check inside the output interval
            if (stepper.min_separation(y) < kCollisionThreshold) {
              throw CollisionError("vortices collided inside an adaptive step");
            }
            t += h;
            // a step clipped to the output time does not grow the estimate
            if (h == h_adapt || factor < 1.0) h_adapt = h * factor;
          } else {
            h_adapt = h * std::min(factor, 0.9);
          }
        }
      }
    } catch (const SingularityError& e) {
      throw CollisionError(std::string("collision during step: ") + e.what(), step);
    } catch (const CollisionError& e) {
      throw CollisionError(e.what(), step);
    }
    if (!y.allFinite()) {
      throw StepSizeUnderflowError("non-finite state at step " + std::to_string(step));
    }
    try {
      traj.states.push_back(cur.with_positions(stepper.unpack(y), cur.charts()));
    } catch (const CollisionError& e) {
      throw CollisionError(e.what(), step);
    }
    traj.times.push_back(static_cast<double>(step) * dt);
    traj.monitors.push_back(monitor(traj.states.back()));
  }
  return traj;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& trajectory) {
  if (trajectory.states.empty()) return;
  const VortexSystem& first = trajectory.states.front();
  const bool plane = first.manifold().kind == ManifoldKind::plane;
  const int n = first.manifold().n;
  char buf[64];
  auto num = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    os << ',' << buf;
  };

  os << 't';
  for (int a = 0; a < first.size(); ++a) {
    os << ",chart_" << a;
    for (int j = 1; j <= n; ++j) os << ",x_" << a << '_' << j;
    for (int j = 1; j <= n; ++j) os << ",y_" << a << '_' << j;
  }
  os << ",H,momentum_norm,min_dist\n";

  for (std::size_t k = 0; k < trajectory.states.size(); ++k) {
    const VortexSystem& s = trajectory.states[k];
    std::snprintf(buf, sizeof buf, "%.17g", trajectory.times[k]);
    os << buf;
    for (int a = 0; a < s.size(); ++a) {
      ComplexVector vals;
      int chart = 0;
      if (plane) {
        vals = s.position(a);
      } else {
        chart = s.chart(a);
        vals = chart_of(s.position(a), chart).values;
      }
      os << ',' << chart;
      for (int j = 0; j < n; ++j) num(vals[j].real());
      for (int j = 0; j < n; ++j) num(vals[j].imag());
    }
    const Monitor& m = trajectory.monitors[k];
    num(m.hamiltonian);
    num(m.momentum_norm);
    num(m.min_distance);
    os << '\n';
  }
}

}  // namespace cpv
