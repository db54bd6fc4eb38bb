#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cpvortex/dynamics.hpp"
#include "cpvortex/errors.hpp"
#include "cpvortex/momentum.hpp"
#include "support/oracles.hpp"

using namespace cpv;
using C = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;

VortexSystem random_cpn_system(int n, int count, std::mt19937_64& rng, double min_sep = 0.3) {
  std::uniform_real_distribution<double> gamma(0.5, 1.5);
  for (;;) {
    std::vector<ProjectivePoint> pts;
    std::vector<double> g;
    for (int a = 0; a < count; ++a) {
      pts.push_back(oracle::random_point(n, rng));
      g.push_back(gamma(rng));
    }
    bool ok = true;
    for (int a = 0; a < count && ok; ++a) {
      for (int b = a + 1; b < count; ++b) ok = ok && geodesic_distance_cpn(pts[a], pts[b]) >= min_sep;
    }
    if (ok) return VortexSystem::projective(pts, g);
  }
}

VortexSystem random_planar_system(int count, std::mt19937_64& rng, double min_sep = 0.3) {
  std::uniform_real_distribution<double> gamma(0.5, 1.5);
  for (;;) {
    std::vector<C> z;
    std::vector<double> g;
    for (int a = 0; a < count; ++a) {
      z.push_back(oracle::random_in_disk(1.5, rng));
      g.push_back(gamma(rng));
    }
    bool ok = true;
    for (int a = 0; a < count && ok; ++a) {
      for (int b = a + 1; b < count; ++b) ok = ok && std::abs(z[a] - z[b]) >= min_sep;
    }
    if (ok) return VortexSystem::planar(z, g);
  }
}

/// Moves vortex a by eps along real chart direction k, keeping its chart.
VortexSystem nudge(const VortexSystem& s, int a, int k, double eps) {
  std::vector<ComplexVector> pos = s.positions();
  if (s.manifold().kind == ManifoldKind::plane) {
    pos[a][0] += (k == 0 ? C(eps, 0.0) : C(0.0, eps));
  } else {
    const int n = s.manifold().n;
    AffineChart ch = to_chart(s.point(a), s.chart(a));
    ch.values[k % n] += (k < n ? C(eps, 0.0) : C(0.0, eps));
    pos[a] = from_chart(ch).coords();
  }
  return s.with_positions(pos, s.charts());
}

double relative_grad_error(const VortexSystem& s) {
  const std::vector<ChartVector> g = grad_hamiltonian(s);
  double err = 0.0, scale = 0.0;
  const double h = 1e-5;
  for (int a = 0; a < s.size(); ++a) {
    EXPECT_EQ(g[a].chart, s.manifold().kind == ManifoldKind::plane ? 0 : s.chart(a));
    for (Eigen::Index k = 0; k < g[a].components.size(); ++k) {
      const double fd =
          (hamiltonian(nudge(s, a, int(k), h)) - hamiltonian(nudge(s, a, int(k), -h))) / (2 * h);
      err = std::max(err, std::abs(fd - g[a].components[k]));
      scale = std::max(scale, std::abs(g[a].components[k]));
    }
  }
  return err / std::max(scale, 1e-12);
}

}  // namespace

TEST(Planar, RhsAnchors) {
  const auto one = planar_rhs(VortexSystem::planar({C(0.3, 0.2)}, {2.0}));
  EXPECT_EQ(one[0], C(0.0));

  const double d = 1.3, g = 0.8;
  const auto rot = planar_rhs(VortexSystem::planar({C(-d / 2, 0), C(d / 2, 0)}, {g, g}));
  const double omega = g / (kPi * d * d);
  EXPECT_NEAR(std::abs(rot[1] - C(0.0, omega * d / 2)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(rot[0] + rot[1]), 0.0, 1e-15);

  const auto pair = planar_rhs(VortexSystem::planar({C(-0.5, 0), C(0.5, 0.1)}, {1.0, -1.0}));
  EXPECT_NEAR(std::abs(pair[0] - pair[1]), 0.0, 1e-15);
}

TEST(Planar, ConservedAnchors) {
  const PlanarInvariants a = planar_conserved(VortexSystem::planar({C(1, 1)}, {1.0}));
  EXPECT_EQ(a.px, 1.0);
  EXPECT_EQ(a.py, 1.0);
  EXPECT_EQ(a.m, 1.0);
  const PlanarInvariants b = planar_conserved(VortexSystem::planar({C(1, 0), C(-1, 0)}, {1.0, -1.0}));
  EXPECT_EQ(b.px, 2.0);
  EXPECT_EQ(b.py, 0.0);
  EXPECT_EQ(b.m, 0.0);
  const PlanarInvariants c = planar_conserved(VortexSystem::planar({C(0, 0)}, {3.0}));
  EXPECT_EQ(c.px, 0.0);
  EXPECT_EQ(c.m, 0.0);
}

TEST(Planar, HamiltonianAnchors) {
  EXPECT_EQ(planar_hamiltonian(VortexSystem::planar({C(0, 0), C(1, 0)}, {1.0, 1.0})), 0.0);
  EXPECT_NEAR(planar_hamiltonian(VortexSystem::planar({C(0, 0), C(std::exp(1.0), 0)}, {1.0, 1.0})),
              -1.0 / (2 * kPi), 1e-16);
  const C w = std::polar(1.0, 2 * kPi / 3);
  const double s = 1.0 / std::sqrt(3.0);
  EXPECT_NEAR(planar_hamiltonian(VortexSystem::planar({C(s, 0), s * w, s * w * w}, {1.0, 1.0, 1.0})),
              0.0, 1e-15);
}

TEST(VortexSystemTest, Validation) {
  EXPECT_THROW(VortexSystem::planar({}, {}), ConfigurationError);
  EXPECT_THROW(VortexSystem::planar({C(0, 0)}, {0.0}), ConfigurationError);
  EXPECT_THROW(VortexSystem::planar({C(0, 0), C(1e-5, 0)}, {1.0, 1.0}), CollisionError);
  EXPECT_THROW(VortexSystem::planar({C(0, 0)}, {1.0, 2.0}), ConfigurationError);
  EXPECT_THROW(VortexSystem::projective({ProjectivePoint::basis(1, 0), ProjectivePoint::basis(2, 0)},
                                        {1.0, 1.0}),
               DimensionError);
  const ProjectivePoint p = ProjectivePoint::basis(2, 1);
  const ProjectivePoint q(p.coords() * C(0.0, 1.0));
  EXPECT_THROW(VortexSystem::projective({p, q}, {1.0, 1.0}), CollisionError);
  EXPECT_THROW(Manifold::cpn(0), ConfigurationError);
}

TEST(HamiltonianCpn, Anchors) {
  const VortexSystem single = VortexSystem::projective({ProjectivePoint::basis(2, 0)}, {1.0});
  EXPECT_EQ(hamiltonian_cpn(single), 0.0);

  const VortexSystem orth = VortexSystem::projective(
      {ProjectivePoint::basis(2, 0), ProjectivePoint::basis(2, 1)}, {1.0, 1.0});
  EXPECT_NEAR(hamiltonian_cpn(orth), 1.0 / (4 * kPi * kPi), 1e-16);

  ComplexVector v(2);
  v << std::cos(kPi / 4), std::sin(kPi / 4);
  const VortexSystem quarter =
      VortexSystem::projective({ProjectivePoint::basis(1, 0), ProjectivePoint(v)}, {1.0, 1.0});
  EXPECT_NEAR(hamiltonian_cpn(quarter), std::log(2.0) / (4 * kPi), 1e-15);

  EXPECT_NEAR(hamiltonian_prefactor(1), hamiltonian_prefactor_alternative(1), 1e-16);
  EXPECT_NEAR(hamiltonian_prefactor(2), hamiltonian_prefactor_alternative(2), 1e-16);
}

TEST(HamiltonianCpn, UnitaryInvariance) {
  std::mt19937_64 rng(51);
  for (int n = 1; n <= 3; ++n) {
    for (int t = 0; t < 50; ++t) {
      const VortexSystem s = random_cpn_system(n, 3, rng, 0.1);
      const ComplexMatrix u = oracle::random_unitary(n + 1, rng);
      std::vector<ProjectivePoint> moved;
      for (int a = 0; a < s.size(); ++a) moved.push_back(s.point(a).transformed(u));
      const VortexSystem m = VortexSystem::projective(moved, s.strengths());
      EXPECT_LT(std::abs(hamiltonian_cpn(m) - hamiltonian_cpn(s)), 1e-10);
    }
  }
}

TEST(HamiltonianCpn, StrengthScaling) {
  std::mt19937_64 rng(52);
  const VortexSystem s = random_cpn_system(2, 3, rng);
  std::vector<double> g = s.strengths();
  for (double& x : g) x *= 2.5;
  const VortexSystem t = VortexSystem::projective({s.point(0), s.point(1), s.point(2)}, g);
  EXPECT_NEAR(hamiltonian(t), 6.25 * hamiltonian(s), 1e-13);
  const auto xs = hamiltonian_vector_field(s);
  const auto xt = hamiltonian_vector_field(t);
  for (int a = 0; a < 3; ++a) {
    EXPECT_LT((xt[a].components - 2.5 * xs[a].components).norm(),
              1e-12 * (1.0 + xs[a].components.norm()));
  }
}

TEST(Gradient, SingleVortexIsZero) {
  const VortexSystem s = VortexSystem::projective({ProjectivePoint::basis(2, 1)}, {1.0});
  EXPECT_EQ(grad_hamiltonian(s)[0].components.norm(), 0.0);
  EXPECT_EQ(hamiltonian_vector_field(s)[0].components.norm(), 0.0);
}

TEST(Gradient, SymmetricPairIsOpposite) {
  ComplexVector a(2), b(2);
  a << 1.0, 0.4;
  b << 1.0, -0.4;
  const VortexSystem s = VortexSystem::projective({ProjectivePoint(a), ProjectivePoint(b)}, {1.0, 1.0});
  const auto g = grad_hamiltonian(s);
  EXPECT_EQ(g[0].chart, 0);
  EXPECT_EQ(g[1].chart, 0);
  EXPECT_LT((g[0].components + g[1].components).norm(), 1e-14);
  EXPECT_GT(g[0].components.norm(), 1e-3);
}

TEST(Gradient, MatchesFiniteDifferences) {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 50; ++t) {
    const int n = 1 + t % 3;
    EXPECT_LE(relative_grad_error(random_cpn_system(n, 3, rng)), 1e-6) << "n=" << n;
  }
  for (int t = 0; t < 10; ++t) EXPECT_LE(relative_grad_error(random_planar_system(3, rng)), 1e-6);
}

TEST(VectorField, OmegaIdentity) {
  std::mt19937_64 rng(54);
  for (int t = 0; t < 30; ++t) {
    const int n = 1 + t % 3;
    EXPECT_LE(omega_identity_defect(random_cpn_system(n, 3, rng), 10, t), 1e-6);
  }
  EXPECT_LE(omega_identity_defect(random_planar_system(3, rng)), 1e-6);
}

TEST(VectorField, ConventionSelfTest) {
  const ConventionReport r = verify_conventions();
  EXPECT_LE(r.omega_defect, 1e-8);
  EXPECT_LE(r.planar_rhs_mismatch, 1e-8);
  ASSERT_EQ(r.prefactor_ratio.size(), 4u);
  EXPECT_NEAR(r.prefactor_ratio[0], 1.0, 1e-15);
  EXPECT_NEAR(r.prefactor_ratio[1], 1.0, 1e-15);
}

TEST(VectorField, HorizontalVelocity) {
  std::mt19937_64 rng(55);
  const VortexSystem s = random_cpn_system(2, 3, rng);
  const auto v = homogeneous_velocity(s);
  for (int a = 0; a < 3; ++a) EXPECT_LT(std::abs(hermitian_inner(v[a], s.position(a))), 1e-14);
}

TEST(Integrate, ZeroSteps) {
  const VortexSystem s = VortexSystem::planar({C(0, 0), C(1, 0)}, {1.0, 1.0});
  const Trajectory tr = integrate(s, 0.1, 0, Integrator::rk4);
  ASSERT_EQ(tr.states.size(), 1u);
  EXPECT_EQ(tr.times[0], 0.0);
  EXPECT_EQ(tr.monitors.size(), 1u);
}

TEST(Integrate, PlanarPeriod) {
  const double d = 1.0, g = 1.0;
  const double period = 2 * kPi * kPi * d * d / g;
  const VortexSystem s = VortexSystem::planar({C(-d / 2, 0), C(d / 2, 0)}, {g, g});
  const Trajectory tr = integrate(s, period / 1e4, 10000, Integrator::rk4);
  const C end = tr.states.back().planar_position(1);
  EXPECT_LT(std::abs(end - C(d / 2, 0)), 1e-3 * d);
  EXPECT_NEAR(std::arg(tr.states[5000].planar_position(1)), kPi, 1e-3);
}

TEST(Integrate, Cp1SeparationConstant) {
  std::mt19937_64 rng(56);
  const ProjectivePoint a = oracle::random_point(1, rng);
  const ProjectivePoint b = oracle::random_point(1, rng);
  const VortexSystem s = VortexSystem::projective({a, b}, {1.0, 1.0});
  const double r0 = s.distance(0, 1);
  const Trajectory tr = integrate(s, 1e-3, 10000, Integrator::rk4);
  double drift = 0.0;
  for (const VortexSystem& st : tr.states) drift = std::max(drift, std::abs(st.distance(0, 1) - r0));
  EXPECT_LE(drift, 1e-8);
  EXPECT_GT((tr.states.back().position(0) - s.position(0)).norm(), 1e-3);
}

TEST(Integrate, ConservationCpn) {
  std::mt19937_64 rng(57);
  for (int n = 1; n <= 2; ++n) {
    const VortexSystem s = random_cpn_system(n, 3, rng);
    const Trajectory tr = integrate(s, 1e-3, 10000, Integrator::rk4);
    ASSERT_EQ(tr.states.size(), 10001u);
    const double h0 = tr.monitors.front().hamiltonian;
    const ComplexMatrix m0 = weighted_momentum(s).matrix();
    double dh = 0.0, dm = 0.0;
    for (std::size_t k = 0; k < tr.states.size(); ++k) {
      dh = std::max(dh, std::abs(tr.monitors[k].hamiltonian - h0) / std::max(std::abs(h0), 1e-3));
      dm = std::max(dm, (weighted_momentum(tr.states[k]).matrix() - m0).norm());
    }
    EXPECT_LE(dh, 1e-8) << "n=" << n;
    EXPECT_LE(dm, 1e-7) << "n=" << n;
  }
}

TEST(Integrate, ConservationPlanar) {
  std::mt19937_64 rng(58);
  const VortexSystem s = random_planar_system(3, rng);
  const Trajectory tr = integrate(s, 1e-3, 10000, Integrator::rk4);
  const PlanarInvariants i0 = planar_conserved(s);
  double d = 0.0;
  for (const VortexSystem& st : tr.states) {
    const PlanarInvariants i = planar_conserved(st);
    d = std::max({d, std::abs(i.px - i0.px), std::abs(i.py - i0.py), std::abs(i.m - i0.m)});
  }
  EXPECT_LE(d, 1e-9);
}

TEST(Integrate, AdaptiveMatchesRk4) {
  std::mt19937_64 rng(59);
  const VortexSystem s = random_cpn_system(2, 3, rng);
  const Trajectory a = integrate(s, 0.05, 40, Integrator::rk45_adaptive);
  const Trajectory b = integrate(s, 1e-3, 2000, Integrator::rk4);
  ASSERT_EQ(a.states.size(), 41u);
  EXPECT_NEAR(a.times.back(), 2.0, 1e-12);
  for (int v = 0; v < 3; ++v) {
    EXPECT_LT(geodesic_distance_cpn(a.states.back().point(v), b.states.back().point(v)), 1e-7);
  }
  const double h0 = a.monitors.front().hamiltonian;
  EXPECT_LE(std::abs(a.monitors.back().hamiltonian - h0) / std::max(std::abs(h0), 1e-3), 1e-8);
}

TEST(Integrate, CollisionCarriesStepIndex) {
  // Gamma = (2, 2, -1) with 2 l12^2 = l13^2 + l23^2 collapses self-similarly near t = 13.3
  const VortexSystem s =
      VortexSystem::planar({C(-1, 0), C(1, 0), C(1, std::sqrt(2.0))}, {2.0, 2.0, -1.0});
  long step = -1;
  try {
    integrate(s, 0.01, 2000, Integrator::rk45_adaptive);
  } catch (const CollisionError& e) {
    step = e.step();
  }
  EXPECT_GE(step, 1300);
  EXPECT_LE(step, 1400);

  // the mirror image expands instead
  const VortexSystem mirror =
      VortexSystem::planar({C(-1, 0), C(1, 0), C(1, -std::sqrt(2.0))}, {2.0, 2.0, -1.0});
  const Trajectory tr = integrate(mirror, 0.01, 1500, Integrator::rk45_adaptive);
  EXPECT_GT(tr.monitors.back().min_distance, tr.monitors.front().min_distance);
}

TEST(Integrate, CsvLayout) {
  const VortexSystem s = VortexSystem::projective(
      {ProjectivePoint::basis(2, 0), ProjectivePoint::basis(2, 1)}, {1.0, 2.0});
  const Trajectory tr = integrate(s, 1e-2, 3, Integrator::rk4);
  std::ostringstream os;
  write_trajectory_csv(os, tr);
  std::istringstream is(os.str());
  std::string header, row;
  std::getline(is, header);
  EXPECT_EQ(header,
            "t,chart_0,x_0_1,x_0_2,y_0_1,y_0_2,chart_1,x_1_1,x_1_2,y_1_1,y_1_2,"
            "H,momentum_norm,min_dist");
  int rows = 0;
  while (std::getline(is, row)) {
    ++rows;
    EXPECT_EQ(std::count(row.begin(), row.end(), ','), std::count(header.begin(), header.end(), ','));
  }
  EXPECT_EQ(rows, 4);

  std::ostringstream again;
  write_trajectory_csv(again, integrate(s, 1e-2, 3, Integrator::rk4));
  EXPECT_EQ(os.str(), again.str());
}
