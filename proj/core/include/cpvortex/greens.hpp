#pragma once

/// @file greens.hpp
/// Green's functions of the Laplace-Beltrami operator on the plane, the round
/// sphere and CP^n, the radial volume-density ODE for CP^n and a quadrature
/// oracle that integrates it independently of the closed form.

#include <numbers>

#include <Eigen/Core>

namespace cpv {

/// Radial data of CP^n with the Fubini-Study metric.
struct CrossSpaceSpec {
  int n = 1;
  double volume = std::numbers::pi;  ///< pi^n / n!
  double diameter = std::numbers::pi / 2;

  /// Throws DomainError for n < 1.
  static CrossSpaceSpec cpn(int n);
};

/// Volume density in geodesic polar coordinates,
///   V(r) = 2^{2n-1} sin^{2n-1}(r) cos(r) / r^{n-1},  0 < r < pi/2.
double volume_density_cpn(int n, double r);

/// Closed-form Green's function of CP^n as a function of the geodesic distance,
///   G(r) = -(log sin r - sum_{j=1}^{n-1} 1/(2j sin^{2j} r)) / (2n vol).
/// Throws SingularityError for r <= 0 and DomainError for r > pi/2.
double greens_cpn(int n, double r);

/// G expressed through Q = cos^2 r = |<xi, eta>|^2, accurate for small r.
/// Throws SingularityError for Q >= 1 and DomainError for Q < 0.
double greens_cpn_from_cos2(int n, double q);

/// dG/dr, evaluated as -cos r sum_{k<n} sin^{2k} r / (2n vol sin^{2n-1} r),
/// which stays finite at r = pi/2.
double greens_cpn_derivative(int n, double r);

/// dG/dQ with Q = cos^2 r, i.e. (1/(4n vol)) sum_{m=1}^{n} (1 - Q)^{-m}.
/// Used for chain-rule gradients; smooth up to Q = 0.
double greens_cpn_dq(int n, double q);

/// Integrates the radial ODE for G' from r_a to r_b with adaptive Gauss-Kronrod
/// quadrature. The inner integral of t^{n-1} V(t) over [r, pi/2] uses its closed
/// form; the outer integral is numeric. Returns 0 for r_a == r_b.
/// Throws OracleError if the absolute error estimate exceeds 1e-10.
double greens_ode_oracle(int n, double r_a, double r_b);

/// log sin x - sum_{j=1}^{n-1} 1/(2j sin^{2j} x), the antiderivative behind G.
double log_sine_profile(int n, double x);

/// (1 - sin^{2n} x) / (sin^{2n-1} x cos x), the claimed derivative of log_sine_profile.
double log_sine_profile_integrand(int n, double x);

/// -(1/2pi) ln|x - y| on R^2. Throws SingularityError for coincident points.
double greens_plane(const Eigen::Vector2d& x, const Eigen::Vector2d& y);

/// (1/2pi) log(1 - cos theta) on the unit sphere, 0 < theta <= pi.
double greens_sphere(double theta);

}  // namespace cpv
