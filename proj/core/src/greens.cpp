#include "cpvortex/greens.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "cpvortex/errors.hpp"

namespace cpv {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = std::numbers::pi / 2;

void require_n(int n) {
  if (n < 1) throw DomainError("CP^n requires n >= 1, got " + std::to_string(n));
}

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

// 1 / (2n vol(CP^n)) = (n-1)! / (2 pi^n)
double greens_prefactor(int n) { return 1.0 / (2.0 * n * CrossSpaceSpec::cpn(n).volume); }

void check_radius(double r) {
  if (!std::isfinite(r)) throw DomainError("non-finite geodesic distance");
  if (r <= 0.0) throw SingularityError("Green's function is singular at r = 0");
  if (r > kHalfPi) {
    throw DomainError("geodesic distance " + std::to_string(r) + " exceeds diam(CP^n) = pi/2");
  }
}

}  // namespace

CrossSpaceSpec CrossSpaceSpec::cpn(int n) {
  require_n(n);
  CrossSpaceSpec s;
  s.n = n;
  s.volume = std::pow(kPi, n) / factorial(n);
  s.diameter = kHalfPi;
  return s;
}

double volume_density_cpn(int n, double r) {
  require_n(n);
  if (!(r > 0.0 && r < kHalfPi)) {
    throw DomainError("volume density defined on (0, pi/2), got r = " + std::to_string(r));
  }
  return std::pow(2.0, 2 * n - 1) * std::pow(std::sin(r), 2 * n - 1) * std::cos(r) /
         std::pow(r, n - 1);
}

double log_sine_profile(int n, double x) {
  require_n(n);
  const double s2 = std::sin(x) * std::sin(x);
  double sum = 0.0;
  double p = 1.0;
  for (int j = 1; j < n; ++j) {
    p *= s2;
    sum += 1.0 / (2.0 * j * p);
  }
  return 0.5 * std::log(s2) - sum;
}

double log_sine_profile_integrand(int n, double x) {
  require_n(n);
  const double s = std::sin(x);
  return (1.0 - std::pow(s, 2 * n)) / (std::pow(s, 2 * n - 1) * std::cos(x));
}

double greens_cpn(int n, double r) {
  require_n(n);
  check_radius(r);
  return -greens_prefactor(n) * log_sine_profile(n, r);
}

double greens_cpn_from_cos2(int n, double q) {
  require_n(n);
  if (!std::isfinite(q) || q < 0.0) throw DomainError("cos^2 r must lie in [0, 1)");
  const double s2 = 1.0 - q;
  if (!(s2 > 0.0)) throw SingularityError("coincident points: cos^2 r = 1");
  double sum = 0.0;
  double p = 1.0;
  for (int j = 1; j < n; ++j) {
    p *= s2;
    sum += 1.0 / (2.0 * j * p);
  }
  return -greens_prefactor(n) * (0.5 * std::log(s2) - sum);
}

double greens_cpn_derivative(int n, double r) {
  require_n(n);
  check_radius(r);
  const double s = std::sin(r);
  const double s2 = s * s;
  double sum = 0.0;
  double p = 1.0;
  for (int k = 0; k < n; ++k) {
    sum += p;
    p *= s2;
  }
  return -greens_prefactor(n) * std::cos(r) * sum / std::pow(s, 2 * n - 1);
}

double greens_cpn_dq(int n, double q) {
  require_n(n);
  const double s2 = 1.0 - q;
  if (!(s2 > 0.0)) throw SingularityError("coincident points: cos^2 r = 1");
  double sum = 0.0;
  double p = 1.0;
  for (int m = 1; m <= n; ++m) {
    p /= s2;
    sum += p;
  }
  return 0.5 * greens_prefactor(n) * sum;
}

namespace {

// One 15/31-point Gauss-Kronrod panel. Boost reports the error of the panel
// mapped to [-1, 1] without the Jacobian, so the map is applied here.
template <class F>
double panel(const F& f, double a, double b, double& err) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  auto mapped = [&f, mid, half](double x) { return half * f(mid + half * x); };
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(mapped, -1.0, 1.0, 0, 0.0,
                                                                       &err);
}

// Bisects until each panel meets its share of the absolute target or the
// level budget runs out; `err` accumulates the panel estimates.
template <class F>
double refine(const F& f, double a, double b, double target, int levels, double& err) {
  double e = 0.0;
  const double v = panel(f, a, b, e);
  if (e <= target || levels == 0) {
    err += e;
    return v;
  }
  const double mid = 0.5 * (a + b);
  return refine(f, a, mid, 0.5 * target, levels - 1, err) +
         refine(f, mid, b, 0.5 * target, levels - 1, err);
}

}  // namespace

double greens_ode_oracle(int n, double r_a, double r_b) {
  require_n(n);
  if (r_a == r_b) return 0.0;
  if (!(r_a > 0.0 && r_a < r_b && r_b < kHalfPi)) {
    throw DomainError("oracle interval must satisfy 0 < r_a < r_b < pi/2");
  }
  const double vol = CrossSpaceSpec::cpn(n).volume;
  const double scale = std::pow(2.0, 2 * n - 1);
  auto dphi = [n, vol, scale](double r) {
    const double inner = scale * (1.0 - std::pow(std::sin(r), 2 * n)) / (2.0 * n);
    const double weight = std::pow(r, n - 1) * volume_density_cpn(n, r);
    return -inner / (weight * vol);
  };
  // the integrand grows like r^(1-2n) near 0, so the target scales with the result
  double coarse_err = 0.0;
  const double target = 1e-10 * std::max(1.0, std::abs(panel(dphi, r_a, r_b, coarse_err)));
  double err = 0.0;
  const double value = refine(dphi, r_a, r_b, target, 20, err);
  if (!(err <= target) || !std::isfinite(value)) {
    throw OracleError("Gauss-Kronrod did not reach its target on [" + std::to_string(r_a) + ", " +
                          std::to_string(r_b) + "]",
                      err);
  }
  return value;
}

double greens_plane(const Eigen::Vector2d& x, const Eigen::Vector2d& y) {
  const double d = (x - y).norm();
  if (!(d > 0.0)) throw SingularityError("planar Green's function at coincident points");
  return -std::log(d) / (2.0 * kPi);
}

double greens_sphere(double theta) {
  if (!std::isfinite(theta) || theta > kPi) {
    throw DomainError("sphere angle must lie in (0, pi]");
  }
  if (theta <= 0.0) throw SingularityError("sphere Green's function at coincident points");
  return std::log(1.0 - std::cos(theta)) / (2.0 * kPi);
}

}  // namespace cpv
