#include "cpvortex_cli/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cpvortex/errors.hpp"

namespace cpv::cli {

ProjectivePoint sample_point(int n, Rng& rng) {
  std::normal_distribution<double> g;
  ComplexVector v(n + 1);
  for (int i = 0; i <= n; ++i) v[i] = Complex{g(rng), g(rng)};
  return ProjectivePoint(v);
}

Complex sample_disk(double radius, Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = radius * std::sqrt(u(rng));
  return std::polar(r, 2.0 * std::numbers::pi * u(rng));
}

FlagCoords sample_flag(double radius, Rng& rng) {
  const Complex a = sample_disk(radius, rng);
  const Complex b = sample_disk(radius, rng);
  return {a, b, sample_disk(radius, rng)};
}

ComplexMatrix sample_unitary(int m, Rng& rng) {
  std::normal_distribution<double> g;
  ComplexMatrix a(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) a(i, j) = Complex{g(rng), g(rng)};
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(a);
  ComplexMatrix q = qr.householderQ();
  for (int j = 0; j < m; ++j) {
    const Complex d = qr.matrixQR()(j, j);
    q.col(j) *= d / std::abs(d);
  }
  return q;
}

VortexSystem sample_system(const Manifold& manifold, int count, double min_separation,
                           double strength_min, double strength_max, double radius, Rng& rng) {
  if (count < 1) throw ConfigurationError("random vortex count must be at least 1");
  if (!(strength_min <= strength_max)) throw ConfigurationError("empty strength range");
  std::uniform_real_distribution<double> gamma(strength_min, strength_max);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<ComplexVector> pos;
    std::vector<double> g;
    for (int a = 0; a < count; ++a) {
      if (manifold.kind == ManifoldKind::plane) {
        pos.push_back(ComplexVector::Constant(1, sample_disk(radius, rng)));
      } else {
        pos.push_back(sample_point(manifold.n, rng).coords());
      }
      g.push_back(gamma(rng));
    }
    bool ok = true;
    for (int a = 0; a < count && ok; ++a) {
      for (int b = a + 1; b < count && ok; ++b) {
        const double d = manifold.kind == ManifoldKind::plane
                             ? std::abs(pos[a][0] - pos[b][0])
                             : geodesic_distance_cpn(ProjectivePoint(pos[a]), ProjectivePoint(pos[b]));
        ok = d >= min_separation;
      }
    }
    if (ok && std::all_of(g.begin(), g.end(), [](double x) { return x != 0.0; })) {
      return VortexSystem(manifold, std::move(pos), std::move(g));
    }
  }
  throw ConfigurationError("could not place random vortices with the requested separation");
}

}  // namespace cpv::cli
