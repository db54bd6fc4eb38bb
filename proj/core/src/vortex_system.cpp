#include "cpvortex/vortex_system.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "cpvortex/errors.hpp"

namespace cpv {

Manifold Manifold::cpn(int n) {
  if (n < 1) throw ConfigurationError("CP^n requires n >= 1");
  return {ManifoldKind::cpn, n};
}

std::string Manifold::name() const {
  return kind == ManifoldKind::plane ? std::string("plane") : "CP^" + std::to_string(n);
}

VortexSystem::VortexSystem(Manifold manifold, std::vector<ComplexVector> positions,
                           std::vector<double> strengths)
    : manifold_(manifold), positions_(std::move(positions)), strengths_(std::move(strengths)) {
  validate_and_normalize();
  charts_.resize(positions_.size(), 0);
  if (manifold_.kind == ManifoldKind::cpn) {
    for (int i = 0; i < size(); ++i) charts_[i] = best_chart(point(i));
  }
}

VortexSystem VortexSystem::planar(const std::vector<Complex>& z, std::vector<double> strengths) {
  std::vector<ComplexVector> pos;
  pos.reserve(z.size());
  for (const auto& w : z) pos.push_back(ComplexVector::Constant(1, w));
  return VortexSystem(Manifold::plane(), std::move(pos), std::move(strengths));
}

VortexSystem VortexSystem::projective(const std::vector<ProjectivePoint>& points,
                                      std::vector<double> strengths) {
  if (points.empty()) throw ConfigurationError("vortex system needs at least one vortex");
  std::vector<ComplexVector> pos;
  pos.reserve(points.size());
  for (const auto& p : points) pos.push_back(p.coords());
  return VortexSystem(Manifold::cpn(points.front().n()), std::move(pos), std::move(strengths));
}

void VortexSystem::validate_and_normalize() {
  if (positions_.empty()) throw ConfigurationError("vortex system needs at least one vortex");
  if (positions_.size() != strengths_.size()) {
    throw ConfigurationError("positions and strengths differ in length");
  }
  for (std::size_t i = 0; i < strengths_.size(); ++i) {
    if (!std::isfinite(strengths_[i]) || strengths_[i] == 0.0) {
      throw ConfigurationError("vortex " + std::to_string(i) + " has zero or non-finite strength");
    }
  }
  const Eigen::Index want = manifold_.kind == ManifoldKind::plane ? 1 : manifold_.n + 1;
  for (std::size_t i = 0; i < positions_.size(); ++i) {
    if (positions_[i].size() != want) {
      throw DimensionError("vortex " + std::to_string(i) + " position has " +
                           std::to_string(positions_[i].size()) + " entries, " +
                           manifold_.name() + " needs " + std::to_string(want));
    }
    if (!positions_[i].allFinite()) {
      throw DomainError("vortex " + std::to_string(i) + " position is not finite");
    }
    if (manifold_.kind == ManifoldKind::cpn) {
      positions_[i] = ProjectivePoint(positions_[i]).coords();
    }
  }
  for (int i = 0; i < size(); ++i) {
    for (int j = i + 1; j < size(); ++j) {
      const double d = distance(i, j);
      if (d < kCollisionThreshold) {
        std::ostringstream os;
        os << "vortices " << i << " and " << j << " collide (distance " << d << ")";
        throw CollisionError(os.str());
      }
    }
  }
}

Complex VortexSystem::planar_position(int i) const {
  if (manifold_.kind != ManifoldKind::plane) throw ConfigurationError("system is not planar");
  return positions_.at(i)[0];
}

ProjectivePoint VortexSystem::point(int i) const {
  if (manifold_.kind != ManifoldKind::cpn) throw ConfigurationError("system is not on CP^n");
  return ProjectivePoint(positions_.at(i));
}

VortexSystem VortexSystem::with_positions(std::vector<ComplexVector> positions,
                                          const std::vector<int>& charts) const {
  VortexSystem s;
  s.manifold_ = manifold_;
  s.positions_ = std::move(positions);
  s.strengths_ = strengths_;
  s.validate_and_normalize();
  s.charts_.assign(s.positions_.size(), 0);
  if (manifold_.kind == ManifoldKind::cpn) {
    const double thr = pivot_threshold(manifold_.n);
    for (int i = 0; i < s.size(); ++i) {
      const int c = i < static_cast<int>(charts.size()) ? charts[i] : -1;
      const bool usable = c >= 0 && c <= manifold_.n && std::abs(s.positions_[i][c]) > thr;
      s.charts_[i] = usable ? c : best_chart(s.point(i));
    }
  }
  return s;
}

double VortexSystem::distance(int i, int j) const {
  const ComplexVector& a = positions_.at(i);
  const ComplexVector& b = positions_.at(j);
  if (manifold_.kind == ManifoldKind::plane) return std::abs(a[0] - b[0]);
  // positions are stored unit-norm
  return std::acos(std::min(1.0, std::abs(hermitian_inner(a, b))));
}

double VortexSystem::min_distance() const {
  double m = std::numeric_limits<double>::infinity();
  for (int i = 0; i < size(); ++i) {
    for (int j = i + 1; j < size(); ++j) m = std::min(m, distance(i, j));
  }
  return m;
}

}  // namespace cpv
