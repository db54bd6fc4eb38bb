#pragma once

/// @file vortex_system.hpp
/// N point vortices with real strengths on the plane or on CP^n.

#include <string>
#include <vector>

#include "cpvortex/geom.hpp"

namespace cpv {

enum class ManifoldKind { plane, cpn };

struct Manifold {
  ManifoldKind kind = ManifoldKind::plane;
  int n = 1;  ///< complex dimension; 1 for the plane

  static Manifold plane() { return {ManifoldKind::plane, 1}; }
  static Manifold cpn(int n);

  bool operator==(const Manifold&) const = default;
  std::string name() const;
};

/// Vortices closer than this (geodesic or Euclidean distance) are collided.
inline constexpr double kCollisionThreshold = 1e-4;

/// Immutable vortex configuration. Planar positions are stored as length-1
/// vectors; projective positions as unit homogeneous vectors together with an
/// active chart index per vortex.
class VortexSystem {
 public:
  /// Validates N >= 1, nonzero finite strengths, position sizes and pairwise
  /// separation (CollisionError). Projective positions are normalized and get
  /// their largest-modulus coordinate as active chart.
  VortexSystem(Manifold manifold, std::vector<ComplexVector> positions,
               std::vector<double> strengths);

  static VortexSystem planar(const std::vector<Complex>& z, std::vector<double> strengths);
  static VortexSystem projective(const std::vector<ProjectivePoint>& points,
                                 std::vector<double> strengths);

  const Manifold& manifold() const noexcept { return manifold_; }
  int size() const noexcept { return static_cast<int>(strengths_.size()); }
  const std::vector<double>& strengths() const noexcept { return strengths_; }
  double strength(int i) const { return strengths_.at(i); }

  const ComplexVector& position(int i) const { return positions_.at(i); }
  const std::vector<ComplexVector>& positions() const noexcept { return positions_; }
  Complex planar_position(int i) const;
  ProjectivePoint point(int i) const;
  int chart(int i) const { return charts_.at(i); }
  const std::vector<int>& charts() const noexcept { return charts_; }

  /// New system with the same strengths. A requested chart whose pivot has
  /// dropped below the geom threshold is replaced by the largest coordinate.
  VortexSystem with_positions(std::vector<ComplexVector> positions,
                              const std::vector<int>& charts) const;

  /// Distance between vortices i and j on the underlying manifold.
  double distance(int i, int j) const;
  double min_distance() const;

 private:
  VortexSystem() = default;
  void validate_and_normalize();

  Manifold manifold_;
  std::vector<ComplexVector> positions_;
  std::vector<double> strengths_;
  std::vector<int> charts_;
};

}  // namespace cpv
