#pragma once

/// @file geom.hpp
/// Complex projective linear algebra: Hermitian pairings, points of CP^n,
/// affine charts, the Fubini-Study distance and metric.
///
/// Conventions used throughout the library:
///   * the Hermitian pairing is <u, v> = sum_j u_j conj(v_j);
///   * the Fubini-Study metric in the chart (1 : z_1 : ... : z_n) is
///       h_ij = ((1 + |z|^2) delta_ij - conj(z_i) z_j) / (1 + |z|^2)^2,
///     the complex Hessian of log(1 + |z|^2);
///   * geodesic distance r = arccos(|<xi, eta>| / (|xi| |eta|)), so diam(CP^n) = pi/2;
///   * real tangent vectors are ordered (x_1..x_n, y_1..y_n) with z_k = x_k + i y_k.

#include <complex>

#include <Eigen/Dense>

namespace cpv {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

/// A point of CP^n stored as a unit vector of C^{n+1}, defined up to phase.
class ProjectivePoint {
 public:
  /// Normalizes `coords`. Throws DimensionError for fewer than two entries and
  /// DomainError for a zero or non-finite vector.
  explicit ProjectivePoint(ComplexVector coords);

  /// The coordinate point [0 : .. : 1 : .. : 0] with the 1 at `index`.
  static ProjectivePoint basis(int n, int index);

  int n() const noexcept { return static_cast<int>(coords_.size()) - 1; }
  const ComplexVector& coords() const noexcept { return coords_; }
  Complex operator[](int i) const { return coords_[i]; }

  /// Projective equality: |<u, v>| = 1 within `tol`.
  bool equivalent(const ProjectivePoint& other, double tol = 1e-12) const;

  /// Image under a linear map of C^{n+1} (typically a unitary).
  ProjectivePoint transformed(const ComplexMatrix& u) const;

 private:
  ComplexVector coords_;
};

/// Affine chart values: the point is coords / coords[chart_index] with the
/// pivot entry dropped, remaining indices in ascending order.
struct AffineChart {
  int chart_index = 0;
  ComplexVector values;

  int n() const noexcept { return static_cast<int>(values.size()); }
};

/// sum_j u_j conj(v_j).
Complex hermitian_inner(const ComplexVector& u, const ComplexVector& v);

/// Fubini-Study geodesic distance in [0, pi/2].
double geodesic_distance_cpn(const ProjectivePoint& xi, const ProjectivePoint& eta);

/// cos^2 of the geodesic distance, |<xi,eta>|^2 for unit representatives, in [0, 1].
double cos2_distance_cpn(const ProjectivePoint& xi, const ProjectivePoint& eta);

/// Chart-switching threshold 1/sqrt(2(n+1)). Every unit vector has a
/// coordinate of modulus >= 1/sqrt(n+1) above it, so a chart always exists.
double pivot_threshold(int n);

/// Pivots at or below this modulus make to_chart throw ChartDegenerateError.
inline constexpr double kChartDegenerateTolerance = 1e-8;

/// Index of the largest-modulus coordinate (always a valid chart).
int best_chart(const ProjectivePoint& p);

AffineChart to_chart(const ProjectivePoint& p, int chart_index);
ProjectivePoint from_chart(const AffineChart& chart);

/// Unnormalized homogeneous vector with 1 inserted at the pivot.
ComplexVector chart_lift(const AffineChart& chart);

/// Kahler potential log(1 + |z|^2) of the Fubini-Study metric.
double fubini_study_potential(const ComplexVector& z);

/// Hermitian metric h_ij of CP^n in the given chart.
ComplexMatrix fubini_study_metric(const AffineChart& chart);

/// Closed-form inverse (1 + |z|^2)(delta_ij + conj(z_i) z_j).
ComplexMatrix fubini_study_metric_inverse(const AffineChart& chart);

/// Real 2n x 2n matrix of the fundamental form omega = -Im(h) in the layout
///   [[Im h, -Re h], [Re h, Im h]],
/// arranged so that (Omega u)_j = omega(u, e_j), i.e. Omega u is iota_u omega.
RealMatrix kahler_form_matrix(const ComplexMatrix& h);

/// Real 2n vector (Re v, Im v).
RealVector to_real(const ComplexVector& v);
/// Inverse of to_real.
ComplexVector to_complex(const RealVector& r);

}  // namespace cpv
