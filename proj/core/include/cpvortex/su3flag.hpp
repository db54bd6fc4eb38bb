#pragma once

/// @file su3flag.hpp
/// SU(3) data and the geometry of the flag manifold F(1,2;C^3) on its big cell.
///
/// A point of the big cell is the unit lower-triangular matrix
///     [ 1  0  0 ]
///     [ z1 1  0 ]
///     [ z2 z3 1 ]
/// and the left action of SU(3) is g.Z = LU-normalization of g Z.

#include <array>
#include <complex>

#include <Eigen/Dense>

namespace cpv {

using Matrix3c = Eigen::Matrix3cd;
using Vector3c = Eigen::Vector3cd;
using Vector6 = Eigen::Matrix<double, 6, 1>;
using Matrix6 = Eigen::Matrix<double, 6, 6>;

enum class Su3Role { general, unitary, antihermitian_traceless, unit_lower_triangular };

/// 3x3 complex matrix whose role invariant is checked at construction.
class Su3Matrix {
 public:
  /// Throws InvariantError when `m` violates the invariant of `role`
  /// (unitarity to 1e-12, anti-Hermitian with zero trace to 1e-12, or exact
  /// unit lower-triangular shape).
  Su3Matrix(const Matrix3c& m, Su3Role role);

  const Matrix3c& entries() const noexcept { return m_; }
  Su3Role role() const noexcept { return role_; }

 private:
  Matrix3c m_;
  Su3Role role_;
};

/// Big-cell coordinates of the flag manifold.
struct FlagCoords {
  std::complex<double> z1{}, z2{}, z3{};

  double k1() const;  ///< 1 + |z1|^2 + |z2|^2
  double k2() const;  ///< 1 + |z3|^2 + |z1 z3 - z2|^2

  Vector3c as_vector() const { return {z1, z2, z3}; }
  static FlagCoords from_vector(const Vector3c& v) { return {v[0], v[1], v[2]}; }

  /// Real coordinates in the order (x1, x2, x3, y1, y2, y3).
  Vector6 to_real() const;
  static FlagCoords from_real(const Vector6& r);

  /// The unit lower-triangular representative.
  Matrix3c unitriangular() const;
};

/// The rescaled Gell-Mann matrices lambda_k = (i/2) * (standard Gell-Mann k), k = 1..8.
struct GellMannBasis {
  std::array<Matrix3c, 8> lambdas;

  static const GellMannBasis& instance();
  const Matrix3c& operator[](int k) const;  ///< 1-based
};

/// lambda_k with role antihermitian_traceless. Throws IndexError outside 1..8.
Su3Matrix gell_mann(int k);

/// exp(t lambda_k) from its closed form (cos(t/2), sin(t/2) and phase entries).
Su3Matrix exp_su3(int k, double t);

/// (z1, z2, z3) = (L21, L31, L32) of the unpivoted factorization M = L U.
/// Throws OutsideBigCellError when |M11| or the leading 2x2 minor is below 1e-10.
FlagCoords bruhat_normalize(const Matrix3c& m);
FlagCoords bruhat_normalize(const Su3Matrix& m);

/// Fundamental vector field of lambda_k: coefficients of d/dz1, d/dz2, d/dz3 of
/// d/dt|0 exp(t lambda_k).Z.
Vector3c infinitesimal_vf(int k, const FlagCoords& z);

/// The tabulated closed form of the same fields, with its two defects:
/// k = 2 places -z1 z2 on d/dz1 instead of d/dz2, and k = 7 has -(1 - z3^2)
/// on d/dz3 where the group action gives -(1 + z3^2).
Vector3c infinitesimal_vf_printed(int k, const FlagCoords& z);

/// log(K1 K2).
double kahler_potential_flag(const FlagCoords& z);

/// Hermitian metric h_ij = d_{z_i} d_{conj z_j} log(K1 K2), closed form.
Matrix3c flag_metric(const FlagCoords& z);

/// Numerical inverse of flag_metric.
Matrix3c flag_metric_inverse(const FlagCoords& z);

/// Tabulated closed-form inverse. Not equal to
/// flag_metric_inverse; see inverse_proportionality.
Matrix3c flag_metric_inverse_printed(const FlagCoords& z);

/// Entrywise ratio flag_metric_inverse_printed / flag_metric_inverse.
/// Entries where the numerical inverse vanishes (|.| < 1e-14) are NaN.
Matrix3c inverse_proportionality(const FlagCoords& z);

/// 6x6 real matrix [[Im h, -Re h], [Re h, Im h]] in (x1, x2, x3, y1, y2, y3).
Matrix6 flag_symplectic_matrix(const FlagCoords& z);

/// Typeset real-coordinate expressions of Im h and Re h.
Eigen::Matrix3d flag_metric_imag_printed(const FlagCoords& z);
Eigen::Matrix3d flag_metric_real_printed(const FlagCoords& z);

/// Coefficients of d_{z_i} d_{conj z_j} in the typeset Laplacian, against the
/// coefficients 2 h^{ji} of the Kahler Laplacian 2 sum h^{ij} d_i dbar_j.
struct LaplacianCoefficients {
  Matrix3c printed;
  Matrix3c reference;
  double max_discrepancy = 0.0;     ///< max |printed - reference| entrywise
  double hermiticity_defect = 0.0;  ///< max |printed - printed^*| entrywise
};

LaplacianCoefficients flag_laplacian_coeffs(const FlagCoords& z);

}  // namespace cpv
