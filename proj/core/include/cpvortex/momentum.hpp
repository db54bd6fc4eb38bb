#pragma once

/// @file momentum.hpp
/// Momentum maps of the SU(3) actions on CP^2 (and CP^n) and on the flag
/// manifold, their pairings with the Gell-Mann basis and weighted sums.

#include <functional>
#include <span>
#include <variant>

#include "cpvortex/geom.hpp"
#include "cpvortex/su3flag.hpp"
#include "cpvortex/vortex_system.hpp"

namespace cpv {

enum class MomentumConvention {
  hermitian_projective,  ///< zeta zeta^* - I/(n+1), Hermitian
  antihermitian_flag,    ///< values in su(3), anti-Hermitian
};

/// Traceless matrix-valued momentum. The constructor checks tracelessness and
/// (anti-)Hermiticity to 1e-12 resp. 1e-10, scaled by max(1, |M|_F).
class MomentumValue {
 public:
  MomentumValue(ComplexMatrix m, MomentumConvention convention);

  const ComplexMatrix& matrix() const noexcept { return m_; }
  MomentumConvention convention() const noexcept { return convention_; }
  double frobenius() const { return m_.norm(); }

 private:
  ComplexMatrix m_;
  MomentumConvention convention_;
};

/// [x:y:z] -> (zeta zeta^*) - I/3 for a unit representative; eigenvalues -1/3, -1/3, 2/3.
/// Throws DimensionError unless p is a point of CP^2.
MomentumValue momentum_cp2(const ProjectivePoint& p);

/// Raw homogeneous triple; throws NormalizationError if |x|^2+|y|^2+|z|^2 != 1 (1e-12).
MomentumValue momentum_cp2(const Eigen::Vector3cd& xyz);

/// zeta zeta^* - I/(n+1) on CP^n.
MomentumValue momentum_cpn(const ProjectivePoint& p);

/// |mu(U p) - U mu(p) U^*|_F. Throws InvariantError unless u has the unitary role.
double momentum_cp2_equivariance_check(const ProjectivePoint& p, const Su3Matrix& u);

/// Flag momentum map mu = (i/2)(v v^*/K1 - w w^*/K2) with v = (1, z1, z2) and
/// w = conj(z1 z3 - z2, -z3, 1). Satisfies d<mu, lambda_k> = iota_{X_k} omega.
/// mu(0) = diag(i/2, 0, -i/2).
MomentumValue momentum_flag(const FlagCoords& z);

/// Entries obtained by integrating the defining equation directly
/// (lower triangle and diagonal), upper triangle by anti-Hermiticity.
/// Agrees with momentum_flag at z = 0 and on mu_31, differs elsewhere.
Matrix3c momentum_flag_proof(const FlagCoords& z);

/// Alternative closed form with real diagonal and mu_12 = mu_13,
/// lower triangle filled with -conj(upper). Not anti-Hermitian in general.
Matrix3c momentum_flag_statement(const FlagCoords& z);

/// trace(m lambda_k), complex.
Complex gell_mann_pairing(const Matrix3c& m, int k);

/// trace(momentum_flag(z) lambda_k), real.
double momentum_flag_pairing(int k, const FlagCoords& z);

using FlagMomentumFn = std::function<Matrix3c(const FlagCoords&)>;
using FlagFieldFn = std::function<Vector3c(int, const FlagCoords&)>;

/// |grad Re<mu, lambda_k> - Omega X_k|_2 in real coordinates (x1..x3, y1..y3);
/// gradient by central differences with step 1e-5, Omega from
/// flag_symplectic_matrix, X_k from infinitesimal_vf.
double defining_equation_defect(int k, const FlagCoords& z);

/// Same check for an arbitrary momentum evaluator and vector-field table.
double defining_equation_defect(int k, const FlagCoords& z, const FlagMomentumFn& mu,
                                const FlagFieldFn& field);

/// A position on CP^n or on the flag manifold with its weight.
struct WeightedSite {
  std::variant<ProjectivePoint, FlagCoords> position;
  double strength = 1.0;
};

/// sum_k Gamma_k mu(position_k). Throws ConfigurationError for an empty list
/// or for sites on different manifolds.
MomentumValue weighted_momentum(std::span<const WeightedSite> sites);

/// Diagonal-action momentum of a CP^n vortex system. Throws ConfigurationError on the plane.
MomentumValue weighted_momentum(const VortexSystem& system);

}  // namespace cpv
