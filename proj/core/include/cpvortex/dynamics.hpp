#pragma once

/// @file dynamics.hpp
/// Point-vortex Hamiltonians on the plane and on CP^n, their gradients and
/// Hamiltonian vector fields, and time integration with conserved-quantity
/// monitors.
///
/// Conventions: the symplectic form of vortex a is Gamma_a * omega_FS with
/// omega_FS = (i/2) sum h_ij dz_i ^ dzbar_j, and X_H satisfies
/// Gamma_a omega_FS(X_a, Y) = d_a H(Y) for every tangent vector Y at vortex a.
/// On the plane this reproduces dz_j/dt = conj((1/2 pi i) sum_k Gamma_k / (z_j - z_k)).

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "cpvortex/geom.hpp"
#include "cpvortex/vortex_system.hpp"

namespace cpv {

/// Complex velocities dz_j/dt of the planar model. Throws CollisionError for
/// coincident vortices and ConfigurationError for non-planar systems.
std::vector<Complex> planar_rhs(const VortexSystem& system);

struct PlanarInvariants {
  double px = 0.0;  ///< sum Gamma_j Re z_j
  double py = 0.0;  ///< sum Gamma_j Im z_j
  double m = 0.0;   ///< (1/2) sum Gamma_j |z_j|^2
};

PlanarInvariants planar_conserved(const VortexSystem& system);

/// -(1/4 pi) sum_{j != k} Gamma_j Gamma_k log |z_j - z_k|.
double planar_hamiltonian(const VortexSystem& system);

/// sum_{a<b} Gamma_a Gamma_b G(r_ab) with G = greens_cpn, i.e. prefactor
/// (n-1)!/(2 pi^n). Zero for a single vortex.
double hamiltonian_cpn(const VortexSystem& system);

/// Dispatches on the manifold.
double hamiltonian(const VortexSystem& system);

/// Prefactor of the CP^n Hamiltonian as used here: 1/(2n vol(CP^n)).
double hamiltonian_prefactor(int n);
/// Alternative closed form 1/(2 (n-1)! pi^n); equal to the above for n = 1, 2 only.
double hamiltonian_prefactor_alternative(int n);

/// Real vector in one affine chart: components (x_1..x_n, y_1..y_n).
/// For planar vortices chart is 0 and components are (x, y).
struct ChartVector {
  int chart = 0;
  RealVector components;
};

/// dH with respect to the real chart coordinates of each vortex in its active
/// chart, by the chain rule through Q = |<zeta_a, zeta_b>|^2.
std::vector<ChartVector> grad_hamiltonian(const VortexSystem& system);

/// Per-vortex chart velocities X_a = Omega_a^{-1} grad_a H / Gamma_a.
std::vector<ChartVector> hamiltonian_vector_field(const VortexSystem& system);

/// Horizontal homogeneous velocities d(zeta_a)/dt (orthogonal to zeta_a) on
/// CP^n, or planar velocities as length-1 vectors.
std::vector<ComplexVector> homogeneous_velocity(const VortexSystem& system);

/// max over vortices and `samples` random Y of |Gamma_a omega(X_a, Y) - dH(Y)|.
double omega_identity_defect(const VortexSystem& system, int samples = 10,
                             std::uint64_t seed = 1);

struct ConventionReport {
  double omega_defect = 0.0;  ///< on fixed CP^1, CP^2 and planar configurations
  double planar_rhs_mismatch = 0.0;  ///< |X_H - planar_rhs| on the planar configuration
  std::vector<double> prefactor_ratio;  ///< hamiltonian_prefactor / alternative, n = 1..4
};

/// Checks the sign and factor wiring of X_H. Throws InvariantError if the
/// omega identity or the planar equations fail at 1e-8.
ConventionReport verify_conventions();

enum class Integrator { rk4, rk45_adaptive };

struct IntegratorOptions {
  double atol = 1e-10;
  double rtol = 1e-9;
  double safety = 0.9;
  double min_step = 1e-14;
};

struct Monitor {
  double hamiltonian = 0.0;
  double momentum_norm = 0.0;  ///< |sum Gamma mu|_F on CP^n; |(p_x, p_y, m)| on the plane
  double min_distance = 0.0;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<VortexSystem> states;
  std::vector<Monitor> monitors;
};

Monitor monitor(const VortexSystem& system);

/// Advances `steps` steps of size dt (rk4) or `steps` output intervals of
/// length dt with adaptive Dormand-Prince substeps (rk45_adaptive). Positions
/// are renormalized after each step and charts switched when their pivot
/// becomes small. Throws CollisionError (with the step index) and
/// StepSizeUnderflowError.
Trajectory integrate(const VortexSystem& system, double dt, long steps, Integrator method,
                     const IntegratorOptions& options = {});

/// CSV: t, then chart_a, x_a_1..x_a_n, y_a_1..y_a_n per vortex, then H,
/// momentum_norm, min_dist; 17 significant digits.
void write_trajectory_csv(std::ostream& os, const Trajectory& trajectory);

}  // namespace cpv
