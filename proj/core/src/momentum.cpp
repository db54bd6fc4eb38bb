#include "cpvortex/momentum.hpp"

#include <cmath>
#include <string>

#include "cpvortex/errors.hpp"

namespace cpv {

namespace {

using C = std::complex<double>;
constexpr C I{0.0, 1.0};
constexpr double kFdStep = 1e-5;

double abs2(C z) { return std::norm(z); }

ComplexMatrix projector_minus_trace(const ComplexVector& zeta) {
  const Eigen::Index m = zeta.size();
  ComplexMatrix mu = zeta * zeta.adjoint();
  mu.diagonal().array() -= 1.0 / static_cast<double>(m);
  return mu;
}

}  // namespace

MomentumValue::MomentumValue(ComplexMatrix m, MomentumConvention convention)
    : m_(std::move(m)), convention_(convention) {
  if (m_.rows() != m_.cols() || m_.rows() < 2) throw DimensionError("momentum must be square");
  const double scale = std::max(1.0, m_.norm());
  if (std::abs(m_.trace()) > 1e-12 * scale) throw InvariantError("momentum value is not traceless");
  if (convention_ == MomentumConvention::hermitian_projective) {
    if ((m_ - m_.adjoint()).norm() > 1e-12 * scale) {
      throw InvariantError("projective momentum value is not Hermitian");
    }
  } else if ((m_ + m_.adjoint()).norm() > 1e-10 * scale) {
    throw InvariantError("flag momentum value is not anti-Hermitian");
  }
}

MomentumValue momentum_cpn(const ProjectivePoint& p) {
  return MomentumValue(projector_minus_trace(p.coords()), MomentumConvention::hermitian_projective);
}

MomentumValue momentum_cp2(const ProjectivePoint& p) {
  if (p.n() != 2) throw DimensionError("momentum_cp2 needs a point of CP^2");
  return momentum_cpn(p);
}

MomentumValue momentum_cp2(const Eigen::Vector3cd& xyz) {
  const double norm2 = xyz.squaredNorm();
  if (std::abs(norm2 - 1.0) > 1e-12) {
    throw NormalizationError("|x|^2+|y|^2+|z|^2 = " + std::to_string(norm2) + ", expected 1");
  }
  return MomentumValue(projector_minus_trace(xyz), MomentumConvention::hermitian_projective);
}

double momentum_cp2_equivariance_check(const ProjectivePoint& p, const Su3Matrix& u) {
  if (u.role() != Su3Role::unitary) throw InvariantError("equivariance needs a unitary matrix");
  if (p.n() != 2) throw DimensionError("momentum_cp2 needs a point of CP^2");
  const ComplexMatrix& um = u.entries();
  const ComplexMatrix lhs = momentum_cp2(p.transformed(um)).matrix();
  const ComplexMatrix rhs = um * momentum_cp2(p).matrix() * um.adjoint();
  return (lhs - rhs).norm();
}

MomentumValue momentum_flag(const FlagCoords& z) {
  const Vector3c v(1.0, z.z1, z.z2);
  const Vector3c w = Vector3c(z.z1 * z.z3 - z.z2, -z.z3, 1.0).conjugate();
  const Matrix3c mu = (I / 2.0) * (v * v.adjoint() / z.k1() - w * w.adjoint() / z.k2());
  return MomentumValue(mu, MomentumConvention::antihermitian_flag);
}

Matrix3c momentum_flag_proof(const FlagCoords& z) {
  const C z1 = z.z1, z2 = z.z2, z3 = z.z3;
  const double k1 = z.k1(), k2 = z.k2();
  Matrix3c mu;
  mu(1, 0) = -(I / 2.0) * (-z1 / k1 + (z2 - z1 * z3) / k2);
  mu(2, 0) = -(I / 2.0) * (-z2 / k1 - (z2 - z1 * z3) / k2);
  mu(2, 1) = -(I / 2.0) * (-std::conj(z1) * z2 / k1 + std::conj(z3) / k2);
  mu(0, 0) = -(I / 6.0) * ((abs2(z2) - 1.0) / k1 - (abs2(z3) + 2.0) / k2);
  mu(1, 1) = -(I / 6.0) * ((2.0 * abs2(z2) + 1.0) / k1 + (abs2(z3) - 1.0) / k2);
  mu(2, 2) = -(mu(0, 0) + mu(1, 1));
  mu(0, 1) = -std::conj(mu(1, 0));
  mu(0, 2) = -std::conj(mu(2, 0));
  mu(1, 2) = -std::conj(mu(2, 1));
  return mu;
}

Matrix3c momentum_flag_statement(const FlagCoords& z) {
  const C z1 = z.z1, z2 = z.z2, z3 = z.z3;
  const C c1 = std::conj(z1), c2 = std::conj(z2), c3 = std::conj(z3);
  const double k1 = z.k1(), k2 = z.k2();
  Matrix3c mu;
  mu(0, 0) = ((abs2(z3) + 2.0) / k2 - (abs2(z2) - 1.0) / k1) / 3.0;
  mu(1, 1) = (-(2.0 * abs2(z2) + 1.0) / k1 - (abs2(z3) - 1.0) / k2) / 3.0;
  mu(2, 2) = -(mu(0, 0) + mu(1, 1));
  mu(0, 1) = (-c1 * c3 + c2) / k2 - c1 / k1;
  mu(0, 2) = mu(0, 1);
  mu(1, 2) = z3 / k2 - z1 * c2 / k1;
  mu(1, 0) = -std::conj(mu(0, 1));
  mu(2, 0) = -std::conj(mu(0, 2));
  mu(2, 1) = -std::conj(mu(1, 2));
  return mu;
}

Complex gell_mann_pairing(const Matrix3c& m, int k) {
  return (m * GellMannBasis::instance()[k]).trace();
}

double momentum_flag_pairing(int k, const FlagCoords& z) {
  const Complex p = gell_mann_pairing(momentum_flag(z).matrix(), k);
  if (std::abs(p.imag()) > 1e-12) {
    throw InvariantError("flag momentum pairing has imaginary part " + std::to_string(p.imag()));
  }
  return p.real();
}

double defining_equation_defect(int k, const FlagCoords& z, const FlagMomentumFn& mu,
                                const FlagFieldFn& field) {
  const Vector6 x = z.to_real();
  Vector6 grad;
  for (int i = 0; i < 6; ++i) {
    Vector6 xp = x, xm = x;
    xp[i] += kFdStep;
    xm[i] -= kFdStep;
    const double fp = gell_mann_pairing(mu(FlagCoords::from_real(xp)), k).real();
    const double fm = gell_mann_pairing(mu(FlagCoords::from_real(xm)), k).real();
    grad[i] = (fp - fm) / (2.0 * kFdStep);
  }
  const Vector3c xv = field(k, z);
  Vector6 xr;
  xr << xv.real(), xv.imag();
  return (grad - flag_symplectic_matrix(z) * xr).norm();
}

double defining_equation_defect(int k, const FlagCoords& z) {
  return defining_equation_defect(
      k, z, [](const FlagCoords& w) { return Matrix3c(momentum_flag(w).matrix()); },
      [](int j, const FlagCoords& w) { return infinitesimal_vf(j, w); });
}

MomentumValue weighted_momentum(std::span<const WeightedSite> sites) {
  if (sites.empty()) throw ConfigurationError("weighted momentum of an empty system");
  const bool flag = std::holds_alternative<FlagCoords>(sites.front().position);
  int n = flag ? 2 : std::get<ProjectivePoint>(sites.front().position).n();
  ComplexMatrix total = ComplexMatrix::Zero(n + 1, n + 1);
  for (const auto& s : sites) {
    if (std::holds_alternative<FlagCoords>(s.position) != flag) {
      throw ConfigurationError("weighted momentum over sites on different manifolds");
    }
    if (flag) {
      total += s.strength * momentum_flag(std::get<FlagCoords>(s.position)).matrix();
    } else {
      const auto& p = std::get<ProjectivePoint>(s.position);
      if (p.n() != n) throw ConfigurationError("weighted momentum over CP^n of different n");
      total += s.strength * momentum_cpn(p).matrix();
    }
  }
  return MomentumValue(std::move(total), flag ? MomentumConvention::antihermitian_flag
                                              : MomentumConvention::hermitian_projective);
}

MomentumValue weighted_momentum(const VortexSystem& system) {
  if (system.manifold().kind != ManifoldKind::cpn) {
    throw ConfigurationError("weighted momentum is defined for CP^n systems only");
  }
  const int n = system.manifold().n;
  ComplexMatrix total = ComplexMatrix::Zero(n + 1, n + 1);
  for (int i = 0; i < system.size(); ++i) {
    total += system.strength(i) * projector_minus_trace(system.position(i));
  }
  return MomentumValue(std::move(total), MomentumConvention::hermitian_projective);
}

}  // namespace cpv
