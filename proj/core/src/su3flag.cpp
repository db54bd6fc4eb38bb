#include "cpvortex/su3flag.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "cpvortex/errors.hpp"
#include "cpvortex/geom.hpp"

namespace cpv {

namespace {

using C = std::complex<double>;
constexpr C I{0.0, 1.0};
constexpr double kBigCellThreshold = 1e-10;

void require_k(int k) {
  if (k < 1 || k > 8) throw IndexError("Gell-Mann index must be in 1..8, got " + std::to_string(k));
}

double abs2(C z) { return std::norm(z); }

GellMannBasis build_basis() {
  GellMannBasis b;
  const double r3 = std::sqrt(3.0);
  std::array<Matrix3c, 8> g;
  for (auto& m : g) m.setZero();
  g[0](0, 1) = 1.0;
  g[0](1, 0) = 1.0;
  g[1](0, 1) = -I;
  g[1](1, 0) = I;
  g[2](0, 0) = 1.0;
  g[2](1, 1) = -1.0;
  g[3](0, 2) = 1.0;
  g[3](2, 0) = 1.0;
  g[4](0, 2) = -I;
  g[4](2, 0) = I;
  g[5](1, 2) = 1.0;
  g[5](2, 1) = 1.0;
  g[6](1, 2) = -I;
  g[6](2, 1) = I;
  g[7](0, 0) = 1.0 / r3;
  g[7](1, 1) = 1.0 / r3;
  g[7](2, 2) = -2.0 / r3;
  for (int k = 0; k < 8; ++k) b.lambdas[k] = (I / 2.0) * g[k];
  return b;
}

}  // namespace

Su3Matrix::Su3Matrix(const Matrix3c& m, Su3Role role) : m_(m), role_(role) {
  if (!m_.allFinite()) throw InvariantError("non-finite matrix entries");
  switch (role_) {
    case Su3Role::general:
      break;
    case Su3Role::unitary: {
      const double defect = (m_ * m_.adjoint() - Matrix3c::Identity()).norm();
      if (defect > 1e-12) {
        throw InvariantError("matrix tagged unitary has |U U* - I| = " + std::to_string(defect));
      }
      break;
    }
    case Su3Role::antihermitian_traceless: {
      const double herm = (m_ + m_.adjoint()).norm();
      const double tr = std::abs(m_.trace());
      if (herm > 1e-12 || tr > 1e-12) {
        throw InvariantError("matrix tagged anti-Hermitian traceless fails its invariant");
      }
      break;
    }
    case Su3Role::unit_lower_triangular: {
      for (int i = 0; i < 3; ++i) {
        if (m_(i, i) != C(1.0)) throw InvariantError("unit lower-triangular needs ones on the diagonal");
        for (int j = i + 1; j < 3; ++j) {
          if (m_(i, j) != C(0.0)) throw InvariantError("unit lower-triangular has a nonzero upper entry");
        }
      }
      break;
    }
  }
}

double FlagCoords::k1() const { return 1.0 + abs2(z1) + abs2(z2); }
double FlagCoords::k2() const { return 1.0 + abs2(z3) + abs2(z1 * z3 - z2); }

Vector6 FlagCoords::to_real() const {
  Vector6 r;
  r << z1.real(), z2.real(), z3.real(), z1.imag(), z2.imag(), z3.imag();
  return r;
}

FlagCoords FlagCoords::from_real(const Vector6& r) {
  return {C(r[0], r[3]), C(r[1], r[4]), C(r[2], r[5])};
}

Matrix3c FlagCoords::unitriangular() const {
  Matrix3c z = Matrix3c::Identity();
  z(1, 0) = z1;
  z(2, 0) = z2;
  z(2, 1) = z3;
  return z;
}

const GellMannBasis& GellMannBasis::instance() {
  static const GellMannBasis basis = build_basis();
  return basis;
}

const Matrix3c& GellMannBasis::operator[](int k) const {
  require_k(k);
  return lambdas[k - 1];
}

Su3Matrix gell_mann(int k) {
  return Su3Matrix(GellMannBasis::instance()[k], Su3Role::antihermitian_traceless);
}

Su3Matrix exp_su3(int k, double t) {
  require_k(k);
  if (!std::isfinite(t)) throw DomainError("exp_su3: non-finite parameter");
  const double c = std::cos(t / 2.0);
  const double s = std::sin(t / 2.0);
  Matrix3c e = Matrix3c::Identity();
  switch (k) {
    case 1:
      e(0, 0) = c, e(0, 1) = I * s, e(1, 0) = I * s, e(1, 1) = c;
      break;
    case 2:
      e(0, 0) = c, e(0, 1) = s, e(1, 0) = -s, e(1, 1) = c;
      break;
    case 3:
      e(0, 0) = std::exp(I * (t / 2.0)), e(1, 1) = std::exp(-I * (t / 2.0));
      break;
    case 4:
      e(0, 0) = c, e(0, 2) = I * s, e(2, 0) = I * s, e(2, 2) = c;
      break;
    case 5:
      e(0, 0) = c, e(0, 2) = s, e(2, 0) = -s, e(2, 2) = c;
      break;
    case 6:
      e(1, 1) = c, e(1, 2) = I * s, e(2, 1) = I * s, e(2, 2) = c;
      break;
    case 7:
      e(1, 1) = c, e(1, 2) = s, e(2, 1) = -s, e(2, 2) = c;
      break;
    case 8: {
      const double r3 = std::sqrt(3.0);
      e(0, 0) = std::exp(I * (t / (2.0 * r3)));
      e(1, 1) = std::exp(I * (t / (2.0 * r3)));
      e(2, 2) = std::exp(-I * (t / r3));
      break;
    }
  }
  return Su3Matrix(e, Su3Role::unitary);
}

FlagCoords bruhat_normalize(const Matrix3c& m) {
  if (!m.allFinite()) throw DomainError("bruhat_normalize: non-finite matrix");
  const C m11 = m(0, 0);
  if (std::abs(m11) < kBigCellThreshold) {
    throw OutsideBigCellError("leading entry vanishes: point lies in a lower Bruhat cell");
  }
  const C l21 = m(1, 0) / m11;
  const C l31 = m(2, 0) / m11;
  // second column after eliminating the first
  const C a22 = m(1, 1) - l21 * m(0, 1);
  const C a32 = m(2, 1) - l31 * m(0, 1);
  if (std::abs(a22 * m11) < kBigCellThreshold) {
    throw OutsideBigCellError("leading 2x2 minor vanishes: point lies in a lower Bruhat cell");
  }
  return {l21, l31, a32 / a22};
}

FlagCoords bruhat_normalize(const Su3Matrix& m) { return bruhat_normalize(m.entries()); }

Vector3c infinitesimal_vf(int k, const FlagCoords& z) {
  require_k(k);
  const C z1 = z.z1, z2 = z.z2, z3 = z.z3;
  const C w = z1 * z3 - z2;
  switch (k) {
    case 1:
      return (I / 2.0) * Vector3c(1.0 - z1 * z1, -z1 * z2, w);
    case 2:
      return 0.5 * Vector3c(-z1 * z1 - 1.0, -z1 * z2, w);
    case 3:
      return (I / 2.0) * Vector3c(-2.0 * z1, -z2, z3);
    case 4:
      return (I / 2.0) * Vector3c(-z1 * z2, 1.0 - z2 * z2, z3 * w);
    case 5:
      return 0.5 * Vector3c(-z1 * z2, -(1.0 + z2 * z2), z3 * w);
    case 6:
      return (I / 2.0) * Vector3c(z2, z1, 1.0 - z3 * z3);
    case 7:
      return 0.5 * Vector3c(z2, -z1, -(1.0 + z3 * z3));
    default:
      return -(I * std::sqrt(3.0) / 2.0) * Vector3c(0.0, z2, z3);
  }
}

Vector3c infinitesimal_vf_printed(int k, const FlagCoords& z) {
  require_k(k);
  const C z1 = z.z1, z2 = z.z2, z3 = z.z3;
  switch (k) {
    case 2:
      return 0.5 * Vector3c(-z1 * z1 - 1.0 - z1 * z2, 0.0, z1 * z3 - z2);
    case 7:
      return 0.5 * Vector3c(z2, -z1, -(1.0 - z3 * z3));
    default:
      return infinitesimal_vf(k, z);
  }
}

double kahler_potential_flag(const FlagCoords& z) { return std::log(z.k1()) + std::log(z.k2()); }

Matrix3c flag_metric(const FlagCoords& z) {
  const C z1 = z.z1, z2 = z.z2, z3 = z.z3;
  const double k1 = z.k1(), k2 = z.k2();
  const double a = 1.0 / (k1 * k1), b = 1.0 / (k2 * k2);
  const double r3 = 1.0 + abs2(z3);
  const C u = std::conj(z1) + std::conj(z2) * z3;
  Matrix3c h;
  h(0, 0) = (1.0 + abs2(z2)) * a + abs2(z3) * r3 * b;
  h(0, 1) = -std::conj(z1) * z2 * a - z3 * r3 * b;
  h(0, 2) = z3 * u * b;
  h(1, 0) = std::conj(h(0, 1));
  h(1, 1) = (1.0 + abs2(z1)) * a + r3 * b;
  h(1, 2) = -u * b;
  h(2, 0) = std::conj(h(0, 2));
  h(2, 1) = std::conj(h(1, 2));
  h(2, 2) = k1 * b;
  return h;
}

Matrix3c flag_metric_inverse(const FlagCoords& z) {
  return flag_metric(z).partialPivLu().inverse();
}

Matrix3c flag_metric_inverse_printed(const FlagCoords& z) {
  const C z1 = z.z1, z2 = z.z2, z3 = z.z3;
  const C c1 = std::conj(z1), c2 = std::conj(z2), c3 = std::conj(z3);
  const double k1 = z.k1(), k2 = z.k2();
  const double q = k1 / k2;
  Matrix3c p;
  p(0, 0) = k1 * (1.0 + abs2(z1) + q);
  p(0, 1) = k1 * (c1 * z2 + q * z3);
  p(0, 2) = (c1 + z3 * c2) * (c1 * z2 - z3 - z3 * abs2(z1));
  p(1, 0) = k1 * (z1 * c2 + q * c3);
  p(1, 1) = k1 * ((1.0 + abs2(z2)) + q * abs2(z3));
  p(1, 2) = (c1 + c2 * z3) * ((1.0 + abs2(z2)) - z1 * c2 * z3);
  p(2, 0) = (z1 + c3 * z2) * (z1 * c2 - c3 - z3 * abs2(z1));
  p(2, 1) = (z1 + z2 * c3) * ((1.0 + abs2(z2)) - c1 * z2 * c3);
  p(2, 2) = k1 * (1.0 + abs2(z3)) + k2 * k2 / k1;
  return p;
}

Matrix3c inverse_proportionality(const FlagCoords& z) {
  const Matrix3c num = flag_metric_inverse(z);
  const Matrix3c pr = flag_metric_inverse_printed(z);
  Matrix3c ratio;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      ratio(i, j) = std::abs(num(i, j)) < 1e-14 ? C(nan, nan) : pr(i, j) / num(i, j);
    }
  }
  return ratio;
}

Matrix6 flag_symplectic_matrix(const FlagCoords& z) {
  return Matrix6(kahler_form_matrix(flag_metric(z)));
}

Eigen::Matrix3d flag_metric_imag_printed(const FlagCoords& z) {
  const double x1 = z.z1.real(), x2 = z.z2.real(), x3 = z.z3.real();
  const double y1 = z.z1.imag(), y2 = z.z2.imag(), y3 = z.z3.imag();
  const double a = 1.0 / (z.k1() * z.k1()), b = 1.0 / (z.k2() * z.k2());
  const double r3 = x3 * x3 + y3 * y3 + 1.0;
  Eigen::Matrix3d m;
  m(0, 0) = 0.0;
  m(0, 1) = (x2 * y1 - x1 * y2) * a - y3 * r3 * b;
  m(0, 2) = (-(x3 * (y1 - 2 * x2 * y3)) - x3 * x3 * y2 + y3 * (x1 + y2 * y3)) * b;
  m(1, 0) = (x1 * y2 - x2 * y1) * a + y3 * r3 * b;
  m(1, 1) = 0.0;
  m(1, 2) = (x3 * y2 - x2 * y3 + y1) * b;
  m(2, 0) = (x3 * x3 * y2 + x3 * (y1 - 2 * x2 * y3) - y3 * (x1 + y2 * y3)) * b;
  m(2, 1) = -(x3 * y2 - x2 * y3 + y1) * b;
  m(2, 2) = 0.0;
  return m;
}

Eigen::Matrix3d flag_metric_real_printed(const FlagCoords& z) {
  const double x1 = z.z1.real(), x2 = z.z2.real(), x3 = z.z3.real();
  const double y1 = z.z1.imag(), y2 = z.z2.imag(), y3 = z.z3.imag();
  const double a = 1.0 / (z.k1() * z.k1()), b = 1.0 / (z.k2() * z.k2());
  const double r3 = x3 * x3 + y3 * y3 + 1.0;
  Eigen::Matrix3d m;
  m(0, 0) = (x2 * x2 + y2 * y2 + 1) * a +
            (x3 * x3 * (2 * y3 * y3 + 1) + std::pow(x3, 4) + std::pow(y3, 4) + y3 * y3) * b;
  m(0, 1) = -(x1 * x2 + y1 * y2) * a - x3 * r3 * b;
  m(0, 2) = (y3 * (2 * x3 * y2 + y1) + x2 * (x3 * x3 - y3 * y3) + x1 * x3) * b;
  m(1, 0) = m(0, 1);
  m(1, 1) = (x1 * x1 + y1 * y1 + 1) * a + r3 * b;
  m(1, 2) = -(x1 + x2 * x3 + y2 * y3) * b;
  m(2, 0) = m(0, 2);
  m(2, 1) = m(1, 2);
  m(2, 2) = z.k1() * b;
  return m;
}

LaplacianCoefficients flag_laplacian_coeffs(const FlagCoords& z) {
  const C z1 = z.z1, z2 = z.z2, z3 = z.z3;
  const C c1 = std::conj(z1), c2 = std::conj(z2), c3 = std::conj(z3);
  const double k1 = z.k1(), k2 = z.k2();
  const C zs[2] = {z1, z2};

  LaplacianCoefficients out;
  Matrix3c& l = out.printed;
  l.setZero();
  // projective-plane part: (1 + delta_jk z_k conj(z_j)) d_j dbar_k
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < 2; ++k) {
      l(j, k) = 1.0 + (j == k ? zs[k] * std::conj(zs[j]) : C(0.0));
    }
  }
  const double c = k1 * k1 / k2;
  l(0, 0) += c;
  l(0, 1) += c * z3;
  l(1, 0) += c * c3;
  l(1, 1) += c * abs2(z3);
  l(2, 2) += k1 * (1.0 + abs2(z3)) + k2 * k2 / k1;
  l(0, 2) += (c1 + z3 * c2) * (c1 * z2 - z3 - z3 * abs2(z1));
  l(1, 2) += (c1 + c2 * z3) * ((1.0 + abs2(z2)) - z1 * c2 * z3);
  l(2, 0) += (z1 + c3 * z2) * (z1 * c2 - c3 - z3 * abs2(z1));
  l(2, 1) += (z1 + z2 * c3) * ((1.0 + abs2(z2)) - c1 * z2 * c3);

  out.reference = 2.0 * flag_metric_inverse(z).transpose();
  out.max_discrepancy = (out.printed - out.reference).cwiseAbs().maxCoeff();
  out.hermiticity_defect = (out.printed - out.printed.adjoint()).cwiseAbs().maxCoeff();
  return out;
}

}  // namespace cpv
