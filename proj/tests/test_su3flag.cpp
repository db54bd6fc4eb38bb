#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "cpvortex/errors.hpp"
#include "cpvortex/su3flag.hpp"
#include "support/oracles.hpp"

using namespace cpv;
using C = std::complex<double>;

namespace {

constexpr C I{0.0, 1.0};

Vector3c lu_field(int k, const FlagCoords& z, double h) {
  const Matrix3c zm = z.unitriangular();
  const Vector3c p = bruhat_normalize(exp_su3(k, h).entries() * zm).as_vector();
  const Vector3c m = bruhat_normalize(exp_su3(k, -h).entries() * zm).as_vector();
  return (p - m) / (2.0 * h);
}

}  // namespace

TEST(GellMann, Anchors) {
  Matrix3c l3 = Matrix3c::Zero();
  l3(0, 0) = I / 2.0;
  l3(1, 1) = -I / 2.0;
  EXPECT_LT((gell_mann(3).entries() - l3).norm(), 1e-16);

  Matrix3c l8 = Matrix3c::Zero();
  l8.diagonal() << 1.0, 1.0, -2.0;
  l8 *= I / (2.0 * std::sqrt(3.0));
  EXPECT_LT((gell_mann(8).entries() - l8).norm(), 1e-16);

  EXPECT_LT(std::abs((gell_mann(1).entries() * gell_mann(2).entries()).trace()), 1e-16);
  EXPECT_THROW(gell_mann(0), IndexError);
  EXPECT_THROW(gell_mann(9), IndexError);
}

TEST(GellMann, TraceFormAndCommutation) {
  for (int a = 1; a <= 8; ++a) {
    const Matrix3c la = gell_mann(a).entries();
    EXPECT_EQ(gell_mann(a).role(), Su3Role::antihermitian_traceless);
    for (int b = 1; b <= 8; ++b) {
      const C tr = (la * gell_mann(b).entries()).trace();
      EXPECT_NEAR(std::abs(tr - C(a == b ? -0.5 : 0.0)), 0.0, 1e-14);
    }
  }
  const Matrix3c l3 = gell_mann(3).entries(), l8 = gell_mann(8).entries();
  EXPECT_LT((l3 * l8 - l8 * l3).norm(), 1e-15);
}

TEST(Su3Matrix, RoleInvariants) {
  EXPECT_THROW(Su3Matrix(2.0 * Matrix3c::Identity(), Su3Role::unitary), InvariantError);
  EXPECT_THROW(Su3Matrix(Matrix3c::Identity(), Su3Role::antihermitian_traceless), InvariantError);
  Matrix3c upper = Matrix3c::Identity();
  upper(0, 1) = 1.0;
  EXPECT_THROW(Su3Matrix(upper, Su3Role::unit_lower_triangular), InvariantError);
  EXPECT_NO_THROW(Su3Matrix(FlagCoords{1.0, 2.0, I}.unitriangular(), Su3Role::unit_lower_triangular));
}

TEST(ExpSu3, Anchors) {
  const double t = 0.71;
  Matrix3c d = Matrix3c::Identity();
  d(0, 0) = std::exp(I * t / 2.0);
  d(1, 1) = std::exp(-I * t / 2.0);
  EXPECT_LT((exp_su3(3, t).entries() - d).norm(), 1e-15);

  Matrix3c e1 = Matrix3c::Zero();
  e1(0, 1) = I;
  e1(1, 0) = I;
  e1(2, 2) = 1.0;
  EXPECT_LT((exp_su3(1, std::numbers::pi).entries() - e1).norm(), 1e-15);

  for (int k = 1; k <= 8; ++k) EXPECT_LT((exp_su3(k, 0.0).entries() - Matrix3c::Identity()).norm(), 1e-16);
}

TEST(ExpSu3, MatchesGeneralExponentialAndIsSpecialUnitary) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(-6.0, 6.0);
  for (int k = 1; k <= 8; ++k) {
    for (int r = 0; r < 10; ++r) {
      const double t = u(rng);
      const Matrix3c e = exp_su3(k, t).entries();
      const Matrix3c ref = oracle::expm(t * gell_mann(k).entries());
      EXPECT_LT((e - ref).cwiseAbs().maxCoeff(), 1e-12) << "k=" << k << " t=" << t;
      EXPECT_NEAR(std::abs(e.determinant() - 1.0), 0.0, 1e-13);
    }
  }
}

TEST(ExpSu3, OneParameterSubgroup) {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  for (int k = 1; k <= 8; ++k) {
    for (int r = 0; r < 10; ++r) {
      const double s = u(rng), t = u(rng);
      const Matrix3c lhs = exp_su3(k, s).entries() * exp_su3(k, t).entries();
      EXPECT_LT((lhs - exp_su3(k, s + t).entries()).cwiseAbs().maxCoeff(), 1e-12);
    }
  }
}

TEST(Bruhat, UnitriangularIsFixed) {
  const FlagCoords z{C(0.3, -1.1), C(2.0, 0.5), C(-0.4, 0.9)};
  const FlagCoords w = bruhat_normalize(z.unitriangular());
  EXPECT_EQ(w.z1, z.z1);
  EXPECT_EQ(w.z2, z.z2);
  EXPECT_EQ(w.z3, z.z3);
}

TEST(Bruhat, TorusActionAnchor) {
  const FlagCoords z{C(0.3, -1.1), C(2.0, 0.5), C(-0.4, 0.9)};
  const double t = 0.37;
  const FlagCoords w = bruhat_normalize(exp_su3(3, t).entries() * z.unitriangular());
  EXPECT_LT(std::abs(w.z1 - z.z1 * std::exp(-I * t)), 1e-14);
  EXPECT_LT(std::abs(w.z2 - z.z2 * std::exp(-I * t / 2.0)), 1e-14);
  EXPECT_LT(std::abs(w.z3 - z.z3 * std::exp(I * t / 2.0)), 1e-14);
}

TEST(Bruhat, MatchesDoolittle) {
  std::mt19937_64 rng(23);
  for (int r = 0; r < 50; ++r) {
    const Matrix3c m = oracle::random_unitary(3, rng) * oracle::random_flag(rng).unitriangular();
    const FlagCoords w = bruhat_normalize(m);
    const ComplexMatrix l = oracle::doolittle_lower(m);
    EXPECT_LT(std::abs(w.z1 - l(1, 0)), 1e-12);
    EXPECT_LT(std::abs(w.z2 - l(2, 0)), 1e-12);
    EXPECT_LT(std::abs(w.z3 - l(2, 1)), 1e-12);
  }
}

TEST(Bruhat, OutsideBigCell) {
  Matrix3c m = Matrix3c::Identity();
  m(0, 0) = 0.0;
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  m(1, 1) = 0.0;
  EXPECT_THROW(bruhat_normalize(m), OutsideBigCellError);
  Matrix3c s = Matrix3c::Identity();
  s(1, 1) = 0.0;
  s(1, 2) = 1.0;
  s(2, 1) = 1.0;
  s(2, 2) = 0.0;
  EXPECT_THROW(bruhat_normalize(s), OutsideBigCellError);
}

TEST(VectorFields, Anchors) {
  const FlagCoords z{C(0.5, 0.2), C(-0.3, 0.8), C(1.1, -0.4)};
  const Vector3c x3 = infinitesimal_vf(3, z);
  EXPECT_LT((x3 - (I / 2.0) * Vector3c(-2.0 * z.z1, -z.z2, z.z3)).norm(), 1e-16);
  const FlagCoords o{};
  EXPECT_LT((infinitesimal_vf(1, o) - Vector3c(I / 2.0, 0.0, 0.0)).norm(), 1e-16);
  EXPECT_EQ(infinitesimal_vf(8, o).norm(), 0.0);
  EXPECT_THROW(infinitesimal_vf(0, o), IndexError);
}

TEST(VectorFields, MatchGroupActionDerivative) {
  std::mt19937_64 rng(24);
  for (int r = 0; r < 100; ++r) {
    const FlagCoords z = oracle::random_flag(rng);
    for (int k = 1; k <= 8; ++k) {
      const Vector3c fd = lu_field(k, z, 1e-5);
      EXPECT_LT((infinitesimal_vf(k, z) - fd).cwiseAbs().maxCoeff(), 1e-6) << "k=" << k;
    }
  }
}

TEST(VectorFields, TypesetTableDefectsAreConfined) {
  std::mt19937_64 rng(25);
  for (int r = 0; r < 20; ++r) {
    const FlagCoords z = oracle::random_flag(rng);
    for (int k = 1; k <= 8; ++k) {
      const double d = (infinitesimal_vf_printed(k, z) - lu_field(k, z, 1e-5)).cwiseAbs().maxCoeff();
      if (k == 2 || k == 7) {
        EXPECT_GT(d, 1e-3) << "k=" << k;
      } else {
        EXPECT_LT(d, 1e-6) << "k=" << k;
      }
    }
  }
}

// The typeset right factors b_k bring exp(t lambda_k) Z back to unit lower
// triangular form. k = 3 is skipped: its exponent signs are flipped; the LU
// result exp(-it), exp(-it/2), exp(it/2) is checked in Bruhat.TorusActionAnchor.
TEST(BetaNormalizers, RestoreUnitLowerTriangular) {
  std::mt19937_64 rng(26);
  for (int k = 1; k <= 8; ++k) {
    if (k == 3) continue;
    for (int r = 0; r < 10; ++r) {
      const FlagCoords z = oracle::random_flag(rng, 0.5);
      const double t = 0.1;
      const Matrix3c a = exp_su3(k, t).entries() * z.unitriangular() * oracle::printed_beta(k, z, t);
      EXPECT_LT((a.diagonal() - Vector3c::Ones()).cwiseAbs().maxCoeff(), 1e-12) << "k=" << k;
      EXPECT_LT(std::abs(a(0, 1)) + std::abs(a(0, 2)) + std::abs(a(1, 2)), 1e-12) << "k=" << k;
      const FlagCoords w = bruhat_normalize(a);
      const FlagCoords v = bruhat_normalize(exp_su3(k, t).entries() * z.unitriangular());
      EXPECT_LT((w.as_vector() - v.as_vector()).norm(), 1e-12);
    }
  }
}

TEST(BetaNormalizers, ThirdIsInconsistent) {
  const FlagCoords z{C(0.2, 0.1), C(-0.3, 0.2), C(0.1, 0.4)};
  const Matrix3c a = exp_su3(3, 0.1).entries() * z.unitriangular() * oracle::printed_beta(3, z, 0.1);
  EXPECT_GT((a.diagonal() - Vector3c::Ones()).cwiseAbs().maxCoeff(), 1e-2);
}

TEST(KahlerPotential, Anchors) {
  EXPECT_EQ(kahler_potential_flag({}), 0.0);
  EXPECT_NEAR(kahler_potential_flag({1.0, 0.0, 0.0}), std::log(2.0), 1e-16);
  EXPECT_NEAR(kahler_potential_flag({0.0, 0.0, 1.0}), std::log(2.0), 1e-16);
  std::mt19937_64 rng(27);
  for (int r = 0; r < 20; ++r) {
    const FlagCoords z = oracle::random_flag(rng);
    EXPECT_GE(z.k1(), 1.0);
    EXPECT_GE(z.k2(), 1.0);
    EXPECT_NEAR(kahler_potential_flag(z), std::log(z.k1()) + std::log(z.k2()), 1e-14);
  }
}

TEST(FlagMetric, Origin) {
  Matrix3c d = Matrix3c::Zero();
  d.diagonal() << 1.0, 2.0, 1.0;
  EXPECT_LT((flag_metric({}) - d).norm(), 1e-16);
  Matrix3c di = Matrix3c::Zero();
  di.diagonal() << 1.0, 0.5, 1.0;
  EXPECT_LT((flag_metric_inverse({}) - di).norm(), 1e-15);
  EXPECT_LT((flag_metric_inverse_printed({}) - 2.0 * di).norm(), 1e-15);
}

TEST(FlagMetric, DeterminantPositivityInverse) {
  std::mt19937_64 rng(28);
  for (int r = 0; r < 1000; ++r) {
    const FlagCoords z = oracle::random_flag(rng, r < 500 ? 1.5 : 3.0);
    const Matrix3c h = flag_metric(z);
    const double expect = 2.0 / (z.k1() * z.k1() * z.k2() * z.k2());
    EXPECT_NEAR(h.determinant().real() / expect, 1.0, 1e-10);
    EXPECT_LT((h - h.adjoint()).cwiseAbs().maxCoeff(), 1e-15);
    Eigen::SelfAdjointEigenSolver<Matrix3c> es(h);
    EXPECT_GT(es.eigenvalues().minCoeff(), 0.0);
    EXPECT_LT((h * flag_metric_inverse(z) - Matrix3c::Identity()).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(FlagMetric, IsHessianOfPotential) {
  std::mt19937_64 rng(29);
  auto pot = [](const ComplexVector& v) { return kahler_potential_flag({v[0], v[1], v[2]}); };
  for (int r = 0; r < 100; ++r) {
    const FlagCoords z = oracle::random_flag(rng);
    const ComplexMatrix fd = oracle::wirtinger_hessian(pot, z.as_vector(), 1e-4);
    EXPECT_LT((fd - flag_metric(z)).cwiseAbs().maxCoeff(), 1e-5);
  }
}

TEST(FlagSymplectic, OriginAndStructure) {
  const Matrix6 w0 = flag_symplectic_matrix({});
  Matrix6 expect = Matrix6::Zero();
  expect.topRightCorner<3, 3>().diagonal() << -1.0, -2.0, -1.0;
  expect.bottomLeftCorner<3, 3>().diagonal() << 1.0, 2.0, 1.0;
  EXPECT_LT((w0 - expect).norm(), 1e-16);
  EXPECT_NEAR(w0.determinant(), 4.0, 1e-14);

  std::mt19937_64 rng(30);
  for (int r = 0; r < 100; ++r) {
    const FlagCoords z = oracle::random_flag(rng);
    const Matrix6 w = flag_symplectic_matrix(z);
    EXPECT_LT((w + w.transpose()).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_GT(std::abs(w.determinant()), 0.0);
  }
}

TEST(FlagSymplectic, TypesetBlocksMatchMetric) {
  std::mt19937_64 rng(31);
  for (int r = 0; r < 100; ++r) {
    const FlagCoords z = oracle::random_flag(rng);
    const Matrix3c h = flag_metric(z);
    EXPECT_LT((flag_metric_imag_printed(z) - h.imag()).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_LT((flag_metric_real_printed(z) - h.real()).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(FlagLaplacian, OriginCoefficients) {
  const LaplacianCoefficients l = flag_laplacian_coeffs({});
  EXPECT_NEAR(std::abs(l.printed(2, 2) - 2.0), 0.0, 1e-15);
  EXPECT_EQ(std::abs(l.printed(0, 2)), 0.0);
  EXPECT_EQ(std::abs(l.printed(1, 2)), 0.0);
  EXPECT_EQ(std::abs(l.printed(2, 0)), 0.0);
  EXPECT_EQ(std::abs(l.printed(2, 1)), 0.0);
  EXPECT_LT((l.reference - 2.0 * flag_metric_inverse({}).transpose()).norm(), 1e-15);
}

TEST(FlagLaplacian, HermitianForRealThirdCoordinate) {
  // the typeset (3,1) coefficient carries z3 where conj(z3) is needed, so
  // Hermiticity only holds when z3 is real
  std::mt19937_64 rng(32);
  for (int r = 0; r < 50; ++r) {
    FlagCoords z = oracle::random_flag(rng);
    z.z3 = z.z3.real();
    EXPECT_LT(flag_laplacian_coeffs(z).hermiticity_defect, 1e-12);
  }
  const FlagCoords g{C(0.4, 0.3), C(-0.2, 0.5), C(0.3, 0.7)};
  EXPECT_GT(flag_laplacian_coeffs(g).hermiticity_defect, 1e-3);
}

TEST(FlagInverse, ProportionalityReportIsFinite) {
  const Matrix3c r0 = inverse_proportionality({C(0.1, 0.0), C(0.0, 0.2), C(0.3, 0.1)});
  EXPECT_NEAR(std::abs(r0(0, 0) - 2.0), 0.0, 0.5);
  EXPECT_TRUE(std::isfinite(std::abs(r0(1, 1))));
}
