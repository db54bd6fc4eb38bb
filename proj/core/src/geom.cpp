#include "cpvortex/geom.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cpvortex/errors.hpp"

namespace cpv {

namespace {

bool all_finite(const ComplexVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!std::isfinite(v[i].real()) || !std::isfinite(v[i].imag())) return false;
  }
  return true;
}

void require_same_n(int a, int b) {
  if (a != b) {
    throw DimensionError("projective dimension mismatch: CP^" + std::to_string(a) +
                         " vs CP^" + std::to_string(b));
  }
}

}  // namespace

ProjectivePoint::ProjectivePoint(ComplexVector coords) : coords_(std::move(coords)) {
  if (coords_.size() < 2) {
    throw DimensionError("a point of CP^n needs at least two homogeneous coordinates");
  }
  if (!all_finite(coords_)) throw DomainError("non-finite homogeneous coordinates");
  const double norm = coords_.norm();
  if (!(norm > 0.0)) throw DomainError("zero vector is not a point of CP^n");
  coords_ /= norm;
}

ProjectivePoint ProjectivePoint::basis(int n, int index) {
  if (n < 1 || index < 0 || index > n) {
    throw IndexError("basis point index out of range");
  }
  ComplexVector v = ComplexVector::Zero(n + 1);
  v[index] = 1.0;
  return ProjectivePoint(std::move(v));
}

bool ProjectivePoint::equivalent(const ProjectivePoint& other, double tol) const {
  if (other.n() != n()) return false;
  return std::abs(std::abs(hermitian_inner(coords_, other.coords_)) - 1.0) <= tol;
}

ProjectivePoint ProjectivePoint::transformed(const ComplexMatrix& u) const {
  if (u.rows() != coords_.size() || u.cols() != coords_.size()) {
    throw DimensionError("transformation size does not match CP^n");
  }
  return ProjectivePoint(u * coords_);
}

Complex hermitian_inner(const ComplexVector& u, const ComplexVector& v) {
  if (u.size() != v.size() || u.size() < 1) {
    throw DimensionError("hermitian_inner: length mismatch (" + std::to_string(u.size()) +
                         " vs " + std::to_string(v.size()) + ")");
  }
  // Eigen's dot() conjugates its first argument.
  return v.dot(u);
}

double cos2_distance_cpn(const ProjectivePoint& xi, const ProjectivePoint& eta) {
  require_same_n(xi.n(), eta.n());
  const double q = std::norm(hermitian_inner(xi.coords(), eta.coords()));
  return std::clamp(q, 0.0, 1.0);
}

double geodesic_distance_cpn(const ProjectivePoint& xi, const ProjectivePoint& eta) {
  require_same_n(xi.n(), eta.n());
  const double c = std::abs(hermitian_inner(xi.coords(), eta.coords()));
  return std::acos(std::clamp(c, 0.0, 1.0));
}

double pivot_threshold(int n) { return 1.0 / std::sqrt(2.0 * (n + 1)); }

int best_chart(const ProjectivePoint& p) {
  Eigen::Index idx = 0;
  p.coords().cwiseAbs().maxCoeff(&idx);
  return static_cast<int>(idx);
}

AffineChart to_chart(const ProjectivePoint& p, int chart_index) {
  const int n = p.n();
  if (chart_index < 0 || chart_index > n) throw IndexError("chart index out of range");
  const Complex pivot = p[chart_index];
  if (std::abs(pivot) <= kChartDegenerateTolerance) {
    throw ChartDegenerateError("pivot |coords[" + std::to_string(chart_index) +
                               "]| = " + std::to_string(std::abs(pivot)) +
                               " is below the chart threshold");
  }
  AffineChart chart{chart_index, ComplexVector(n)};
  for (int i = 0, j = 0; i <= n; ++i) {
    if (i == chart_index) continue;
    chart.values[j++] = p[i] / pivot;
  }
  return chart;
}

ComplexVector chart_lift(const AffineChart& chart) {
  const int n = chart.n();
  if (chart.chart_index < 0 || chart.chart_index > n) {
    throw IndexError("chart index out of range");
  }
  ComplexVector s(n + 1);
  for (int i = 0, j = 0; i <= n; ++i) {
    s[i] = (i == chart.chart_index) ? Complex(1.0) : chart.values[j++];
  }
  return s;
}

ProjectivePoint from_chart(const AffineChart& chart) {
  return ProjectivePoint(chart_lift(chart));
}

double fubini_study_potential(const ComplexVector& z) {
  return std::log1p(z.squaredNorm());
}

ComplexMatrix fubini_study_metric(const AffineChart& chart) {
  const ComplexVector& z = chart.values;
  if (!all_finite(z)) throw DomainError("non-finite chart values");
  const double b = 1.0 + z.squaredNorm();
  // h = (b I - conj(z) z^T) / b^2
  ComplexMatrix h = ComplexMatrix::Identity(z.size(), z.size()) * b;
  h.noalias() -= z.conjugate() * z.transpose();
  return h / (b * b);
}

ComplexMatrix fubini_study_metric_inverse(const AffineChart& chart) {
  const ComplexVector& z = chart.values;
  const double b = 1.0 + z.squaredNorm();
  ComplexMatrix inv = ComplexMatrix::Identity(z.size(), z.size());
  inv.noalias() += z.conjugate() * z.transpose();
  return inv * b;
}

RealMatrix kahler_form_matrix(const ComplexMatrix& h) {
  const Eigen::Index n = h.rows();
  RealMatrix w(2 * n, 2 * n);
  w.topLeftCorner(n, n) = h.imag();
  w.topRightCorner(n, n) = -h.real();
  w.bottomLeftCorner(n, n) = h.real();
  w.bottomRightCorner(n, n) = h.imag();
  return w;
}

RealVector to_real(const ComplexVector& v) {
  const Eigen::Index n = v.size();
  RealVector r(2 * n);
  r.head(n) = v.real();
  r.tail(n) = v.imag();
  return r;
}

ComplexVector to_complex(const RealVector& r) {
  const Eigen::Index n = r.size() / 2;
  ComplexVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = Complex(r[i], r[n + i]);
  return v;
}

}  // namespace cpv
