#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cpv {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand sizes do not agree (vector lengths, projective dimensions).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of a closed-form expression.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Argument sits on (or numerically at) a singularity, e.g. coincident points.
class SingularityError : public Error {
 public:
  using Error::Error;
};

/// Pivot coordinate too small for the requested affine chart.
class ChartDegenerateError : public Error {
 public:
  using Error::Error;
};

/// Generator / basis index out of range.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// Matrix has a vanishing leading principal minor: lies in a lower Bruhat cell.
class OutsideBigCellError : public Error {
 public:
  using Error::Error;
};

/// Input that must be unit-norm is not.
class NormalizationError : public Error {
 public:
  using Error::Error;
};

/// A role-tagged matrix or value failed its construction invariant.
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// Inconsistent system setup (mixed manifolds, zero strengths, empty system).
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

/// Two vortices closer than the collision threshold.
class CollisionError : public Error {
 public:
  CollisionError(const std::string& what, std::ptrdiff_t step = -1)
      : Error(what), step_(step) {}

  /// Integration step at which the collision was detected, or -1 outside integration.
  std::ptrdiff_t step() const noexcept { return step_; }

 private:
  std::ptrdiff_t step_;
};

/// Adaptive integrator could not satisfy its tolerance above the minimum step.
class StepSizeUnderflowError : public Error {
 public:
  using Error::Error;
};

/// Quadrature oracle did not reach its target.
class OracleError : public Error {
 public:
  OracleError(const std::string& what, double achieved)
      : Error(what), achieved_(achieved) {}

  double achieved_tolerance() const noexcept { return achieved_; }

 private:
  double achieved_;
};

}  // namespace cpv
