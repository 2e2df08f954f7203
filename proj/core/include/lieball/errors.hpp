#pragma once

#include <stdexcept>
#include <string>

#include "lieball/types.hpp"

namespace lieball {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the domain of a map (point outside the open ball, bad radius, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Complex point lies on the isotropic cone of an inversion center.
class IsotropicConeError : public Error {
 public:
  using Error::Error;
};

/// Holomorphic continuation of a motion hits its pole.
class SingularDenominatorError : public Error {
 public:
  using Error::Error;
};

class NotInteriorError : public Error {
 public:
  using Error::Error;
};

class NotBoundaryError : public Error {
 public:
  using Error::Error;
};

/// The geometric inverse construction produced an inconsistent intermediate value.
class ConstructionMismatchError : public Error {
 public:
  using Error::Error;
};

class RankDeficientError : public Error {
 public:
  using Error::Error;
};

class IllConditionedError : public Error {
 public:
  using Error::Error;
};

/// Geodesic integration left the chart.
class StepOutError : public Error {
 public:
  using Error::Error;
};

/// Invariant violated in a way that can only come from a caller or implementation bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

class NoConvergenceError : public Error {
 public:
  NoConvergenceError(const std::string& what, TangentVector best, double residual)
      : Error(what), best_(std::move(best)), residual_(residual) {}

  const TangentVector& best_iterate() const { return best_; }
  double residual() const { return residual_; }

 private:
  TangentVector best_;
  double residual_;
};

}  // namespace lieball
