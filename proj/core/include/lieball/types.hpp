#pragma once

#include <complex>

#include <Eigen/Dense>

namespace lieball {

using Complex = std::complex<double>;

/// Real chart coordinates in R^n (points of the Poincare ball, tangent components).
using RealPoint = Eigen::VectorXd;
using RealVec = Eigen::VectorXd;
/// Complex coordinates z = x + i y in C^n.
using CplxPoint = Eigen::VectorXcd;
using RealMat = Eigen::MatrixXd;
using CplxMat = Eigen::MatrixXcd;

/// Default tolerance for ball classification and membership tests.
inline constexpr double kDefaultTol = 1e-9;

/// A tangent vector to the Poincare ball in the chart B^n x R^n.
///
/// `v` holds chart components; its hyperbolic length is |v| / (1 - |x|^2).
/// The zero vector encodes the zero section.
struct TangentVector {
  RealPoint x;
  RealVec v;

  int dim() const { return static_cast<int>(x.size()); }
  double hyperbolic_length() const { return v.norm() / (1.0 - x.squaredNorm()); }
};

/// An oriented codimension-2 sphere: euclidean center plus radius vector.
///
/// The point set is { a : |a - center| = |radius_vector|, (a - center) . radius_vector = 0 },
/// i.e. the real trace of the isotropic cone through center + i radius_vector.
/// A zero radius vector encodes the point-sphere {center}.
struct OrientedSphere {
  RealPoint center;
  RealVec radius_vector;

  int dim() const { return static_cast<int>(center.size()); }
  double radius() const { return radius_vector.norm(); }
  bool is_point() const { return radius_vector.isZero(0.0); }
};

}  // namespace lieball
