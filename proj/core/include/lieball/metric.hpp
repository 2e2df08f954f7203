#pragma once

#include <vector>

#include "lieball/moebius.hpp"
#include "lieball/types.hpp"

namespace lieball {

/// Real 2n x 2n Jacobian of (x, v) -> (Re theta, Im theta), by chain rule
/// through delta_x. Column order: x_1..x_n, v_1..v_n. Smooth at v = 0.
RealMat theta_jacobian(const TangentVector& tv);

/// Diagonal blocks of the metric on the fiber over the origin:
///   B1 = cosh^4|v| A1^T A1 = I + sinh^2(2|v|) u u^T,
///   B2 = cosh^4|v| A2^T A2 = (sinh(2|v|) / 2|v|)^2 (I - u u^T) + u u^T,
/// with u = v / |v|.
struct OriginBlocks {
  RealMat b1;
  RealMat b2;
};
OriginBlocks origin_blocks(const RealVec& v);

struct MetricTensor {
  TangentVector point;
  RealMat matrix;
};

/// Pulled-back Kaehler metric at (x, v), normalized so that G(0, 0) = I.
///
/// At x = 0 it is diag(B1, B2); elsewhere it is carried from the fiber over
/// the origin by the bundle map of delta_x.
MetricTensor metric_at(const TangentVector& tv);

/// Exact differential of the induced bundle map
///   (x, v) -> (g(x), eps dg(x) v),  eps = motion_parity(g)
/// (or eps = 1 when `with_parity` is false).
RealMat bundle_differential(const HyperbolicMotion& g, const TangentVector& tv,
                            bool with_parity = true);

/// Christoffel symbols of metric_at by central differences. Index (k, i, j)
/// for Gamma^k_ij.
class Christoffel {
 public:
  explicit Christoffel(int dim) : dim_(dim), data_(static_cast<std::size_t>(dim) * dim * dim, 0.0) {}

  int dim() const { return dim_; }
  double& operator()(int k, int i, int j) { return data_[index(k, i, j)]; }
  double operator()(int k, int i, int j) const { return data_[index(k, i, j)]; }

  /// Returns -Gamma(w, w), the geodesic acceleration for velocity w.
  RealVec acceleration(const RealVec& w) const;

 private:
  std::size_t index(int k, int i, int j) const {
    return (static_cast<std::size_t>(k) * dim_ + i) * dim_ + j;
  }
  int dim_;
  std::vector<double> data_;
};

/// Central differences with step h (1 - |x|^2). Throws IllConditionedError if
/// the metric's condition number exceeds 1e12.
Christoffel christoffel_fd(const TangentVector& tv, double h = 1e-5);

struct GeodesicSample {
  TangentVector point;
  RealVec velocity;  // 2n components: xdot then vdot
};

struct GeodesicPath {
  std::vector<GeodesicSample> samples;
  double step = 0.0;
};

struct GeodesicOptions {
  double fd_step = 1e-5;
  /// StepOut once |x| >= 1 - chart_margin.
  double chart_margin = 1e-6;
};

/// Classical RK4 for the geodesic equation; steps + 1 samples.
GeodesicPath geodesic_integrate(const TangentVector& start, const RealVec& velocity,
                                double length, int steps, const GeodesicOptions& opts = {});

/// w^T G w.
double geodesic_energy(const TangentVector& p, const RealVec& velocity);

/// Deviation of the curve through p with velocity w from being a geodesic up
/// to reparametrization: the part of Gamma(w, w) orthogonal to w, over |w|^2.
double pregeodesic_residual(const TangentVector& p, const RealVec& velocity, double h = 1e-5);

/// u-component of theta(s u, t u): w = (s + i tau) / (1 + i s tau),
/// tau = tanh(t / (1 - s^2)).
Complex leaf_embed(double s, double t);

/// Partial derivatives (dw/ds, dw/dt) of leaf_embed.
std::pair<Complex, Complex> leaf_embed_derivatives(double s, double t);

}  // namespace lieball
