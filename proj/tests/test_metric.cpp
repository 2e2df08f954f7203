#include <cmath>

#include "lieball/correspondence.hpp"
#include "lieball/errors.hpp"
#include "lieball/metric.hpp"
#include "lieball/moebius.hpp"
#include "lieball/oracles.hpp"
#include "lieball/random.hpp"
#include "support.hpp"

namespace lieball {
namespace {

using test::max_diff;
using test::vec;

const double kA = std::atanh(0.5);

oracles::VectorMap theta_real(int n) {
  return [n](const RealVec& p) {
    const CplxPoint z = theta({p.head(n), p.tail(n)});
    RealVec out(2 * n);
    out << z.real(), z.imag();
    return out;
  };
}

RealVec stack(const TangentVector& tv) {
  RealVec p(2 * tv.dim());
  p << tv.x, tv.v;
  return p;
}

RealVec fiber_velocity(const RealVec& u) {
  RealVec w = RealVec::Zero(2 * u.size());
  w.tail(u.size()) = u;
  return w;
}

RealVec base_velocity(const RealVec& u) {
  RealVec w = RealVec::Zero(2 * u.size());
  w.head(u.size()) = u;
  return w;
}

TEST(ThetaJacobian, IdentityAtZeroSectionOrigin) {
  const RealMat j = theta_jacobian({RealPoint::Zero(3), RealVec::Zero(3)});
  EXPECT_NEAR(max_diff(j, RealMat(RealMat::Identity(6, 6))), 0.0, 1e-15);
  const RealMat small = theta_jacobian({RealPoint::Zero(3), vec({1e-9, 0, 0})});
  EXPECT_NEAR(max_diff(small, RealMat(RealMat::Identity(6, 6))), 0.0, 1e-12);
}

TEST(ThetaJacobian, GoldenValuesAlongVector) {
  const RealVec u = vec({0, 1, 0});
  const RealMat j = theta_jacobian({RealPoint::Zero(3), kA * u});
  // A1 = sech^2 I + 2 tanh^2 u u^T, A2 = (tanh/|v|)(I - u u^T) + sech^2 u u^T
  EXPECT_NEAR(max_diff(RealVec(j.block(0, 0, 3, 3) * u), RealVec(1.25 * u)), 0.0, 1e-14);
  EXPECT_NEAR(max_diff(RealVec(j.block(3, 3, 3, 3) * u), RealVec(0.75 * u)), 0.0, 1e-14);
  const RealMat fd = oracles::fd_jacobian(theta_real(3), stack({RealPoint::Zero(3), kA * u}));
  EXPECT_NEAR(max_diff(j, fd), 0.0, 1e-6);
}

// At the origin Re theta depends only on x and Im theta only on v.
TEST(ThetaJacobian, ClosedFormBlocksAtOrigin) {
  Rng rng(139);
  for (int t = 0; t < 50; ++t) {
    const RealVec v = rng.normal_vector(4);
    const double r = v.norm();
    const RealVec u = v / r;
    const RealMat uu = u * u.transpose();
    const RealMat id = RealMat::Identity(4, 4);
    const double sech2 = 1.0 / std::pow(std::cosh(r), 2);
    const RealMat a1 = sech2 * id + 2.0 * std::pow(std::tanh(r), 2) * uu;
    const RealMat a2 = std::tanh(r) / r * (id - uu) + sech2 * uu;
    const RealMat j = theta_jacobian({RealPoint::Zero(4), v});
    // Coordinates: Re block from x is A1, Im block from v is A2.
    EXPECT_NEAR(max_diff(j.block(0, 0, 4, 4), a1), 0.0, 1e-12);
    EXPECT_NEAR(max_diff(j.block(4, 4, 4, 4), a2), 0.0, 1e-12);
    EXPECT_NEAR(j.block(0, 4, 4, 4).cwiseAbs().maxCoeff(), 0.0, 1e-12);
    EXPECT_NEAR(j.block(4, 0, 4, 4).cwiseAbs().maxCoeff(), 0.0, 1e-12);
  }
}

TEST(ThetaJacobian, MatchesFiniteDifferences) {
  for (int n : {2, 3, 5}) {
    Rng rng(149 + n);
    for (int t = 0; t < 100; ++t) {
      const auto tv = oracles::random_tangent_vector(rng, n, 0.9, 2.0);
      const RealMat fd = oracles::fd_jacobian(theta_real(n), stack(tv));
      EXPECT_LE(max_diff(theta_jacobian(tv), fd), 1e-6);
    }
  }
}

TEST(MetricAt, IdentityAtOrigin) {
  const auto m = metric_at({RealPoint::Zero(3), RealVec::Zero(3)});
  EXPECT_NEAR(max_diff(m.matrix, RealMat(RealMat::Identity(6, 6))), 0.0, 1e-15);
}

TEST(MetricAt, GoldenValues) {
  const RealVec u = vec({0, 1, 0});
  const TangentVector tv{RealPoint::Zero(3), kA * u};
  const RealMat g = metric_at(tv).matrix;
  EXPECT_NEAR(base_velocity(u).dot(g * base_velocity(u)), 25.0 / 9.0, 1e-12);
  EXPECT_NEAR(fiber_velocity(u).dot(g * fiber_velocity(u)), 1.0, 1e-12);

  // Both directions stay in the complex line through i u, where the metric is
  // the disk metric 1 / (1 - |w|^2)^2 at |w| = 0.5.
  const RealMat fd = oracles::fd_jacobian(theta_real(3), stack(tv));
  const double disk = 1.0 / std::pow(1.0 - 0.25, 2);
  for (int col : {1, 4}) {
    const RealVec d = fd.col(col);
    EXPECT_NEAR(d.squaredNorm() * disk, col == 1 ? 25.0 / 9.0 : 1.0, 1e-9);
  }
}

TEST(MetricAt, OriginBlocksMatchPulledBackJacobian) {
  Rng rng(151);
  for (int t = 0; t < 50; ++t) {
    const RealVec v = rng.normal_vector(3);
    const RealMat j = theta_jacobian({RealPoint::Zero(3), v});
    const double c4 = std::pow(std::cosh(v.norm()), 4);
    const auto blocks = origin_blocks(v);
    EXPECT_NEAR(max_diff(blocks.b1, RealMat(c4 * j.block(0, 0, 3, 3).transpose() * j.block(0, 0, 3, 3))),
                0.0, 1e-10 * c4);
    EXPECT_NEAR(max_diff(blocks.b2, RealMat(c4 * j.block(3, 3, 3, 3).transpose() * j.block(3, 3, 3, 3))),
                0.0, 1e-10 * c4);
  }
}

TEST(MetricAt, BlockDiagonalOverOrigin) {
  Rng rng(157);
  for (int t = 0; t < 100; ++t) {
    const RealMat g = metric_at({RealPoint::Zero(4), rng.normal_vector(4)}).matrix;
    EXPECT_LE(g.block(0, 4, 4, 4).cwiseAbs().maxCoeff(), 1e-8);
  }
}

TEST(MetricAt, SymmetricPositiveDefinite) {
  Rng rng(163);
  for (int t = 0; t < 200; ++t) {
    const auto tv = oracles::random_tangent_vector(rng, 3, 0.95, 3.0);
    const RealMat g = metric_at(tv).matrix;
    EXPECT_LE(max_diff(g, RealMat(g.transpose())), 1e-12 * g.cwiseAbs().maxCoeff());
    Eigen::SelfAdjointEigenSolver<RealMat> es(g);
    EXPECT_GT(es.eigenvalues().minCoeff(), 0.0);
  }
}

TEST(MetricAt, InvariantUnderMotions) {
  Rng rng(167);
  for (int t = 0; t < 100; ++t) {
    const auto tv = oracles::random_tangent_vector(rng, 3, 0.8, 2.0);
    const HyperbolicMotion g = oracles::random_motion(rng, 3, 1, 0.8);
    const RealMat d = bundle_differential(g, tv);
    const RealMat pulled = d.transpose() * metric_at(tangent_action(g, tv)).matrix * d;
    const RealMat direct = metric_at(tv).matrix;
    EXPECT_LE(max_diff(pulled, direct), 1e-7 * std::max(1.0, direct.cwiseAbs().maxCoeff()));
  }
}

TEST(BundleDifferential, MatchesFiniteDifferences) {
  Rng rng(173);
  for (int t = 0; t < 50; ++t) {
    const auto tv = oracles::random_tangent_vector(rng, 3, 0.8, 2.0);
    const HyperbolicMotion g = oracles::random_motion(rng, 3);
    const oracles::VectorMap f = [&](const RealVec& p) {
      return stack(tangent_action(g, {p.head(3), p.tail(3)}));
    };
    EXPECT_LE(max_diff(bundle_differential(g, tv), oracles::fd_jacobian(f, stack(tv))), 1e-6);
  }
}

TEST(Christoffel, SymmetricInLowerIndices) {
  Rng rng(179);
  for (int t = 0; t < 10; ++t) {
    const auto tv = t == 0 ? TangentVector{RealPoint::Zero(3), RealVec::Zero(3)}
                           : oracles::random_tangent_vector(rng, 3, 0.7, 1.5);
    const Christoffel c = christoffel_fd(tv);
    for (int k = 0; k < 6; ++k)
      for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) EXPECT_NEAR(c(k, i, j), c(k, j, i), 1e-9);
  }
}

// x -> -x and v -> -v are isometries fixing (0, 0), so the first derivatives
// of the metric vanish there.
TEST(Christoffel, VanishAtOrigin) {
  const Christoffel c = christoffel_fd({RealPoint::Zero(3), RealVec::Zero(3)});
  for (int k = 0; k < 6; ++k)
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) EXPECT_NEAR(c(k, i, j), 0.0, 1e-8);
}

// d_k g_ij = g_lj Gamma^l_ki + g_il Gamma^l_kj
TEST(Christoffel, MetricCompatible) {
  Rng rng(181);
  const int n = 3;
  const int m = 2 * n;
  for (int t = 0; t < 10; ++t) {
    const auto tv = oracles::random_tangent_vector(rng, n, 0.7, 1.5);
    const Christoffel c = christoffel_fd(tv);
    const RealMat g = metric_at(tv).matrix;
    const double h = 1e-5;
    for (int k = 0; k < m; ++k) {
      RealVec p = stack(tv);
      RealVec q = p;
      p[k] += h;
      q[k] -= h;
      const RealMat dg = (metric_at({p.head(n), p.tail(n)}).matrix -
                          metric_at({q.head(n), q.tail(n)}).matrix) / (2.0 * h);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
          double rhs = 0.0;
          for (int l = 0; l < m; ++l) rhs += g(l, j) * c(l, k, i) + g(i, l) * c(l, k, j);
          EXPECT_NEAR(dg(i, j), rhs, 1e-5 * std::max(1.0, g.cwiseAbs().maxCoeff()));
        }
    }
  }
}

TEST(Christoffel, RejectsSingularMetric) {
  EXPECT_THROW(christoffel_fd({vec({0.0, 0.0}), vec({40.0, 0.0})}), IllConditionedError);
}

TEST(Geodesic, VerticalLineThroughOrigin) {
  const RealVec u = vec({0.6, 0.0, 0.8});
  const auto path = geodesic_integrate({RealPoint::Zero(3), RealVec::Zero(3)}, fiber_velocity(u), 1.0, 1000);
  ASSERT_EQ(path.samples.size(), 1001u);
  double prev = -1.0;
  for (const auto& s : path.samples) {
    EXPECT_LE(s.point.x.norm(), 1e-6);
    EXPECT_LE((s.point.v - s.point.v.dot(u) * u).norm(), 1e-6);
    EXPECT_GT(s.point.v.dot(u), prev);
    prev = s.point.v.dot(u);
  }
}

TEST(Geodesic, HorizontalLineStaysOnZeroSection) {
  const RealVec u = vec({0.0, 1.0, 0.0});
  const auto path = geodesic_integrate({RealPoint::Zero(3), RealVec::Zero(3)}, base_velocity(u), 1.0, 500);
  for (const auto& s : path.samples) {
    EXPECT_LE(s.point.v.norm(), 1e-6);
    EXPECT_LE((s.point.x - s.point.x.dot(u) * u).norm(), 1e-6);
  }
  // The base geodesic through the origin has unit speed in d(0, x) = artanh|x|.
  EXPECT_NEAR(std::atanh(path.samples.back().point.x.norm()), 1.0, 1e-6);
}

TEST(Geodesic, FiberOverOriginIsTotallyGeodesic) {
  Rng rng(191);
  for (int t = 0; t < 5; ++t) {
    const TangentVector start{RealPoint::Zero(3), 0.5 * rng.in_ball(3, 1.0)};
    const RealVec w = fiber_velocity(rng.unit_vector(3));
    const auto path = geodesic_integrate(start, w / std::sqrt(geodesic_energy(start, w)), 1.0, 200);
    for (const auto& s : path.samples) EXPECT_LE(s.point.x.norm(), 1e-6);
  }
}

TEST(Geodesic, ZeroVelocityIsConstant) {
  const TangentVector start{vec({0.1, 0.2}), vec({0.3, -0.1})};
  const auto path = geodesic_integrate(start, RealVec::Zero(4), 1.0, 10);
  for (const auto& s : path.samples) {
    EXPECT_EQ(s.point.x, start.x);
    EXPECT_EQ(s.point.v, start.v);
  }
}

TEST(Geodesic, EnergyConserved) {
  Rng rng(193);
  for (int t = 0; t < 3; ++t) {
    const auto start = oracles::random_tangent_vector(rng, 3, 0.5, 1.0);
    RealVec w = rng.normal_vector(6);
    w /= std::sqrt(geodesic_energy(start, w));
    const auto path = geodesic_integrate(start, w, 1.0, 1000);
    const auto& last = path.samples.back();
    EXPECT_LE(std::abs(geodesic_energy(last.point, last.velocity) - 1.0), 1e-7);
  }
}

TEST(Geodesic, LeavingTheChartThrows) {
  EXPECT_THROW(geodesic_integrate({vec({0.0, 0.0}), vec({0.0, 0.0})}, base_velocity(vec({1.0, 0.0})),
                                  30.0, 300),
               StepOutError);
  EXPECT_THROW(geodesic_integrate({vec({0.0, 0.0}), vec({0.0, 0.0})}, RealVec::Zero(4), 1.0, 0),
               DomainError);
  EXPECT_THROW(geodesic_integrate({vec({0.0, 0.0}), vec({0.0, 0.0})}, RealVec::Zero(3), 1.0, 10),
               DomainError);
}

TEST(Pregeodesic, RaysInFibers) {
  Rng rng(197);
  for (int t = 0; t < 100; ++t) {
    const RealPoint x = rng.in_ball(3, 0.8);
    const RealVec u = rng.unit_vector(3);
    const TangentVector p{x, rng.uniform(0.0, 2.0) * (1.0 - x.squaredNorm()) * u};
    EXPECT_LE(pregeodesic_residual(p, fiber_velocity(u)), 1e-6);
  }
  // A fiber line not through 0 is not a geodesic.
  const RealVec u = vec({1, 0, 0});
  EXPECT_GT(pregeodesic_residual({RealPoint::Zero(3), vec({0, 0.5, 0})}, fiber_velocity(u)), 1e-3);
}

TEST(LeafEmbed, Examples) {
  EXPECT_NEAR(std::abs(leaf_embed(0.0, 0.8) - Complex(0.0, std::tanh(0.8))), 0.0, 4e-16);
  EXPECT_NEAR(std::abs(leaf_embed(0.3, 0.0) - Complex(0.3, 0.0)), 0.0, 1e-16);
  // tau = 0.5 at s = 0.5 needs t = (1 - s^2) artanh 0.5.
  const Complex w = leaf_embed(0.5, 0.75 * kA);
  const Complex expected = Complex(0.5, 0.5) / Complex(1.0, 0.25);
  EXPECT_NEAR(std::abs(w - expected), 0.0, 1e-15);
  EXPECT_NEAR(w.real(), 0.58824, 5e-6);
  EXPECT_NEAR(w.imag(), 0.35294, 5e-6);
  EXPECT_THROW(leaf_embed(1.0, 0.0), DomainError);
}

TEST(LeafEmbed, MatchesThetaAndDerivatives) {
  Rng rng(199);
  for (int t = 0; t < 200; ++t) {
    const RealVec u = rng.unit_vector(3);
    const double s = rng.uniform(-0.9, 0.9);
    const double len = rng.uniform(-3.0, 3.0);
    const Complex w = leaf_embed(s, len);
    EXPECT_LT(std::abs(w), 1.0);
    const CplxPoint z = theta({s * u, len * u});
    EXPECT_NEAR(max_diff(z, CplxPoint(w * test::complexify(u))), 0.0, 1e-10);
    const auto [ws, wt] = leaf_embed_derivatives(s, len);
    const double h = 1e-6;
    const Complex fs = (leaf_embed(s + h, len) - leaf_embed(s - h, len)) / (2.0 * h);
    const Complex ft = (leaf_embed(s, len + h) - leaf_embed(s, len - h)) / (2.0 * h);
    EXPECT_NEAR(std::abs(ws - fs), 0.0, 1e-6 * std::max(1.0, std::abs(ws)));
    EXPECT_NEAR(std::abs(wt - ft), 0.0, 1e-6 * std::max(1.0, std::abs(wt)));
  }
}

}  // namespace
}  // namespace lieball
