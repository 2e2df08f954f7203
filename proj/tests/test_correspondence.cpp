#include <cmath>

#include "lieball/correspondence.hpp"
#include "lieball/errors.hpp"
#include "lieball/geom_core.hpp"
#include "lieball/moebius.hpp"
#include "lieball/oracles.hpp"
#include "lieball/random.hpp"
#include "support.hpp"

namespace lieball {
namespace {

using test::complexify;
using test::cvec;
using test::kI;
using test::max_diff;
using test::vec;

const double kA = std::atanh(0.5);

TEST(TMap, Example) {
  const OrientedSphere s = t_map(cvec({0.4, 0.4 * kI, 0.0}));
  EXPECT_EQ(s.center, vec({0.4, 0, 0}));
  EXPECT_EQ(s.radius_vector, vec({0, 0.4, 0}));
  EXPECT_NEAR(s.radius(), 0.4, 1e-16);
}

TEST(TMap, RealPointIsPointSphere) {
  const OrientedSphere s = t_map(cvec({0.1, -0.2, 0.3}));
  EXPECT_TRUE(s.is_point());
  EXPECT_EQ(s.center, vec({0.1, -0.2, 0.3}));
}

TEST(TMap, RoundTrip) {
  Rng rng(83);
  for (int t = 0; t < 100; ++t) {
    const CplxPoint z = rng.complex_normal_vector(4);
    EXPECT_EQ(t_inv(t_map(z)), z);
  }
}

TEST(TMap, PointPairForPlane) {
  // (z1 + i z2, conj z1 + i conj z2) read in R^2 ~ C
  const CplxPoint z = cvec({Complex(0.1, 0.2), Complex(0.3, 0.4)});
  const auto [first, second] = point_pair(t_map(z));
  EXPECT_NEAR(max_diff(first, vec({-0.3, 0.5})), 0.0, 1e-15);
  EXPECT_NEAR(max_diff(second, vec({0.5, 0.1})), 0.0, 1e-15);
  EXPECT_TRUE(sphere_contains_point(z, first, 1e-12));
  EXPECT_TRUE(sphere_contains_point(z, second, 1e-12));
  EXPECT_THROW(point_pair(t_map(cvec({0.1, 0.2, 0.3}))), DomainError);
}

TEST(SphereContains, Examples) {
  const CplxPoint z = cvec({0.0, 0.5 * kI, 0.0});
  EXPECT_TRUE(sphere_contains_point(z, vec({0, 0, 0.5})));
  // On the radius vector, off the sphere: Q((0, -0.5 + 0.5i, 0)) = -0.5i.
  EXPECT_NEAR(std::abs(q_form(z - complexify(vec({0, 0.5, 0}))) - Complex(0, -0.5)), 0.0, 1e-16);
  EXPECT_FALSE(sphere_contains_point(z, vec({0, 0.5, 0})));
  EXPECT_TRUE(sphere_contains_point(cvec({0.2, 0.3, 0.1}), vec({0.2, 0.3, 0.1})));
}

// Membership agrees with the euclidean description of the sphere.
TEST(SphereContains, MatchesEuclideanDefinition) {
  Rng rng(89);
  for (int t = 0; t < 200; ++t) {
    const CplxPoint z = rng.complex_normal_vector(3);
    const RealVec x = z.real();
    const RealVec y = z.imag();
    RealVec u = rng.normal_vector(3);
    u -= u.dot(y) / y.squaredNorm() * y;
    const RealPoint on = x + y.norm() * u.normalized();
    EXPECT_TRUE(sphere_contains_point(z, on));
    EXPECT_FALSE(sphere_contains_point(z, RealPoint(on + 1e-3 * y.normalized())));
    EXPECT_FALSE(sphere_contains_point(z, RealPoint(x + 1.01 * y.norm() * u.normalized())));
  }
}

TEST(Theta, OriginFiber) {
  const RealVec v = vec({0.3, -0.4, 1.2});
  const CplxPoint expected = kI * std::tanh(v.norm()) * complexify(v.normalized());
  EXPECT_NEAR(max_diff(theta({RealPoint::Zero(3), v}), expected), 0.0, 1e-15);
}

TEST(Theta, ZeroSection) {
  const RealPoint x = vec({0.3, -0.1, 0.6});
  EXPECT_EQ(theta({x, RealVec::Zero(3)}), complexify(x));
}

TEST(Theta, OffOriginExample) {
  const TangentVector tv{vec({0.5, 0, 0}), vec({0, 0.75 * kA, 0})};
  EXPECT_NEAR(max_diff(theta(tv), cvec({0.4, 0.4 * kI, 0.0})), 0.0, 1e-15);
}

TEST(Theta, RejectsBaseOutsideBall) {
  EXPECT_THROW(theta({vec({1.0, 0, 0}), vec({0, 1, 0})}), DomainError);
}

TEST(Theta, ImageIsInterior) {
  Rng rng(97);
  for (int n : {2, 3, 5}) {
    for (int t = 0; t < 200; ++t) {
      const auto tv = oracles::random_tangent_vector(rng, n, 0.95, 5.0);
      EXPECT_LT(lie_gauge(theta(tv)), 1.0);
    }
  }
}

TEST(Theta, GaugeApproachesOneAlongRays) {
  const RealVec u = vec({0.6, 0.0, 0.8});
  double prev = 0.0;
  for (double t : {5.0, 10.0, 20.0}) {
    const double g = lie_gauge(theta({RealPoint::Zero(3), t * u}));
    EXPECT_GT(g, prev);
    // At t = 20 the exact gauge is within 1e-16 of 1, below double resolution.
    if (t < 20.0) {
      EXPECT_LT(g, 1.0);
    }
    prev = g;
    if (t == 5.0) {
      EXPECT_LE(1.0 - g, 1e-3);
    }
  }
  EXPECT_LE(std::abs(1.0 - prev), 1e-7);
}

TEST(Theta, LeafClosedForm) {
  Rng rng(101);
  for (int t = 0; t < 500; ++t) {
    const RealVec u = rng.unit_vector(4);
    const double s = rng.uniform(-0.95, 0.95);
    const double len = rng.uniform(-5.0, 5.0);
    const double tau = std::tanh(len / (1.0 - s * s));
    const Complex w = Complex(s, tau) / Complex(1.0, s * tau);
    EXPECT_NEAR(max_diff(theta({s * u, len * u}), CplxPoint(w * complexify(u))), 0.0, 1e-10);
  }
}

TEST(ThetaInv, OriginFiber) {
  const RealVec u = vec({0.0, 0.6, 0.8});
  const TangentVector tv = theta_inv(kI * std::tanh(0.9) * complexify(u));
  EXPECT_NEAR(tv.x.norm(), 0.0, 1e-15);
  EXPECT_NEAR(max_diff(tv.v, RealVec(0.9 * u)), 0.0, 1e-14);
}

TEST(ThetaInv, RealPoint) {
  const TangentVector tv = theta_inv(cvec({0.3, 0.2, -0.4}));
  EXPECT_EQ(tv.x, vec({0.3, 0.2, -0.4}));
  EXPECT_EQ(tv.v, RealVec::Zero(3));
}

TEST(ThetaInv, OffOriginExample) {
  const CplxPoint z = cvec({0.4, 0.4 * kI, 0.0});
  const TangentVector tv = theta_inv(z);
  EXPECT_NEAR(max_diff(tv.x, vec({0.5, 0, 0})), 0.0, 1e-14);
  EXPECT_NEAR(max_diff(tv.v, vec({0, 0.75 * kA, 0})), 0.0, 1e-14);
  EXPECT_NEAR(tv.v[1], 0.41198, 1e-5);
  // Independent inversion from a perturbed start.
  const TangentVector guess{vec({0.51, -0.01, 0.01}), vec({0.01, 0.4, -0.01})};
  const TangentVector newton = oracles::newton_theta_inv(z, guess);
  EXPECT_NEAR(max_diff(newton.x, tv.x), 0.0, 1e-9);
  EXPECT_NEAR(max_diff(newton.v, tv.v), 0.0, 1e-9);
}

TEST(ThetaInv, RejectsNonInteriorPoints) {
  EXPECT_THROW(theta_inv(cvec({0.6, 0.5 * kI, 0.0})), NotInteriorError);
  EXPECT_THROW(theta_inv(cvec({0.5, 0.5 * kI, 0.0})), NotInteriorError);
  EXPECT_THROW(theta_inv(cvec({1.0, 0.0})), NotInteriorError);
}

TEST(ThetaInv, ParallelAndCenteredCases) {
  // Re z parallel to Im z, and Re z = 0.
  for (const CplxPoint& z : {cvec({Complex(0.2, 0.3), 0.0, 0.0}), cvec({0.0, 0.0, 0.4 * kI}),
                             cvec({Complex(0.1, -0.2), Complex(0.2, -0.4)})}) {
    EXPECT_NEAR(max_diff(theta(theta_inv(z)), z), 0.0, 1e-13);
  }
}

TEST(ThetaInv, RoundTrips) {
  for (int n : {2, 3, 5}) {
    Rng rng(103 + n);
    for (int t = 0; t < 500; ++t) {
      const auto tv = oracles::random_tangent_vector(rng, n, 0.95, 5.0);
      const TangentVector back = theta_inv(theta(tv));
      EXPECT_LE(max_diff(back.x, tv.x), 1e-8);
      EXPECT_LE(max_diff(back.v, tv.v), 1e-8);
      const CplxPoint z = oracles::random_lie_point(rng, n, 0.999);
      EXPECT_LE(max_diff(theta(theta_inv(z)), z), 1e-9);
    }
  }
}

TEST(Equivariance, BothParities) {
  for (int n : {2, 3, 4}) {
    Rng rng(107 + n);
    for (int t = 0; t < 200; ++t) {
      const auto tv = oracles::random_tangent_vector(rng, n);
      const HyperbolicMotion g = oracles::random_motion(rng, n, t % 2 == 0 ? 1 : -1);
      const CplxPoint lhs = theta(tangent_action(g, tv));
      CplxPoint rhs = motion_apply(g, theta(tv));
      if (motion_parity(g) < 0) rhs = rhs.conjugate();
      EXPECT_LE(max_diff(lhs, rhs), 1e-8);
    }
  }
}

// s_map is equivariant when orientation-reversing motions conjugate.
TEST(Equivariance, SphereLevel) {
  Rng rng(109);
  for (int t = 0; t < 100; ++t) {
    const auto tv = oracles::random_tangent_vector(rng, 3, 0.9, 3.0);
    const HyperbolicMotion g = oracles::random_motion(rng, 3);
    const OrientedSphere lhs = s_map(tangent_action(g, tv));
    const OrientedSphere rhs = motion_apply_sphere(g, s_map(tv), SphereAction::kConjugateReversing);
    EXPECT_LE(max_diff(lhs.center, rhs.center), 1e-9);
    EXPECT_LE(max_diff(lhs.radius_vector, rhs.radius_vector), 1e-9);
  }
}

TEST(SMap, OriginFiber) {
  const RealVec u = vec({0, 0, 1});
  const OrientedSphere s = s_map({RealPoint::Zero(3), 0.7 * u});
  EXPECT_NEAR(s.center.norm(), 0.0, 1e-16);
  EXPECT_NEAR(max_diff(s.radius_vector, RealVec(std::tanh(0.7) * u)), 0.0, 1e-15);
}

TEST(SMap, OffOriginExample) {
  const OrientedSphere s = s_map({vec({0.5, 0, 0}), vec({0, 0.75 * kA, 0})});
  EXPECT_NEAR(max_diff(s.center, vec({0.4, 0, 0})), 0.0, 1e-15);
  EXPECT_NEAR(max_diff(s.radius_vector, vec({0, 0.4, 0})), 0.0, 1e-15);
}

TEST(SMap, RoundTripAndGeometry) {
  Rng rng(113);
  for (int t = 0; t < 200; ++t) {
    const auto tv = oracles::random_tangent_vector(rng, 3, 0.9, 3.0);
    const OrientedSphere s = s_map(tv);
    const TangentVector back = s_inv(s);
    EXPECT_LE(max_diff(back.x, tv.x), 1e-9);
    EXPECT_LE(max_diff(back.v, tv.v), 1e-9);
    const RealVec u = tv.v.normalized();
    for (const auto& a : oracles::sample_sphere(s, 20, t).points) {
      EXPECT_NEAR(hyp_distance(tv.x, a), tv.hyperbolic_length(), 1e-8);
      // delta_x moves the hyperplane at x orthogonal to v onto the linear one.
      EXPECT_NEAR(delta_apply(tv.x, a).dot(u), 0.0, 1e-8);
    }
  }
}

TEST(SMap, InverseRejectsSpheresLeavingTheBall) {
  EXPECT_THROW(s_inv({vec({0.6, 0, 0}), vec({0, 0.5, 0})}), NotInteriorError);
}

TEST(SphereConversion, CenteredSphere) {
  const auto e = sphere_hyp_to_euc({RealPoint::Zero(3), 0.8});
  EXPECT_NEAR(e.center.norm(), 0.0, 1e-16);
  EXPECT_NEAR(e.radius, std::tanh(0.8), 1e-15);
}

// Diameter endpoints: delta_c sends them to -+alpha c-hat, i.e. to
// (t -+ alpha) / (1 -+ alpha t) along c-hat with t = |c|.
TEST(SphereConversion, GoldenValue) {
  const double t = 0.5;
  const double alpha = 0.5;
  const double lo = (t - alpha) / (1.0 - alpha * t);
  const double hi = (t + alpha) / (1.0 + alpha * t);
  const auto e = sphere_hyp_to_euc({vec({0.5, 0, 0}), 0.75 * kA});
  EXPECT_NEAR(max_diff(e.center, vec({0.5 * (lo + hi), 0, 0})), 0.0, 1e-12);
  EXPECT_NEAR(e.radius, 0.5 * (hi - lo), 1e-12);
  EXPECT_NEAR(max_diff(e.center, vec({0.4, 0, 0})), 0.0, 1e-12);
  EXPECT_NEAR(e.radius, 0.4, 1e-12);

  const auto h = sphere_euc_to_hyp({vec({0.4, 0, 0}), 0.4});
  EXPECT_NEAR(max_diff(h.center, vec({0.5, 0, 0})), 0.0, 1e-12);
  EXPECT_NEAR(h.radius, 0.75 * kA, 1e-12);
}

TEST(SphereConversion, AgreesWithSMapForTangentialV) {
  // With v orthogonal to x the geodesic hyperplane through x normal to v is
  // flat and cuts the hyperbolic sphere along a great sphere.
  Rng rng(127);
  for (int t = 0; t < 100; ++t) {
    auto tv = oracles::random_tangent_vector(rng, 3, 0.9, 3.0);
    tv.v -= tv.v.dot(tv.x) / tv.x.squaredNorm() * tv.x;
    if (tv.v.isZero(0.0)) continue;
    const auto e = sphere_hyp_to_euc({tv.x, tv.v.norm()});
    const OrientedSphere s = s_map(tv);
    EXPECT_NEAR(max_diff(e.center, s.center), 0.0, 1e-10);
    EXPECT_NEAR(e.radius, s.radius(), 1e-10);
  }
}

TEST(SphereConversion, RoundTrips) {
  Rng rng(131);
  for (int t = 0; t < 200; ++t) {
    const RealPoint c = rng.in_ball(3, 0.95);
    const double r = rng.uniform(0.01, 3.0) * (1.0 - c.squaredNorm());
    const auto h = sphere_euc_to_hyp(sphere_hyp_to_euc({c, r}));
    EXPECT_LE(max_diff(h.center, c), 1e-10);
    EXPECT_LE(std::abs(h.radius - r), 1e-10 * r);
  }
}

TEST(SphereConversion, DomainErrors) {
  EXPECT_THROW(sphere_hyp_to_euc({vec({1.0, 0, 0}), 0.1}), DomainError);
  EXPECT_THROW(sphere_hyp_to_euc({vec({0.1, 0, 0}), 0.0}), DomainError);
  EXPECT_THROW(sphere_euc_to_hyp({vec({0.5, 0, 0}), 0.6}), DomainError);
  EXPECT_THROW(sphere_euc_to_hyp({vec({0.5, 0, 0}), -0.1}), DomainError);
}

TEST(BoundaryTangency, OrthogonalExample) {
  const RealPoint p = boundary_tangency(cvec({0.5, 0.5 * kI, 0.0}));
  EXPECT_NEAR(max_diff(p, vec({1, 0, 0})), 0.0, 1e-15);
}

TEST(BoundaryTangency, RealUnitVector) {
  const RealPoint p = boundary_tangency(cvec({0.6, 0.0, 0.8}));
  EXPECT_NEAR(max_diff(p, vec({0.6, 0, 0.8})), 0.0, 1e-16);
}

TEST(BoundaryTangency, RandomBoundaryPoints) {
  Rng rng(137);
  for (int t = 0; t < 100; ++t) {
    const CplxPoint z = oracles::random_boundary_point(rng, 3);
    const RealPoint p = boundary_tangency(z);
    EXPECT_NEAR(p.norm(), 1.0, 1e-8);
    EXPECT_LE(std::abs(q_form(z - complexify(p))), 1e-8);
    // Sampled points of T(z) stay inside the unit ball, and the best is near p.
    double best = 0.0;
    RealPoint arg = p;
    for (const auto& a : oracles::sample_sphere(t_map(z), 2000, t).points)
      if (a.norm() > best) best = a.norm(), arg = a;
    EXPECT_LE(best, 1.0 + 1e-12);
    EXPECT_LE((arg - p).norm(), 0.1);
  }
}

TEST(BoundaryTangency, RejectsInteriorPoints) {
  EXPECT_THROW(boundary_tangency(cvec({0.3, 0.3 * kI, 0.0})), NotBoundaryError);
}

}  // namespace
}  // namespace lieball
