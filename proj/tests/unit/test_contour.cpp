#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "gsqg/contour.hpp"
#include "oracles.hpp"

namespace gsqg {
namespace {

constexpr double kPi = std::numbers::pi;

// c_k = int (1 - cos k eta) |2 sin(eta/2)|^-beta d eta, 30-digit quadrature.
struct Moments {
  double beta, c1, c2, c5;
};
constexpr Moments kMoments[] = {
    {1.5, 3.3888523391759163, 5.4221637426814662, 9.5225217313495206},
    {1.2, 3.7168325527904043, 5.3097607897005775, 7.8482239693756127},
    {1.8, 3.1870657896987525, 5.7946650721795502, 12.460353560598206},
};

Point2 rotate(Point2 p, double a) { return {std::cos(a) * p.x - std::sin(a) * p.y, std::sin(a) * p.x + std::cos(a) * p.y}; }

double max_radial_deviation(const Contour& c, double r) {
  double worst = 0.0;
  for (const auto& p : c.points) worst = std::max(worst, std::abs(std::sqrt(norm_sq(p)) - r));
  return worst;
}

TEST(KernelMoments, MatchHighPrecisionQuadrature) {
  for (const auto& m : kMoments) {
    const auto c = kernel_moments(5, m.beta);
    EXPECT_EQ(c[0], 0.0);
    EXPECT_NEAR(c[1], m.c1, 1e-12 * m.c1) << m.beta;
    EXPECT_NEAR(c[2], m.c2, 1e-12 * m.c2) << m.beta;
    EXPECT_NEAR(c[5], m.c5, 1e-12 * m.c5) << m.beta;
  }
}

TEST(SingularWeights, IntegrateCosineMomentsExactly) {
  for (const auto& m : kMoments) {
    const int n = 64;
    const auto w = singular_weights(n, m.beta);
    ASSERT_EQ(static_cast<int>(w.size()), n);
    for (auto [k, expected] : {std::pair{1, m.c1}, {2, m.c2}, {5, m.c5}}) {
      double sum = 0.0;
      for (int j = 0; j < n; ++j) sum += w[j] * (1.0 - std::cos(k * 2.0 * kPi * j / n));
      EXPECT_NEAR(sum, expected, 1e-12 * expected) << "beta " << m.beta << " k " << k;
    }
  }
}

TEST(Contour, Validation) {
  Contour c = Contour::circle(64);
  EXPECT_NO_THROW(c.validate());
  c.beta = 2.0;
  EXPECT_THROW(c.validate(), PreconditionError);
  c = Contour::circle(64);
  c.points.pop_back();
  EXPECT_THROW(c.validate(), PreconditionError);
  EXPECT_THROW((void)cde_velocity(Contour::circle(32)), PreconditionError);
}

TEST(CdeVelocity, CircleIsTangentialWithKnownSpeed) {
  for (const auto& m : kMoments) {
    const Contour c = Contour::circle(128, 1.0, {}, m.beta);
    const auto v = cde_velocity(c);
    for (int i = 0; i < c.size(); ++i) {
      const Point2 x = c.points[i];
      const Point2 t{-x.y, x.x};
      EXPECT_LE(std::abs(dot(v[i], x)), 1e-8);
      EXPECT_NEAR(dot(v[i], t), m.c1, 1e-10) << "beta " << m.beta;
    }
  }
}

TEST(CdeVelocity, ScalesWithRadius) {
  const Contour e = Contour::ellipse(128, 1.0, 0.6);
  Contour big = e;
  const double r = 2.5;
  for (auto& p : big.points) p = r * p;
  const auto v = cde_velocity(e), w = cde_velocity(big);
  const double factor = std::pow(r, 1.0 - e.beta);
  for (int i = 0; i < e.size(); ++i) {
    EXPECT_NEAR(w[i].x, factor * v[i].x, 1e-12 * (1 + std::abs(v[i].x)));
    EXPECT_NEAR(w[i].y, factor * v[i].y, 1e-12 * (1 + std::abs(v[i].y)));
  }
}

TEST(CdeVelocity, SelfIntersectionReportsPair) {
  Contour c = Contour::circle(64);
  c.points[40] = c.points[10];
  try {
    (void)cde_velocity(c);
    FAIL();
  } catch (const SelfIntersectionError& e) {
    EXPECT_EQ(std::min(e.first(), e.second()), 10);
    EXPECT_EQ(std::max(e.first(), e.second()), 40);
  }
  EXPECT_THROW((void)step(c, 1e-3), ContourBlowUp);
}

TEST(LambdaField, VanishesOnCircle) {
  const auto lam = lambda_field(Contour::circle(128));
  for (double l : lam) EXPECT_LE(std::abs(l), 1e-8);
}

TEST(LambdaField, StartsAtZero) {
  for (const Contour& c : {Contour::ellipse(128, 1.0, 0.5), Contour::perturbed_circle(128, 0.2, 3)})
    EXPECT_EQ(lambda_field(c).front(), 0.0);
}

TEST(LambdaField, MatchesDirectOracleOnEllipse) {
  const Contour c = Contour::ellipse(256, 1.0, 0.5);
  const auto lam = lambda_field(c);
  const auto oracle = testing::lambda_oracle(c);
  for (int i = 0; i < c.size(); ++i) EXPECT_NEAR(lam[i], oracle[i], 1e-6) << "node " << i;
}

TEST(LambdaField, KeepsParametrizationUniformToFirstOrder) {
  // d/dt |x'|^2 = 2 x'.(strength V' + (lambda x')') must be gamma-independent.
  const Contour c = Contour::perturbed_circle(128, 0.1, 3, 1.3, 0.7);
  const auto rhs = contour_rhs(c);
  const auto d_rhs = spectral_derivative(rhs, 1);
  const auto d1 = spectral_derivative(c.points, 1);
  double lo = 1e300, hi = -1e300;
  for (int i = 0; i < c.size(); ++i) {
    const double g = dot(d1[i], d_rhs[i]);
    lo = std::min(lo, g);
    hi = std::max(hi, g);
  }
  EXPECT_LE(hi - lo, 1e-8);
}

TEST(Step, CircleKeepsShape) {
  const Contour c = Contour::circle(256);
  EXPECT_LE(max_radial_deviation(step(c, 1e-3), 1.0), 1e-8);
}

TEST(Step, EllipseStaysUniform) {
  Contour c = Contour::ellipse(128, 1.0, 0.5);
  for (int i = 0; i < 100; ++i) c = step(c, 1e-3);
  EXPECT_LE(contour_diagnostics(c).spread, 1e-5);
}

TEST(Step, FourthOrderSelfConvergence) {
  const Contour c0 = Contour::perturbed_circle(64, 0.1, 3);
  const double t_end = 0.2;
  std::vector<Contour> finals;
  for (double dt : {1e-3, 5e-4, 2.5e-4}) finals.push_back(run_contour(c0, dt, t_end, 1000000).final);
  auto dist = [](const Contour& a, const Contour& b) {
    double s = 0.0;
    for (int i = 0; i < a.size(); ++i) s = std::max(s, std::sqrt(norm_sq(a.points[i] - b.points[i])));
    return s;
  };
  const double slope = std::log2(dist(finals[0], finals[1]) / dist(finals[1], finals[2]));
  EXPECT_NEAR(slope, 4.0, 0.3);
}

TEST(Step, EuclideanEquivariance) {
  const Contour c0 = Contour::perturbed_circle(64, 0.2, 2, 1.4);
  const double angle = 0.7;
  const Point2 shift{3.0, -1.25};
  Contour moved = c0;
  for (auto& p : moved.points) p = rotate(p, angle) + shift;
  Contour a = c0, b = moved;
  for (int i = 0; i < 10; ++i) {
    a = step(a, 1e-3);
    b = step(b, 1e-3);
  }
  for (int i = 0; i < a.size(); ++i) {
    const Point2 expected = rotate(a.points[i], angle) + shift;
    EXPECT_LE(std::sqrt(norm_sq(expected - b.points[i])), 1e-10);
  }
}

TEST(StableStep, ShrinksWithResolution) {
  const double s64 = stable_step(Contour::circle(64)), s256 = stable_step(Contour::circle(256));
  EXPECT_GT(s64, s256);
  Contour weak = Contour::circle(64);
  weak.strength = 0.5;
  EXPECT_NEAR(stable_step(weak), 2.0 * s64, 1e-12 * s64);
}

TEST(ArcChord, CircleClosedForm) {
  const auto rep = arc_chord(Contour::circle(128));
  EXPECT_NEAR(rep.f_max, kPi / 2.0, 1e-8);
  EXPECT_EQ(std::abs(rep.argmax_i - rep.argmax_j), 64);
  for (double d : rep.diagonal) EXPECT_NEAR(d, 1.0, 1e-12);
}

TEST(ArcChord, HomogeneousOfDegreeMinusOne) {
  // |eta| / |x(gamma) - x(gamma - eta)| picks up 1/r under x -> r x.
  const Contour e = Contour::ellipse(64, 1.0, 0.5);
  const double base = arc_chord(e).f_max;
  for (double r : {0.3, 4.0}) {
    Contour scaled = e;
    for (auto& p : scaled.points) p = r * p;
    EXPECT_NEAR(r * arc_chord(scaled).f_max, base, 1e-12 * base) << "r=" << r;
  }
}

TEST(ArcChord, DenseEllipseAgreesWithClosedFormForNodes) {
  const Contour c = Contour::ellipse(64, 1.0, 0.5);
  const auto rep = arc_chord(c);
  const auto d1 = spectral_derivative(c.points, 1);
  double expected = 0.0;
  for (int i = 0; i < c.size(); ++i) {
    expected = std::max(expected, 1.0 / std::sqrt(norm_sq(d1[i])));
    for (int j = 0; j < c.size(); ++j) {
      if (i == j) continue;
      int k = std::abs(i - j);
      k = std::min(k, c.size() - k);
      expected = std::max(expected, (2.0 * kPi * k / c.size()) / std::sqrt(norm_sq(c.points[i] - c.points[j])));
    }
  }
  EXPECT_NEAR(rep.f_max, expected, 1e-12 * expected);
}

TEST(Diagnostics, Circle) {
  const auto d = contour_diagnostics(Contour::circle(128));
  EXPECT_NEAR(d.area, kPi, 1e-12);
  EXPECT_NEAR(d.a_mean, 1.0, 1e-12);
  EXPECT_NEAR(d.h4_norm, std::sqrt(32.0 * kPi), 1e-12);
  EXPECT_LE(d.spread, 1e-12);
}

TEST(Diagnostics, AreaConservedOnPerturbedCircle) {
  const Contour c0 = Contour::perturbed_circle(128, 0.1, 3);
  const auto r = run_contour(c0, 1e-3, 0.2, 50);
  const double a0 = r.diagnostics.front().area;
  for (const auto& d : r.diagnostics) {
    EXPECT_LE(std::abs(d.area - a0), 1e-6 * a0);
    EXPECT_LE(d.spread, 1e-5);
  }
}

TEST(CurveIdentity, Examples) {
  EXPECT_LE(curve_identity_check(Contour::circle(128)), 1e-12);
  EXPECT_LE(curve_identity_check(Contour::ellipse(256, 1.0, 0.5)), 1e-6);
  Contour raw = Contour::circle(128);
  for (int i = 0; i < raw.size(); ++i) raw.points[i] = {std::cos(raw.gamma(i)), 0.5 * std::sin(raw.gamma(i))};
  EXPECT_THROW((void)curve_identity_check(raw), PreconditionError);
}

TEST(Reparametrization, UniformSpeed) {
  for (const Contour& c : {Contour::ellipse(128, 1.0, 0.5), Contour::perturbed_circle(128, 0.1, 3),
                           Contour::perturbed_circle(256, 0.15, 4)})
    EXPECT_LE(contour_diagnostics(c).spread, 1e-6);
}

TEST(SymmetrizedIntegral, Vanishes) {
  for (const Contour& c : {Contour::perturbed_circle(128, 0.1, 3), Contour::ellipse(128, 1.0, 0.7)}) {
    const auto s = symmetrized_integral(c);
    EXPECT_LE(std::abs(s.symmetrized), 1e-8);
    EXPECT_LE(std::abs(s.direct), 1e-8);
  }
}

}  // namespace
}  // namespace gsqg
