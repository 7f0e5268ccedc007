#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "generators.hpp"
#include "gsqg/norms.hpp"
#include "gsqg/weak_form.hpp"

namespace gsqg {
namespace {

using testing::Gen;

SpectralField single(int n, int k1, int k2, cplx a = 0.5) {
  const Mode m{{k1, k2}, a};
  return synthesize({&m, 1}, n, n);
}

SpectralField test_spatial(int n) {
  const Mode m[] = {{{3, 0}, 0.4}, {{8, 9}, {0.1, -0.2}}, {{0, 24}, 0.3}, {{1, -1}, 0.2}};
  return synthesize(m, n, n);
}

Trajectory trajectory_of(const SpectralField& theta0, const ModelParams& p, int n, std::optional<int> ng,
                         double dt, double t_end) {
  SolverConfig cfg;
  cfg.n = n;
  cfg.galerkin_radius = ng;
  cfg.dt = dt;
  cfg.t_end = t_end;
  cfg.snapshot_stride = 1;
  cfg.keep_trajectory = true;
  return run(theta0, p, cfg).trajectory;
}

TEST(SmoothCutoff, ShapeAndDerivative) {
  const TimeProfile rho = smooth_cutoff(0.2, 0.5);
  EXPECT_EQ(rho.value(0.0), 1.0);
  EXPECT_EQ(rho.value(0.2), 1.0);
  EXPECT_EQ(rho.value(0.5), 0.0);
  EXPECT_EQ(rho.value(0.7), 0.0);
  for (double t : {0.25, 0.33, 0.41, 0.48}) {
    const double h = 1e-6;
    const double fd = (rho.value(t + h) - rho.value(t - h)) / (2 * h);
    EXPECT_NEAR(rho.derivative(t), fd, 1e-6);
    EXPECT_GT(rho.value(t), 0.0);
    EXPECT_LT(rho.value(t), 1.0);
  }
}

TEST(WeakResidual, ZeroDataGivesZero) {
  const Trajectory traj = trajectory_of(SpectralField(64, 64), ModelParams{}, 64, std::nullopt, 0.01, 0.2);
  EXPECT_EQ(weak_residual(traj, {smooth_cutoff(0.05, 0.15), test_spatial(64)}), 0.0);
}

TEST(WeakResidual, SteadyStateAtBetaTwo) {
  ModelParams p;
  p.beta = 2.0;
  const Trajectory traj = trajectory_of(single(64, 2, 3, {0.3, 0.1}), p, 64, std::nullopt, 0.005, 0.5);
  const TestFunction phi{smooth_cutoff(0.1, 0.45), single(64, 2, 3, 1.0) + test_spatial(64)};
  EXPECT_LE(weak_residual(traj, phi), 1e-8);
}

TEST(WeakResidual, TooFewSamplesRejected) {
  const Trajectory traj = trajectory_of(single(16, 1, 0), ModelParams{}, 16, std::nullopt, 0.1, 0.5);
  EXPECT_LT(traj.states.size(), 8u);
  EXPECT_THROW((void)weak_residual(traj, {smooth_cutoff(0.1, 0.3), single(16, 1, 0)}), PreconditionError);
}

TEST(WeakResidual, ProfileMustVanishAtFinalTime) {
  const Trajectory traj = trajectory_of(single(16, 1, 0), ModelParams{}, 16, std::nullopt, 0.01, 0.2);
  EXPECT_THROW((void)weak_residual(traj, {smooth_cutoff(0.1, 0.5), single(16, 1, 0)}), PreconditionError);
}

TEST(WeakResidual, NonIncreasingInGalerkinRadius) {
  // Data inside every disc, so only the truncation of the nonlinear term differs.
  Gen gen(17);
  const SpectralField theta0 = gen.field(128, 6, 1.0);
  const TestFunction phi{smooth_cutoff(0.1, 0.4), test_spatial(128)};
  double previous = std::numeric_limits<double>::infinity();
  for (int ng : {8, 16, 32}) {
    const Trajectory traj = trajectory_of(theta0, ModelParams{}, 128, ng, 5e-3, 0.4);
    const double r = weak_residual(traj, phi);
    EXPECT_LE(r, previous) << "n_g=" << ng;
    previous = r;
  }
}

TEST(CommutatorIdentity, ConstantGVanishes) {
  Gen gen(1);
  SpectralField g(32, 32);
  g.coefficients()[0] = 3.0;
  const auto r = commutator_identity_check(gen.field(32, 10), g, 1.5);
  EXPECT_EQ(r.lhs, 0.0);
  EXPECT_EQ(r.commutator, 0.0);
}

TEST(CommutatorIdentity, SingleModeF) {
  Gen gen(2);
  const auto r = commutator_identity_check(single(64, 3, -2), gen.field(64, 10, 1.0), 1.3);
  EXPECT_LE(r.relative, 1e-12);
}

TEST(CommutatorIdentity, RandomPairs) {
  double worst = 0.0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    Gen gen(seed);
    const auto r = commutator_identity_check(gen.field(64, 10, 1.0), gen.field(64, 10, 1.0), gen.uniform(1.01, 2.0));
    worst = std::max(worst, r.relative);
  }
  EXPECT_LE(worst, 1e-10);
}

SolverConfig twin_config() {
  SolverConfig cfg;
  cfg.n = 32;
  cfg.dt = 2e-3;
  cfg.t_end = 0.1;
  cfg.diagnostic_stride = 5;
  return cfg;
}

TEST(TwinRun, ZeroPerturbationIsBitwiseIdentical) {
  Gen gen(4);
  const SpectralField theta0 = gen.field(32, 8, 1.0);
  const auto r = twin_run_divergence(theta0, gen.field(32, 8), 0.0, ModelParams{}, twin_config());
  EXPECT_TRUE(r.bitwise_identical);
  for (double d : r.distance_h1) EXPECT_EQ(d, 0.0);
}

TEST(TwinRun, TinyPerturbationStaysTiny) {
  Gen gen(5);
  const SpectralField theta0 = gen.field(32, 8, 1.0);
  const SpectralField dir = gen.field(32, 8, 1.0);
  const auto r = twin_run_divergence(theta0, dir * (1.0 / l2_norm(dir)), 1e-10, ModelParams{}, twin_config());
  EXPECT_LE(r.distance_h1.back(), 1e-6);
  EXPECT_GT(r.sup_h4_sum, 0.0);
  EXPECT_TRUE(std::isfinite(r.fitted_c));
  for (std::size_t i = 0; i < r.times.size(); ++i)
    EXPECT_LE(r.distance_h1[i], r.distance_h1[0] * std::exp(r.fitted_c * r.times[i] * r.sup_h4_sum) * (1 + 1e-12));
}

TEST(TwinRun, LinearRegime) {
  Gen gen(6);
  const SpectralField theta0 = gen.field(32, 8, 1.0);
  SpectralField dir = gen.field(32, 8, 1.0);
  dir *= 1.0 / l2_norm(dir);
  const auto a = twin_run_divergence(theta0, dir, 1e-7, ModelParams{}, twin_config());
  const auto b = twin_run_divergence(theta0, dir, 2e-7, ModelParams{}, twin_config());
  ASSERT_EQ(a.distance_h1.size(), b.distance_h1.size());
  for (std::size_t i = 0; i < a.distance_h1.size(); ++i)
    EXPECT_NEAR(b.distance_h1[i] / a.distance_h1[i], 2.0, 0.02) << "t=" << a.times[i];
}

}  // namespace
}  // namespace gsqg
