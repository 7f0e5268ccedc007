#include <gtest/gtest.h>

#include <cmath>

#include "generators.hpp"
#include "gsqg/estimates.hpp"
#include "gsqg/multiplier.hpp"
#include "gsqg/norms.hpp"
#include "gsqg/product.hpp"
#include "oracles.hpp"

namespace gsqg {
namespace {

using testing::Gen;

SpectralField single(int n, int k1, int k2, cplx a = 0.5) {
  const Mode m{{k1, k2}, a};
  return synthesize({&m, 1}, n, n);
}

SpectralField constant(int n, double c) {
  SpectralField f(n, n);
  f.coefficients()[0] = c;
  return f;
}

testing::Lattice commutator_oracle_lambda(const SpectralField& f, const SpectralField& g, double s, int axis) {
  return testing::commutator_double_sum(testing::nonzero_modes(f), testing::nonzero_modes(g), [&](int k1, int k2) {
    const double r2 = k1 * k1 + k2 * k2;
    if (r2 == 0) return cplx{};
    return cplx(0.0, std::pow(r2, 0.5 * s) * (axis == 1 ? k1 : k2));
  });
}

testing::Lattice commutator_oracle_log(const SpectralField& f, const SpectralField& g, double mu) {
  return testing::commutator_double_sum(testing::nonzero_modes(f), testing::nonzero_modes(g), [&](int k1, int k2) {
    const double r2 = k1 * k1 + k2 * k2;
    return cplx(0.0, std::pow(std::log1p(r2), mu) * k1);
  });
}

TEST(CommutatorLambda, ConstantGVanishes) {
  Gen gen(1);
  const SpectralField f = gen.field(32, 7);
  for (double s : {-0.5, 0.0, 1.0}) {
    const double scale = 2.5 * apply_derivative_multiplier(f, MultiplierSpec::lambda_power(s), 1).max_abs_coeff();
    EXPECT_LE(commutator_lambda(f, constant(32, 2.5), s).max_abs_coeff(), 1e-14 * scale);
  }
}

TEST(CommutatorLambda, LeibnizAtZero) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    Gen gen(seed);
    const SpectralField f = gen.field(64, 15), g = gen.field(64, 15);
    for (int axis : {1, 2}) {
      const SpectralField expected = dealias_product(f, partial(g, axis));
      EXPECT_LE((commutator_lambda(f, g, 0.0, axis) - expected).max_abs_coeff(), 1e-12);
    }
  }
}

TEST(CommutatorLambda, MatchesDoubleSumOracle) {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    Gen gen(seed);
    const SpectralField f = gen.field(64, 15, 1.0), g = gen.field(64, 15, 2.0);
    for (double s : {-0.5, 0.3}) {
      const auto exact = commutator_oracle_lambda(f, g, s, 1);
      EXPECT_LE(testing::max_diff_on_grid(exact, commutator_lambda(f, g, s, 1)), 1e-10) << "s=" << s;
    }
  }
}

TEST(CommutatorLambda, OracleEquivalenceOnSmallGrids) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Gen gen(seed);
    const SpectralField f = gen.field(32, 7), g = gen.field(32, 7);
    const double s = gen.uniform(-0.9, 1.5);
    const int axis = gen.integer(1, 2);
    EXPECT_LE(testing::max_diff_on_grid(commutator_oracle_lambda(f, g, s, axis), commutator_lambda(f, g, s, axis)),
              1e-10)
        << "seed " << seed;
    const double mu = gen.uniform(0.0, 2.0);
    EXPECT_LE(testing::max_diff_on_grid(commutator_oracle_log(f, g, mu), commutator_log(f, g, mu)), 1e-10)
        << "seed " << seed;
  }
}

TEST(CommutatorLambda, Bilinear) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    Gen gen(seed);
    const SpectralField f1 = gen.field(32, 7), f2 = gen.field(32, 7), g1 = gen.field(32, 7), g2 = gen.field(32, 7);
    const double a = gen.uniform(-2, 2), b = gen.uniform(-2, 2);
    for (double s : {-0.5, 0.7}) {
      const SpectralField lhs = commutator_lambda(a * f1 + b * f2, g1, s);
      const SpectralField rhs = a * commutator_lambda(f1, g1, s) + b * commutator_lambda(f2, g1, s);
      EXPECT_LE((lhs - rhs).max_abs_coeff(), 1e-12 * std::max(1.0, lhs.max_abs_coeff()));
      const SpectralField lhs2 = commutator_lambda(f1, a * g1 + b * g2, s);
      const SpectralField rhs2 = a * commutator_lambda(f1, g1, s) + b * commutator_lambda(f1, g2, s);
      EXPECT_LE((lhs2 - rhs2).max_abs_coeff(), 1e-12 * std::max(1.0, lhs2.max_abs_coeff()));
    }
    const SpectralField l = commutator_log(a * f1 + b * f2, g1, 1.0);
    const SpectralField r = a * commutator_log(f1, g1, 1.0) + b * commutator_log(f2, g1, 1.0);
    EXPECT_LE((l - r).max_abs_coeff(), 1e-12 * std::max(1.0, l.max_abs_coeff()));
  }
}

TEST(CommutatorLambda, ScalingCovarianceIsExact) {
  Gen gen(7);
  const SpectralField f = gen.field(32, 7), g = gen.field(32, 7);
  EXPECT_EQ(commutator_lambda(4.0 * f, g, -0.5), 4.0 * commutator_lambda(f, g, -0.5));
  EXPECT_EQ(commutator_log(0.25 * f, g, 1.0), 0.25 * commutator_log(f, g, 1.0));
}

TEST(CommutatorLambda, NegativeOrderBelowMinusOneNeedsMeanZero) {
  SpectralField f = single(16, 1, 0);
  f.coefficients()[0] = 1.0;
  EXPECT_THROW((void)commutator_lambda(f, single(16, 0, 1), -1.5), PreconditionError);
}

TEST(Ratios, InvariantUnderRescaling) {
  Gen gen(8);
  const SpectralField f = gen.field(32, 7, 1.0), g = gen.field(32, 7, 2.0);
  const double base_est = comest_trial(f, g, -0.5).ratio;
  const double base_log = comlog_trial(f, g, 1.0, 0.5, 0.1).ratio;
  const double base_l2 = verify_logl2(f, 1.0, 0.5);
  for (double c : {1e-3, 1e3}) {
    EXPECT_NEAR(comest_trial(c * f, g, -0.5).ratio, base_est, 1e-12 * base_est);
    EXPECT_NEAR(comest_trial(f, c * g, -0.5).ratio, base_est, 1e-12 * base_est);
    EXPECT_NEAR(comlog_trial(c * f, g, 1.0, 0.5, 0.1).ratio, base_log, 1e-12 * base_log);
    EXPECT_NEAR(comlog_trial(f, c * g, 1.0, 0.5, 0.1).ratio, base_log, 1e-12 * base_log);
    EXPECT_NEAR(verify_logl2(c * f, 1.0, 0.5), base_l2, 1e-12 * base_l2);
  }
}

TEST(Comest, ZeroInputIsSkipped) {
  Gen gen(1);
  const SpectralField f = gen.field(32, 7);
  EXPECT_TRUE(comest_trial(SpectralField(32, 32), f, -0.5).skipped);
  EXPECT_TRUE(comest_trial(f, SpectralField(32, 32), -0.5).skipped);
  EXPECT_TRUE(comlog_trial(SpectralField(32, 32), f, 1.0, 0.5, 0.1).skipped);
}

TEST(Comest, LeibnizSweepIsBoundedByOne) {
  TrialSpec spec;
  spec.seed = 11;
  spec.n = 64;
  spec.exponent = 0.0;
  spec.trials = 100;
  const EstimateReport rep = verify_comest(spec);
  EXPECT_EQ(rep.skipped, 0);
  EXPECT_LE(rep.sup_ratio, 1.0 + 1e-9);
  EXPECT_GT(rep.sup_ratio, 0.0);
}

TEST(Comest, ResolutionStableAtNegativeOrder) {
  TrialSpec spec;
  spec.seed = 12;
  spec.n = 64;
  spec.exponent = -0.5;
  spec.trials = 100;
  EstimateReport fine;
  const EstimateReport rep = verify_with_stability(EstimateKind::comest, spec, &fine);
  EXPECT_TRUE(std::isfinite(rep.sup_ratio));
  EXPECT_EQ(fine.n, 128);
  EXPECT_GE(rep.stability_factor, 0.5);
  EXPECT_LE(rep.stability_factor, 2.0);
}

TEST(Comest, ReportAggregates) {
  TrialSpec spec;
  spec.seed = 3;
  spec.n = 32;
  spec.exponent = 0.5;
  spec.trials = 10;
  const EstimateReport rep = verify_comest(spec);
  ASSERT_EQ(rep.trials.size(), 10u);
  double sup = 0.0, sum = 0.0;
  std::uint64_t arg = 0;
  for (const auto& t : rep.trials) {
    EXPECT_GE(t.ratio, 0.0);
    sum += t.ratio;
    if (t.ratio > sup) sup = t.ratio, arg = t.seed;
  }
  EXPECT_EQ(rep.sup_ratio, sup);
  EXPECT_EQ(rep.argmax_seed, arg);
  EXPECT_NEAR(rep.mean_ratio, sum / 10, 1e-15);
}

TEST(Comest, TrialReplayBySeed) {
  TrialSpec spec;
  spec.seed = 99;
  spec.n = 32;
  spec.exponent = -0.3;
  spec.trials = 12;
  spec.adversarial_every = 4;
  const EstimateReport a = verify_comest(spec);
  const EstimateReport b = verify_comest(spec);
  for (int i : {0, 3, 7, 11}) {
    TrialSpec prefix = spec;
    prefix.trials = i + 1;
    const EstimateReport c = verify_comest(prefix);
    EXPECT_EQ(c.trials.back().ratio, a.trials[static_cast<std::size_t>(i)].ratio);
    EXPECT_EQ(c.trials.back().seed, a.trials[static_cast<std::size_t>(i)].seed);
    EXPECT_EQ(b.trials[static_cast<std::size_t>(i)].ratio, a.trials[static_cast<std::size_t>(i)].ratio);
  }
}

TEST(TrialSpec, Validation) {
  TrialSpec spec;
  spec.n = 64;
  spec.f_band = 22;
  EXPECT_THROW(spec.validate(), PreconditionError);
  spec.f_band = 0;
  spec.trials = 0;
  EXPECT_THROW(spec.validate(), PreconditionError);
  spec.trials = 1;
  spec.delta = 0;
  EXPECT_THROW(spec.validate(), PreconditionError);
}

TEST(Comlog, SingleModeClosedForm) {
  const SpectralField f = single(32, 1, 0);
  const double delta = 0.5, eps = 0.1;
  for (double mu : {0.0, 0.5, 1.0, 2.0}) {
    const auto L = [mu](double r) { return std::pow(std::log1p(r * r), mu); };
    const double kernel = 2.0 * L(2.0) - L(1.0);  // H(2,0) - H(1,0)
    const double num = kPi * kernel / std::sqrt(2.0);
    const double den = (1.0 + std::pow(std::log(2.0), mu)) * 2.0 * kPi * kPi * std::pow(2.0, 1.0 + 1.5 * eps);
    const TrialRecord r = comlog_trial(f, f, mu, delta, eps);
    EXPECT_NEAR(r.numerator, num, 1e-13 * num) << "mu=" << mu;
    EXPECT_NEAR(r.ratio, num / den, 1e-13 * num / den) << "mu=" << mu;
    const double via_oracle = testing::max_diff_on_grid(commutator_oracle_log(f, f, mu), commutator_log(f, f, mu));
    EXPECT_LE(via_oracle, 1e-14);
  }
}

TEST(Comlog, ConstantGAndMuZero) {
  Gen gen(2);
  const SpectralField f = gen.field(32, 7), g = gen.field(32, 7);
  EXPECT_LE(commutator_log(f, constant(32, -1.5), 1.0).max_abs_coeff(), 1e-13);
  EXPECT_LE((commutator_log(f, g, 0.0) - dealias_product(f, partial(g, 1))).max_abs_coeff(), 1e-12);
}

TEST(Comlog, MuZeroMatchesComestAtZero) {
  TrialSpec spec;
  spec.seed = 5;
  spec.n = 32;
  spec.exponent = 0.0;
  spec.trials = 30;
  const EstimateReport est = verify_comest(spec);
  const EstimateReport log = verify_comlog(spec);
  for (std::size_t i = 0; i < est.trials.size(); ++i) {
    EXPECT_EQ(est.trials[i].seed, log.trials[i].seed);
    EXPECT_NEAR(log.trials[i].numerator, est.trials[i].numerator, 1e-14 * est.trials[i].numerator);
  }
}

TEST(Comlog, ResolutionStable) {
  TrialSpec spec;
  spec.seed = 21;
  spec.n = 64;
  spec.exponent = 1.0;
  spec.trials = 50;
  spec.adversarial_every = 5;
  const EstimateReport rep = verify_with_stability(EstimateKind::comlog, spec);
  EXPECT_TRUE(std::isfinite(rep.sup_ratio));
  EXPECT_GE(rep.stability_factor, 0.5);
  EXPECT_LE(rep.stability_factor, 2.0);
}

TEST(SymbolBound, Examples) {
  EXPECT_LE(symbol_bound_check(0.0, 16).measured, 1.0);
  const auto s1 = symbol_bound_check(1.0, 16);
  EXPECT_LE(s1.measured, 2.0 + 1e-9);
  EXPECT_EQ(s1.bound, 2.0);
  EXPECT_LE(symbol_bound_check(-0.8, 16).measured, 1.8 + 1e-9);
  EXPECT_THROW((void)symbol_bound_check(0.5, 3), PreconditionError);
}

TEST(SymbolBound, ArgmaxReproducesMeasured) {
  const double s = 0.5;
  const auto rep = symbol_bound_check(s, 8);
  const double x = std::hypot(rep.xi1, rep.xi2);
  const double d = std::hypot(rep.xi1 - rep.eta1, rep.xi2 - rep.eta2);
  const int xj = rep.axis == 1 ? rep.xi1 : rep.xi2;
  const int dj = rep.axis == 1 ? rep.xi1 - rep.eta1 : rep.xi2 - rep.eta2;
  const double ratio = std::abs(std::pow(x, s) * xj - std::pow(d, s) * dj) /
                       (std::max(std::pow(x, s), std::pow(d, s)) * std::hypot(rep.eta1, rep.eta2));
  EXPECT_NEAR(ratio, rep.measured, 1e-14);
}

TEST(LogSymbolBound, Examples) {
  EXPECT_LE(log_symbol_bound_check(0.0, 16).measured, 1.0);
  const double a = log_symbol_bound_check(1.0, 16).measured;
  const double b = log_symbol_bound_check(1.0, 32).measured;
  EXPECT_TRUE(std::isfinite(a));
  EXPECT_GE(b / a, 0.5);
  EXPECT_LE(b / a, 2.0);
  EXPECT_THROW((void)log_symbol_bound_check(-1.0, 16), PreconditionError);
}

TEST(LogL2, SingleModeClosedForm) {
  EXPECT_NEAR(verify_logl2(single(32, 4, 0), 1.0, 1.0), 1.7603744277225879601, 1e-10);
  EXPECT_NEAR(verify_logl2(single(32, 0, 4), 1.0, 1.0), 1.7603744277225879601, 1e-10);
  for (int k : {2, 5, 9}) {
    const double expected = std::pow(std::log1p(k * k) / std::log1p(std::pow(k, 0.5)), 1.5);
    EXPECT_NEAR(verify_logl2(single(32, k, 0), 1.5, 0.5), expected, 1e-12 * expected);
  }
}

TEST(LogL2, MuZeroIsOne) {
  Gen gen(4);
  EXPECT_NEAR(verify_logl2(gen.field(32, 7), 0.0, 0.5), 1.0, 1e-15);
}

TEST(LogL2, Errors) {
  EXPECT_THROW((void)verify_logl2(SpectralField(16, 16), 1.0, 0.5), PreconditionError);
  EXPECT_THROW((void)verify_logl2(constant(16, 1.0) + single(16, 1, 0), 1.0, 0.5), PreconditionError);
}

TEST(LogL2, TrialsResolutionStable) {
  TrialSpec spec;
  spec.seed = 8;
  spec.n = 64;
  spec.exponent = 1.0;
  spec.trials = 100;
  const EstimateReport rep = verify_with_stability(EstimateKind::logl2, spec);
  EXPECT_TRUE(std::isfinite(rep.sup_ratio));
  EXPECT_GE(rep.stability_factor, 0.5);
  EXPECT_LE(rep.stability_factor, 2.0);
}

TEST(BesovSplit, Examples) {
  for (double delta : {0.1, 0.5, 1.0, 3.0}) EXPECT_EQ(besov_split_n(single(64, 1, 0), delta), 1);
  EXPECT_EQ(besov_split_n(single(64, 16, 0), 1.0), 4);
  EXPECT_THROW((void)besov_split_n(SpectralField(16, 16), 1.0), PreconditionError);
}

TEST(BesovSplit, PostconditionOnRandomFields) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    Gen gen(seed);
    const double delta = gen.uniform(0.1, 2.0);
    const SpectralField f = gen.field(64, gen.integer(1, 20), gen.uniform(0.0, 2.0));
    const int n = besov_split_n(f, delta);
    ASSERT_GE(n, 1);
    const double lhs = std::pow(2.0, -2.0 * delta * n) * std::pow(sobolev_norm(f, delta, Sobolev::inhomogeneous), 2);
    EXPECT_LE(lhs, std::pow(4.0, delta) * std::pow(l2_norm(f), 2) * (1 + 1e-12)) << "seed " << seed;
  }
}

}  // namespace
}  // namespace gsqg
