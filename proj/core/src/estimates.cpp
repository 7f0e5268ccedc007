#include "gsqg/estimates.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "gsqg/error.hpp"
#include "gsqg/multiplier.hpp"
#include "gsqg/norms.hpp"
#include "gsqg/product.hpp"
#include "gsqg/random_field.hpp"
#include "parallel.hpp"

namespace gsqg {

std::string to_string(EstimateKind kind) {
  switch (kind) {
    case EstimateKind::comest: return "comest";
    case EstimateKind::comlog: return "comlog";
    case EstimateKind::logl2: return "logl2";
  }
  return "unknown";
}

void TrialSpec::validate() const {
  if (n < 8 || n % 2 != 0) throw PreconditionError("trial grid n must be an even integer >= 8");
  if (resolved_f_band() < 1.0 || resolved_f_band() > n / 3.0) throw PreconditionError("f band must lie in [1, n/3]");
  if (resolved_g_band() < 1.0 || resolved_g_band() > n / 3.0) throw PreconditionError("g band must lie in [1, n/3]");
  if (!(delta > 0.0)) throw PreconditionError("delta must be > 0");
  if (!(epsilon > 0.0)) throw PreconditionError("epsilon must be > 0");
  if (trials < 1) throw PreconditionError("trials must be >= 1");
  if (axis != 1 && axis != 2) throw PreconditionError("axis must be 1 or 2");
  if (adversarial_every < 0) throw PreconditionError("adversarial_every must be >= 0");
  for (int slope : {f_slope, g_slope})
    if (slope < 0 || slope > 2) throw PreconditionError("spectral slope must be 0, 1 or 2");
}

TrialSpec TrialSpec::refined() const {
  TrialSpec r = *this;
  r.n = 2 * n;
  r.f_band = f_band > 0.0 ? 2.0 * f_band : 0.0;
  r.g_band = resolved_g_band();
  return r;
}

SpectralField commutator_lambda(const SpectralField& f, const SpectralField& g, double s, int axis) {
  const MultiplierSpec m = MultiplierSpec::lambda_power(s);
  SpectralField out = apply_derivative_multiplier(dealias_product(f, g), m, axis);
  out -= dealias_product(apply_derivative_multiplier(f, m, axis), g);
  return out;
}

SpectralField commutator_log(const SpectralField& f, const SpectralField& g, double mu, int axis) {
  const MultiplierSpec m = MultiplierSpec::log_power(mu);
  SpectralField out = apply_derivative_multiplier(dealias_product(f, g), m, axis);
  out -= dealias_product(apply_derivative_multiplier(f, m, axis), g);
  return out;
}

TrialFields trial_fields(const TrialSpec& spec, int index) {
  std::mt19937_64 rng(trial_seed(spec.seed, static_cast<std::uint64_t>(index)));
  RandomFieldSpec fs{spec.n, spec.resolved_f_band(), 0.0, spec.f_slope, 1.0, true};
  if (spec.adversarial_every > 0 && index % spec.adversarial_every == spec.adversarial_every - 1) {
    fs.shell_min = std::max(1.0, fs.band - 2.0);
    fs.slope = 0;
  }
  RandomFieldSpec gs{spec.n, spec.resolved_g_band(), 0.0, spec.g_slope, 1.0, true};
  SpectralField f = random_field(fs, rng);
  SpectralField g = random_field(gs, rng);
  return {std::move(f), std::move(g)};
}

namespace {

TrialRecord finish(double numerator, double denominator) {
  TrialRecord r;
  r.numerator = numerator;
  r.denominator = denominator;
  if (!(denominator > 0.0)) {
    r.skipped = true;
    return r;
  }
  r.ratio = numerator / denominator;
  return r;
}

double log_factor(const SpectralField& f, double mu, double delta) {
  const double ratio = sobolev_norm(f, delta, Sobolev::homogeneous) / l2_norm(f);
  return std::pow(std::log1p(ratio), mu);
}

template <class TrialFn>
EstimateReport sweep(EstimateKind kind, const TrialSpec& spec, TrialFn&& trial) {
  spec.validate();
  EstimateReport rep;
  rep.kind = kind;
  rep.n = spec.n;
  rep.trials.resize(static_cast<std::size_t>(spec.trials));
  detail::parallel_for(spec.trials, [&](int i) {
    TrialFields fields = trial_fields(spec, i);
    TrialRecord r = trial(fields);
    r.index = i;
    r.seed = trial_seed(spec.seed, static_cast<std::uint64_t>(i));
    rep.trials[static_cast<std::size_t>(i)] = r;
  });
  double sum = 0.0;
  int used = 0;
  for (const auto& r : rep.trials) {
    if (r.skipped) {
      ++rep.skipped;
      continue;
    }
    sum += r.ratio;
    ++used;
    if (r.ratio > rep.sup_ratio || used == 1) {
      rep.sup_ratio = r.ratio;
      rep.argmax_seed = r.seed;
    }
  }
  rep.mean_ratio = used > 0 ? sum / used : 0.0;
  return rep;
}

}  // namespace

TrialRecord comest_trial(const SpectralField& f, const SpectralField& g, double s, int axis) {
  const double num = l2_norm(commutator_lambda(f, g, s, axis));
  const double den = sobolev_norm(f, s, Sobolev::homogeneous) * fourier_l1(g, 1.0) +
                     l2_norm(f) * fourier_l1(g, 1.0 + s);
  return finish(num, den);
}

TrialRecord comlog_trial(const SpectralField& f, const SpectralField& g, double mu, double delta, double epsilon,
                         int axis) {
  const double num = l2_norm(commutator_log(f, g, mu, axis));
  const double f_l2 = l2_norm(f);
  if (f_l2 == 0.0) return finish(num, 0.0);
  const double den = (1.0 + log_factor(f, mu, delta)) * f_l2 *
                     sobolev_norm(g, 2.0 + 3.0 * epsilon, Sobolev::inhomogeneous);
  return finish(num, den);
}

EstimateReport verify_comest(const TrialSpec& spec) {
  return sweep(EstimateKind::comest, spec,
               [&](const TrialFields& t) { return comest_trial(t.f, t.g, spec.exponent, spec.axis); });
}

EstimateReport verify_comlog(const TrialSpec& spec) {
  return sweep(EstimateKind::comlog, spec, [&](const TrialFields& t) {
    return comlog_trial(t.f, t.g, spec.exponent, spec.delta, spec.epsilon, spec.axis);
  });
}

EstimateReport verify_logl2_trials(const TrialSpec& spec) {
  return sweep(EstimateKind::logl2, spec, [&](const TrialFields& t) {
    const double norm = l2_norm(t.f);
    if (norm == 0.0) return finish(0.0, 0.0);
    const double num = l2_norm(apply_multiplier(t.f, MultiplierSpec::log_power(spec.exponent)));
    return finish(num, norm * log_factor(t.f, spec.exponent, spec.delta));
  });
}

EstimateReport verify_estimate(EstimateKind kind, const TrialSpec& spec) {
  switch (kind) {
    case EstimateKind::comest: return verify_comest(spec);
    case EstimateKind::comlog: return verify_comlog(spec);
    case EstimateKind::logl2: return verify_logl2_trials(spec);
  }
  throw PreconditionError("unknown estimate kind");
}

EstimateReport verify_with_stability(EstimateKind kind, const TrialSpec& spec, EstimateReport* refined) {
  EstimateReport coarse = verify_estimate(kind, spec);
  EstimateReport fine = verify_estimate(kind, spec.refined());
  coarse.stability_factor = coarse.sup_ratio > 0.0 ? fine.sup_ratio / coarse.sup_ratio : 0.0;
  fine.stability_factor = coarse.stability_factor;
  if (refined) *refined = std::move(fine);
  return coarse;
}

double verify_logl2(const SpectralField& f, double mu, double delta) {
  if (!f.is_mean_zero()) throw PreconditionError("verify_logl2 requires a mean-zero field");
  const double norm = l2_norm(f);
  if (norm == 0.0) throw PreconditionError("verify_logl2 requires a nonzero field");
  const double num = l2_norm(apply_multiplier(f, MultiplierSpec::log_power(mu)));
  return num / (norm * log_factor(f, mu, delta));
}

int besov_split_n(const SpectralField& f, double delta) {
  if (!(delta > 0.0)) throw PreconditionError("besov_split_n requires delta > 0");
  const double norm = l2_norm(f);
  if (norm == 0.0) throw PreconditionError("besov_split_n requires a nonzero field");
  const double ratio = sobolev_norm(f, delta, Sobolev::inhomogeneous) / norm;
  const double n = std::floor(std::log2(ratio) / delta);
  return n < 1.0 ? 1 : static_cast<int>(n);
}

SymbolBoundReport symbol_bound_check(double s, int radius) {
  if (radius < 4) throw PreconditionError("symbol_bound_check requires R >= 4");
  SymbolBoundReport rep;
  rep.bound = 1.0 + std::abs(s);
  const int r2max = radius * radius;
  auto power = [s](double m2) { return s == 0.0 ? 1.0 : (m2 == 0.0 ? 0.0 : std::pow(m2, 0.5 * s)); };
  for (int x1 = -radius; x1 <= radius; ++x1)
    for (int x2 = -radius; x2 <= radius; ++x2) {
      const int xr2 = x1 * x1 + x2 * x2;
      if (xr2 == 0 || xr2 > r2max) continue;
      const double px = power(xr2);
      for (int e1 = -radius; e1 <= radius; ++e1)
        for (int e2 = -radius; e2 <= radius; ++e2) {
          const int er2 = e1 * e1 + e2 * e2;
          if (er2 == 0 || er2 > r2max) continue;
          const int d1 = x1 - e1, d2 = x2 - e2;
          const int dr2 = d1 * d1 + d2 * d2;
          if (dr2 == 0 && s < 0.0) continue;
          const double pd = power(dr2);
          const double den = std::max(px, pd) * std::sqrt(static_cast<double>(er2));
          for (int axis = 1; axis <= 2; ++axis) {
            const double num = std::abs(px * (axis == 1 ? x1 : x2) - pd * (axis == 1 ? d1 : d2));
            const double ratio = num / den;
            if (ratio > rep.measured) rep = {ratio, rep.bound, x1, x2, e1, e2, axis};
          }
        }
    }
  return rep;
}

SymbolBoundReport log_symbol_bound_check(double mu, int radius) {
  if (radius < 4) throw PreconditionError("log_symbol_bound_check requires R >= 4");
  if (!(mu >= 0.0)) throw PreconditionError("log_symbol_bound_check requires mu >= 0");
  SymbolBoundReport rep;
  const int r2max = radius * radius;
  auto weight = [mu](double m2) { return mu == 0.0 ? 1.0 : std::pow(std::log1p(m2), mu); };
  for (int x1 = -radius; x1 <= radius; ++x1)
    for (int x2 = -radius; x2 <= radius; ++x2) {
      const int xr2 = x1 * x1 + x2 * x2;
      if (xr2 > r2max) continue;
      const double hx = weight(xr2) * x1;
      for (int e1 = -radius; e1 <= radius; ++e1)
        for (int e2 = -radius; e2 <= radius; ++e2) {
          const int er2 = e1 * e1 + e2 * e2;
          if (er2 == 0 || er2 > r2max) continue;
          const int d1 = x1 - e1, d2 = x2 - e2;
          const int dr2 = d1 * d1 + d2 * d2;
          const int big = std::max(xr2, dr2);
          if (mu > 0.0 && big <= 1) continue;
          const double num = std::abs(hx - weight(dr2) * d1);
          const double ratio = num / (std::sqrt(static_cast<double>(er2)) * weight(big));
          if (ratio > rep.measured) rep = {ratio, 0.0, x1, x2, e1, e2, 1};
        }
    }
  return rep;
}

}  // namespace gsqg
