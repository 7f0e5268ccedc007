#include "gsqg/solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <tuple>

#include "gsqg/fft.hpp"
#include "gsqg/multiplier.hpp"
#include "gsqg/norms.hpp"
#include "gsqg/product.hpp"
#include "gsqg/projection.hpp"

namespace gsqg {

void ModelParams::validate() const {
  if (velocity_sign != 1 && velocity_sign != -1) throw PreconditionError("velocity_sign must be +1 or -1");
  if (family == Family::beta_family) {
    if (!(beta > 1.0 && beta <= 2.0)) throw PreconditionError("beta must lie in (1,2]");
    return;
  }
  if (!(mu > 0.0)) throw PreconditionError("mu must be > 0");
  if (!(kappa >= 0.0)) throw PreconditionError("kappa must be >= 0");
  if (!(alpha > 0.0)) throw PreconditionError("alpha must be > 0");
}

void SolverConfig::validate() const {
  if (n < 8 || n % 2 != 0) throw PreconditionError("n must be an even integer >= 8");
  if (!(dt > 0.0) || !std::isfinite(dt)) throw PreconditionError("dt must be > 0");
  if (!(t_end >= 0.0) || !std::isfinite(t_end)) throw PreconditionError("t_end must be >= 0");
  if (!(cfl_safety > 0.0 && cfl_safety <= 1.0)) throw PreconditionError("cfl_safety must lie in (0,1]");
  if (snapshot_stride < 0) throw PreconditionError("snapshot_stride must be >= 0");
  if (diagnostic_stride < 1) throw PreconditionError("diagnostic_stride must be >= 1");
  if (galerkin_radius) {
    if (*galerkin_radius < 1) throw PreconditionError("galerkin_radius must be >= 1");
    if (3 * *galerkin_radius >= n) throw PreconditionError("galerkin_radius must satisfy 3 n_g < n");
  }
}

long SolverConfig::step_count() const {
  const double steps = t_end / dt;
  const long whole = std::lround(steps);
  if (std::abs(steps - static_cast<double>(whole)) <= 1e-9 * std::max(1.0, steps)) return whole;
  return static_cast<long>(std::ceil(steps));
}

VectorField velocity_beta(const SpectralField& theta, double beta, int sign) {
  if (!theta.is_mean_zero()) throw PreconditionError("velocity_beta requires a mean-zero theta");
  SpectralField psi = apply_multiplier(theta, MultiplierSpec::lambda_power(beta - 2.0));
  psi *= sign;
  return perp_gradient(psi);
}

VectorField velocity_log(const SpectralField& theta, double mu, int sign) {
  SpectralField psi = apply_multiplier(theta, MultiplierSpec::log_power(mu));
  psi *= sign;
  return perp_gradient(psi);
}

VectorField velocity(const SpectralField& theta, const ModelParams& p) {
  return p.family == Family::beta_family ? velocity_beta(theta, p.beta, p.velocity_sign)
                                         : velocity_log(theta, p.mu, p.velocity_sign);
}

SpectralField rhs(const SpectralField& theta, const ModelParams& p) {
  const VectorField u = velocity(theta, p);
  SpectralField adv = dealias_product(u.c1, partial(theta, 1)) + dealias_product(u.c2, partial(theta, 2));
  adv *= -1.0;
  if (p.family == Family::log_family && p.kappa > 0.0) {
    SpectralField diss = apply_multiplier(theta, MultiplierSpec::frac_laplacian(p.alpha));
    diss *= p.kappa;
    adv -= diss;
  }
  adv.remove_mean();
  return adv;
}

namespace {

std::pair<double, double> grid_extrema(const std::vector<double>& v) {
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return {*lo, *hi};
}

}  // namespace

DiagnosticsRecord diagnose(double t, const SpectralField& theta, const ModelParams& p) {
  DiagnosticsRecord r;
  r.t = t;
  r.l2_norm = l2_norm(theta);
  r.h4_norm = sobolev_norm(theta, 4.0, Sobolev::inhomogeneous);
  if (p.family == Family::beta_family) r.hamiltonian = sobolev_norm(theta, 0.5 * p.beta - 1.0, Sobolev::homogeneous);
  std::tie(r.theta_min, r.theta_max) = grid_extrema(theta.to_grid());
  const VectorField u = velocity(theta, p);
  const auto u1 = u.c1.to_grid();
  const auto u2 = u.c2.to_grid();
  double vmax = 0.0;
  for (std::size_t i = 0; i < u1.size(); ++i) vmax = std::max(vmax, std::hypot(u1[i], u2[i]));
  r.max_velocity = vmax;
  return r;
}

Integrator::Integrator(const ModelParams& p, int n, std::optional<int> galerkin_radius, double dt)
    : p_(p), n_(n), galerkin_(galerkin_radius), dt_(dt) {
  p_.validate();
  SpectralField probe(n, n);
  keep_.assign(probe.size(), 0);
  vel1_.assign(probe.size(), cplx{});
  vel2_.assign(probe.size(), cplx{});
  const int band = dealias_cutoff(n);
  const MultiplierSpec sym = p.family == Family::beta_family ? MultiplierSpec::lambda_power(p.beta - 2.0)
                                                             : MultiplierSpec::log_power(p.mu);
  std::size_t idx = 0;
  probe.for_each_mode([&](int k1, int k2, const cplx&) {
    const int r2 = k1 * k1 + k2 * k2;
    const bool in_band = galerkin_ ? (r2 > 0 && r2 <= *galerkin_ * *galerkin_)
                                   : (r2 > 0 && std::abs(k1) <= band && std::abs(k2) <= band);
    keep_[idx] = in_band;
    if (in_band) {
      const double s = p.velocity_sign * sym.symbol_sq(r2);
      vel1_[idx] = cplx(0.0, -k2 * s);
      vel2_[idx] = cplx(0.0, k1 * s);
    }
    ++idx;
  });
  build_factors(dt_, e_, e2_);
}

void Integrator::build_factors(double dt, std::vector<double>& full, std::vector<double>& half) const {
  SpectralField probe(n_, n_);
  full.assign(probe.size(), 1.0);
  half.assign(probe.size(), 1.0);
  if (p_.family != Family::log_family || p_.kappa == 0.0) return;
  const MultiplierSpec lap = MultiplierSpec::frac_laplacian(p_.alpha);
  std::size_t idx = 0;
  probe.for_each_mode([&](int k1, int k2, const cplx&) {
    const double rate = p_.kappa * lap.symbol_sq(k1 * k1 + k2 * k2);
    full[idx] = std::exp(-rate * dt);
    half[idx] = std::exp(-0.5 * rate * dt);
    ++idx;
  });
}

SpectralField Integrator::project(const SpectralField& f) const {
  require_same_grid(f, SpectralField(n_, n_), "Integrator::project");
  SpectralField out = f;
  auto c = out.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!keep_[i]) c[i] = {};
  return out;
}

SpectralField Integrator::nonlinear(const SpectralField& theta) const {
  const std::size_t total = theta.size();
  const auto c = theta.coefficients();
  std::vector<cplx> spec(total);
  std::vector<double> u1(total), u2(total), d1(total), d2(total);
  // Grid offset -pi: phase (-1)^(k1+k2) applied before the inverse transform.
  std::vector<double> phase(total);
  std::size_t idx = 0;
  theta.for_each_mode([&](int k1, int k2, const cplx&) { phase[idx++] = ((k1 + k2) & 1) ? -1.0 : 1.0; });
  auto to_grid = [&](auto&& symbol, std::vector<double>& out) {
    idx = 0;
    theta.for_each_mode([&](int k1, int k2, const cplx&) {
      spec[idx] = keep_[idx] ? symbol(idx, k1, k2) * c[idx] * phase[idx] : cplx{};
      ++idx;
    });
    fft::inverse_real_2d(n_, n_, spec, out);
  };
  to_grid([&](std::size_t i, int, int) { return vel1_[i]; }, u1);
  to_grid([&](std::size_t i, int, int) { return vel2_[i]; }, u2);
  to_grid([](std::size_t, int k1, int) { return cplx(0.0, k1); }, d1);
  to_grid([](std::size_t, int, int k2) { return cplx(0.0, k2); }, d2);
  for (std::size_t i = 0; i < total; ++i) u1[i] = -(u1[i] * d1[i] + u2[i] * d2[i]);
  fft::forward_real_2d(n_, n_, u1, spec);
  SpectralField out(n_, n_);
  auto o = out.coefficients();
  const double scale = 1.0 / static_cast<double>(total);
  for (std::size_t i = 0; i < total; ++i) o[i] = keep_[i] ? spec[i] * (scale * phase[i]) : cplx{};
  return out;
}

SpectralField Integrator::step_with(const SpectralField& theta, double dt, const std::vector<double>& e,
                                    const std::vector<double>& e2) const {
  auto scaled = [](const SpectralField& f, const std::vector<double>& w) {
    SpectralField g = f;
    auto c = g.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) c[i] *= w[i];
    return g;
  };
  const SpectralField a = nonlinear(theta);
  const SpectralField th_half = scaled(theta, e2);
  const SpectralField a_half = scaled(a, e2);
  const SpectralField b = nonlinear(th_half + (0.5 * dt) * a_half);
  const SpectralField c = nonlinear(th_half + (0.5 * dt) * b);
  const SpectralField d = nonlinear(scaled(theta, e) + dt * scaled(c, e2));
  SpectralField out = scaled(theta, e);
  out += (dt / 6.0) * (scaled(a, e) + 2.0 * scaled(b + c, e2) + d);
  out.remove_mean();
  return out;
}

SpectralField Integrator::step(const SpectralField& theta) const { return step_with(theta, dt_, e_, e2_); }

SpectralField Integrator::step(const SpectralField& theta, double dt) const {
  if (dt == dt_) return step(theta);
  std::vector<double> e, e2;
  build_factors(dt, e, e2);
  return step_with(theta, dt, e, e2);
}

SpectralField step_rk4(const SpectralField& theta, const ModelParams& p, double dt) {
  if (theta.n1() != theta.n2()) throw PreconditionError("step_rk4 requires a square grid");
  const Integrator integ(p, theta.n1(), std::nullopt, dt);
  return integ.step(integ.project(theta));
}

namespace {

// Bound from dY/dt = C Y^(3/2): Y(t) = (Y0^(-1/2) - C t / 2)^(-2).
double h4_bound(double y0, double c, double t) {
  const double base = 1.0 / std::sqrt(y0) - 0.5 * c * t;
  return base > 0.0 ? 1.0 / (base * base) : INFINITY;
}

}  // namespace

RunResult run(const SpectralField& theta0, const ModelParams& p, const SolverConfig& cfg,
              const RunObserver& observer) {
  p.validate();
  cfg.validate();
  if (theta0.n1() != cfg.n || theta0.n2() != cfg.n) {
    throw PreconditionError("initial data grid does not match solver n = " + std::to_string(cfg.n));
  }
  if (std::abs(theta0.mean_coeff()) > 1e-12 * std::max(1.0, theta0.max_abs_coeff())) {
    throw PreconditionError("initial data must be mean-zero");
  }
  const Integrator integ(p, cfg.n, cfg.galerkin_radius, cfg.dt);
  RunResult result;
  result.trajectory.params = p;
  result.trajectory.galerkin_radius = cfg.galerkin_radius;
  result.trajectory.initial = theta0;

  const long steps = cfg.step_count();
  const long fit_until = std::max<long>(1, steps / 10);
  SpectralField theta = integ.project(theta0);
  double t = 0.0;
  bool cfl_warned = false;
  bool h4_warned = false;
  double y0 = 0.0;
  double c_fit = 0.0;

  auto emit_diag = [&](long step) {
    const DiagnosticsRecord rec = diagnose(t, theta, p);
    result.diagnostics.push_back(rec);
    if (observer.on_diagnostics) observer.on_diagnostics(rec);
    if (!cfl_warned && rec.max_velocity > 0.0 &&
        cfg.dt > cfg.cfl_safety * (2.0 * kPi / cfg.n) / rec.max_velocity) {
      std::ostringstream os;
      os << "t=" << t << ": dt=" << cfg.dt << " exceeds the CFL limit "
         << cfg.cfl_safety * (2.0 * kPi / cfg.n) / rec.max_velocity;
      result.warnings.push_back(os.str());
      cfl_warned = true;
    }
    const double y = rec.h4_norm * rec.h4_norm;
    if (step == 0) {
      y0 = y;
    } else if (step <= fit_until) {
      if (y > y0 && y0 > 0.0) c_fit = std::max(c_fit, 2.0 * (1.0 / std::sqrt(y0) - 1.0 / std::sqrt(y)) / t);
    } else if (!h4_warned && y0 > 0.0 && y > h4_bound(y0, c_fit, t) * (1.0 + 1e-12)) {
      std::ostringstream os;
      os << "t=" << t << ": H4 norm exceeds the fitted growth bound (C=" << c_fit << ")";
      result.warnings.push_back(os.str());
      h4_warned = true;
    }
  };
  auto emit_snapshot = [&] {
    if (observer.on_snapshot) observer.on_snapshot(t, theta);
    if (cfg.keep_trajectory) {
      result.trajectory.times.push_back(t);
      result.trajectory.states.push_back(theta);
    }
  };

  emit_diag(0);
  if (cfg.snapshot_stride > 0) emit_snapshot();
  for (long s = 1; s <= steps; ++s) {
    const double h = s < steps ? cfg.dt : cfg.t_end - (steps - 1) * cfg.dt;
    SpectralField next = integ.step(theta, h);
    if (!next.all_finite()) {
      std::ostringstream os;
      os << "non-finite state at step " << s << " (t=" << t + h << ")";
      throw BlowUpError(os.str(), diagnose(t, theta, p));
    }
    theta = std::move(next);
    t = s < steps ? s * cfg.dt : cfg.t_end;
    const bool final_step = s == steps;
    if (s % cfg.diagnostic_stride == 0 || final_step) emit_diag(s);
    if (cfg.snapshot_stride > 0 && (s % cfg.snapshot_stride == 0 || final_step)) emit_snapshot();
  }
  result.h4_growth_constant = c_fit;
  return result;
}

}  // namespace gsqg
