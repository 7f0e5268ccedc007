#include "gsqg/weak_form.hpp"

#include <algorithm>
#include <cmath>

#include "gsqg/multiplier.hpp"
#include "gsqg/norms.hpp"
#include "gsqg/product.hpp"

namespace gsqg {

namespace {

double bump(double s) { return s > 0.0 ? std::exp(-1.0 / s) : 0.0; }
double bump_prime(double s) { return s > 0.0 ? std::exp(-1.0 / s) / (s * s) : 0.0; }

}  // namespace

TimeProfile smooth_cutoff(double t_flat, double t_zero) {
  if (!(t_zero > t_flat) || t_flat < 0.0) throw PreconditionError("smooth_cutoff needs 0 <= t_flat < t_zero");
  const double width = t_zero - t_flat;
  TimeProfile p;
  p.value = [=](double t) {
    const double tau = (t - t_flat) / width;
    if (tau <= 0.0) return 1.0;
    if (tau >= 1.0) return 0.0;
    const double a = bump(1.0 - tau);
    return a / (a + bump(tau));
  };
  p.derivative = [=](double t) {
    const double tau = (t - t_flat) / width;
    if (tau <= 0.0 || tau >= 1.0) return 0.0;
    const double a = bump(1.0 - tau);
    const double b = bump(tau);
    const double sum = a + b;
    return (-bump_prime(1.0 - tau) * b - a * bump_prime(tau)) / (sum * sum) / width;
  };
  return p;
}

double weak_residual(const Trajectory& traj, const TestFunction& phi) {
  const std::size_t count = traj.states.size();
  if (count < 8 || traj.times.size() != count) {
    throw PreconditionError("weak_residual needs at least 8 stored samples, got " + std::to_string(count));
  }
  const double t_final = traj.times.back();
  if (std::abs(phi.profile.value(t_final)) > 1e-12) {
    throw PreconditionError("test function must vanish at the final time");
  }
  require_same_grid(traj.initial, phi.spatial, "weak_residual");
  const SpectralField grad1 = partial(phi.spatial, 1);
  const SpectralField grad2 = partial(phi.spatial, 2);

  std::vector<double> integrand(count);
  for (std::size_t i = 0; i < count; ++i) {
    const SpectralField& theta = traj.states[i];
    const double t = traj.times[i];
    double value = phi.profile.derivative(t) * inner(theta, phi.spatial);
    const double rho = phi.profile.value(t);
    if (rho != 0.0 && !theta.is_mean_zero()) {
      throw PreconditionError("weak_residual: stored state is not mean-zero");
    }
    if (rho != 0.0) {
      const VectorField u = velocity(theta, traj.params);
      const SpectralField transport = dealias_product(u.c1, grad1) + dealias_product(u.c2, grad2);
      value += rho * inner(theta, transport);
    }
    integrand[i] = value;
  }
  double total = 0.0;
  for (std::size_t i = 1; i < count; ++i) {
    total += 0.5 * (traj.times[i] - traj.times[i - 1]) * (integrand[i] + integrand[i - 1]);
  }
  total += phi.profile.value(traj.times.front()) * inner(traj.initial, phi.spatial);
  return std::abs(total);
}

CommutatorIdentity commutator_identity_check(const SpectralField& f, const SpectralField& g, double beta) {
  require_same_grid(f, g, "commutator_identity_check");
  const MultiplierSpec lam = MultiplierSpec::lambda_power(beta - 2.0);
  // (grad_perp)_1 = -d2, (grad_perp)_2 = d1.
  auto apply_a = [&](const SpectralField& h, int i) {
    if (i == 0) {
      SpectralField out = apply_derivative_multiplier(h, lam, 2);
      out *= -1.0;
      return out;
    }
    return apply_derivative_multiplier(h, lam, 1);
  };
  const SpectralField grad[2] = {partial(g, 1), partial(g, 2)};
  CommutatorIdentity r;
  double af_sq = 0.0;
  for (int i = 0; i < 2; ++i) {
    const SpectralField af = apply_a(f, i);
    af_sq += std::pow(l2_norm(af), 2);
    r.lhs += inner(f, dealias_product(af, grad[i]));
    const SpectralField comm = apply_a(dealias_product(grad[i], f), i) - dealias_product(grad[i], af);
    r.commutator += inner(f, comm);
  }
  r.violation = std::abs(r.lhs + 0.5 * r.commutator);
  const auto g1 = grad[0].to_grid();
  const auto g2 = grad[1].to_grid();
  double gmax = 0.0;
  for (std::size_t i = 0; i < g1.size(); ++i) gmax = std::max(gmax, std::hypot(g1[i], g2[i]));
  const double scale = l2_norm(f) * std::sqrt(af_sq) * gmax;
  r.relative = scale > 0.0 ? r.violation / scale : 0.0;
  return r;
}

TwinRunResult twin_run_divergence(const SpectralField& theta0, const SpectralField& direction, double epsilon,
                                  const ModelParams& p, const SolverConfig& cfg) {
  if (!(epsilon >= 0.0)) throw PreconditionError("twin_run_divergence: epsilon must be >= 0");
  p.validate();
  cfg.validate();
  const Integrator integ(p, cfg.n, cfg.galerkin_radius, cfg.dt);
  SpectralField a = integ.project(theta0);
  SpectralField b = integ.project(theta0 + epsilon * direction);
  TwinRunResult r;
  auto record = [&](double t) {
    r.times.push_back(t);
    r.distance_h1.push_back(sobolev_norm(b - a, 1.0, Sobolev::inhomogeneous));
    r.sup_h4_sum = std::max(r.sup_h4_sum, sobolev_norm(a, 4.0, Sobolev::inhomogeneous) +
                                              sobolev_norm(b, 4.0, Sobolev::inhomogeneous));
  };
  record(0.0);
  const long steps = cfg.step_count();
  for (long s = 1; s <= steps; ++s) {
    const double h = s < steps ? cfg.dt : cfg.t_end - (steps - 1) * cfg.dt;
    const double t = s < steps ? s * cfg.dt : cfg.t_end;
    a = integ.step(a, h);
    b = integ.step(b, h);
    if (!a.all_finite() || !b.all_finite()) {
      throw BlowUpError("twin run produced a non-finite state at t=" + std::to_string(t), diagnose(t, a, p));
    }
    if (s % cfg.diagnostic_stride == 0 || s == steps) record(t);
  }
  r.bitwise_identical = a == b;
  const double d0 = r.distance_h1.front();
  if (d0 > 0.0 && r.sup_h4_sum > 0.0) {
    for (std::size_t i = 1; i < r.times.size(); ++i) {
      if (r.times[i] <= 0.0 || r.distance_h1[i] <= d0) continue;
      r.fitted_c = std::max(r.fitted_c, std::log(r.distance_h1[i] / d0) / (r.times[i] * r.sup_h4_sum));
    }
  }
  return r;
}

}  // namespace gsqg
