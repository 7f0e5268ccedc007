#pragma once

#include <functional>
#include <vector>

#include "gsqg/solver.hpp"

namespace gsqg {

/// Time factor rho(t) of a separable test function rho(t) phi(x).
struct TimeProfile {
  std::function<double(double)> value;
  std::function<double(double)> derivative;
};

/// C-infinity step: 1 on [0, t_flat], 0 on [t_zero, inf), built from exp(-1/s).
TimeProfile smooth_cutoff(double t_flat, double t_zero);

struct TestFunction {
  TimeProfile profile;
  SpectralField spatial;
};

/// |int_0^T int theta (phi_t + u.grad phi) dx dt + int theta0 phi(.,0) dx| with
/// composite trapezoid quadrature over the stored states. theta0 is the
/// trajectory's initial data as given to run(). Throws PreconditionError with
/// fewer than 8 samples or if rho(T) != 0.
double weak_residual(const Trajectory& traj, const TestFunction& phi);

struct CommutatorIdentity {
  double lhs = 0.0;          // sum_i int f A_i(f) G_i
  double commutator = 0.0;   // sum_i int f [A_i, G_i] f
  double violation = 0.0;    // |lhs + commutator / 2|
  double relative = 0.0;     // violation / (||f|| ||A f|| max|G|)
};

/// Skew-adjoint identity for A_i = Lambda^(beta-2) (grad_perp)_i against G = grad g.
CommutatorIdentity commutator_identity_check(const SpectralField& f, const SpectralField& g, double beta);

struct TwinRunResult {
  std::vector<double> times;
  std::vector<double> distance_h1;  // ||theta2 - theta1||_H1
  double sup_h4_sum = 0.0;          // sup_t (||theta1||_H4 + ||theta2||_H4)
  double fitted_c = 0.0;            // smallest C with d(t) <= d(0) exp(C t sup_h4_sum)
  bool bitwise_identical = false;
};

/// Runs theta0 and theta0 + epsilon * direction in lockstep and records the
/// H1 distance at every diagnostic step.
TwinRunResult twin_run_divergence(const SpectralField& theta0, const SpectralField& direction, double epsilon,
                                  const ModelParams& p, const SolverConfig& cfg);

}  // namespace gsqg
