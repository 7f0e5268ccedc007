#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gsqg/error.hpp"
#include "gsqg/spectral_field.hpp"

namespace gsqg {

enum class Family { beta_family, log_family };

struct ModelParams {
  Family family = Family::beta_family;
  double beta = 1.5;
  double mu = 1.0;
  double kappa = 0.0;
  double alpha = 1.0;
  int velocity_sign = 1;

  /// Throws PreconditionError with a message such as "beta must lie in (1,2]".
  void validate() const;
  friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

struct SolverConfig {
  int n = 64;
  std::optional<int> galerkin_radius;
  double dt = 1e-3;
  double t_end = 1.0;
  double cfl_safety = 0.5;
  int snapshot_stride = 0;  // 0: no snapshots
  int diagnostic_stride = 1;
  bool keep_trajectory = false;  // store every snapshot in RunResult

  void validate() const;
  [[nodiscard]] long step_count() const;
  friend bool operator==(const SolverConfig&, const SolverConfig&) = default;
};

struct DiagnosticsRecord {
  double t = 0.0;
  double l2_norm = 0.0;
  double h4_norm = 0.0;
  double hamiltonian = 0.0;  // ||Lambda^(1-beta/2) psi||; 0 for the log family
  double theta_min = 0.0;
  double theta_max = 0.0;
  double max_velocity = 0.0;
};

class BlowUpError : public Error {
 public:
  BlowUpError(const std::string& what, DiagnosticsRecord last) : Error(what), last_(last) {}
  [[nodiscard]] const DiagnosticsRecord& last_good() const noexcept { return last_; }

 private:
  DiagnosticsRecord last_;
};

/// u = grad_perp(sign Lambda^(beta-2) theta). theta must be mean-zero.
VectorField velocity_beta(const SpectralField& theta, double beta, int sign);

/// u = grad_perp(sign (log(I-Laplacian))^mu theta).
VectorField velocity_log(const SpectralField& theta, double mu, int sign = 1);

VectorField velocity(const SpectralField& theta, const ModelParams& p);

/// Time derivative of theta on the full grid: -u.grad(theta) with an exact
/// dealiased product, minus kappa (-Laplacian)^alpha theta for the log family.
SpectralField rhs(const SpectralField& theta, const ModelParams& p);

DiagnosticsRecord diagnose(double t, const SpectralField& theta, const ModelParams& p);

/// Integrating-factor RK4 stepper for a fixed grid, band and step size.
/// The state lives in the 2/3 box band (or the Galerkin disc) of the grid.
class Integrator {
 public:
  Integrator(const ModelParams& p, int n, std::optional<int> galerkin_radius, double dt);

  /// Projection onto the retained band.
  [[nodiscard]] SpectralField project(const SpectralField& f) const;
  /// -P(u.grad theta), mean removed; no dissipation.
  [[nodiscard]] SpectralField nonlinear(const SpectralField& theta) const;
  [[nodiscard]] SpectralField step(const SpectralField& theta) const;
  [[nodiscard]] SpectralField step(const SpectralField& theta, double dt) const;
  [[nodiscard]] double dt() const noexcept { return dt_; }
  [[nodiscard]] const ModelParams& params() const noexcept { return p_; }

 private:
  void build_factors(double dt, std::vector<double>& full, std::vector<double>& half) const;
  [[nodiscard]] SpectralField step_with(const SpectralField& theta, double dt, const std::vector<double>& e,
                                        const std::vector<double>& e2) const;

  ModelParams p_;
  int n_;
  std::optional<int> galerkin_;
  double dt_;
  std::vector<char> keep_;
  std::vector<cplx> vel1_, vel2_;  // theta -> u symbols
  std::vector<double> e_, e2_;
};

/// One IF-RK4 step of size dt on the 2/3 band of theta's grid.
SpectralField step_rk4(const SpectralField& theta, const ModelParams& p, double dt);

struct Trajectory {
  ModelParams params;
  std::optional<int> galerkin_radius;
  SpectralField initial{2, 2};  // data as given, before projection
  std::vector<double> times;
  std::vector<SpectralField> states;
};

struct RunObserver {
  std::function<void(const DiagnosticsRecord&)> on_diagnostics;
  std::function<void(double, const SpectralField&)> on_snapshot;
};

struct RunResult {
  Trajectory trajectory;
  std::vector<DiagnosticsRecord> diagnostics;
  std::vector<std::string> warnings;
  double h4_growth_constant = 0.0;  // fitted on the first 10% of the run
};

/// Evolves theta0 to cfg.t_end. Diagnostics at step 0, every diagnostic_stride
/// steps and at the end; snapshots likewise with snapshot_stride. Throws
/// BlowUpError on a non-finite state.
RunResult run(const SpectralField& theta0, const ModelParams& p, const SolverConfig& cfg,
              const RunObserver& observer = {});

}  // namespace gsqg
