#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "gsqg/estimates.hpp"
#include "gsqg/solver.hpp"

namespace gsqg::io {

enum class Mode { simulate_beta, simulate_log, simulate_patch, verify_estimates };

std::string to_string(Mode mode);
Mode parse_mode(std::string_view text);

/// Random mean-zero initial field for the field solvers.
struct InitialSpec {
  double band = 6.0;
  int slope = 2;
  double amplitude = 1.0;
  friend bool operator==(const InitialSpec&, const InitialSpec&) = default;
};

enum class EstimateCheck { comest, comlog, logl2, symbol, log_symbol };

struct EstimatesSpec {
  EstimateCheck check = EstimateCheck::comest;
  TrialSpec trial;
  bool stability = true;  // also run at 2n
  int radius = 16;        // lattice extent for symbol checks
  friend bool operator==(const EstimatesSpec&, const EstimatesSpec&) = default;
};

enum class PatchShape { circle, ellipse, perturbed };

struct PatchSpec {
  PatchShape shape = PatchShape::circle;
  int m = 256;
  double beta = 1.5;
  double strength = 1.0;
  double dt = 1e-3;
  double t_end = 0.5;
  double a = 1.0;  // ellipse semi-axes
  double b = 0.5;
  double eps = 0.05;  // perturbed circle amplitude
  int mode = 3;
  int diagnostic_stride = 10;
  int snapshot_stride = 0;
  friend bool operator==(const PatchSpec&, const PatchSpec&) = default;
};

struct RunConfig {
  Mode mode = Mode::simulate_beta;
  std::uint64_t seed = 1;
  std::string out = "out";
  ModelParams model;
  SolverConfig solver;
  InitialSpec initial;
  EstimatesSpec estimates;
  PatchSpec patch;
  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Parses the INI-style grammar:
///   [section]          one of run, model, solver, initial, estimates, patch
///   key = value        unknown keys and sections are errors
///   # comment          full-line or trailing
/// Throws ConfigError naming the line for syntax errors, missing required
/// keys and out-of-range values.
RunConfig parse_config(std::string_view text);

/// Checks every nested config used by the mode; throws ConfigError.
void validate(const RunConfig& cfg);

/// Canonical text for cfg; parse_config(serialize(cfg)) == cfg.
std::string serialize(const RunConfig& cfg);

}  // namespace gsqg::io
