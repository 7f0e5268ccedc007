#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gsqg/spectral_field.hpp"

namespace gsqg {

enum class EstimateKind { comest, comlog, logl2 };

std::string to_string(EstimateKind kind);

struct TrialSpec {
  std::uint64_t seed = 1;
  int n = 64;
  double f_band = 0.0;  // 0 selects n/4 - 1
  double g_band = 0.0;  // 0 selects n/4 - 1
  double exponent = 0.0;  // s for comest, mu for comlog and logl2
  double delta = 0.5;
  double epsilon = 0.1;
  int trials = 100;
  int f_slope = 1;
  int g_slope = 2;
  int axis = 1;
  int adversarial_every = 0;  // every k-th f is drawn from the top shell of its band; 0 disables

  void validate() const;
  [[nodiscard]] double resolved_f_band() const noexcept { return f_band > 0.0 ? f_band : n / 4 - 1; }
  [[nodiscard]] double resolved_g_band() const noexcept { return g_band > 0.0 ? g_band : n / 4 - 1; }
  /// Same sweep at twice the resolution: the f band doubles, g keeps its band.
  [[nodiscard]] TrialSpec refined() const;
  friend bool operator==(const TrialSpec&, const TrialSpec&) = default;
};

struct TrialRecord {
  int index = 0;
  std::uint64_t seed = 0;
  double numerator = 0.0;
  double denominator = 0.0;
  double ratio = 0.0;
  bool skipped = false;
};

struct EstimateReport {
  EstimateKind kind = EstimateKind::comest;
  int n = 0;
  std::vector<TrialRecord> trials;
  double sup_ratio = 0.0;
  double mean_ratio = 0.0;
  std::uint64_t argmax_seed = 0;
  int skipped = 0;
  double stability_factor = 0.0;  // sup at 2n / sup at n; 0 when not measured
};

struct TrialFields {
  SpectralField f{2, 2};
  SpectralField g{2, 2};
};

/// The (f, g) pair drawn for trial `index`; depends only on the TrialSpec and index.
TrialFields trial_fields(const TrialSpec& spec, int index);

/// Lambda^s d_axis (f g) - (Lambda^s d_axis f) g with exact dealiased products.
SpectralField commutator_lambda(const SpectralField& f, const SpectralField& g, double s, int axis = 1);

/// (log(I-Laplacian))^mu d_axis (f g) - ((log(I-Laplacian))^mu d_axis f) g.
SpectralField commutator_log(const SpectralField& f, const SpectralField& g, double mu, int axis = 1);

/// One commutator-estimate trial; skipped when the denominator vanishes.
TrialRecord comest_trial(const SpectralField& f, const SpectralField& g, double s, int axis = 1);
TrialRecord comlog_trial(const SpectralField& f, const SpectralField& g, double mu, double delta, double epsilon,
                         int axis = 1);

EstimateReport verify_comest(const TrialSpec& spec);
EstimateReport verify_comlog(const TrialSpec& spec);
EstimateReport verify_logl2_trials(const TrialSpec& spec);
EstimateReport verify_estimate(EstimateKind kind, const TrialSpec& spec);

/// verify_estimate at spec.n and at 2 spec.n, with the stability factor filled in
/// on the first report. The refined report is returned through `refined` if given.
EstimateReport verify_with_stability(EstimateKind kind, const TrialSpec& spec, EstimateReport* refined = nullptr);

/// ||(log(I-Laplacian))^mu f|| / (||f|| (log(1 + ||f||_Hdot^delta / ||f||))^mu).
double verify_logl2(const SpectralField& f, double mu, double delta);

/// N = max(1, floor(log2(||f||_H^delta / ||f||) / delta)).
int besov_split_n(const SpectralField& f, double delta);

struct SymbolBoundReport {
  double measured = 0.0;
  double bound = 0.0;  // 1 + |s| for the power symbol; 0 when no bound is asserted
  int xi1 = 0, xi2 = 0, eta1 = 0, eta2 = 0, axis = 1;  // argmax
};

/// sup over lattice |xi|, |eta| <= R and axis j of
/// ||xi|^s xi_j - |xi-eta|^s (xi-eta)_j| / (max(|xi|^s, |xi-eta|^s) |eta|).
SymbolBoundReport symbol_bound_check(double s, int radius);

/// sup of |H(xi) - H(xi-eta)| / (|eta| (log(1 + max(|xi|^2, |xi-eta|^2)))^mu),
/// H(xi) = (log(1+|xi|^2))^mu xi_1, eta != 0; for mu > 0 pairs with
/// max(|xi|, |xi-eta|) <= 1 are excluded.
SymbolBoundReport log_symbol_bound_check(double mu, int radius);

}  // namespace gsqg
