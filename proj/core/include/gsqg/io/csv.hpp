#pragma once

#include <ostream>
#include <span>
#include <string>

#include "gsqg/contour.hpp"
#include "gsqg/estimates.hpp"
#include "gsqg/solver.hpp"

namespace gsqg::io {

inline constexpr const char* kDiagnosticsHeader = "t,l2_norm,h4_norm,hamiltonian,theta_min,theta_max,max_velocity";
inline constexpr const char* kEstimatesHeader = "kind,trial,seed,numerator,denominator,ratio,skipped";
inline constexpr const char* kSymbolHeader = "kind,exponent,radius,measured,bound,xi1,xi2,eta1,eta2,axis";
inline constexpr const char* kContourHeader = "gamma,x1,x2";
inline constexpr const char* kPatchDiagnosticsHeader = "t,h4_norm,f_max,area,a_mean,spread";

/// Shortest decimal text that reads back to the same double.
std::string format_double(double v);

void write_diagnostics_header(std::ostream& os);
void write_diagnostics_row(std::ostream& os, const DiagnosticsRecord& r);
void write_diagnostics_csv(std::ostream& os, std::span<const DiagnosticsRecord> records);

/// One row per trial, then footer rows labelled sup, mean, skipped and
/// stability_factor in the trial column with the value in the ratio column.
void write_estimates_csv(std::ostream& os, const EstimateReport& report);

void write_symbol_csv(std::ostream& os, std::string_view kind, double exponent, int radius,
                      const SymbolBoundReport& r);

void write_contour_csv(std::ostream& os, const Contour& c);

void write_patch_diagnostics_header(std::ostream& os);
void write_patch_diagnostics_row(std::ostream& os, const ContourDiagnostics& d);

}  // namespace gsqg::io
