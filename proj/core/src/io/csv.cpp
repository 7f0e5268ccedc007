#include "gsqg/io/csv.hpp"

#include <charconv>
#include <cmath>

namespace gsqg::io {

std::string format_double(double v) {
  char buf[64];
  const auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, p);
}

void write_diagnostics_header(std::ostream& os) { os << kDiagnosticsHeader << '\n'; }

void write_diagnostics_row(std::ostream& os, const DiagnosticsRecord& r) {
  os << format_double(r.t) << ',' << format_double(r.l2_norm) << ',' << format_double(r.h4_norm) << ','
     << format_double(r.hamiltonian) << ',' << format_double(r.theta_min) << ',' << format_double(r.theta_max) << ','
     << format_double(r.max_velocity) << '\n';
}

void write_diagnostics_csv(std::ostream& os, std::span<const DiagnosticsRecord> records) {
  write_diagnostics_header(os);
  for (const auto& r : records) write_diagnostics_row(os, r);
}

void write_estimates_csv(std::ostream& os, const EstimateReport& report) {
  const std::string kind = to_string(report.kind);
  os << kEstimatesHeader << '\n';
  for (const auto& t : report.trials) {
    os << kind << ',' << t.index << ',' << t.seed << ',' << format_double(t.numerator) << ','
       << format_double(t.denominator) << ',' << format_double(t.ratio) << ',' << (t.skipped ? 1 : 0) << '\n';
  }
  os << kind << ",sup," << report.argmax_seed << ",,," << format_double(report.sup_ratio) << ",\n";
  os << kind << ",mean,,,," << format_double(report.mean_ratio) << ",\n";
  os << kind << ",skipped,,,," << report.skipped << ",\n";
  os << kind << ",stability_factor,,,," << format_double(report.stability_factor) << ",\n";
}

void write_symbol_csv(std::ostream& os, std::string_view kind, double exponent, int radius,
                      const SymbolBoundReport& r) {
  os << kSymbolHeader << '\n'
     << kind << ',' << format_double(exponent) << ',' << radius << ',' << format_double(r.measured) << ','
     << format_double(r.bound) << ',' << r.xi1 << ',' << r.xi2 << ',' << r.eta1 << ',' << r.eta2 << ',' << r.axis
     << '\n';
}

void write_contour_csv(std::ostream& os, const Contour& c) {
  os << kContourHeader << '\n';
  for (int i = 0; i < c.size(); ++i) {
    os << format_double(c.gamma(i)) << ',' << format_double(c.points[i].x) << ',' << format_double(c.points[i].y)
       << '\n';
  }
}

void write_patch_diagnostics_header(std::ostream& os) { os << kPatchDiagnosticsHeader << '\n'; }

void write_patch_diagnostics_row(std::ostream& os, const ContourDiagnostics& d) {
  os << format_double(d.t) << ',' << format_double(d.h4_norm) << ',' << format_double(d.f_max) << ','
     << format_double(d.area) << ',' << format_double(d.a_mean) << ',' << format_double(d.spread) << '\n';
}

}  // namespace gsqg::io
