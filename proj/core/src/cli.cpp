#include "gsqg/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "gsqg/contour.hpp"
#include "gsqg/io/config.hpp"
#include "gsqg/io/csv.hpp"
#include "gsqg/io/snapshot.hpp"
#include "gsqg/random_field.hpp"
#include "gsqg/solver.hpp"

namespace gsqg {

namespace fs = std::filesystem;

namespace {

struct Options {
  std::string config;
  std::optional<std::string> out;
  std::optional<std::uint64_t> seed;
  bool quiet = false;
};

std::string numbered(const char* stem, int index, const char* ext) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s_%06d%s", stem, index, ext);
  return buf;
}

std::ofstream open_out(const fs::path& path) {
  std::ofstream os(path);
  if (!os) throw Error("cannot open " + path.string() + " for writing");
  return os;
}

int simulate_field(const io::RunConfig& cfg, const fs::path& out, bool quiet) {
  std::mt19937_64 rng(cfg.seed);
  const RandomFieldSpec spec{cfg.solver.n, cfg.initial.band, 0.0, cfg.initial.slope, cfg.initial.amplitude, true};
  const SpectralField theta0 = random_field(spec, rng);

  auto diag = open_out(out / "diagnostics.csv");
  io::write_diagnostics_header(diag);
  int snapshot_index = 0;
  RunObserver obs;
  obs.on_diagnostics = [&](const DiagnosticsRecord& r) {
    io::write_diagnostics_row(diag, r);
    diag.flush();
  };
  obs.on_snapshot = [&](double t, const SpectralField& theta) {
    io::write_snapshot(out / numbered("snapshot", snapshot_index++, ".bin"), io::snapshot_of(t, theta));
  };
  try {
    const RunResult r = run(theta0, cfg.model, cfg.solver, obs);
    for (const auto& w : r.warnings)
      if (!quiet) std::cerr << "warning: " << w << '\n';
    if (!quiet) {
      const auto& first = r.diagnostics.front();
      const auto& last = r.diagnostics.back();
      std::cout << io::to_string(cfg.mode) << ": t=" << last.t << " l2 drift="
                << std::abs(last.l2_norm - first.l2_norm) / std::max(first.l2_norm, 1e-300)
                << " h4=" << last.h4_norm << '\n';
    }
  } catch (const BlowUpError& e) {
    diag.flush();
    std::cerr << "blow-up: " << e.what() << " (last good t=" << e.last_good().t << ")\n";
    return kExitBlowUp;
  }
  return kExitOk;
}

int simulate_patch(const io::RunConfig& cfg, const fs::path& out, bool quiet) {
  const io::PatchSpec& p = cfg.patch;
  Contour c = p.shape == io::PatchShape::circle    ? Contour::circle(p.m, 1.0, {}, p.beta, p.strength)
              : p.shape == io::PatchShape::ellipse ? Contour::ellipse(p.m, p.a, p.b, p.beta, p.strength)
                                                   : Contour::perturbed_circle(p.m, p.eps, p.mode, p.beta, p.strength);
  auto diag = open_out(out / "patch_diagnostics.csv");
  io::write_patch_diagnostics_header(diag);
  int snapshot_index = 0;
  auto snapshot = [&](const Contour& cur) {
    auto os = open_out(out / numbered("contour", snapshot_index++, ".csv"));
    io::write_contour_csv(os, cur);
  };
  const long steps = std::lround(p.t_end / p.dt);
  io::write_patch_diagnostics_row(diag, contour_diagnostics(c, 0.0));
  if (p.snapshot_stride > 0) snapshot(c);
  try {
    for (long s = 1; s <= steps; ++s) {
      c = step(c, p.dt);
      const double t = s * p.dt;
      if (s % p.diagnostic_stride == 0 || s == steps) {
        io::write_patch_diagnostics_row(diag, contour_diagnostics(c, t));
        diag.flush();
      }
      if (p.snapshot_stride > 0 && (s % p.snapshot_stride == 0 || s == steps)) snapshot(c);
    }
  } catch (const ContourBlowUp& e) {
    diag.flush();
    std::cerr << "blow-up: " << e.what() << " (last F_max=" << e.last_good().f_max << ")\n";
    return kExitBlowUp;
  }
  if (!quiet) {
    const auto d = contour_diagnostics(c, steps * p.dt);
    std::cout << "simulate-patch: t=" << d.t << " area=" << d.area << " spread=" << d.spread
              << " F_max=" << d.f_max << '\n';
  }
  return kExitOk;
}

int verify(const io::RunConfig& cfg, const fs::path& out, bool quiet) {
  const io::EstimatesSpec& e = cfg.estimates;
  if (e.check == io::EstimateCheck::symbol || e.check == io::EstimateCheck::log_symbol) {
    const bool power = e.check == io::EstimateCheck::symbol;
    const SymbolBoundReport r = power ? symbol_bound_check(e.trial.exponent, e.radius)
                                      : log_symbol_bound_check(e.trial.exponent, e.radius);
    auto os = open_out(out / "symbol_bound.csv");
    io::write_symbol_csv(os, power ? "symbol" : "log_symbol", e.trial.exponent, e.radius, r);
    if (!quiet) std::cout << "verify-estimates: measured constant " << r.measured << '\n';
    return kExitOk;
  }
  const EstimateKind kind = e.check == io::EstimateCheck::comest   ? EstimateKind::comest
                            : e.check == io::EstimateCheck::comlog ? EstimateKind::comlog
                                                                   : EstimateKind::logl2;
  TrialSpec spec = e.trial;
  spec.seed = cfg.seed;
  EstimateReport refined;
  const EstimateReport report =
      e.stability ? verify_with_stability(kind, spec, &refined) : verify_estimate(kind, spec);
  {
    auto os = open_out(out / "estimates.csv");
    io::write_estimates_csv(os, report);
  }
  if (e.stability) {
    auto os = open_out(out / "estimates_refined.csv");
    io::write_estimates_csv(os, refined);
  }
  if (!quiet) {
    std::cout << "verify-estimates: " << to_string(kind) << " sup=" << report.sup_ratio
              << " mean=" << report.mean_ratio << " skipped=" << report.skipped;
    if (e.stability) std::cout << " stability=" << report.stability_factor;
    std::cout << '\n';
  }
  return kExitOk;
}

int execute(io::Mode mode, const Options& opt) {
  io::RunConfig cfg;
  try {
    std::ifstream is(opt.config);
    if (!is) throw ConfigError("cannot read config file " + opt.config);
    std::ostringstream text;
    text << is.rdbuf();
    cfg = io::parse_config(text.str());
    if (cfg.mode != mode) {
      throw ConfigError("config mode " + io::to_string(cfg.mode) + " does not match subcommand " +
                        io::to_string(mode));
    }
    if (opt.out) cfg.out = *opt.out;
    if (opt.seed) cfg.seed = *opt.seed;
    io::validate(cfg);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  }
  const fs::path out(cfg.out);
  fs::create_directories(out);
  {
    auto os = open_out(out / "run.ini");
    os << io::serialize(cfg);
  }
  switch (mode) {
    case io::Mode::simulate_beta:
    case io::Mode::simulate_log: return simulate_field(cfg, out, opt.quiet);
    case io::Mode::simulate_patch: return simulate_patch(cfg, out, opt.quiet);
    case io::Mode::verify_estimates: return verify(cfg, out, opt.quiet);
  }
  return kExitFailure;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"gSQG pseudo-spectral simulation and verification toolkit", "gsqg"};
  app.require_subcommand(1);
  Options opt;
  std::optional<io::Mode> chosen;
  for (io::Mode mode : {io::Mode::simulate_beta, io::Mode::simulate_log, io::Mode::simulate_patch,
                        io::Mode::verify_estimates}) {
    CLI::App* sub = app.add_subcommand(io::to_string(mode));
    sub->add_option("--config", opt.config, "Run configuration file")->required();
    sub->add_option("--out", opt.out, "Output directory (overrides run.out)");
    sub->add_option("--seed", opt.seed, "Random seed (overrides run.seed)");
    sub->add_flag("--quiet", opt.quiet, "Suppress progress output");
    sub->callback([&chosen, mode] { chosen = mode; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }
  try {
    return execute(*chosen, opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace gsqg
