#include "gsqg/io/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "gsqg/error.hpp"
#include "gsqg/io/csv.hpp"
#include "gsqg/projection.hpp"

namespace gsqg::io {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw ConfigError(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg);
}

double to_double(std::string_view v, const std::string& key) {
  double out = 0.0;
  const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || p != v.data() + v.size()) throw ConfigError(key + ": expected a number, got '" + std::string(v) + "'");
  return out;
}

template <class Int>
Int to_int(std::string_view v, const std::string& key) {
  Int out = 0;
  const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || p != v.data() + v.size()) throw ConfigError(key + ": expected an integer, got '" + std::string(v) + "'");
  return out;
}

bool to_bool(std::string_view v, const std::string& key) {
  if (v == "true") return true;
  if (v == "false") return false;
  throw ConfigError(key + ": expected true or false, got '" + std::string(v) + "'");
}

struct Key {
  std::function<void(RunConfig&, std::string_view)> set;
  std::function<std::string(const RunConfig&)> get;
};

using Section = std::vector<std::pair<std::string, Key>>;

template <class T>
Key number(T RunConfig::*group, double T::*field) {
  return {[=](RunConfig& c, std::string_view v) { c.*group.*field = to_double(v, "value"); },
          [=](const RunConfig& c) { return format_double(c.*group.*field); }};
}

template <class T, class Int>
Key integer(T RunConfig::*group, Int T::*field) {
  return {[=](RunConfig& c, std::string_view v) { c.*group.*field = to_int<Int>(v, "value"); },
          [=](const RunConfig& c) { return std::to_string(c.*group.*field); }};
}

template <class E>
Key enumeration(std::function<E&(RunConfig&)> ref, std::vector<std::pair<std::string, E>> names) {
  return {[=](RunConfig& c, std::string_view v) {
            for (const auto& [name, value] : names)
              if (v == name) {
                ref(c) = value;
                return;
              }
            std::string options;
            for (const auto& [name, value] : names) options += (options.empty() ? "" : "|") + name;
            throw ConfigError("expected one of " + options + ", got '" + std::string(v) + "'");
          },
          [=](const RunConfig& c) {
            const E value = ref(const_cast<RunConfig&>(c));
            for (const auto& [name, e] : names)
              if (e == value) return name;
            return std::string("?");
          }};
}

const std::map<std::string, Section>& schema() {
  static const std::map<std::string, Section> table = [] {
    std::map<std::string, Section> t;
    t["run"] = {
        {"mode", {[](RunConfig& c, std::string_view v) { c.mode = parse_mode(v); },
                  [](const RunConfig& c) { return to_string(c.mode); }}},
        {"seed", {[](RunConfig& c, std::string_view v) { c.seed = to_int<std::uint64_t>(v, "seed"); },
                  [](const RunConfig& c) { return std::to_string(c.seed); }}},
        {"out", {[](RunConfig& c, std::string_view v) { c.out = std::string(v); },
                 [](const RunConfig& c) { return c.out; }}},
    };
    t["model"] = {
        {"beta", number(&RunConfig::model, &ModelParams::beta)},
        {"mu", number(&RunConfig::model, &ModelParams::mu)},
        {"kappa", number(&RunConfig::model, &ModelParams::kappa)},
        {"alpha", number(&RunConfig::model, &ModelParams::alpha)},
        {"velocity_sign", integer(&RunConfig::model, &ModelParams::velocity_sign)},
    };
    t["solver"] = {
        {"n", integer(&RunConfig::solver, &SolverConfig::n)},
        {"galerkin_radius",
         {[](RunConfig& c, std::string_view v) { c.solver.galerkin_radius = to_int<int>(v, "galerkin_radius"); },
          [](const RunConfig& c) {
            return c.solver.galerkin_radius ? std::to_string(*c.solver.galerkin_radius) : std::string();
          }}},
        {"dt", number(&RunConfig::solver, &SolverConfig::dt)},
        {"t_end", number(&RunConfig::solver, &SolverConfig::t_end)},
        {"cfl_safety", number(&RunConfig::solver, &SolverConfig::cfl_safety)},
        {"snapshot_stride", integer(&RunConfig::solver, &SolverConfig::snapshot_stride)},
        {"diagnostic_stride", integer(&RunConfig::solver, &SolverConfig::diagnostic_stride)},
    };
    t["initial"] = {
        {"band", number(&RunConfig::initial, &InitialSpec::band)},
        {"slope", integer(&RunConfig::initial, &InitialSpec::slope)},
        {"amplitude", number(&RunConfig::initial, &InitialSpec::amplitude)},
    };
    auto trial_number = [](double TrialSpec::*field) -> Key {
      return {[=](RunConfig& c, std::string_view v) { c.estimates.trial.*field = to_double(v, "value"); },
              [=](const RunConfig& c) { return format_double(c.estimates.trial.*field); }};
    };
    auto trial_int = [](int TrialSpec::*field) -> Key {
      return {[=](RunConfig& c, std::string_view v) { c.estimates.trial.*field = to_int<int>(v, "value"); },
              [=](const RunConfig& c) { return std::to_string(c.estimates.trial.*field); }};
    };
    t["estimates"] = {
        {"kind", enumeration<EstimateCheck>([](RunConfig& c) -> EstimateCheck& { return c.estimates.check; },
                                            {{"comest", EstimateCheck::comest},
                                             {"comlog", EstimateCheck::comlog},
                                             {"logl2", EstimateCheck::logl2},
                                             {"symbol", EstimateCheck::symbol},
                                             {"log_symbol", EstimateCheck::log_symbol}})},
        {"n", trial_int(&TrialSpec::n)},
        {"trials", trial_int(&TrialSpec::trials)},
        {"exponent", trial_number(&TrialSpec::exponent)},
        {"delta", trial_number(&TrialSpec::delta)},
        {"epsilon", trial_number(&TrialSpec::epsilon)},
        {"f_band", trial_number(&TrialSpec::f_band)},
        {"g_band", trial_number(&TrialSpec::g_band)},
        {"f_slope", trial_int(&TrialSpec::f_slope)},
        {"g_slope", trial_int(&TrialSpec::g_slope)},
        {"axis", trial_int(&TrialSpec::axis)},
        {"adversarial_every", trial_int(&TrialSpec::adversarial_every)},
        {"stability", {[](RunConfig& c, std::string_view v) { c.estimates.stability = to_bool(v, "stability"); },
                       [](const RunConfig& c) { return std::string(c.estimates.stability ? "true" : "false"); }}},
        {"radius", integer(&RunConfig::estimates, &EstimatesSpec::radius)},
    };
    t["patch"] = {
        {"shape", enumeration<PatchShape>([](RunConfig& c) -> PatchShape& { return c.patch.shape; },
                                          {{"circle", PatchShape::circle},
                                           {"ellipse", PatchShape::ellipse},
                                           {"perturbed", PatchShape::perturbed}})},
        {"m", integer(&RunConfig::patch, &PatchSpec::m)},
        {"beta", number(&RunConfig::patch, &PatchSpec::beta)},
        {"strength", number(&RunConfig::patch, &PatchSpec::strength)},
        {"dt", number(&RunConfig::patch, &PatchSpec::dt)},
        {"t_end", number(&RunConfig::patch, &PatchSpec::t_end)},
        {"a", number(&RunConfig::patch, &PatchSpec::a)},
        {"b", number(&RunConfig::patch, &PatchSpec::b)},
        {"eps", number(&RunConfig::patch, &PatchSpec::eps)},
        {"mode", integer(&RunConfig::patch, &PatchSpec::mode)},
        {"diagnostic_stride", integer(&RunConfig::patch, &PatchSpec::diagnostic_stride)},
        {"snapshot_stride", integer(&RunConfig::patch, &PatchSpec::snapshot_stride)},
    };
    return t;
  }();
  return table;
}

std::vector<std::string> sections_for(Mode mode) {
  switch (mode) {
    case Mode::simulate_beta:
    case Mode::simulate_log: return {"run", "model", "solver", "initial"};
    case Mode::simulate_patch: return {"run", "patch"};
    case Mode::verify_estimates: return {"run", "estimates"};
  }
  return {};
}

std::vector<std::string> required_for(Mode mode) {
  switch (mode) {
    case Mode::simulate_beta: return {"model.beta", "solver.n", "solver.dt", "solver.t_end"};
    case Mode::simulate_log: return {"model.mu", "solver.n", "solver.dt", "solver.t_end"};
    case Mode::simulate_patch: return {};
    case Mode::verify_estimates: return {"estimates.kind"};
  }
  return {};
}

void rethrow_as_config(const std::function<void()>& check) {
  try {
    check();
  } catch (const PreconditionError& e) {
    throw ConfigError(e.what());
  }
}

}  // namespace

std::string to_string(Mode mode) {
  switch (mode) {
    case Mode::simulate_beta: return "simulate-beta";
    case Mode::simulate_log: return "simulate-log";
    case Mode::simulate_patch: return "simulate-patch";
    case Mode::verify_estimates: return "verify-estimates";
  }
  return "?";
}

Mode parse_mode(std::string_view text) {
  for (Mode m : {Mode::simulate_beta, Mode::simulate_log, Mode::simulate_patch, Mode::verify_estimates})
    if (text == to_string(m)) return m;
  throw ConfigError("unknown mode '" + std::string(text) + "'");
}

RunConfig parse_config(std::string_view text) {
  RunConfig cfg;
  std::set<std::string> seen;
  std::map<std::string, int> section_lines;
  std::string section;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    std::string_view line = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail(line_no, "malformed section header");
      section = std::string(trim(line.substr(1, line.size() - 2)));
      if (!schema().contains(section)) fail(line_no, "unknown section [" + section + "]");
      section_lines.emplace(section, line_no);
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) fail(line_no, "expected key = value");
    if (section.empty()) fail(line_no, "key outside of any section");
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    const auto& keys = schema().at(section);
    const auto it = std::find_if(keys.begin(), keys.end(), [&](const auto& k) { return k.first == key; });
    if (it == keys.end()) fail(line_no, "unknown key '" + key + "' in [" + section + "]");
    const std::string full = section + "." + key;
    if (!seen.insert(full).second) fail(line_no, "duplicate key '" + full + "'");
    if (value.empty()) fail(line_no, "empty value for '" + full + "'");
    try {
      it->second.set(cfg, value);
    } catch (const ConfigError& e) {
      fail(line_no, full + ": " + e.what());
    }
  }
  if (!seen.contains("run.mode")) fail(0, "missing required key 'run.mode'");
  const auto allowed = sections_for(cfg.mode);
  for (const auto& [name, line] : section_lines) {
    if (std::find(allowed.begin(), allowed.end(), name) == allowed.end()) {
      fail(line, "section [" + name + "] is not used by mode " + to_string(cfg.mode));
    }
  }
  for (const auto& key : required_for(cfg.mode))
    if (!seen.contains(key)) fail(0, "missing required key '" + key + "'");
  cfg.model.family = cfg.mode == Mode::simulate_log ? Family::log_family : Family::beta_family;
  validate(cfg);
  return cfg;
}

void validate(const RunConfig& cfg) {
  if (cfg.out.empty()) throw ConfigError("run.out must not be empty");
  switch (cfg.mode) {
    case Mode::simulate_beta:
    case Mode::simulate_log:
      rethrow_as_config([&] {
        cfg.model.validate();
        cfg.solver.validate();
      });
      if (!(cfg.initial.band >= 1.0) || cfg.initial.band > dealias_cutoff(cfg.solver.n)) {
        throw ConfigError("initial.band must lie in [1, (n-1)/3]");
      }
      if (cfg.initial.slope < 0 || cfg.initial.slope > 2) throw ConfigError("initial.slope must be 0, 1 or 2");
      if (!std::isfinite(cfg.initial.amplitude)) throw ConfigError("initial.amplitude must be finite");
      break;
    case Mode::simulate_patch: {
      const PatchSpec& p = cfg.patch;
      if (p.m < 64 || p.m % 2 != 0) throw ConfigError("patch.m must be an even integer >= 64");
      if (!(p.beta > 1.0 && p.beta < 2.0)) throw ConfigError("patch.beta must lie in (1,2)");
      if (!(p.dt > 0.0)) throw ConfigError("patch.dt must be > 0");
      if (!(p.t_end >= 0.0)) throw ConfigError("patch.t_end must be >= 0");
      if (!(p.a > 0.0 && p.b > 0.0)) throw ConfigError("patch.a and patch.b must be > 0");
      if (!(std::abs(p.eps) < 0.5)) throw ConfigError("patch.eps must satisfy |eps| < 0.5");
      if (p.mode < 1) throw ConfigError("patch.mode must be >= 1");
      if (p.diagnostic_stride < 1) throw ConfigError("patch.diagnostic_stride must be >= 1");
      if (p.snapshot_stride < 0) throw ConfigError("patch.snapshot_stride must be >= 0");
      break;
    }
    case Mode::verify_estimates:
      if (cfg.estimates.check == EstimateCheck::symbol || cfg.estimates.check == EstimateCheck::log_symbol) {
        if (cfg.estimates.radius < 4) throw ConfigError("estimates.radius must be >= 4");
        if (cfg.estimates.check == EstimateCheck::log_symbol && cfg.estimates.trial.exponent < 0.0) {
          throw ConfigError("estimates.exponent (mu) must be >= 0");
        }
      } else {
        rethrow_as_config([&] { cfg.estimates.trial.validate(); });
      }
      break;
  }
}

std::string serialize(const RunConfig& cfg) {
  std::ostringstream os;
  bool first = true;
  for (const auto& name : sections_for(cfg.mode)) {
    if (!first) os << '\n';
    first = false;
    os << '[' << name << "]\n";
    for (const auto& [key, binding] : schema().at(name)) {
      const std::string value = binding.get(cfg);
      if (value.empty()) continue;
      os << key << " = " << value << '\n';
    }
  }
  return os.str();
}

}  // namespace gsqg::io
