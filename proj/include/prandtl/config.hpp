#ifndef PRANDTL_CONFIG_HPP
#define PRANDTL_CONFIG_HPP

/// \file
///
/// Run configuration: an INI-style file with [params], [grid] and
/// [experiment] sections. Every key is optional and has a default; unknown
/// sections or keys are rejected, and all diagnostics carry a line number.

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "prandtl/errors.hpp"
#include "prandtl/params.hpp"
#include "prandtl/solver.hpp"
#include "prandtl/stability.hpp"

namespace prandtl {

struct RunConfig {
  ParamSet params;
  SolverConfig grid;
  ExperimentSpec experiment;
  /// Raw section.key -> value as read, for the manifest echo.
  std::map<std::string, std::string> raw;
};

namespace detail {

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

inline std::string at_line(std::size_t line, const std::string& msg) { return "line " + std::to_string(line) + ": " + msg; }

inline double parse_double(const std::string& v, std::size_t line, const std::string& key) {
  double out = 0.0;
  const auto* end = v.data() + v.size();
  const auto [p, ec] = std::from_chars(v.data(), end, out);
  if (ec != std::errc() || p != end) throw ConfigError(at_line(line, key + ": expected a number, got '" + v + "'"));
  return out;
}

inline std::size_t parse_count(const std::string& v, std::size_t line, const std::string& key) {
  unsigned long long out = 0;
  const auto* end = v.data() + v.size();
  const auto [p, ec] = std::from_chars(v.data(), end, out);
  if (ec != std::errc() || p != end) {
    throw ConfigError(at_line(line, key + ": expected a nonnegative integer, got '" + v + "'"));
  }
  return static_cast<std::size_t>(out);
}

inline std::vector<double> parse_list(const std::string& v, std::size_t line, const std::string& key) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_double(trim(item), line, key));
  if (out.empty()) throw ConfigError(at_line(line, key + ": empty list"));
  return out;
}

struct Entry {
  std::string value;
  std::size_t line = 0;
};

}  // namespace detail

/// Parses configuration text. `source` names the input in messages.
inline RunConfig parse_config_text(const std::string& text, const std::string& source = "<config>") {
  static const std::map<std::string, std::vector<std::string>> known{
      {"params", {"c0", "mu", "alpha0", "C1", "X", "T", "x0", "C2"}},
      {"grid", {"y_max", "nx", "ny", "dt", "t_end", "eta_points", "eta_cut", "snapshot_stride"}},
      {"experiment",
       {"shape", "amplitudes", "beta0", "inflow_rate", "y0", "t_end", "fit_window", "steady_tol", "steady_max_steps"}}};

  std::map<std::string, detail::Entry> entries;
  std::istringstream in(text);
  std::string raw_line, section;
  std::size_t line = 0;
  auto fail = [&](std::size_t l, const std::string& msg) { throw ConfigError(source + ": " + detail::at_line(l, msg)); };
  while (std::getline(in, raw_line)) {
    ++line;
    std::string s = raw_line;
    if (const auto c = s.find_first_of("#;"); c != std::string::npos) s.erase(c);
    s = detail::trim(s);
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']') fail(line, "malformed section header '" + s + "'");
      section = detail::trim(s.substr(1, s.size() - 2));
      if (!known.contains(section)) fail(line, "unknown section [" + section + "]");
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string::npos) fail(line, "expected key = value");
    if (section.empty()) fail(line, "key outside of a section");
    const std::string key = detail::trim(s.substr(0, eq)), value = detail::trim(s.substr(eq + 1));
    const auto& keys = known.at(section);
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) fail(line, "unknown key '" + key + "' in [" + section + "]");
    if (value.empty()) fail(line, "empty value for '" + key + "'");
    const std::string full = section + "." + key;
    if (entries.contains(full)) fail(line, "duplicate key '" + key + "' (first set on line " + std::to_string(entries[full].line) + ")");
    entries[full] = {value, line};
  }

  RunConfig cfg;
  for (const auto& [k, e] : entries) cfg.raw[k] = e.value;
  auto has = [&](const std::string& k) { return entries.contains(k); };
  auto num = [&](const std::string& k, double def) {
    try {
      return has(k) ? detail::parse_double(entries[k].value, entries[k].line, k) : def;
    } catch (const ConfigError& e) {
      throw ConfigError(source + ": " + e.what());
    }
  };
  auto count = [&](const std::string& k, std::size_t def) {
    try {
      return has(k) ? detail::parse_count(entries[k].value, entries[k].line, k) : def;
    } catch (const ConfigError& e) {
      throw ConfigError(source + ": " + e.what());
    }
  };
  auto line_of = [&](const std::string& k) { return has(k) ? entries[k].line : 0; };
  auto wrap = [&](const std::string& k, const std::exception& e) -> ConfigError {
    const std::size_t l = line_of(k);
    return ConfigError(source + ": " + (l ? detail::at_line(l, e.what()) : std::string(e.what())));
  };

  // [params]
  const ParamSet defaults;
  const double c0 = num("params.c0", defaults.c0()), mu = num("params.mu", defaults.mu());
  const double alpha0 = num("params.alpha0", defaults.alpha0()), C1 = num("params.C1", defaults.C1());
  const double X = num("params.X", defaults.X()), T = num("params.T", defaults.T());
  const double x0 = num("params.x0", defaults.x0()), C2 = num("params.C2", defaults.C2());
  try {
    cfg.params = ParamSet(c0, mu, alpha0, C1, X, T, x0, C2);
  } catch (const ConfigError& e) {
    // Messages start with the offending key.
    const std::string msg = e.what();
    throw wrap("params." + msg.substr(0, msg.find(' ')), e);
  }

  // [grid]
  SolverConfig& g = cfg.grid;
  g.X = X;
  g.y_max = num("grid.y_max", g.y_max);
  g.nx = count("grid.nx", g.nx);
  g.ny = count("grid.ny", g.ny);
  g.dt = num("grid.dt", g.dt);
  g.t_end = num("grid.t_end", g.t_end);
  g.eta_grid_size = count("grid.eta_points", g.eta_grid_size);
  g.eta_cut = num("grid.eta_cut", g.eta_cut);
  g.snapshot_stride = count("grid.snapshot_stride", g.snapshot_stride);
  g.workers = workers_from_env();
  try {
    g.validate();
  } catch (const ConfigError& e) {
    // First key named in the message that the file actually sets.
    static const std::vector<std::pair<const char*, const char*>> named{
        {"y_max", "grid.y_max"},     {"t_end", "grid.t_end"},         {"eta_grid_size", "grid.eta_points"},
        {"eta_cut", "grid.eta_cut"}, {"snapshot", "grid.snapshot_stride"}, {"nx", "grid.nx"},
        {"ny", "grid.ny"},           {"dt", "grid.dt"},               {"X", "params.X"}};
    std::string key = "grid";
    for (const auto& [word, k] : named) {
      if (std::string(e.what()).find(word) != std::string::npos && has(k)) {
        key = k;
        break;
      }
    }
    throw wrap(key, e);
  }

  // [experiment]
  ExperimentSpec& x = cfg.experiment;
  x.x0 = cfg.params.x0();
  try {
    if (has("experiment.shape")) x.shape = parse_shape(entries["experiment.shape"].value);
  } catch (const ConfigError& e) {
    throw wrap("experiment.shape", e);
  }
  if (has("experiment.amplitudes")) {
    try {
      x.amplitudes = detail::parse_list(entries["experiment.amplitudes"].value, line_of("experiment.amplitudes"), "amplitudes");
    } catch (const ConfigError& e) {
      throw ConfigError(source + ": " + e.what());
    }
  }
  if (has("experiment.beta0")) x.beta0 = num("experiment.beta0", 0.0);
  if (has("experiment.inflow_rate")) x.inflow_rate = num("experiment.inflow_rate", 0.0);
  x.y0 = num("experiment.y0", x.y0);
  x.t_end = num("experiment.t_end", x.t_end);
  if (has("experiment.fit_window")) {
    const auto w = detail::parse_list(entries["experiment.fit_window"].value, line_of("experiment.fit_window"), "fit_window");
    if (w.size() != 2) throw ConfigError(source + ": " + detail::at_line(line_of("experiment.fit_window"), "fit_window: expected two fractions"));
    x.fit_start = w[0];
    x.fit_end = w[1];
  }
  x.steady_tol = num("experiment.steady_tol", x.steady_tol);
  x.steady_max_steps = count("experiment.steady_max_steps", x.steady_max_steps);
  try {
    x.validate();
    if (x.beta0) {
      const DerivedConstants k = constants_for(cfg.params);
      if (!(*x.beta0 < k.beta0_max)) throw ConfigError("experiment: beta0 must be below b^2 alpha0 (1 - alpha0)");
    }
  } catch (const ConfigError& e) {
    std::string key = "experiment";
    for (const char* k : {"amplitudes", "beta0", "inflow_rate", "y0", "t_end", "fit_", "steady_tol"}) {
      if (std::string(e.what()).find(k) != std::string::npos) {
        for (const auto& [full, ent] : entries)
          if (full.rfind("experiment.", 0) == 0 && full.find(k) != std::string::npos) key = full;
        break;
      }
    }
    throw wrap(key, e);
  }
  return cfg;
}

inline RunConfig parse_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str(), path.string());
}

}  // namespace prandtl

#endif  // PRANDTL_CONFIG_HPP
