#ifndef PRANDTL_PIPELINE_HPP
#define PRANDTL_PIPELINE_HPP

/// \file
///
/// Subcommand orchestration behind the command-line tool: builds runs from a
/// RunConfig, writes CSVs and a manifest into a staged output directory, and
/// maps outcomes to exit codes.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "prandtl/barriers.hpp"
#include "prandtl/blasius.hpp"
#include "prandtl/config.hpp"
#include "prandtl/crocco.hpp"
#include "prandtl/invariants.hpp"
#include "prandtl/io.hpp"
#include "prandtl/params.hpp"
#include "prandtl/solver.hpp"
#include "prandtl/stability.hpp"

namespace prandtl {

enum ExitCode : int { kExitOk = 0, kExitFail = 1, kExitUsage = 2, kExitDivergence = 3 };

inline const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> s{"constants", "blasius", "solve", "check",
                                          "certify",   "orbital", "asymptotic", "serrin"};
  return s;
}

struct PipelineOptions {
  std::string subcommand;
  std::filesystem::path config;   // empty: built-in defaults
  std::filesystem::path out;      // output directory
  std::filesystem::path run_dir;  // check/certify: output of an earlier solve
  std::optional<std::string> inject;
  double zeta_max = 12.0;
  std::size_t blasius_steps = 100000;
  double blasius_tol = 1e-8;
};

// ---------------------------------------------------------------------------
// Trajectory persistence

inline void write_trajectory_csv(const std::filesystem::path& path, const VelocityTrajectory& tr) {
  CsvTable t{{"t", "x", "y", "u", "v"}, {}};
  t.rows.reserve(tr.snapshots.size() * tr.x.size() * tr.y.size());
  for (const auto& s : tr.snapshots)
    for (std::size_t k = 0; k < tr.x.size(); ++k)
      for (std::size_t j = 0; j < tr.y.size(); ++j) t.rows.push_back({s.t, tr.x[k], tr.y[j], s.u(k, j), s.v(k, j)});
  write_csv(path, t);
}

/// Inverse of write_trajectory_csv; rows must be in (t, x, y) order.
inline VelocityTrajectory read_trajectory_csv(const std::filesystem::path& path) {
  const CsvTable t = read_csv(path);
  const std::size_t ct = t.column("t"), cx = t.column("x"), cy = t.column("y"), cu = t.column("u"), cv = t.column("v");
  VelocityTrajectory tr;
  if (t.rows.empty()) throw ConfigError(path.string() + ": no rows");
  // Grids from the first snapshot.
  const double t0 = t.rows.front()[ct];
  for (const auto& r : t.rows) {
    if (r[ct] != t0) break;
    if (tr.x.empty() || r[cx] != tr.x.back()) tr.x.push_back(r[cx]);
    if (tr.x.size() == 1) tr.y.push_back(r[cy]);
  }
  const std::size_t nx = tr.x.size(), ny = tr.y.size(), per = nx * ny;
  if (per == 0 || t.rows.size() % per != 0) throw ConfigError(path.string() + ": rows do not form whole snapshots");
  tr.snapshots.clear();
  for (std::size_t base = 0; base < t.rows.size(); base += per) {
    Snapshot s{t.rows[base][ct], Grid2(nx, ny), Grid2(nx, ny), true};
    for (std::size_t k = 0; k < nx; ++k)
      for (std::size_t j = 0; j < ny; ++j) {
        const auto& r = t.rows[base + k * ny + j];
        if (r[ct] != s.t || r[cx] != tr.x[k] || r[cy] != tr.y[j]) {
          throw ConfigError(path.string() + ": row " + std::to_string(base + k * ny + j + 2) + " out of (t, x, y) order");
        }
        s.u(k, j) = r[cu];
        s.v(k, j) = r[cv];
      }
    s.monotone = columns_monotone(s.u);
    tr.snapshots.push_back(std::move(s));
  }
  return tr;
}

inline void write_grid_csv(const std::filesystem::path& path, const Grid2& u, std::span<const double> x,
                           std::span<const double> y) {
  CsvTable t{{"x", "y", "u"}, {}};
  for (std::size_t k = 0; k < x.size(); ++k)
    for (std::size_t j = 0; j < y.size(); ++j) t.rows.push_back({x[k], y[j], u(k, j)});
  write_csv(path, t);
}

inline Grid2 read_grid_csv(const std::filesystem::path& path, std::size_t nx, std::size_t ny) {
  const CsvTable t = read_csv(path);
  if (t.rows.size() != nx * ny) throw ConfigError(path.string() + ": grid size does not match the config");
  Grid2 u(nx, ny);
  const std::size_t cu = t.column("u");
  for (std::size_t i = 0; i < t.rows.size(); ++i) u(i / ny, i % ny) = t.rows[i][cu];
  return u;
}

// ---------------------------------------------------------------------------
// Runs

/// Steady base, the perturbed run and the base marched over the same times.
struct RunBundle {
  SteadyState base;
  VelocityTrajectory run;
  VelocityTrajectory reference;
};

/// Initial data and inflow from the experiment section: the first amplitude
/// of the configured shape around the converged steady Blasius state.
inline RunBundle build_run(const RunConfig& cfg, const BlasiusSolution& sol) {
  RunBundle b;
  b.base = blasius_base(cfg.grid, sol, cfg.params.x0(), cfg.experiment.steady_tol, cfg.experiment.steady_max_steps);
  if (!b.base.converged) {
    throw NumericalError("steady base did not converge within " + std::to_string(cfg.experiment.steady_max_steps) +
                         " steps (last rate " + fmt17(b.base.final_rate) + ")");
  }
  const PerturbedData d = perturbed_data(cfg.grid, b.base.u, cfg.experiment.amplitudes.front(), cfg.experiment.shape,
                                         cfg.params.x0(), cfg.experiment.inflow_rate.value_or(0.0));
  b.run = solve(cfg.grid, d.init, d.inflow);
  b.reference = solve(cfg.grid, b.base.u, fixed_inflow(cfg.grid, b.base.u));
  return b;
}

// ---------------------------------------------------------------------------
// Report tables

inline std::vector<std::string> report_header() {
  return {"id", "worst_margin", "tau_index", "xi_index", "eta_index", "tolerance", "pass"};
}

inline LabeledRow report_row(const InvariantReport& r) {
  return {r.condition_id,
          {r.worst_margin, static_cast<double>(r.worst_location[0]), static_cast<double>(r.worst_location[1]),
           static_cast<double>(r.worst_location[2]), r.tolerance, r.pass ? 1.0 : 0.0}};
}

inline void append_rows(std::vector<LabeledRow>& rows, const CertificateReport& r) {
  rows.push_back({r.lemma_id,
                  {r.worst_margin, static_cast<double>(r.worst_location[0]), static_cast<double>(r.worst_location[1]),
                   static_cast<double>(r.worst_location[2]), r.tolerance, r.pass ? 1.0 : 0.0}});
  for (const auto& p : r.parts) append_rows(rows, p);
}

inline void echo_config(Manifest& m, const RunConfig& cfg) {
  const ParamSet& p = cfg.params;
  m.set("params.c0", p.c0());
  m.set("params.mu", p.mu());
  m.set("params.alpha0", p.alpha0());
  m.set("params.C1", p.C1());
  m.set("params.X", p.X());
  m.set("params.T", p.T());
  m.set("params.x0", p.x0());
  m.set("params.C2", p.C2());
  const SolverConfig& g = cfg.grid;
  m.set("grid.y_max", g.y_max);
  m.set("grid.nx", std::to_string(g.nx));
  m.set("grid.ny", std::to_string(g.ny));
  m.set("grid.dt", g.dt);
  m.set("grid.t_end", g.t_end);
  m.set("grid.eta_points", std::to_string(g.eta_grid_size));
  m.set("grid.eta_cut", g.eta_cut);
  m.set("grid.snapshot_stride", std::to_string(g.snapshot_stride));
  const ExperimentSpec& x = cfg.experiment;
  m.set("experiment.shape", to_string(x.shape));
  std::string amps;
  for (double a : x.amplitudes) amps += (amps.empty() ? "" : ", ") + fmt17(a);
  m.set("experiment.amplitudes", amps);
  m.set("experiment.beta0", x.beta0 ? fmt17(*x.beta0) : std::string("derived"));
  m.set("experiment.inflow_rate", x.inflow_rate ? fmt17(*x.inflow_rate) : std::string("default"));
  m.set("experiment.y0", x.y0);
  m.set("experiment.t_end", x.t_end);
  m.set("experiment.fit_window", fmt17(x.fit_start) + ", " + fmt17(x.fit_end));
  m.set("experiment.steady_tol", x.steady_tol);
  m.set("experiment.steady_max_steps", std::to_string(x.steady_max_steps));
  m.set("scheme.advection", "explicit first-order upwind");
  m.set("scheme.diffusion", "backward Euler, Thomas solve per column");
  m.set("scheme.continuity", "trapezoid of upwind -u_x");
  m.set("scheme.crocco", "five-point derivatives, monotone cubic inverse, cubic Hermite w(y)");
}

inline void echo_constants(Manifest& m, const DerivedConstants& k) {
  m.set("constants.beta", k.beta);
  m.set("constants.b", k.b);
  m.set("constants.K", k.K);
  m.set("constants.delta", k.delta);
  m.set("constants.beta0_max", k.beta0_max);
  m.set("constants.beta0", k.beta0);
}

// ---------------------------------------------------------------------------
// Subcommands

namespace detail {

struct Context {
  const PipelineOptions& opts;
  RunConfig cfg;
  DerivedConstants k;
  StagedDirectory dir;
  Manifest manifest;
  std::vector<std::string> outputs;
  std::ostream& log;

  std::filesystem::path file(const std::string& name) {
    outputs.push_back(name);
    return dir / name;
  }
};

inline void write_rows(Context& c, const std::string& name, const std::vector<LabeledRow>& rows) {
  write_labeled_csv(c.file(name), report_header(), rows);
}

/// Stored run from --run, or a fresh one built from the config.
inline RunBundle obtain_run(Context& c, const BlasiusSolution& sol) {
  if (c.opts.run_dir.empty()) return build_run(c.cfg, sol);
  const auto stored = Manifest::read(c.opts.run_dir / "manifest.txt");
  const std::string digest = c.opts.config.empty() ? "defaults" : file_digest(c.opts.config);
  const std::string* was = stored.get("config.digest");
  if (!was || *was != digest) throw ConfigError("stored run " + c.opts.run_dir.string() + " was made with a different config");
  RunBundle b;
  b.run = read_trajectory_csv(c.opts.run_dir / "velocity.csv");
  b.base.u = read_grid_csv(c.opts.run_dir / "base.csv", c.cfg.grid.nx + 1, c.cfg.grid.ny + 1);
  b.base.converged = true;
  b.reference = solve(c.cfg.grid, b.base.u, fixed_inflow(c.cfg.grid, b.base.u));
  c.manifest.set("input.velocity.csv", file_digest(c.opts.run_dir / "velocity.csv"));
  c.manifest.set("input.base.csv", file_digest(c.opts.run_dir / "base.csv"));
  return b;
}

inline int cmd_constants(Context& c) {
  const DerivedConstants& k = c.k;
  c.log << "beta      = " << fmt17(k.beta) << "\nb         = " << fmt17(k.b) << "\nK         = " << fmt17(k.K)
        << "\ndelta     = " << fmt17(k.delta) << "\nbeta0_max = " << fmt17(k.beta0_max)
        << "\nbeta0     = " << fmt17(k.beta0) << '\n';
  write_csv(c.file("constants.csv"),
            CsvTable{{"beta", "b", "K", "delta", "beta0_max", "beta0", "C0"},
                     {{k.beta, k.b, k.K, k.delta, k.beta0_max, k.beta0, c.cfg.params.C0()}}});
  return kExitOk;
}

inline int cmd_blasius(Context& c) {
  const BlasiusSolution sol = shoot(c.opts.zeta_max, c.opts.blasius_steps, c.opts.blasius_tol);
  CsvTable t{{"zeta", "f", "fp", "fpp"}, {}};
  const std::size_t stride = std::max<std::size_t>(1, c.opts.blasius_steps / 1200);
  for (std::size_t i = 0; i < sol.zeta().size(); i += stride) t.rows.push_back({sol.zeta()[i], sol.f()[i], sol.fp()[i], sol.fpp()[i]});
  write_csv(c.file("blasius.csv"), t);
  c.manifest.set("blasius.fpp0", sol.fpp0());
  c.manifest.set("blasius.fp_at_1", sol.fp_at(1.0));
  c.log << "f''(0) = " << fmt17(sol.fpp0()) << '\n';
  return kExitOk;
}

inline int cmd_solve(Context& c) {
  const BlasiusSolution sol = shoot();
  const RunBundle b = build_run(c.cfg, sol);
  write_trajectory_csv(c.file("velocity.csv"), b.run);
  write_grid_csv(c.file("base.csv"), b.base.u, c.cfg.grid.x_grid(), c.cfg.grid.y_grid());
  const auto eta = uniform_eta_grid(c.cfg.grid.eta_grid_size, c.cfg.grid.eta_cut);
  const CroccoField f = to_crocco_field(b.run, eta, c.cfg.grid.workers);
  const double res = residual_crocco(f);
  write_csv(c.file("summary.csv"), CsvTable{{"snapshots", "base_steps", "residual_crocco"},
                                            {{static_cast<double>(b.run.snapshots.size()),
                                              static_cast<double>(b.base.steps), res}}});
  c.manifest.set("result.residual_crocco", res);
  c.log << "snapshots " << b.run.snapshots.size() << ", residual_crocco " << fmt17(res) << '\n';
  return kExitOk;
}

inline int cmd_check(Context& c) {
  const BlasiusSolution sol = shoot();
  const RunBundle b = obtain_run(c, sol);
  const auto eta = uniform_eta_grid(c.cfg.grid.eta_grid_size, c.cfg.grid.eta_cut);
  const CroccoField f = to_crocco_field(b.run, eta, c.cfg.grid.workers);
  const auto hyp = check_hypotheses(initial_slice(f), inflow_slice(f), c.cfg.params, c.k);
  const auto inv = check_invariant_set(f, c.cfg.params, c.k);
  std::vector<LabeledRow> hrows, irows;
  for (const auto& r : hyp) hrows.push_back(report_row(r));
  for (const auto& r : inv) irows.push_back(report_row(r));
  write_rows(c, "hypotheses.csv", hrows);
  write_rows(c, "invariants.csv", irows);
  const VelocityEnvelopeFit env = check_velocity_envelopes(b.run, c.k, c.cfg.grid.y_max - 2.0);
  std::vector<LabeledRow> erows;
  for (const auto& r : env.reports) erows.push_back(report_row(r));
  write_rows(c, "velocity_envelopes.csv", erows);
  c.manifest.set("result.envelope_c", env.c);
  c.manifest.set("result.envelope_C", env.C);
  const bool ok = all_pass(hyp) && all_pass(inv) && all_pass(env.reports);
  for (const auto* set : {&hyp, &inv, &env.reports})
    for (const auto& r : *set) c.log << (r.pass ? "pass " : "FAIL ") << r.condition_id << " " << fmt17(r.worst_margin) << '\n';
  return ok ? kExitOk : kExitFail;
}

inline int cmd_certify(Context& c) {
  const BlasiusSolution sol = shoot();
  const RunBundle b = obtain_run(c, sol);
  const auto eta = uniform_eta_grid(c.cfg.grid.eta_grid_size, c.cfg.grid.eta_cut);
  auto f = std::make_shared<const CroccoField>(to_crocco_field(b.run, eta, c.cfg.grid.workers));
  auto fbar = std::make_shared<const CroccoField>(to_crocco_field(b.reference, eta, c.cfg.grid.workers));
  Battery battery = make_battery(f, fbar, c.cfg.params, c.k);
  if (c.opts.inject) {
    const Certificate target = parse_certificate(*c.opts.inject);
    inject(battery, target);
    c.manifest.set("inject", *c.opts.inject);
  }
  const auto reports = run_battery(battery);
  std::vector<LabeledRow> rows;
  bool ok = true;
  for (const auto& r : reports) {
    append_rows(rows, r);
    ok = ok && r.pass;
    c.log << (r.pass ? "pass " : "FAIL ") << r.lemma_id << " " << fmt17(r.worst_margin) << '\n';
  }
  write_rows(c, "certificates.csv", rows);
  return ok ? kExitOk : kExitFail;
}

inline SteadyState converged_base(Context& c, const BlasiusSolution& sol) {
  SteadyState base = blasius_base(c.cfg.grid, sol, c.cfg.params.x0(), c.cfg.experiment.steady_tol,
                                  c.cfg.experiment.steady_max_steps);
  if (!base.converged) throw NumericalError("steady base did not converge");
  return base;
}

inline int cmd_orbital(Context& c) {
  const BlasiusSolution sol = shoot();
  const SteadyState base = converged_base(c, sol);
  const OrbitalReport rep = run_orbital(c.cfg.experiment, c.cfg.grid, base.u, c.cfg.params, c.k);
  CsvTable series{{"amplitude", "t", "sup_error"}, {}};
  CsvTable summary{{"amplitude", "max_error", "rate", "r2", "hypotheses_pass"}, {}};
  for (const auto& r : rep.runs) {
    for (std::size_t i = 0; i < r.times.size(); ++i) series.rows.push_back({r.amplitude, r.times[i], r.sup_error[i]});
    DecayFit fit;
    try {
      fit = fit_decay(r.times, r.sup_error, c.cfg.experiment.fit_start * c.cfg.experiment.t_end,
                      c.cfg.experiment.fit_end * c.cfg.experiment.t_end);
    } catch (const NumericalError&) {
      fit.rate = fit.r_squared = std::numeric_limits<double>::quiet_NaN();
    }
    if (fit.converged_to_floor) fit.rate = fit.r_squared = std::numeric_limits<double>::quiet_NaN();
    summary.rows.push_back({r.amplitude, r.max_error, fit.rate, fit.r_squared, r.hypotheses_pass ? 1.0 : 0.0});
    c.log << "amplitude " << fmt17(r.amplitude) << ": max error " << fmt17(r.max_error)
          << (r.hypotheses_pass ? "" : " (data fail the hypotheses)") << '\n';
  }
  write_csv(c.file("series.csv"), series);
  write_csv(c.file("summary.csv"), summary);
  std::string ratios;
  for (double q : rep.scaling_ratios()) ratios += (ratios.empty() ? "" : ", ") + fmt17(q);
  c.manifest.set("result.scaling_ratios", ratios);
  c.manifest.set("result.bounded", rep.bounded() ? "true" : "false");
  return rep.pass() ? kExitOk : kExitFail;
}

inline int cmd_asymptotic(Context& c) {
  const BlasiusSolution sol = shoot();
  const SteadyState base = converged_base(c, sol);
  const AsymptoticReport rep = run_asymptotic(c.cfg.experiment, c.cfg.grid, base.u, c.cfg.params, c.k);
  CsvTable series{{"t", "sup_error"}, {}};
  for (std::size_t i = 0; i < rep.times.size(); ++i) series.rows.push_back({rep.times[i], rep.sup_error[i]});
  write_csv(c.file("series.csv"), series);
  double max_err = 0.0;
  for (double s : rep.sup_error) max_err = std::max(max_err, s);
  write_csv(c.file("summary.csv"),
            CsvTable{{"amplitude", "max_error", "rate", "r2", "beta0", "inflow_rate", "M", "nonincreasing",
                      "inflow_bound", "converged_to_floor"},
                     {{rep.amplitude, max_err, rep.fit.rate, rep.fit.r_squared, rep.beta0, rep.inflow_rate, rep.M,
                       rep.nonincreasing_on_window ? 1.0 : 0.0, rep.inflow_bound_holds ? 1.0 : 0.0,
                       rep.fit.converged_to_floor ? 1.0 : 0.0}}});
  c.log << "rate " << fmt17(rep.fit.rate) << " vs beta0 " << fmt17(rep.beta0) << ", r2 " << fmt17(rep.fit.r_squared)
        << ", M " << fmt17(rep.M) << '\n';
  if (rep.fit_skipped) return kExitOk;
  return rep.pass() ? kExitOk : kExitFail;
}

inline int cmd_serrin(Context& c) {
  const BlasiusSolution sol = shoot();
  const SteadyState base = converged_base(c, sol);
  const double a = c.cfg.experiment.amplitudes.front();
  const SerrinReport rep = run_serrin(c.cfg.grid, base.u, a, c.cfg.experiment.steady_tol, c.cfg.experiment.steady_max_steps);
  CsvTable series{{"x", "error"}, {}};
  for (std::size_t i = 0; i < rep.x.size(); ++i) series.rows.push_back({rep.x[i], rep.error[i]});
  write_csv(c.file("series.csv"), series);
  c.manifest.set("result.converged", rep.converged ? "true" : "false");
  c.manifest.set("result.E_X", rep.at(c.cfg.grid.X));
  c.manifest.set("result.E_X_2", rep.at(c.cfg.grid.X / 2));
  c.manifest.set("result.E_X_4", rep.at(c.cfg.grid.X / 4));
  if (!rep.converged) {
    c.log << "quasi-steady state not reached; no assertion made\n";
    return kExitOk;
  }
  c.log << "E(X) " << fmt17(rep.at(c.cfg.grid.X)) << ", E(X/2) " << fmt17(rep.at(c.cfg.grid.X / 2)) << ", E(X/4) "
        << fmt17(rep.at(c.cfg.grid.X / 4)) << '\n';
  if (a == 0.0) return kExitOk;
  return rep.pass() ? kExitOk : kExitFail;
}

}  // namespace detail

/// Runs one subcommand and returns its exit code. Errors are reported on
/// `err`; a failed run leaves no output directory behind.
inline int run_pipeline(const PipelineOptions& opts, std::ostream& log = std::cout, std::ostream& err = std::cerr) {
  const auto started = std::chrono::steady_clock::now();
  try {
    if (std::find(subcommands().begin(), subcommands().end(), opts.subcommand) == subcommands().end()) {
      throw ConfigError("unknown subcommand '" + opts.subcommand + "'");
    }
    if (opts.inject && opts.subcommand != "certify") throw ConfigError("--inject only applies to certify");
    if (!opts.run_dir.empty() && opts.subcommand != "check" && opts.subcommand != "certify") {
      throw ConfigError("--run only applies to check and certify");
    }
    RunConfig cfg = opts.config.empty() ? parse_config_text("", "<defaults>") : parse_config(opts.config);
    const DerivedConstants k = constants_for(cfg.params, cfg.experiment.beta0);
    // solve and serrin never use the constants; X = 2 there underflows b.
    for (const char* needs : {"check", "certify", "orbital", "asymptotic"})
      if (opts.subcommand == needs) validate_constants(cfg.params, k);
    const std::filesystem::path out = opts.out.empty() ? std::filesystem::path("out") / opts.subcommand : opts.out;
    detail::Context c{opts, std::move(cfg), k, StagedDirectory(out), {}, {}, log};
    c.manifest.set("subcommand", opts.subcommand);
    c.manifest.set("config.path", opts.config.empty() ? std::string("defaults") : opts.config.string());
    c.manifest.set("config.digest", opts.config.empty() ? std::string("defaults") : file_digest(opts.config));
    echo_config(c.manifest, c.cfg);
    echo_constants(c.manifest, c.k);

    int code = kExitOk;
    const std::string& s = opts.subcommand;
    if (s == "constants") code = detail::cmd_constants(c);
    else if (s == "blasius") code = detail::cmd_blasius(c);
    else if (s == "solve") code = detail::cmd_solve(c);
    else if (s == "check") code = detail::cmd_check(c);
    else if (s == "certify") code = detail::cmd_certify(c);
    else if (s == "orbital") code = detail::cmd_orbital(c);
    else if (s == "asymptotic") code = detail::cmd_asymptotic(c);
    else code = detail::cmd_serrin(c);

    for (const auto& name : c.outputs) c.manifest.set("output." + name, file_digest(c.dir / name));
    c.manifest.set("result", code == kExitOk ? "pass" : "fail");
    c.manifest.write(c.dir / "manifest.txt");
    // Wall-clock lives outside the manifest so that reruns stay bitwise identical.
    {
      std::ofstream t(c.dir / "runtime.txt");
      t << "wall_clock_seconds = "
        << fmt17(std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count()) << '\n';
    }
    c.dir.commit();
    return code;
  } catch (const DivergenceError& e) {
    err << "divergence: " << e.what() << '\n';
    return kExitDivergence;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << '\n';
    return kExitDivergence;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace prandtl

#endif  // PRANDTL_PIPELINE_HPP
