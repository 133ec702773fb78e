#ifndef PRANDTL_STABILITY_HPP
#define PRANDTL_STABILITY_HPP

/// \file
///
/// Stability experiments around the discrete steady Blasius state:
/// orbital (sup-norm distance over time for an amplitude ladder),
/// asymptotic (decay-rate fit with a decaying inflow perturbation),
/// downstream convergence, and the sup-norm versus Crocco-integral bound.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "prandtl/blasius.hpp"
#include "prandtl/invariants.hpp"
#include "prandtl/params.hpp"
#include "prandtl/solver.hpp"

namespace prandtl {

enum class PerturbationShape {
  Bump,        // y^2 e^{-y} (1 - u_base(y)) added to inflow and initial data
  OriginShift  // initial columns compressed as if x + x0 were x0 + (1 - a) x
};

inline PerturbationShape parse_shape(const std::string& s) {
  if (s == "bump") return PerturbationShape::Bump;
  if (s == "origin_shift") return PerturbationShape::OriginShift;
  throw ConfigError("unknown perturbation shape '" + s + "' (expected bump or origin_shift)");
}

inline std::string to_string(PerturbationShape s) { return s == PerturbationShape::Bump ? "bump" : "origin_shift"; }

struct ExperimentSpec {
  double x0 = 1.0;
  PerturbationShape shape = PerturbationShape::Bump;
  std::vector<double> amplitudes{1e-2, 5e-3, 2.5e-3};
  std::optional<double> beta0;        // defaults to the derived beta0
  std::optional<double> inflow_rate;  // decay rate of the inflow perturbation; defaults to beta0
  double y0 = 5.0;
  double t_end = 2.0;
  double fit_start = 0.5;  // fractions of t_end
  double fit_end = 1.0;
  double steady_tol = 1e-9;  // max |du/dt| at which the base run counts as steady
  std::size_t steady_max_steps = 400000;

  void validate(const DerivedConstants* k = nullptr) const {
    auto need = [](bool ok, const std::string& msg) {
      if (!ok) throw ConfigError(msg);
    };
    need(x0 > 0, "experiment: x0 must be positive");
    need(!amplitudes.empty(), "experiment: amplitudes must not be empty");
    for (std::size_t i = 0; i < amplitudes.size(); ++i) {
      need(amplitudes[i] >= 0, "experiment: amplitudes must be nonnegative");
      if (i > 0) need(amplitudes[i] < amplitudes[i - 1], "experiment: amplitudes must be sorted descending");
    }
    need(y0 > 0, "experiment: y0 must be positive");
    need(t_end > 0, "experiment: t_end must be positive");
    need(fit_start >= 0 && fit_start < fit_end && fit_end <= 1, "experiment: need 0 <= fit_start < fit_end <= 1");
    need(steady_tol > 0, "experiment: steady_tol must be positive");
    if (beta0) need(*beta0 > 0, "experiment: beta0 must be positive");
    if (beta0 && k) need(*beta0 < k->beta0_max, "experiment: beta0 must be below b^2 alpha0 (1 - alpha0)");
    if (inflow_rate) need(*inflow_rate >= 0, "experiment: inflow_rate must be nonnegative");
  }
};

// ---------------------------------------------------------------------------
// Steady states and perturbed data

struct SteadyState {
  Grid2 u;
  std::size_t steps = 0;
  double final_rate = 0.0;  // max |u^{n+1} - u^n| / dt at the last step
  bool converged = false;
};

/// Marches with a fixed inflow column until max |du/dt| < tol.
inline SteadyState converge_steady(const SolverConfig& cfg, Grid2 u, std::span<const double> inflow, double tol,
                                   std::size_t max_steps) {
  SteadyState st;
  for (std::size_t s = 1; s <= max_steps; ++s) {
    Grid2 next = step(u, inflow, cfg, cfg.dt, static_cast<long>(s));
    double d = 0.0;
    for (std::size_t i = 0; i < next.data().size(); ++i) d = std::max(d, std::abs(next.data()[i] - u.data()[i]));
    u = std::move(next);
    st.steps = s;
    st.final_rate = d / cfg.dt;
    if (st.final_rate < tol) {
      st.converged = true;
      break;
    }
  }
  st.u = std::move(u);
  return st;
}

inline std::vector<double> blasius_column(const BlasiusSolution& sol, std::span<const double> y, double x, double x0) {
  std::vector<double> col(y.size());
  for (std::size_t j = 0; j < y.size(); ++j) col[j] = eval_velocity(sol, x, y[j], x0).u;
  col.front() = 0.0;
  col.back() = 1.0;
  return col;
}

/// Discrete steady state for Blasius inflow, started from the sampled
/// similarity solution.
inline SteadyState blasius_base(const SolverConfig& cfg, const BlasiusSolution& sol, double x0, double tol,
                                std::size_t max_steps) {
  const Grid2 init = sample_grid(cfg, [&](double x, double y) { return eval_velocity(sol, x, y, x0).u; });
  const auto inflow = blasius_column(sol, cfg.y_grid(), 0.0, x0);
  return converge_steady(cfg, init, inflow, tol, max_steps);
}

/// Bump perturbation of a single column value: u + a y^2 e^{-y} (1 - u).
inline double bumped(double u, double y, double a) { return u + a * y * y * std::exp(-y) * (1.0 - u); }

/// Perturbed initial data and inflow around a steady base.
struct PerturbedData {
  Grid2 init;
  InflowFn inflow;
};

inline PerturbedData perturbed_data(const SolverConfig& cfg, const Grid2& base, double a, PerturbationShape shape,
                                    double x0, double inflow_rate) {
  const auto x = cfg.x_grid(), y = cfg.y_grid();
  PerturbedData d;
  d.init = base;
  std::vector<double> base_in(base.row(0).begin(), base.row(0).end());
  if (a == 0.0) {
    d.inflow = [base_in, dy = cfg.dy()](double, double yy) {
      return base_in[static_cast<std::size_t>(std::llround(yy / dy))];
    };
    return d;
  }
  if (shape == PerturbationShape::Bump) {
    for (std::size_t k = 0; k < x.size(); ++k)
      for (std::size_t j = 1; j + 1 < y.size(); ++j) d.init(k, j) = bumped(base(k, j), y[j], a);
    d.inflow = [base_in, a, inflow_rate, dy = cfg.dy()](double t, double yy) {
      const std::size_t j = static_cast<std::size_t>(std::llround(yy / dy));
      return bumped(base_in[j], yy, a * std::exp(-inflow_rate * t));
    };
  } else {
    // Column k of the base compressed in y by sqrt((x + x0) / (x0 + (1 - a) x)).
    for (std::size_t k = 1; k < x.size(); ++k) {
      const double lam = std::sqrt((x[k] + x0) / (x0 + (1.0 - a) * x[k]));
      const MonotoneCubic col(y, std::vector<double>(base.row(k).begin(), base.row(k).end()));
      for (std::size_t j = 1; j + 1 < y.size(); ++j) {
        const double yy = y[j] * lam;
        d.init(k, j) = yy >= y.back() ? 1.0 : col(yy);
      }
    }
    d.inflow = [base_in, dy = cfg.dy()](double, double yy) {
      return base_in[static_cast<std::size_t>(std::llround(yy / dy))];
    };
  }
  return d;
}

/// Inflow that holds the base column fixed.
inline InflowFn fixed_inflow(const SolverConfig& cfg, const Grid2& base) {
  std::vector<double> base_in(base.row(0).begin(), base.row(0).end());
  return [base_in, dy = cfg.dy()](double, double yy) { return base_in[static_cast<std::size_t>(std::llround(yy / dy))]; };
}

/// sup over x and y <= y_cap of |a - b|.
inline double sup_diff(const Grid2& a, const Grid2& b, std::span<const double> y, double y_cap) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.n0(); ++k)
    for (std::size_t j = 0; j < a.n1() && y[j] <= y_cap; ++j) s = std::max(s, std::abs(a(k, j) - b(k, j)));
  return s;
}

// ---------------------------------------------------------------------------
// Decay fit

struct DecayFit {
  double rate = 0.0;
  double amplitude = 0.0;
  double r_squared = 0.0;
  double t_begin = 0.0, t_end = 0.0;
  std::size_t points = 0;
  bool converged_to_floor = false;
};

/// Least-squares line through (t, ln s) on t in [t_begin, t_end]; rate is
/// minus the slope. A constant series gets r^2 = 0. A nonpositive value in
/// the window sets converged_to_floor and skips the fit.
inline DecayFit fit_decay(std::span<const double> t, std::span<const double> s, double t_begin, double t_end) {
  if (t.size() != s.size()) throw NumericalError("fit_decay: size mismatch");
  DecayFit fit;
  fit.t_begin = t_begin;
  fit.t_end = t_end;
  std::vector<double> tt, ls;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] < t_begin - 1e-12 || t[i] > t_end + 1e-12) continue;
    if (!(s[i] > 0.0)) {
      fit.converged_to_floor = true;
      return fit;
    }
    tt.push_back(t[i]);
    ls.push_back(std::log(s[i]));
  }
  fit.points = tt.size();
  if (tt.size() < 3) throw NumericalError("fit_decay: fewer than 3 points in the window");
  const double n = static_cast<double>(tt.size());
  double mt = 0, ml = 0;
  for (std::size_t i = 0; i < tt.size(); ++i) {
    mt += tt[i];
    ml += ls[i];
  }
  mt /= n;
  ml /= n;
  double stt = 0, stl = 0, sll = 0;
  for (std::size_t i = 0; i < tt.size(); ++i) {
    stt += (tt[i] - mt) * (tt[i] - mt);
    stl += (tt[i] - mt) * (ls[i] - ml);
    sll += (ls[i] - ml) * (ls[i] - ml);
  }
  const double slope = stt > 0 ? stl / stt : 0.0;
  fit.rate = -slope;
  fit.amplitude = std::exp(ml - slope * mt);
  if (sll > 0 && stt > 0) {
    double ssr = 0;
    for (std::size_t i = 0; i < tt.size(); ++i) {
      const double r = ls[i] - (ml + slope * (tt[i] - mt));
      ssr += r * r;
    }
    fit.r_squared = std::clamp(1.0 - ssr / sll, 0.0, 1.0);
  }
  return fit;
}

// ---------------------------------------------------------------------------
// Orbital stability

struct OrbitalRun {
  double amplitude = 0.0;
  std::vector<double> times;
  std::vector<double> sup_error;
  double max_error = 0.0;
  bool hypotheses_pass = false;
  std::vector<InvariantReport> hypotheses;
};

struct OrbitalReport {
  std::vector<OrbitalRun> runs;
  double bound_factor = 10.0;
  double ratio_lo = 0.3, ratio_hi = 3.0;

  /// max_t s <= bound_factor * a for every amplitude.
  bool bounded() const {
    for (const auto& r : runs)
      if (!(r.max_error <= bound_factor * r.amplitude)) return false;
    return true;
  }
  /// (max_i / max_{i+1}) / (a_i / a_{i+1}) for successive positive amplitudes.
  std::vector<double> scaling_ratios() const {
    std::vector<double> out;
    for (std::size_t i = 0; i + 1 < runs.size(); ++i) {
      if (runs[i + 1].amplitude <= 0 || runs[i + 1].max_error <= 0) continue;
      out.push_back((runs[i].max_error / runs[i + 1].max_error) / (runs[i].amplitude / runs[i + 1].amplitude));
    }
    return out;
  }
  bool scaling_ok() const {
    for (double q : scaling_ratios())
      if (!(q >= ratio_lo && q <= ratio_hi)) return false;
    return true;
  }
  bool pass() const { return bounded() && scaling_ok(); }
};

/// Runs base and perturbed solutions in lockstep from the same steady base;
/// s(t) = sup over x and y <= y_max - 2 of |u - u_base|.
inline OrbitalRun orbital_single(const SolverConfig& cfg, const Grid2& base, double a, const ExperimentSpec& spec,
                                 const ParamSet& p, const DerivedConstants& k) {
  SolverConfig c = cfg;
  c.t_end = spec.t_end;
  const double rate = spec.inflow_rate.value_or(0.0);
  const PerturbedData data = perturbed_data(c, base, a, spec.shape, spec.x0, rate);
  const VelocityTrajectory ref = solve(c, base, fixed_inflow(c, base));
  const VelocityTrajectory run = solve(c, data.init, data.inflow);
  OrbitalRun out;
  out.amplitude = a;
  const double y_cap = c.y_max - 2.0;
  for (std::size_t s = 0; s < run.snapshots.size(); ++s) {
    out.times.push_back(run.snapshots[s].t);
    out.sup_error.push_back(sup_diff(run.snapshots[s].u, ref.snapshots[s].u, run.y, y_cap));
    out.max_error = std::max(out.max_error, out.sup_error.back());
  }
  const auto eta = uniform_eta_grid(c.eta_grid_size, c.eta_cut);
  const CroccoField f = to_crocco_field(run, eta, c.workers);
  out.hypotheses = check_hypotheses(initial_slice(f), inflow_slice(f), p, k);
  out.hypotheses_pass = all_pass(out.hypotheses);
  return out;
}

/// Orbital experiment over the amplitude ladder. The inflow perturbation
/// is held constant in time unless spec.inflow_rate is set.
inline OrbitalReport run_orbital(const ExperimentSpec& spec, const SolverConfig& cfg, const Grid2& base,
                                 const ParamSet& p, const DerivedConstants& k) {
  spec.validate(&k);
  OrbitalReport rep;
  for (double a : spec.amplitudes) {
    try {
      rep.runs.push_back(orbital_single(cfg, base, a, spec, p, k));
    } catch (const DivergenceError& e) {
      throw DivergenceError("amplitude " + std::to_string(a) + ": " + e.what(), e.step());
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Asymptotic stability

struct AsymptoticReport {
  double amplitude = 0.0;
  double beta0 = 0.0;
  double inflow_rate = 0.0;
  std::vector<double> times;
  std::vector<double> sup_error;  // sup over x and y <= y0
  DecayFit fit;
  bool fit_skipped = false;
  bool nonincreasing_on_window = false;
  double M = 0.0;               // sup |w - w_bar| e^{beta0 tau} / (1 - eta)^alpha0
  double inflow_C2 = 0.0;       // the same ratio on the inflow slice at tau = 0
  bool inflow_bound_holds = false;  // inflow ratio never exceeds its tau = 0 value

  bool rate_ok() const { return !fit_skipped && !fit.converged_to_floor && fit.rate >= beta0; }
  bool r2_ok(double min_r2 = 0.9) const { return !fit_skipped && fit.r_squared >= min_r2; }
  bool pass() const { return rate_ok() && r2_ok() && nonincreasing_on_window; }
};

/// sup over the field of |w - w_bar| e^{beta0 tau} / (1 - eta)^alpha0, and
/// the same on the inflow slice per snapshot.
inline void weighted_distance(const CroccoField& f, const CroccoField& fbar, double beta0, double alpha0,
                              double& M, std::vector<double>& inflow_ratio) {
  M = 0.0;
  inflow_ratio.assign(f.tau.size(), 0.0);
  for (std::size_t s = 0; s < f.tau.size(); ++s) {
    const double g = std::exp(beta0 * f.tau[s]);
    for (std::size_t x = 0; x < f.xi.size(); ++x)
      for (std::size_t e = 0; e < f.eta.size(); ++e) {
        const double q = std::abs(f.w(s, x, e) - fbar.w(s, x, e)) * g / std::pow(1.0 - f.eta[e], alpha0);
        M = std::max(M, q);
        if (x == 0) inflow_ratio[s] = std::max(inflow_ratio[s], q);
      }
  }
}

inline AsymptoticReport run_asymptotic(const ExperimentSpec& spec, const SolverConfig& cfg, const Grid2& base,
                                       const ParamSet& p, const DerivedConstants& k) {
  spec.validate(&k);
  AsymptoticReport rep;
  rep.amplitude = spec.amplitudes.back();
  rep.beta0 = spec.beta0.value_or(k.beta0);
  rep.inflow_rate = spec.inflow_rate.value_or(rep.beta0);
  SolverConfig c = cfg;
  c.t_end = spec.t_end;
  const PerturbedData data = perturbed_data(c, base, rep.amplitude, spec.shape, spec.x0, rep.inflow_rate);
  const VelocityTrajectory ref = solve(c, base, fixed_inflow(c, base));
  const VelocityTrajectory run = solve(c, data.init, data.inflow);
  for (std::size_t s = 0; s < run.snapshots.size(); ++s) {
    rep.times.push_back(run.snapshots[s].t);
    rep.sup_error.push_back(sup_diff(run.snapshots[s].u, ref.snapshots[s].u, run.y, spec.y0));
  }
  const double t0 = spec.fit_start * spec.t_end, t1 = spec.fit_end * spec.t_end;
  if (rep.amplitude == 0.0) {
    rep.fit_skipped = true;
  } else {
    rep.fit = fit_decay(rep.times, rep.sup_error, t0, t1);
  }
  rep.nonincreasing_on_window = true;
  for (std::size_t i = 1; i < rep.times.size(); ++i) {
    if (rep.times[i - 1] >= t0 - 1e-12 && rep.times[i] <= t1 + 1e-12 && rep.sup_error[i] > rep.sup_error[i - 1]) {
      rep.nonincreasing_on_window = false;
    }
  }
  const auto eta = uniform_eta_grid(c.eta_grid_size, c.eta_cut);
  const CroccoField f = to_crocco_field(run, eta, c.workers);
  const CroccoField fbar = to_crocco_field(ref, eta, c.workers);
  std::vector<double> inflow_ratio;
  weighted_distance(f, fbar, rep.beta0, p.alpha0(), rep.M, inflow_ratio);
  rep.inflow_C2 = inflow_ratio.empty() ? 0.0 : inflow_ratio.front();
  rep.inflow_bound_holds = true;
  for (double r : inflow_ratio)
    if (r > rep.inflow_C2 * (1.0 + 1e-9)) rep.inflow_bound_holds = false;
  return rep;
}

// ---------------------------------------------------------------------------
// Downstream convergence

struct SerrinReport {
  std::vector<double> x;
  std::vector<double> error;  // E(x) = sup over y <= y_max - 2 of |u - u_base|
  double adjustment_x = 0.0;
  bool converged = false;
  bool nonincreasing_beyond_adjustment = false;
  bool ladder_ok = false;  // E(X) < E(X/2) < E(X/4)
  bool decays = false;     // E(X) < E at the first column

  double at(double xq) const {
    std::size_t best = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (std::abs(x[i] - xq) < std::abs(x[best] - xq)) best = i;
    return error[best];
  }
  bool pass() const { return converged && nonincreasing_beyond_adjustment && ladder_ok && decays; }
};

/// Steady state for a bumped inflow compared with the steady base, column
/// by column. The first `adjustment_fraction` of [0, X] is excluded from
/// the monotonicity claim.
inline SerrinReport run_serrin(const SolverConfig& cfg, const Grid2& base, double amplitude, double steady_tol,
                               std::size_t max_steps, double adjustment_fraction = 0.5) {
  const auto y = cfg.y_grid();
  std::vector<double> inflow(y.size());
  for (std::size_t j = 0; j < y.size(); ++j) inflow[j] = j + 1 < y.size() && j > 0 ? bumped(base(0, j), y[j], amplitude) : base(0, j);
  Grid2 init = base;
  for (std::size_t j = 0; j < y.size(); ++j) init(0, j) = inflow[j];
  const SteadyState st = converge_steady(cfg, init, inflow, steady_tol, max_steps);

  SerrinReport rep;
  rep.x = cfg.x_grid();
  rep.converged = st.converged;
  rep.adjustment_x = adjustment_fraction * cfg.X;
  const double y_cap = cfg.y_max - 2.0;
  for (std::size_t k = 0; k < rep.x.size(); ++k) {
    double e = 0.0;
    for (std::size_t j = 0; j < y.size() && y[j] <= y_cap; ++j) e = std::max(e, std::abs(st.u(k, j) - base(k, j)));
    rep.error.push_back(e);
  }
  rep.nonincreasing_beyond_adjustment = true;
  for (std::size_t k = 1; k < rep.x.size(); ++k) {
    if (rep.x[k - 1] >= rep.adjustment_x && rep.error[k] > rep.error[k - 1]) rep.nonincreasing_beyond_adjustment = false;
  }
  const double X = cfg.X;
  rep.ladder_ok = rep.at(X) < rep.at(X / 2) && rep.at(X / 2) < rep.at(X / 4);
  rep.decays = rep.error.size() > 1 && rep.error.back() < rep.error[1];
  return rep;
}

// ---------------------------------------------------------------------------
// Sup norm versus Crocco integral

struct UDiffBound {
  double C = 0.0;      // smallest inner constant
  double C_y0 = 0.0;   // C e^{C y0^2}
  double y0 = 0.0;
  std::size_t samples = 0;
  bool finite() const { return std::isfinite(C); }
};

/// Smallest C > 0 with C e^{C y^2} >= r (the left side is increasing in C).
inline double gaussian_constant_for(double r, double y) {
  if (!(r > 0)) return 0.0;
  if (y == 0.0) return r;
  double lo = 0.0, hi = std::max(1.0, r);
  while (hi * std::exp(hi * y * y) < r) hi *= 2.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid * std::exp(mid * y * y) >= r) hi = mid; else lo = mid;
  }
  return hi;
}

/// Fits C so that |u_bar(y) - u(y)| <= C e^{C y^2} * int |w_bar - w| d eta
/// for every snapshot, column and height y <= y0. The constraint is taken
/// pointwise in y, so the fitted C is insensitive to enlarging y0 once the
/// binding heights are included.
inline UDiffBound u_diff_bound_check(const CroccoField& f, const CroccoField& fbar, const VelocityTrajectory& run,
                                     const VelocityTrajectory& ref, double y0) {
  if (f.eta != fbar.eta || f.tau.size() != fbar.tau.size() || f.xi.size() != fbar.xi.size()) {
    throw NumericalError("u_diff_bound_check: fields do not share grids");
  }
  UDiffBound out;
  out.y0 = y0;
  std::vector<double> d(f.eta.size());
  for (std::size_t s = 0; s < f.tau.size(); ++s) {
    for (std::size_t x = 0; x < f.xi.size(); ++x) {
      for (std::size_t e = 0; e < f.eta.size(); ++e) d[e] = std::abs(f.w(s, x, e) - fbar.w(s, x, e));
      const double driver = trapezoid(f.eta, d);
      for (std::size_t j = 0; j < run.y.size() && run.y[j] <= y0; ++j) {
        const double lhs = std::abs(run.snapshots[s].u(x, j) - ref.snapshots[s].u(x, j));
        if (lhs == 0.0) continue;
        ++out.samples;
        if (driver == 0.0) {
          out.C = std::numeric_limits<double>::infinity();
          continue;
        }
        out.C = std::max(out.C, gaussian_constant_for(lhs / driver, run.y[j]));
      }
    }
  }
  out.C_y0 = out.C * std::exp(out.C * y0 * y0);
  return out;
}

/// Ratio max/min of two positive constants is within `factor`.
inline bool within_factor(double a, double b, double factor = 2.0) {
  if (!(a > 0 && b > 0 && std::isfinite(a) && std::isfinite(b))) return false;
  return std::max(a, b) / std::min(a, b) <= factor;
}

}  // namespace prandtl

#endif  // PRANDTL_STABILITY_HPP
