#ifndef PRANDTL_SOLVER_HPP
#define PRANDTL_SOLVER_HPP

/// \file
///
/// Time marching of the unsteady Prandtl system on [0, X] x [0, y_max] with
/// zero pressure gradient. Advection is explicit first-order upwind,
/// diffusion in y is backward Euler (one tridiagonal solve per x column),
/// and v is recovered from continuity by trapezoid quadrature.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "prandtl/crocco.hpp"
#include "prandtl/errors.hpp"
#include "prandtl/grid.hpp"

namespace prandtl {

struct SolverConfig {
  double X = 1.0;
  double y_max = 15.0;
  std::size_t nx = 64;
  std::size_t ny = 128;
  double dt = 0.01;
  double t_end = 1.0;
  std::size_t eta_grid_size = 512;
  double eta_cut = 1e-3;
  std::size_t snapshot_stride = 10;
  std::size_t workers = 1;

  double dx() const { return X / static_cast<double>(nx); }
  double dy() const { return y_max / static_cast<double>(ny); }
  std::vector<double> x_grid() const { return linspace(0.0, X, nx); }
  std::vector<double> y_grid() const { return linspace(0.0, y_max, ny); }
  std::size_t n_steps() const { return static_cast<std::size_t>(std::llround(t_end / dt)); }

  void validate() const {
    auto need = [](bool ok, const std::string& msg) {
      if (!ok) throw ConfigError(msg);
    };
    need(X > 0, "grid: X must be positive");
    need(y_max >= 15.0, "grid: y_max must be >= 15");
    need(nx >= 16 && ny >= 16, "grid: nx and ny must be >= 16");
    need(dt > 0, "grid: dt must be positive");
    need(dt <= dx(), "grid: dt must not exceed dx (advection CFL with u <= 1)");
    need(t_end >= 0, "grid: t_end must be nonnegative");
    need(std::abs(t_end / dt - std::round(t_end / dt)) < 1e-9, "grid: t_end must be a multiple of dt");
    need(eta_grid_size >= 1, "grid: eta_grid_size must be positive");
    need(eta_cut > 0 && eta_cut < 0.1, "grid: eta_cut must lie in (0, 0.1)");
    need(snapshot_stride >= 1, "grid: snapshot_stride must be positive");
    need(workers >= 1, "grid: workers must be positive");
  }
};

/// Worker count from PRANDTL_WORKERS, defaulting to 1.
inline std::size_t workers_from_env() {
  const char* s = std::getenv("PRANDTL_WORKERS");
  if (!s || !*s) return 1;
  const long n = std::strtol(s, nullptr, 10);
  return n >= 1 ? static_cast<std::size_t>(n) : 1;
}

/// u(t, y) on the inflow boundary x = 0.
using InflowFn = std::function<double(double t, double y)>;

struct Snapshot {
  double t = 0.0;
  Grid2 u;  // (x index, y index)
  Grid2 v;
  bool monotone = true;
};

struct VelocityTrajectory {
  std::vector<double> x;
  std::vector<double> y;
  std::vector<Snapshot> snapshots;

  std::vector<double> times() const {
    std::vector<double> t;
    for (const auto& s : snapshots) t.push_back(s.t);
    return t;
  }
};

namespace detail {

/// In-place Thomas solve of a tridiagonal system with constant off-diagonals.
inline void thomas_constant(double lower, double diag, double upper, std::span<double> rhs,
                            std::vector<double>& scratch) {
  const std::size_t n = rhs.size();
  scratch.resize(n);
  scratch[0] = upper / diag;
  rhs[0] /= diag;
  for (std::size_t i = 1; i < n; ++i) {
    const double m = diag - lower * scratch[i - 1];
    scratch[i] = upper / m;
    rhs[i] = (rhs[i] - lower * rhs[i - 1]) / m;
  }
  for (std::size_t i = n - 1; i-- > 0;) rhs[i] -= scratch[i] * rhs[i + 1];
}

/// Runs body(k) for k in [begin, end) split into contiguous chunks.
template <class F>
void parallel_for(std::size_t begin, std::size_t end, std::size_t workers, F&& body) {
  const std::size_t n = end - begin;
  if (workers <= 1 || n < 2 * workers) {
    for (std::size_t k = begin; k < end; ++k) body(k);
    return;
  }
  std::vector<std::jthread> pool;
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t a = begin + w * chunk, b = std::min(end, a + chunk);
    if (a >= b) break;
    pool.emplace_back([a, b, &body] {
      for (std::size_t k = a; k < b; ++k) body(k);
    });
  }
}

}  // namespace detail

/// v = -int_0^y du/dx dy' with backward (upwind) du/dx; column 0 copies
/// column 1.
inline Grid2 normal_velocity(const Grid2& u, const SolverConfig& cfg) {
  const std::size_t nxp = u.n0(), nyp = u.n1();
  const double dx = cfg.dx(), dy = cfg.dy();
  Grid2 v(nxp, nyp, 0.0);
  for (std::size_t k = 1; k < nxp; ++k) {
    double prev = (u(k, 0) - u(k - 1, 0)) / dx;
    for (std::size_t j = 1; j < nyp; ++j) {
      const double cur = (u(k, j) - u(k - 1, j)) / dx;
      v(k, j) = v(k, j - 1) - 0.5 * dy * (prev + cur);
      prev = cur;
    }
  }
  for (std::size_t j = 0; j < nyp; ++j) v(0, j) = v(std::min<std::size_t>(1, nxp - 1), j);
  return v;
}

inline void check_boundary_rows(const Grid2& u, const char* what) {
  for (std::size_t k = 0; k < u.n0(); ++k) {
    if (u(k, 0) != 0.0) throw ConfigError(std::string(what) + ": u must vanish at the wall (column " + std::to_string(k) + ")");
    if (u(k, u.n1() - 1) != 1.0) throw ConfigError(std::string(what) + ": u must equal 1 at y_max (column " + std::to_string(k) + ")");
  }
}

/// One time step from u at time t to t + dt. `inflow_next` is the x = 0
/// column at t + dt.
inline Grid2 step(const Grid2& u, std::span<const double> inflow_next, const SolverConfig& cfg, double dt,
                  long step_index = 0) {
  const std::size_t nxp = cfg.nx + 1, nyp = cfg.ny + 1;
  if (u.n0() != nxp || u.n1() != nyp) throw ConfigError("step: grid shape does not match the config");
  if (inflow_next.size() != nyp) throw ConfigError("step: inflow size does not match ny + 1");
  if (inflow_next.front() != 0.0) throw ConfigError("step: inflow must vanish at the wall");
  check_boundary_rows(u, "step");
  const double dx = cfg.dx(), dy = cfg.dy();

  const Grid2 v = normal_velocity(u, cfg);
  double vmax = 0.0, umax = 0.0;
  for (double a : v.data()) vmax = std::max(vmax, std::abs(a));
  for (double a : u.data()) umax = std::max(umax, a);
  const double cfl = dt * (umax / dx + vmax / dy);
  if (!std::isfinite(cfl)) throw DivergenceError("non-finite velocity at step " + std::to_string(step_index), step_index);
  if (cfl > 1.0 + 1e-12) {
    throw DivergenceError("advective CFL number " + std::to_string(cfl) + " > 1 at step " + std::to_string(step_index),
                          step_index);
  }

  Grid2 out(nxp, nyp, 0.0);
  for (std::size_t j = 0; j < nyp; ++j) out(0, j) = inflow_next[j];
  const double r = dt / (dy * dy);
  detail::parallel_for(1, nxp, cfg.workers, [&](std::size_t k) {
    // Explicit upwind advection on the interior nodes of column k.
    std::vector<double> rhs(nyp - 2), scratch;
    for (std::size_t j = 1; j + 1 < nyp; ++j) {
      const double uk = u(k, j), vk = v(k, j);
      const double ux = (uk - u(k - 1, j)) / dx;
      const double uy = vk > 0.0 ? (uk - u(k, j - 1)) / dy : (u(k, j + 1) - uk) / dy;
      rhs[j - 1] = uk - dt * (uk * ux + vk * uy);
    }
    // (1 + 2r) u_j - r (u_{j-1} + u_{j+1}) = rhs_j with u_0 = 0, u_ny = 1.
    rhs.back() += r * 1.0;
    detail::thomas_constant(-r, 1.0 + 2.0 * r, -r, rhs, scratch);
    out(k, 0) = 0.0;
    for (std::size_t j = 1; j + 1 < nyp; ++j) out(k, j) = rhs[j - 1];
    out(k, nyp - 1) = 1.0;
  });

  for (double a : out.data()) {
    if (!std::isfinite(a)) throw DivergenceError("NaN/Inf in u at step " + std::to_string(step_index), step_index);
  }
  return out;
}

/// Samples u(x, y) on the solver grid and pins the wall and far-field rows.
inline Grid2 sample_grid(const SolverConfig& cfg, const std::function<double(double, double)>& fn) {
  const auto x = cfg.x_grid(), y = cfg.y_grid();
  Grid2 u(x.size(), y.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    for (std::size_t j = 0; j < y.size(); ++j) u(k, j) = fn(x[k], y[j]);
    u(k, 0) = 0.0;
    u(k, y.size() - 1) = 1.0;
  }
  return u;
}

inline bool columns_monotone(const Grid2& u) {
  for (std::size_t k = 0; k < u.n0(); ++k)
    for (std::size_t j = 1; j < u.n1(); ++j)
      if (u(k, j) < u(k, j - 1)) return false;
  return true;
}

inline std::vector<double> sample_inflow(const InflowFn& inflow, double t, std::span<const double> y) {
  std::vector<double> col(y.size());
  for (std::size_t j = 0; j < y.size(); ++j) col[j] = inflow(t, y[j]);
  col.front() = 0.0;
  col.back() = 1.0;
  return col;
}

/// Marches from `init` to t_end, storing a snapshot every snapshot_stride
/// steps and at t_end. Throws DivergenceError if u leaves [0, 1 + 1e-6].
inline VelocityTrajectory solve(const SolverConfig& cfg, const Grid2& init, const InflowFn& inflow) {
  cfg.validate();
  VelocityTrajectory traj{cfg.x_grid(), cfg.y_grid(), {}};
  if (init.n0() != cfg.nx + 1 || init.n1() != cfg.ny + 1) throw ConfigError("solve: init shape does not match the grid");
  check_boundary_rows(init, "solve init");
  const auto first_inflow = sample_inflow(inflow, 0.0, traj.y);
  for (std::size_t j = 0; j < traj.y.size(); ++j) {
    if (std::abs(first_inflow[j] - init(0, j)) > 1e-12) throw ConfigError("solve: init and inflow disagree at the corner t = 0, x = 0");
  }

  auto record = [&](double t, const Grid2& u) {
    for (double a : u.data()) {
      if (a < -1e-12 || a > 1.0 + 1e-6) {
        throw DivergenceError("u left [0, 1 + 1e-6] at t = " + std::to_string(t),
                              static_cast<long>(std::llround(t / cfg.dt)));
      }
    }
    traj.snapshots.push_back({t, u, normal_velocity(u, cfg), columns_monotone(u)});
  };

  Grid2 u = init;
  record(0.0, u);
  const std::size_t n = cfg.n_steps();
  for (std::size_t s = 1; s <= n; ++s) {
    const double t = cfg.dt * static_cast<double>(s);
    u = step(u, sample_inflow(inflow, t, traj.y), cfg, cfg.dt, static_cast<long>(s));
    if (s % cfg.snapshot_stride == 0 || s == n) record(t, u);
  }
  return traj;
}

/// w and its finite-difference derivatives on a (tau, xi, eta) grid.
struct CroccoField {
  std::vector<double> tau, xi, eta;
  Grid3 w, d_tau_w, d_xi_w, d_eta2_w;
  Grid2 l_estimate;  // w * d_eta2_w at the last eta node, per (tau, xi)
  bool d_tau_low_confidence = false;
};

namespace detail {

/// d/ds of samples f(s) along one index: centered inside, one-sided at the ends.
inline double diff_along(std::span<const double> s, std::size_t i, const auto& f) {
  const std::size_t n = s.size();
  if (n < 2) return 0.0;
  if (i == 0) return (f(1) - f(0)) / (s[1] - s[0]);
  if (i == n - 1) return (f(n - 1) - f(n - 2)) / (s[n - 1] - s[n - 2]);
  return (f(i + 1) - f(i - 1)) / (s[i + 1] - s[i - 1]);
}

}  // namespace detail

/// Fills d_tau_w, d_xi_w, d_eta2_w and l_estimate from w. The two end
/// nodes in eta take the second difference of their inner neighbour (the
/// three-point one-sided formula).
inline void differentiate_field(CroccoField& f) {
  const std::size_t nt = f.tau.size(), nx = f.xi.size(), ne = f.eta.size();
  f.d_tau_w = Grid3(nt, nx, ne);
  f.d_xi_w = Grid3(nt, nx, ne);
  f.d_eta2_w = Grid3(nt, nx, ne);
  f.l_estimate = Grid2(nt, nx);
  f.d_tau_low_confidence = nt < 3;
  for (std::size_t s = 0; s < nt; ++s) {
    for (std::size_t k = 0; k < nx; ++k) {
      for (std::size_t e = 0; e < ne; ++e) {
        f.d_tau_w(s, k, e) = detail::diff_along(f.tau, s, [&](std::size_t i) { return f.w(i, k, e); });
        f.d_xi_w(s, k, e) = detail::diff_along(f.xi, k, [&](std::size_t i) { return f.w(s, i, e); });
      }
      const auto w = f.w.line(s, k);
      if (ne >= 3) {
        for (std::size_t e = 1; e + 1 < ne; ++e) {
          const double h0 = f.eta[e] - f.eta[e - 1], h1 = f.eta[e + 1] - f.eta[e];
          f.d_eta2_w(s, k, e) = 2.0 * (h0 * w[e + 1] - (h0 + h1) * w[e] + h1 * w[e - 1]) / (h0 * h1 * (h0 + h1));
        }
        f.d_eta2_w(s, k, 0) = f.d_eta2_w(s, k, 1);
        f.d_eta2_w(s, k, ne - 1) = f.d_eta2_w(s, k, ne - 2);
      }
      f.l_estimate(s, k) = w[ne - 1] * f.d_eta2_w(s, k, ne - 1);
    }
  }
}

/// Crocco image of every (snapshot, column) on the fixed eta grid.
inline CroccoField to_crocco_field(const VelocityTrajectory& traj, std::span<const double> eta_grid,
                                   std::size_t workers = 1) {
  CroccoField f;
  f.tau = traj.times();
  f.xi = traj.x;
  f.eta.assign(eta_grid.begin(), eta_grid.end());
  const std::size_t nt = f.tau.size(), nx = f.xi.size(), ne = f.eta.size();
  f.w = Grid3(nt, nx, ne);
  std::vector<std::string> errors(nt * nx);
  detail::parallel_for(0, nt * nx, workers, [&](std::size_t idx) {
    const std::size_t s = idx / nx, k = idx % nx;
    const auto row = traj.snapshots[s].u.row(k);
    ProfileU p{traj.y, std::vector<double>(row.begin(), row.end())};
    try {
      const CroccoProfile cp = forward(p, eta_grid);
      std::copy(cp.w.begin(), cp.w.end(), f.w.line(s, k).begin());
    } catch (const NumericalError& e) {
      errors[idx] = e.what();
    }
  });
  for (std::size_t idx = 0; idx < errors.size(); ++idx) {
    if (!errors[idx].empty()) {
      throw NumericalError("to_crocco_field: column (tau_index " + std::to_string(idx / nx) + ", xi_index " +
                           std::to_string(idx % nx) + "): " + errors[idx]);
    }
  }
  differentiate_field(f);
  return f;
}

/// sup over interior nodes of |-d_tau w - eta d_xi w + w^2 d_eta2 w|.
/// The tau direction counts as interior throughout when fewer than three
/// snapshots exist.
inline double residual_crocco(const CroccoField& f) {
  const std::size_t nt = f.tau.size(), nx = f.xi.size(), ne = f.eta.size();
  const std::size_t s0 = nt >= 3 ? 1 : 0, s1 = nt >= 3 ? nt - 1 : nt;
  double r = 0.0;
  for (std::size_t s = s0; s < s1; ++s)
    for (std::size_t k = 1; k + 1 < nx; ++k)
      for (std::size_t e = 1; e + 1 < ne; ++e) {
        const double w = f.w(s, k, e);
        r = std::max(r, std::abs(-f.d_tau_w(s, k, e) - f.eta[e] * f.d_xi_w(s, k, e) + w * w * f.d_eta2_w(s, k, e)));
      }
  return r;
}

}  // namespace prandtl

#endif  // PRANDTL_SOLVER_HPP
