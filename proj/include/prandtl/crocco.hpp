#ifndef PRANDTL_CROCCO_HPP
#define PRANDTL_CROCCO_HPP

/// \file
///
/// Crocco change of variables for a single velocity column: eta = u(y),
/// w(eta) = du/dy at y = u^{-1}(eta), and its inverse y(eta) = int_0^eta ds / w.

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "prandtl/blasius.hpp"
#include "prandtl/errors.hpp"
#include "prandtl/interp.hpp"
#include "prandtl/io.hpp"

namespace prandtl {

inline constexpr double kDefaultEtaCut = 1e-3;
inline constexpr std::size_t kDefaultEtaPoints = 512;

/// Velocity column u(y) at fixed (t, x).
struct ProfileU {
  std::vector<double> y;
  std::vector<double> u;
};

/// Crocco image w(eta) on a fixed eta grid.
struct CroccoProfile {
  std::vector<double> eta;
  std::vector<double> w;
};

/// n points uniformly spaced on [0, 1 - eta_cut].
inline std::vector<double> uniform_eta_grid(std::size_t n = kDefaultEtaPoints, double eta_cut = kDefaultEtaCut) {
  if (n < 1) throw ConfigError("eta grid needs at least one point");
  if (!(eta_cut > 0.0 && eta_cut < 0.1)) throw ConfigError("eta_cut must lie in (0, 0.1)");
  if (n == 1) return {0.0};
  std::vector<double> g(n);
  const double top = 1.0 - eta_cut;
  for (std::size_t k = 0; k < n; ++k) g[k] = top * static_cast<double>(k) / static_cast<double>(n - 1);
  g.back() = top;
  return g;
}

/// Checks the ProfileU invariants; throws NumericalError naming the index.
inline void validate_profile(const ProfileU& p, double far_tol = 1e-6) {
  if (p.y.size() != p.u.size() || p.y.size() < 5) throw NumericalError("profile: need >= 5 matching samples");
  detail::require_increasing(p.y, "profile y grid");
  if (std::abs(p.u.front()) > 1e-12) throw NumericalError("profile: u(0) must be 0");
  for (std::size_t j = 1; j < p.u.size(); ++j) {
    if (!(p.u[j] > p.u[j - 1])) throw NumericalError("profile: u not strictly increasing at index " + std::to_string(j));
  }
  if (p.u.back() >= 1.0 || p.u.back() < 1.0 - far_tol) {
    throw NumericalError("profile: u(y_max) must lie in [1 - far_tol, 1)");
  }
}

/// Crocco image of a velocity column on the caller's eta grid.
///
/// The column only needs to be strictly increasing up to the top of the eta
/// grid; a flat or decreasing tail beyond that (e.g. the u = 1 Dirichlet row)
/// is discarded. A violation below the top of the grid is rejected with the
/// first offending index.
inline CroccoProfile forward(const ProfileU& p, std::span<const double> eta_grid) {
  const std::size_t n = p.y.size();
  if (n != p.u.size() || n < 5) throw NumericalError("forward: need >= 5 matching samples");
  if (eta_grid.empty()) throw NumericalError("forward: empty eta grid");
  if (std::abs(p.u.front()) > 1e-12) throw NumericalError("forward: u(0) must be 0");
  const double eta_top = eta_grid.back();

  std::size_t m = n;
  for (std::size_t j = 1; j < n; ++j) {
    if (!(p.u[j] > p.u[j - 1])) {
      if (p.u[j - 1] >= eta_top) {
        m = j;
        break;
      }
      throw NumericalError("forward: u not strictly increasing at index " + std::to_string(j));
    }
  }
  if (p.u[m - 1] < eta_top) throw NumericalError("forward: profile does not reach the top of the eta grid");
  if (m < 2) throw NumericalError("forward: fewer than two monotone samples");

  const auto [uy, uyy] = derivatives5(p.y, p.u);
  std::vector<double> y(p.y.begin(), p.y.begin() + static_cast<std::ptrdiff_t>(m));
  std::vector<double> u(p.u.begin(), p.u.begin() + static_cast<std::ptrdiff_t>(m));
  std::vector<double> w(uy.begin(), uy.begin() + static_cast<std::ptrdiff_t>(m));
  std::vector<double> wy(uyy.begin(), uyy.begin() + static_cast<std::ptrdiff_t>(m));

  const MonotoneCubic u_of_y(y, u, w);
  const HermiteCubic w_of_y(std::move(y), std::move(w), std::move(wy));

  CroccoProfile cp;
  cp.eta.assign(eta_grid.begin(), eta_grid.end());
  cp.w.resize(eta_grid.size());
  for (std::size_t k = 0; k < eta_grid.size(); ++k) cp.w[k] = w_of_y(u_of_y.inverse(eta_grid[k]));
  return cp;
}

/// y(eta) = int_0^eta ds / w(s), trapezoid on the eta grid with a partial
/// last interval.
inline double inverse_y(const CroccoProfile& cp, double eta) {
  if (eta <= 0.0 || cp.eta.size() < 2) return 0.0;
  if (eta > cp.eta.back()) throw NumericalError("inverse_y: eta beyond the grid");
  double y = 0.0;
  for (std::size_t k = 1; k < cp.eta.size(); ++k) {
    const double a = cp.eta[k - 1], b = cp.eta[k];
    const double ga = 1.0 / cp.w[k - 1], gb = 1.0 / cp.w[k];
    if (eta >= b) {
      y += 0.5 * (b - a) * (ga + gb);
      continue;
    }
    const double gm = ga + (gb - ga) * (eta - a) / (b - a);
    y += 0.5 * (eta - a) * (ga + gm);
    break;
  }
  return y;
}

/// Velocity column recovered from a Crocco profile: u(y) inverts y(eta).
/// Heights beyond y(max eta) are clamped to max eta with a warning.
inline ProfileU reconstruct_u(const CroccoProfile& cp, std::span<const double> y_grid, Diagnostics* diag = nullptr) {
  const std::size_t n = cp.eta.size();
  if (n < 2) throw NumericalError("reconstruct_u: need at least two eta nodes");
  for (double wk : cp.w) {
    if (!(wk > 0.0)) throw NumericalError("reconstruct_u: w must be positive");
  }
  std::vector<double> Y(n, 0.0);
  for (std::size_t k = 1; k < n; ++k) Y[k] = Y[k - 1] + 0.5 * (cp.eta[k] - cp.eta[k - 1]) * (1.0 / cp.w[k] + 1.0 / cp.w[k - 1]);
  // dEta/dy = w gives exact Hermite slopes.
  const MonotoneCubic eta_of_y(Y, cp.eta, cp.w);

  ProfileU p;
  p.y.assign(y_grid.begin(), y_grid.end());
  p.u.resize(y_grid.size());
  bool clamped = false;
  for (std::size_t j = 0; j < y_grid.size(); ++j) {
    if (y_grid[j] > Y.back()) clamped = true;
    p.u[j] = eta_of_y(y_grid[j]);
  }
  if (clamped && diag) diag->warn("reconstruct_u: y beyond " + std::to_string(Y.back()) + " clamped to max eta");
  return p;
}

/// int |w_a - w_b| d eta over the shared eta grid (trapezoid).
inline double comparison_integral(const CroccoProfile& a, const CroccoProfile& b) {
  if (a.eta != b.eta || a.w.size() != b.w.size()) throw NumericalError("comparison_integral: eta grids differ");
  std::vector<double> d(a.w.size());
  for (std::size_t k = 0; k < d.size(); ++k) d[k] = std::abs(a.w[k] - b.w[k]);
  return trapezoid(a.eta, d);
}

inline void write_profile_csv(const std::filesystem::path& path, const ProfileU& p) {
  CsvTable t{{"y", "u"}, {}};
  for (std::size_t j = 0; j < p.y.size(); ++j) t.rows.push_back({p.y[j], p.u[j]});
  write_csv(path, t);
}

inline ProfileU read_profile_csv(const std::filesystem::path& path) {
  const CsvTable t = read_csv(path);
  return {t.column_values("y"), t.column_values("u")};
}

inline void write_crocco_csv(const std::filesystem::path& path, const CroccoProfile& cp) {
  CsvTable t{{"eta", "w"}, {}};
  for (std::size_t k = 0; k < cp.eta.size(); ++k) t.rows.push_back({cp.eta[k], cp.w[k]});
  write_csv(path, t);
}

inline CroccoProfile read_crocco_csv(const std::filesystem::path& path) {
  const CsvTable t = read_csv(path);
  return {t.column_values("eta"), t.column_values("w")};
}

}  // namespace prandtl

#endif  // PRANDTL_CROCCO_HPP
