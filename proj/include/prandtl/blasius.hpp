#ifndef PRANDTL_BLASIUS_HPP
#define PRANDTL_BLASIUS_HPP

/// \file
///
/// Blasius similarity profile: f''' + (1/2) f f'' = 0, f(0) = f'(0) = 0,
/// f'(inf) = 1, solved by bisection shooting on f''(0) with a fixed-step
/// classical Runge-Kutta integrator.

#include <array>
#include <cmath>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "prandtl/errors.hpp"
#include "prandtl/interp.hpp"

namespace prandtl {

/// Non-fatal notes collected while evaluating (e.g. clamped inputs).
struct Diagnostics {
  std::vector<std::string> warnings;
  void warn(std::string msg) { warnings.push_back(std::move(msg)); }
};

class BlasiusSolution {
 public:
  BlasiusSolution(std::vector<double> zeta, std::vector<double> f, std::vector<double> fp,
                  std::vector<double> fpp, double fpp0)
      : zeta_(std::move(zeta)), f_(std::move(f)), fp_(std::move(fp)), fpp_(std::move(fpp)), fpp0_(fpp0) {
    std::vector<double> fppp(zeta_.size());
    for (std::size_t i = 0; i < zeta_.size(); ++i) fppp[i] = -0.5 * f_[i] * fpp_[i];
    f_interp_ = MonotoneCubic(zeta_, f_, fp_);
    fp_interp_ = MonotoneCubic(zeta_, fp_, fpp_);
    fpp_interp_ = MonotoneCubic(zeta_, fpp_, std::move(fppp));
  }

  std::span<const double> zeta() const noexcept { return zeta_; }
  std::span<const double> f() const noexcept { return f_; }
  std::span<const double> fp() const noexcept { return fp_; }
  std::span<const double> fpp() const noexcept { return fpp_; }
  double fpp0() const noexcept { return fpp0_; }
  double zeta_max() const noexcept { return zeta_.back(); }

  double f_at(double z) const { return z >= zeta_max() ? f_.back() + (z - zeta_max()) * fp_.back() : f_interp_(z); }
  double fp_at(double z) const { return z >= zeta_max() ? fp_.back() : fp_interp_(z); }
  double fpp_at(double z) const { return z >= zeta_max() ? 0.0 : fpp_interp_(z); }
  /// zeta with f'(zeta) = eta; eta is clamped to [0, f'(zeta_max)].
  double zeta_of_fp(double eta) const { return fp_interp_.inverse(eta); }

 private:
  std::vector<double> zeta_, f_, fp_, fpp_;
  double fpp0_;
  MonotoneCubic f_interp_, fp_interp_, fpp_interp_;
};

namespace detail {

using BlasiusState = std::array<double, 3>;

inline BlasiusState blasius_rhs(const BlasiusState& s) { return {s[1], s[2], -0.5 * s[0] * s[2]}; }

inline BlasiusState rk4_step(const BlasiusState& s, double h) {
  auto axpy = [](const BlasiusState& a, double c, const BlasiusState& b) {
    return BlasiusState{a[0] + c * b[0], a[1] + c * b[1], a[2] + c * b[2]};
  };
  const auto k1 = blasius_rhs(s);
  const auto k2 = blasius_rhs(axpy(s, 0.5 * h, k1));
  const auto k3 = blasius_rhs(axpy(s, 0.5 * h, k2));
  const auto k4 = blasius_rhs(axpy(s, h, k3));
  return {s[0] + h / 6 * (k1[0] + 2 * k2[0] + 2 * k3[0] + k4[0]),
          s[1] + h / 6 * (k1[1] + 2 * k2[1] + 2 * k3[1] + k4[1]),
          s[2] + h / 6 * (k1[2] + 2 * k2[2] + 2 * k3[2] + k4[2])};
}

/// f'(zeta_max) - 1 for a given curvature at the wall.
inline double blasius_miss(double fpp0, double zeta_max, std::size_t n_steps) {
  const double h = zeta_max / static_cast<double>(n_steps);
  BlasiusState s{0.0, 0.0, fpp0};
  for (std::size_t i = 0; i < n_steps; ++i) {
    s = rk4_step(s, h);
    if (!std::isfinite(s[1])) return s[1];
  }
  return s[1] - 1.0;
}

}  // namespace detail

/// Bisection shooting on f''(0) in [0.1, 1.0] until |f'(zeta_max) - 1| <= tol.
inline BlasiusSolution shoot(double zeta_max = 12.0, std::size_t n_steps = 100000, double tol = 1e-8) {
  if (!(zeta_max >= 8.0)) throw ConfigError("blasius: zeta_max must be >= 8");
  if (n_steps < 1000) throw ConfigError("blasius: n_steps must be >= 1000");
  if (!(tol > 0.0 && tol <= 1e-4)) throw ConfigError("blasius: tol must lie in (0, 1e-4]");

  double lo = 0.1, hi = 1.0;
  double miss_lo = detail::blasius_miss(lo, zeta_max, n_steps);
  const double miss_hi = detail::blasius_miss(hi, zeta_max, n_steps);
  if (!(miss_lo < 0.0 && miss_hi > 0.0)) {
    throw ConfigError("blasius: shooting bracket [0.1, 1.0] does not straddle f'(zeta_max) = 1");
  }
  double mid = 0.5 * (lo + hi);
  double miss = detail::blasius_miss(mid, zeta_max, n_steps);
  for (int it = 0; it < 200 && std::abs(miss) > tol; ++it) {
    if (miss < 0.0) {
      lo = mid;
      miss_lo = miss;
    } else {
      hi = mid;
    }
    mid = 0.5 * (lo + hi);
    miss = detail::blasius_miss(mid, zeta_max, n_steps);
  }
  if (std::abs(miss) > tol) throw NumericalError("blasius: bisection did not reach the tolerance");

  const double h = zeta_max / static_cast<double>(n_steps);
  std::vector<double> zeta(n_steps + 1), f(n_steps + 1), fp(n_steps + 1), fpp(n_steps + 1);
  detail::BlasiusState s{0.0, 0.0, mid};
  for (std::size_t i = 0; i <= n_steps; ++i) {
    zeta[i] = h * static_cast<double>(i);
    f[i] = s[0];
    fp[i] = s[1];
    fpp[i] = s[2];
    if (i < n_steps) s = detail::rk4_step(s, h);
  }
  zeta.back() = zeta_max;
  return BlasiusSolution(std::move(zeta), std::move(f), std::move(fp), std::move(fpp), mid);
}

struct BlasiusVelocity {
  double u;
  double v;
};

/// (u_B, v_B) at (x, y) for the profile with virtual origin -x0. Beyond
/// zeta_max the far-field limits are returned.
inline BlasiusVelocity eval_velocity(const BlasiusSolution& sol, double x, double y, double x0) {
  const double r = std::sqrt(x + x0);
  const double z = y / r;
  if (z >= sol.zeta_max()) {
    const double zm = sol.zeta_max();
    return {sol.fp().back(), (zm * sol.fp().back() - sol.f().back()) / (2.0 * r)};
  }
  const double fp = sol.fp_at(z);
  return {fp, (z * fp - sol.f_at(z)) / (2.0 * r)};
}

/// Crocco image of the Blasius profile: w_B(eta) = f''(zeta(eta)) / sqrt(x + x0)
/// where f'(zeta(eta)) = eta.
inline std::vector<double> wB_profile(const BlasiusSolution& sol, double x, double x0,
                                      std::span<const double> eta_grid, Diagnostics* diag = nullptr) {
  const double r = std::sqrt(x + x0);
  const double eta_top = sol.fp().back();
  std::vector<double> w(eta_grid.size());
  for (std::size_t k = 0; k < eta_grid.size(); ++k) {
    double eta = eta_grid[k];
    if (eta < 0.0 || eta > eta_top) {
      if (diag) diag->warn("wB_profile: eta=" + std::to_string(eta) + " clamped to [0, f'(zeta_max)]");
      eta = std::clamp(eta, 0.0, eta_top);
    }
    w[k] = sol.fpp_at(sol.zeta_of_fp(eta)) / r;
  }
  return w;
}

}  // namespace prandtl

#endif  // PRANDTL_BLASIUS_HPP
