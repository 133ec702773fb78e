#ifndef PRANDTL_INVARIANTS_HPP
#define PRANDTL_INVARIANTS_HPP

/// \file
///
/// Pointwise checks of the data hypotheses and of the seven-line invariant
/// set on Crocco fields, and two-sided envelope fits for du/dy.
///
/// Margins are relative: (lhs - rhs) / scale with a per-line local scale,
/// so a report passes when worst_margin <= tolerance (default 1e-3).

#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "prandtl/params.hpp"
#include "prandtl/solver.hpp"

namespace prandtl {

inline constexpr double kInvariantRelTol = 1e-3;

struct InvariantReport {
  std::string condition_id;
  double worst_margin = -std::numeric_limits<double>::infinity();
  std::array<std::size_t, 3> worst_location{0, 0, 0};
  bool pass = true;
  double tolerance = kInvariantRelTol;
  double eta_cut_used = 0.0;
};

namespace detail {

inline double relative(double excess, double scale) {
  if (scale > 0.0) return excess / scale;
  if (excess > 0.0) return std::numeric_limits<double>::infinity();
  if (excess < 0.0) return -std::numeric_limits<double>::infinity();
  return 0.0;
}

struct MarginTracker {
  InvariantReport r;
  void offer(double excess, double scale, std::size_t a, std::size_t b, std::size_t c) {
    const double m = relative(excess, scale);
    if (std::isnan(m) || m > r.worst_margin) {
      r.worst_margin = std::isnan(m) ? std::numeric_limits<double>::infinity() : m;
      r.worst_location = {a, b, c};
    }
  }
  InvariantReport finish() {
    r.pass = r.worst_margin <= r.tolerance;
    return r;
  }
};

inline MarginTracker tracker(std::string id, double tol, double eta_cut) {
  MarginTracker t;
  t.r.condition_id = std::move(id);
  t.r.tolerance = tol;
  t.r.eta_cut_used = eta_cut;
  return t;
}

}  // namespace detail

/// The seven lines of the invariant set, each with its local scale:
/// lower_slope b(1-eta), upper_slope the envelope, curvature 2 delta, and
/// the four derivative lines the band C1 (1-eta)^alpha0. With `snapshot`
/// set only that tau index is checked.
inline std::vector<InvariantReport> check_invariant_set(const CroccoField& f, const ParamSet& p,
                                                        const DerivedConstants& k,
                                                        std::optional<std::size_t> snapshot = std::nullopt,
                                                        double tol = kInvariantRelTol) {
  const double cut = 1.0 - f.eta.back();
  std::array<detail::MarginTracker, 7> t{
      detail::tracker("lower_slope", tol, cut),  detail::tracker("upper_slope", tol, cut),
      detail::tracker("sum_lower", tol, cut),    detail::tracker("sum_upper", tol, cut),
      detail::tracker("curvature", tol, cut),    detail::tracker("tau_lower", tol, cut),
      detail::tracker("tau_upper", tol, cut)};
  const std::size_t s_begin = snapshot.value_or(0);
  const std::size_t s_end = snapshot ? *snapshot + 1 : f.tau.size();
  for (std::size_t s = s_begin; s < s_end; ++s) {
    for (std::size_t x = 0; x < f.xi.size(); ++x) {
      for (std::size_t e = 0; e < f.eta.size(); ++e) {
        const double eta = f.eta[e], s1 = 1.0 - eta;
        const double w = f.w(s, x, e), dt = f.d_tau_w(s, x, e), dx = f.d_xi_w(s, x, e);
        const double band = p.C1() * std::pow(s1, p.alpha0());
        const double env = upper_envelope(p.C0(), p.mu(), eta);
        t[0].offer(k.b * s1 - w, k.b * s1, s, x, e);
        t[1].offer(w - env, env, s, x, e);
        t[2].offer(-band - (dx + dt), band, s, x, e);
        t[3].offer((dx + dt) - 0.5 * k.delta * w, band, s, x, e);
        t[4].offer(w * f.d_eta2_w(s, x, e) - 2.0 * k.delta, 2.0 * k.delta, s, x, e);
        t[5].offer(-band - dt, band, s, x, e);
        t[6].offer(dt - k.b * k.delta * std::pow(s1, p.alpha0()), band, s, x, e);
      }
    }
  }
  std::vector<InvariantReport> out;
  for (auto& tr : t) out.push_back(tr.finish());
  return out;
}

/// Slice tau = 0 (all xi) of a field.
inline CroccoField initial_slice(const CroccoField& f) {
  CroccoField g;
  g.tau = {f.tau.front()};
  g.xi = f.xi;
  g.eta = f.eta;
  g.w = Grid3(1, f.xi.size(), f.eta.size());
  for (std::size_t x = 0; x < f.xi.size(); ++x)
    for (std::size_t e = 0; e < f.eta.size(); ++e) g.w(0, x, e) = f.w(0, x, e);
  return g;
}

/// Slice xi = 0 (all tau) of a field.
inline CroccoField inflow_slice(const CroccoField& f) {
  CroccoField g;
  g.tau = f.tau;
  g.xi = {f.xi.front()};
  g.eta = f.eta;
  g.w = Grid3(f.tau.size(), 1, f.eta.size());
  for (std::size_t s = 0; s < f.tau.size(); ++s)
    for (std::size_t e = 0; e < f.eta.size(); ++e) g.w(s, 0, e) = f.w(s, 0, e);
  return g;
}

/// Data hypotheses on the initial slice w0 (tau = 0) and the inflow slice
/// w1 (xi = 0). The derivative a slice cannot difference is rebuilt from
/// the Crocco equation: d_tau w = -eta d_xi w + w^2 d_eta2 w on w0 and
/// d_xi w = (w^2 d_eta2 w - d_tau w) / eta on w1. Lines that use a rebuilt
/// derivative are checked on interior eta nodes only.
inline std::vector<InvariantReport> check_hypotheses(const CroccoField& w0, const CroccoField& w1, const ParamSet& p,
                                                     const DerivedConstants& k, double tol = kInvariantRelTol) {
  std::string missing;
  if (w0.w.empty()) missing += " initial slice (tau = 0)";
  if (w1.w.empty()) missing += " inflow slice (xi = 0)";
  if (!missing.empty()) throw NumericalError("check_hypotheses: missing data:" + missing);

  CroccoField a = w0, b = w1;
  differentiate_field(a);
  differentiate_field(b);
  for (std::size_t x = 0; x < a.xi.size(); ++x)
    for (std::size_t e = 0; e < a.eta.size(); ++e) {
      const double w = a.w(0, x, e);
      a.d_tau_w(0, x, e) = -a.eta[e] * a.d_xi_w(0, x, e) + w * w * a.d_eta2_w(0, x, e);
    }
  for (std::size_t s = 0; s < b.tau.size(); ++s)
    for (std::size_t e = 1; e < b.eta.size(); ++e) {
      const double w = b.w(s, 0, e);
      b.d_xi_w(s, 0, e) = (w * w * b.d_eta2_w(s, 0, e) - b.d_tau_w(s, 0, e)) / b.eta[e];
    }

  const double cut = 1.0 - a.eta.back();
  std::array<detail::MarginTracker, 6> t{
      detail::tracker("hyp_lower_envelope", tol, cut), detail::tracker("hyp_upper_envelope", tol, cut),
      detail::tracker("hyp_sum_lower", tol, cut),      detail::tracker("hyp_sum_upper", tol, cut),
      detail::tracker("hyp_tau_lower", tol, cut),      detail::tracker("hyp_tau_upper", tol, cut)};
  const double sum_cap = std::pow(k.delta * k.b, 1.0 / p.alpha0()) / k.K;

  // Location: {slice (0 = initial, 1 = inflow), index along the slice, eta index}.
  // On the initial slice d_tau is rebuilt, so every derivative line needs
  // an interior eta node; on the inflow slice only the sum lines do.
  auto visit = [&](const CroccoField& g, std::size_t slice) {
    const bool inflow = slice == 1;
    const std::size_t n = inflow ? g.tau.size() : g.xi.size();
    const std::size_t ne = g.eta.size();
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t s = inflow ? i : 0, x = inflow ? 0 : i;
      for (std::size_t e = 0; e < ne; ++e) {
        const double eta = g.eta[e], s1 = 1.0 - eta;
        const double w = g.w(s, x, e), dt = g.d_tau_w(s, x, e), dx = g.d_xi_w(s, x, e);
        const double band = p.C1() * std::pow(s1, p.alpha0());
        const double env = upper_envelope(p.C0(), p.mu(), eta);
        const bool interior = e > 0 && e + 1 < ne;
        t[0].offer(p.c0() * s1 - w, p.c0() * s1, slice, i, e);
        t[1].offer(w - env, env, slice, i, e);
        if (interior) {
          t[2].offer(-band - (dx + dt), band, slice, i, e);
          t[3].offer((dx + dt) - sum_cap * s1, band, slice, i, e);
        }
        if (interior || inflow) {
          t[4].offer(-band - dt, band, slice, i, e);
          t[5].offer(dt - k.b * k.delta * std::pow(s1, p.alpha0()), band, slice, i, e);
        }
      }
    }
  };
  visit(a, 0);
  visit(b, 1);
  std::vector<InvariantReport> out;
  for (auto& tr : t) out.push_back(tr.finish());
  return out;
}

inline bool all_pass(const std::vector<InvariantReport>& rs) {
  for (const auto& r : rs)
    if (!r.pass) return false;
  return true;
}

struct VelocityEnvelopeFit {
  double c = 0.0;        // Gaussian lower prefactor (smallest wall shear)
  double C = 0.0;        // max(C_upper, C_lower)
  double C_upper = 0.0;  // sup du/dy e^{(b/2) y}
  double C_lower = 0.0;  // smallest Gaussian rate for c e^{-C y^2} <= du/dy
  std::vector<InvariantReport> reports;
};

/// Fits c e^{-C y^2} <= du/dy <= C e^{-(b/2) y} over every snapshot and
/// column on y <= y_cap, skipping nodes where 1 - u < far_tol.
inline VelocityEnvelopeFit check_velocity_envelopes(const VelocityTrajectory& traj, const DerivedConstants& k,
                                                    double y_cap, double far_tol = 1e-6) {
  VelocityEnvelopeFit fit;
  fit.c = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> uy_cols;
  for (const auto& snap : traj.snapshots) {
    for (std::size_t x = 0; x < snap.u.n0(); ++x) {
      const auto row = snap.u.row(x);
      auto uy = derivatives5(traj.y, row).first;
      fit.c = std::min(fit.c, uy[0]);
      for (std::size_t j = 0; j < traj.y.size() && traj.y[j] <= y_cap; ++j) {
        if (1.0 - row[j] < far_tol) continue;
        fit.C_upper = std::max(fit.C_upper, uy[j] * std::exp(0.5 * k.b * traj.y[j]));
      }
      uy_cols.push_back(std::move(uy));
    }
  }
  std::size_t col = 0;
  for (const auto& snap : traj.snapshots) {
    for (std::size_t x = 0; x < snap.u.n0(); ++x, ++col) {
      const auto row = snap.u.row(x);
      for (std::size_t j = 1; j < traj.y.size() && traj.y[j] <= y_cap; ++j) {
        if (1.0 - row[j] < far_tol) continue;
        const double d = uy_cols[col][j];
        const double need = d > 0.0 ? std::log(fit.c / d) / (traj.y[j] * traj.y[j])
                                    : std::numeric_limits<double>::infinity();
        fit.C_lower = std::max(fit.C_lower, need);
      }
    }
  }
  fit.C = std::max(fit.C_upper, fit.C_lower);

  InvariantReport up{"velocity_upper", fit.C_upper, {0, 0, 0}, std::isfinite(fit.C_upper) && fit.C_upper > 0, 0, 0};
  InvariantReport lo{"velocity_lower", fit.C_lower, {0, 0, 0}, std::isfinite(fit.C_lower) && fit.c > 0, 0, 0};
  up.tolerance = lo.tolerance = std::numeric_limits<double>::infinity();
  fit.reports = {up, lo};
  return fit;
}

/// Refinement stability of fitted envelope constants: every constant
/// agrees within the given factor.
inline bool envelope_fits_stable(const VelocityEnvelopeFit& a, const VelocityEnvelopeFit& b, double factor = 2.0) {
  auto close = [factor](double p, double q) {
    if (!(p > 0 && q > 0 && std::isfinite(p) && std::isfinite(q))) return p == q;
    return std::max(p, q) / std::min(p, q) <= factor;
  };
  return close(a.c, b.c) && close(a.C_upper, b.C_upper) && close(a.C_lower, b.C_lower);
}

}  // namespace prandtl

#endif  // PRANDTL_INVARIANTS_HPP
