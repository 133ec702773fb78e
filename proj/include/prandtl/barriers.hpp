#ifndef PRANDTL_BARRIERS_HPP
#define PRANDTL_BARRIERS_HPP

/// \file
///
/// Numerical certificates for the sign inequalities behind the comparison
/// arguments: barrier envelopes on realized Crocco fields and the scalar
/// gates on the derived constants.
///
/// Margins are absolute (lhs - rhs); each report carries the scale it was
/// measured against and pass = worst_margin <= tolerance. Field checks use
/// tolerance (1e-8 + rel_tol) * scale; strict scalar gates use a negative
/// tolerance so that a margin of exactly 0 fails.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "prandtl/params.hpp"
#include "prandtl/solver.hpp"

namespace prandtl {

inline constexpr double kCertificateRelTol = 1e-3;
inline constexpr double kCertificateAbsFactor = 1e-8;
inline constexpr double kStrictTolerance = -std::numeric_limits<double>::denorm_min();

struct CertificateReport {
  std::string lemma_id;
  double worst_margin = -std::numeric_limits<double>::infinity();
  std::array<std::size_t, 3> worst_location{0, 0, 0};
  bool pass = true;
  double tolerance = 0.0;
  double scale = 1.0;
  std::map<std::string, double> values;  // reported constants (K_min, c_T, fitted C0, ...)
  std::vector<CertificateReport> parts;
};

namespace detail {

inline double field_tolerance(double scale, double rel_tol) { return (kCertificateAbsFactor + rel_tol) * scale; }

/// Tracks the worst (largest) margin and its location. NaN counts as +inf.
struct WorstMargin {
  double margin = -std::numeric_limits<double>::infinity();
  std::array<std::size_t, 3> at{0, 0, 0};
  void see(double m, std::size_t s, std::size_t x, std::size_t e) {
    if (std::isnan(m)) m = std::numeric_limits<double>::infinity();
    if (m > margin) {
      margin = m;
      at = {s, x, e};
    }
  }
};

inline CertificateReport finish(std::string id, const WorstMargin& wm, double scale, double tol) {
  CertificateReport r;
  r.lemma_id = std::move(id);
  r.worst_margin = wm.margin;
  r.worst_location = wm.at;
  r.scale = scale;
  r.tolerance = tol;
  r.pass = wm.margin <= tol;
  return r;
}

/// Parent report from sub-certificates: margin is the largest part margin
/// relative to its own scale, pass is the conjunction.
inline CertificateReport combine(std::string id, std::vector<CertificateReport> parts, double rel_tol) {
  CertificateReport r;
  r.lemma_id = std::move(id);
  r.scale = 1.0;
  r.tolerance = kCertificateAbsFactor + rel_tol;
  bool all_strict = true;
  for (const auto& p : parts) {
    const double rel = p.scale > 0 ? p.worst_margin / p.scale : p.worst_margin;
    if (rel > r.worst_margin || std::isnan(rel)) {
      r.worst_margin = std::isnan(rel) ? std::numeric_limits<double>::infinity() : rel;
      r.worst_location = p.worst_location;
    }
    r.pass = r.pass && p.pass;
    all_strict = all_strict && p.tolerance < 0;
  }
  if (all_strict) r.tolerance = kStrictTolerance;
  r.parts = std::move(parts);
  return r;
}

inline double log_term(double mu, double s) { return std::sqrt(-std::log(mu * s)); }

}  // namespace detail

/// Smallest C with w <= C (1 - eta) sqrt(-ln(mu (1 - eta))) on the field.
inline double fitted_upper_constant(const CroccoField& f, double mu) {
  double c = 0.0;
  for (std::size_t s = 0; s < f.tau.size(); ++s)
    for (std::size_t x = 0; x < f.xi.size(); ++x)
      for (std::size_t e = 0; e < f.eta.size(); ++e) {
        const double sm = 1.0 - f.eta[e];
        c = std::max(c, f.w(s, x, e) / (sm * detail::log_term(mu, sm)));
      }
  return c;
}

/// w <= C0 (1 - eta) sqrt(-ln(mu (1 - eta))) together with the sign of the
/// drift term -w^2 C0 [1/(2 s L) + 1/(4 s L^3)], s = 1 - eta, L = sqrt(-ln(mu s)).
inline CertificateReport certify_upper_barrier(const CroccoField& f, const ParamSet& p, const DerivedConstants&,
                                               double rel_tol = kCertificateRelTol) {
  const double C0 = p.C0(), mu = p.mu();
  detail::WorstMargin env_m, drift_m;
  double env_scale = 0.0, drift_scale = 0.0;
  for (std::size_t e = 0; e < f.eta.size(); ++e) env_scale = std::max(env_scale, upper_envelope(C0, mu, f.eta[e]));
  for (std::size_t s = 0; s < f.tau.size(); ++s)
    for (std::size_t x = 0; x < f.xi.size(); ++x)
      for (std::size_t e = 0; e < f.eta.size(); ++e) {
        const double sm = 1.0 - f.eta[e], L = detail::log_term(mu, sm), w = f.w(s, x, e);
        env_m.see(w - upper_envelope(C0, mu, f.eta[e]), s, x, e);
        const double drift = -w * w * C0 * (1.0 / (2.0 * sm * L) + 1.0 / (4.0 * sm * L * L * L));
        drift_scale = std::max(drift_scale, std::abs(drift));
        drift_m.see(drift, s, x, e);
      }
  if (drift_scale == 0.0) drift_scale = 1.0;
  std::vector<CertificateReport> parts;
  parts.push_back(detail::finish("upper_barrier.envelope", env_m, env_scale, detail::field_tolerance(env_scale, rel_tol)));
  parts.push_back(detail::finish("upper_barrier.drift", drift_m, drift_scale, detail::field_tolerance(drift_scale, rel_tol)));
  CertificateReport r = detail::combine("upper_barrier", std::move(parts), rel_tol);
  r.values["C0"] = C0;
  r.values["C0_fitted"] = fitted_upper_constant(f, mu);
  return r;
}

/// Smallest K with -K (1 - eta) + 2 C0^2 (1 - eta)^2 (-ln(mu (1 - eta))) <= 0
/// at every node of eta_grid.
inline double temporal_K_min(double C0, double mu, std::span<const double> eta_grid) {
  double k = 0.0;
  for (double eta : eta_grid) {
    const double sm = 1.0 - eta;
    k = std::max(k, 2.0 * C0 * C0 * sm * (-std::log(mu * sm)));
  }
  return k;
}

/// min over the tau = 0 and xi = 0 slices of w / ((1 - eta) e^eta), capped by c0/e.
inline double temporal_a_bar(const CroccoField& f, double c0) {
  double a = c0 / std::exp(1.0);
  auto visit = [&](std::size_t s, std::size_t x) {
    for (std::size_t e = 0; e < f.eta.size(); ++e)
      a = std::min(a, f.w(s, x, e) / ((1.0 - f.eta[e]) * std::exp(f.eta[e])));
  };
  for (std::size_t x = 0; x < f.xi.size(); ++x) visit(0, x);
  for (std::size_t s = 0; s < f.tau.size(); ++s) visit(s, 0);
  return a;
}

/// w >= c_T (1 - eta) with c_T = e^{-K_min T} a_bar. T defaults to the last
/// tau of the field.
inline CertificateReport certify_temporal_lower(const CroccoField& f, const ParamSet& p, const DerivedConstants&,
                                                std::optional<double> T = std::nullopt,
                                                double rel_tol = kCertificateRelTol) {
  const double horizon = T.value_or(f.tau.empty() ? 0.0 : f.tau.back());
  const double K = temporal_K_min(p.C0(), p.mu(), f.eta);
  const double a_bar = temporal_a_bar(f, p.c0());
  const double cT = std::exp(-K * horizon) * a_bar;
  detail::WorstMargin wm;
  for (std::size_t s = 0; s < f.tau.size(); ++s)
    for (std::size_t x = 0; x < f.xi.size(); ++x)
      for (std::size_t e = 0; e < f.eta.size(); ++e) wm.see(cT * (1.0 - f.eta[e]) - f.w(s, x, e), s, x, e);
  const double scale = cT > 0 ? cT : 1.0;
  CertificateReport r = detail::finish("temporal_lower", wm, scale, detail::field_tolerance(scale, rel_tol));
  r.values["K_min"] = K;
  r.values["a_bar"] = a_bar;
  r.values["c_T"] = cT;
  r.values["T"] = horizon;
  return r;
}

/// |d_tau w|, |d_xi w| <= (b delta + C1)(1 - eta)^alpha0 e^{K tau} with
/// K = 2 max|w d_eta2_w| + 1 unless overridden.
inline CertificateReport certify_derivative_growth(const CroccoField& f, const ParamSet& p, const DerivedConstants& k,
                                                   std::optional<double> K_override = std::nullopt,
                                                   double rel_tol = kCertificateRelTol) {
  double A = 0.0;
  for (std::size_t i = 0; i < f.w.data().size(); ++i) A = std::max(A, std::abs(f.w.data()[i] * f.d_eta2_w.data()[i]));
  const double K = K_override.value_or(2.0 * A + 1.0);
  const double scale = k.b * k.delta + p.C1();
  detail::WorstMargin wm;
  for (std::size_t s = 0; s < f.tau.size(); ++s) {
    const double g = std::exp(K * f.tau[s]);
    for (std::size_t x = 0; x < f.xi.size(); ++x)
      for (std::size_t e = 0; e < f.eta.size(); ++e) {
        const double env = scale * std::pow(1.0 - f.eta[e], p.alpha0()) * g;
        wm.see(std::max(std::abs(f.d_tau_w(s, x, e)), std::abs(f.d_xi_w(s, x, e))) - env, s, x, e);
      }
  }
  CertificateReport r = detail::finish("derivative_growth", wm, scale, detail::field_tolerance(scale, rel_tol));
  r.values["A"] = A;
  r.values["K"] = K;
  return r;
}

/// Sign of [-b^2 alpha (1 - alpha) + 4 delta] (1 - eta)^alpha on eta_grid;
/// the bracket must be strictly negative.
inline CertificateReport certify_concave_weight(const ParamSet& p, const DerivedConstants& k, double alpha,
                                                std::span<const double> eta_grid) {
  if (!(alpha >= p.alpha0() / 2.0 - 1e-15 && alpha <= p.alpha0() + 1e-15)) {
    throw ConfigError("concave_weight: alpha must lie in [alpha0/2, alpha0]");
  }
  const double scalar = -k.b * k.b * alpha * (1.0 - alpha) + 4.0 * k.delta;
  detail::WorstMargin wm;
  for (std::size_t e = 0; e < eta_grid.size(); ++e) wm.see(scalar * std::pow(1.0 - eta_grid[e], alpha), 0, 0, e);
  const double scale = k.b * k.b * alpha * (1.0 - alpha);
  CertificateReport r = detail::finish("concave_weight", wm, scale > 0 ? scale : 1.0, kStrictTolerance);
  r.values["alpha"] = alpha;
  r.values["scalar"] = scalar;
  return r;
}

/// Both endpoints alpha0/2 and alpha0 of the admissible weight range.
inline CertificateReport certify_concave_weight(const ParamSet& p, const DerivedConstants& k,
                                                std::span<const double> eta_grid) {
  std::vector<CertificateReport> parts;
  for (double a : {p.alpha0() / 2.0, p.alpha0()}) {
    parts.push_back(certify_concave_weight(p, k, a, eta_grid));
    parts.back().lemma_id += ".alpha=" + std::to_string(a).substr(0, 6);
  }
  return detail::combine("concave_weight", std::move(parts), kCertificateRelTol);
}

/// Scalar gates delta < 1/(96 e^X) and 24 delta^2 - e^{-X} delta / 4 < 0.
inline CertificateReport certify_xi_exponential(const DerivedConstants& k, const ParamSet& p) {
  const double X = p.X(), d = k.delta;
  detail::WorstMargin g1, g2;
  g1.see(d - 1.0 / (96.0 * std::exp(X)), 0, 0, 0);
  g2.see(24.0 * d * d - 0.25 * std::exp(-X) * d, 0, 0, 0);
  std::vector<CertificateReport> parts;
  parts.push_back(detail::finish("xi_exponential.delta_cap", g1, 1.0 / (96.0 * std::exp(X)), kStrictTolerance));
  const double s2 = 0.25 * std::exp(-X) * d;
  parts.push_back(detail::finish("xi_exponential.zmax", g2, s2 > 0 ? s2 : 1.0, kStrictTolerance));
  return detail::combine("xi_exponential", std::move(parts), kCertificateRelTol);
}

/// Centered difference of w along eta (one-sided at the ends).
inline double d_eta_at(const CroccoField& f, std::size_t s, std::size_t x, std::size_t e) {
  const std::size_t n = f.eta.size();
  if (n < 2) return 0.0;
  const std::size_t lo = e == 0 ? 0 : e - 1, hi = e + 1 == n ? e : e + 1;
  return (f.w(s, x, hi) - f.w(s, x, lo)) / (f.eta[hi] - f.eta[lo]);
}

/// Three-part lower bound on a tau-uniform scale:
/// (a) w >= b (1 - eta) on the field;
/// (b) d_eta w <= b/15 on eta in [0, 1/4], measured against the field's own
///     slope scale on that range (the bound b/15 is far below differencing
///     noise);
/// (c) -beta phi/4 + W^2 |phi''| <= 0 on eta in (1/4, 1 - 1e-6), phi the
///     lower barrier and W = C0 (1 - eta) sqrt(-ln(mu (1 - eta))), relative
///     to beta phi / 4.
inline CertificateReport certify_uniform_lower(const CroccoField& f, const ParamSet& p, const DerivedConstants& k,
                                               double rel_tol = kCertificateRelTol, std::size_t sweep = 100000) {
  detail::WorstMargin a, b;
  double slope_scale = 0.0;
  for (std::size_t s = 0; s < f.tau.size(); ++s)
    for (std::size_t x = 0; x < f.xi.size(); ++x)
      for (std::size_t e = 0; e < f.eta.size(); ++e) {
        a.see(k.b * (1.0 - f.eta[e]) - f.w(s, x, e), s, x, e);
        if (f.eta[e] <= 0.25) {
          const double de = d_eta_at(f, s, x, e);
          slope_scale = std::max(slope_scale, std::abs(de));
          b.see(de - k.b / 15.0, s, x, e);
        }
      }
  if (slope_scale == 0.0) slope_scale = k.b / 15.0;

  const double C0 = p.C0(), mu = p.mu();
  detail::WorstMargin c;
  const double lo = 0.25, hi = 1.0 - kBetaEtaCut;
  for (std::size_t i = 1; i <= sweep; ++i) {
    const double eta = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(sweep);
    const double phi = lower_barrier(eta), W = upper_envelope(C0, mu, eta);
    c.see((-0.25 * k.beta * phi + W * W * std::abs(lower_barrier_dd(eta))) / (0.25 * k.beta * phi), 0, 0, i);
  }

  std::vector<CertificateReport> parts;
  parts.push_back(detail::finish("uniform_lower.field", a, k.b, detail::field_tolerance(k.b, rel_tol)));
  parts.push_back(detail::finish("uniform_lower.wall_slope", b, slope_scale, detail::field_tolerance(slope_scale, rel_tol)));
  parts.push_back(detail::finish("uniform_lower.drift", c, 1.0, detail::field_tolerance(1.0, rel_tol)));
  CertificateReport r = detail::combine("uniform_lower", std::move(parts), rel_tol);
  r.values["beta"] = k.beta;
  r.values["C0_fitted"] = fitted_upper_constant(f, mu);
  return r;
}

/// min over the tau = 0, xi = 0 and eta = 0 slices of w / (1 - eta).
inline double comparison_a_star(const CroccoField& f) {
  double a = std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < f.tau.size(); ++s)
    for (std::size_t x = 0; x < f.xi.size(); ++x)
      for (std::size_t e = 0; e < f.eta.size(); ++e) {
        if (s != 0 && x != 0 && e != 0) continue;
        a = std::min(a, f.w(s, x, e) / (1.0 - f.eta[e]));
      }
  return a;
}

/// w >= a_star (1 - eta) with a_star from the boundary slices unless given.
inline CertificateReport certify_comparison(const CroccoField& f, std::optional<double> a_star = std::nullopt,
                                            double rel_tol = kCertificateRelTol) {
  const double a = a_star.value_or(comparison_a_star(f));
  detail::WorstMargin wm;
  for (std::size_t s = 0; s < f.tau.size(); ++s)
    for (std::size_t x = 0; x < f.xi.size(); ++x)
      for (std::size_t e = 0; e < f.eta.size(); ++e) wm.see(a * (1.0 - f.eta[e]) - f.w(s, x, e), s, x, e);
  const double scale = a > 0 && std::isfinite(a) ? a : 1.0;
  CertificateReport r = detail::finish("comparison", wm, scale, detail::field_tolerance(scale, rel_tol));
  r.values["a_star"] = a;
  return r;
}

/// (a) d_eta2 w_bar <= tolerance on the steady reference; (b) the decay gate
/// beta0 - b^2 alpha0 (1 - alpha0) < 0.
inline CertificateReport certify_stability_operator(const CroccoField& f, const CroccoField& fbar,
                                                    const DerivedConstants& k, double rel_tol = kCertificateRelTol) {
  if (f.eta != fbar.eta) throw NumericalError("stability_operator: fields do not share the eta grid");
  detail::WorstMargin a, b;
  double scale = 0.0;
  for (std::size_t s = 0; s < fbar.tau.size(); ++s)
    for (std::size_t x = 0; x < fbar.xi.size(); ++x)
      for (std::size_t e = 0; e < fbar.eta.size(); ++e) {
        const double d2 = fbar.d_eta2_w(s, x, e);
        scale = std::max(scale, std::abs(d2));
        a.see(d2, s, x, e);
      }
  if (scale == 0.0) scale = 1.0;
  b.see(k.beta0 - k.beta0_max, 0, 0, 0);
  std::vector<CertificateReport> parts;
  parts.push_back(detail::finish("stability_operator.concavity", a, scale, detail::field_tolerance(scale, rel_tol)));
  parts.push_back(detail::finish("stability_operator.decay", b, k.beta0_max > 0 ? k.beta0_max : 1.0, kStrictTolerance));
  CertificateReport r = detail::combine("stability_operator", std::move(parts), rel_tol);
  r.values["beta0"] = k.beta0;
  r.values["beta0_max"] = k.beta0_max;
  r.values["concavity_slack"] = r.parts[0].tolerance;
  return r;
}

// ---------------------------------------------------------------------------
// Battery

enum class Certificate {
  UpperBarrier,
  TemporalLower,
  DerivativeGrowth,
  ConcaveWeight,
  XiExponential,
  UniformLower,
  Comparison,
  StabilityOperator
};

inline constexpr std::array<Certificate, 8> kAllCertificates{
    Certificate::UpperBarrier, Certificate::TemporalLower, Certificate::DerivativeGrowth,
    Certificate::ConcaveWeight, Certificate::XiExponential, Certificate::UniformLower,
    Certificate::Comparison,   Certificate::StabilityOperator};

inline std::string to_string(Certificate c) {
  switch (c) {
    case Certificate::UpperBarrier: return "upper_barrier";
    case Certificate::TemporalLower: return "temporal_lower";
    case Certificate::DerivativeGrowth: return "derivative_growth";
    case Certificate::ConcaveWeight: return "concave_weight";
    case Certificate::XiExponential: return "xi_exponential";
    case Certificate::UniformLower: return "uniform_lower";
    case Certificate::Comparison: return "comparison";
    case Certificate::StabilityOperator: return "stability_operator";
  }
  return "?";
}

inline Certificate parse_certificate(const std::string& s) {
  for (Certificate c : kAllCertificates)
    if (to_string(c) == s) return c;
  throw ConfigError("unknown certificate '" + s + "'");
}

/// Inputs of one certificate. Fields are shared between slots until an
/// injection copies the one it modifies.
struct CertificateInputs {
  std::shared_ptr<const CroccoField> field;
  std::shared_ptr<const CroccoField> reference;  // steady w_bar
  ParamSet params;
  DerivedConstants consts;
  std::optional<double> K_override;
  std::optional<double> horizon;
};

using Battery = std::array<CertificateInputs, kAllCertificates.size()>;

inline Battery make_battery(std::shared_ptr<const CroccoField> field, std::shared_ptr<const CroccoField> reference,
                            const ParamSet& p, const DerivedConstants& k) {
  Battery b;
  for (auto& slot : b) slot = CertificateInputs{field, reference, p, k, std::nullopt, std::nullopt};
  return b;
}

inline CertificateReport run_certificate(Certificate c, const CertificateInputs& in) {
  switch (c) {
    case Certificate::UpperBarrier: return certify_upper_barrier(*in.field, in.params, in.consts);
    case Certificate::TemporalLower: return certify_temporal_lower(*in.field, in.params, in.consts, in.horizon);
    case Certificate::DerivativeGrowth:
      return certify_derivative_growth(*in.field, in.params, in.consts, in.K_override);
    case Certificate::ConcaveWeight: return certify_concave_weight(in.params, in.consts, in.field->eta);
    case Certificate::XiExponential: return certify_xi_exponential(in.consts, in.params);
    case Certificate::UniformLower: return certify_uniform_lower(*in.field, in.params, in.consts);
    case Certificate::Comparison: return certify_comparison(*in.field);
    case Certificate::StabilityOperator: return certify_stability_operator(*in.field, *in.reference, in.consts);
  }
  throw NumericalError("run_certificate: unknown certificate");
}

/// All eight certificates in fixed order.
inline std::vector<CertificateReport> run_battery(const Battery& b) {
  std::vector<CertificateReport> out;
  for (std::size_t i = 0; i < kAllCertificates.size(); ++i) out.push_back(run_certificate(kAllCertificates[i], b[i]));
  return out;
}

/// Index box [lo, hi] (inclusive) touched by an injection; empty for
/// scalar injections.
struct InjectionRegion {
  bool field = false;
  std::array<std::size_t, 3> lo{0, 0, 0}, hi{0, 0, 0};
  bool contains(const std::array<std::size_t, 3>& at) const {
    for (int i = 0; i < 3; ++i)
      if (at[i] < lo[i] || at[i] > hi[i]) return false;
    return true;
  }
};

namespace detail {

/// Interior patch: middle snapshot (tau > 0), a few middle columns (xi > 0),
/// eta in [0.4, 0.6].
inline InjectionRegion default_patch(const CroccoField& f) {
  if (f.tau.size() < 2 || f.xi.size() < 2 || f.eta.size() < 5) {
    throw NumericalError("injection: field too small for an interior patch");
  }
  InjectionRegion r;
  r.field = true;
  const std::size_t s = std::max<std::size_t>(1, f.tau.size() / 2), x = std::max<std::size_t>(1, f.xi.size() / 2);
  std::size_t e0 = f.eta.size(), e1 = 0;
  for (std::size_t e = 0; e < f.eta.size(); ++e) {
    if (f.eta[e] >= 0.4 && f.eta[e] <= 0.6) {
      e0 = std::min(e0, e);
      e1 = std::max(e1, e);
    }
  }
  if (e0 > e1) e0 = e1 = f.eta.size() / 2;
  r.lo = {s, x, e0};
  r.hi = {s, std::min(f.xi.size() - 1, x + 2), e1};
  return r;
}

template <class Fn>
void for_region(const InjectionRegion& r, Fn&& fn) {
  for (std::size_t s = r.lo[0]; s <= r.hi[0]; ++s)
    for (std::size_t x = r.lo[1]; x <= r.hi[1]; ++x)
      for (std::size_t e = r.lo[2]; e <= r.hi[2]; ++e) fn(s, x, e);
}

}  // namespace detail

/// Applies the documented violation for certificate c to its own slot:
///   upper_barrier      w = 2 * envelope on an interior patch
///   temporal_lower     w = c_T (1 - eta) / 2 on the patch
///   derivative_growth  d_tau w = 2 * growth envelope on the patch
///   concave_weight     delta = alpha0 (1 - alpha0) b^2
///   xi_exponential     delta = 1 / (90 e^X)
///   uniform_lower      beta = compute_beta output / 2 (i.e. beta / 2.2)
///   comparison         w = a_star (1 - eta) / 2 on the patch
///   stability_operator beta0 = beta0_max
inline InjectionRegion inject(Battery& b, Certificate c) {
  const std::size_t idx = static_cast<std::size_t>(c);
  CertificateInputs& in = b[idx];
  auto copy_field = [&] {
    auto f = std::make_shared<CroccoField>(*in.field);
    return f;
  };
  switch (c) {
    case Certificate::UpperBarrier: {
      auto f = copy_field();
      const InjectionRegion r = detail::default_patch(*f);
      const double C0 = in.params.C0(), mu = in.params.mu();
      detail::for_region(r, [&](std::size_t s, std::size_t x, std::size_t e) {
        f->w(s, x, e) = 2.0 * upper_envelope(C0, mu, f->eta[e]);
      });
      in.field = f;
      return r;
    }
    case Certificate::TemporalLower: {
      const double cT = certify_temporal_lower(*in.field, in.params, in.consts, in.horizon).values.at("c_T");
      auto f = copy_field();
      const InjectionRegion r = detail::default_patch(*f);
      detail::for_region(r, [&](std::size_t s, std::size_t x, std::size_t e) { f->w(s, x, e) = 0.5 * cT * (1.0 - f->eta[e]); });
      in.field = f;
      return r;
    }
    case Certificate::DerivativeGrowth: {
      const auto base = certify_derivative_growth(*in.field, in.params, in.consts, in.K_override);
      const double K = base.values.at("K"), scale = base.scale;
      auto f = copy_field();
      const InjectionRegion r = detail::default_patch(*f);
      detail::for_region(r, [&](std::size_t s, std::size_t x, std::size_t e) {
        f->d_tau_w(s, x, e) = 2.0 * scale * std::pow(1.0 - f->eta[e], in.params.alpha0()) * std::exp(K * f->tau[s]);
      });
      in.field = f;
      return r;
    }
    case Certificate::ConcaveWeight: {
      const double a = in.params.alpha0();
      in.consts.delta = a * (1.0 - a) * in.consts.b * in.consts.b;
      return {};
    }
    case Certificate::XiExponential:
      in.consts.delta = 1.0 / (90.0 * std::exp(in.params.X()));
      return {};
    case Certificate::UniformLower:
      in.consts.beta /= 2.2;
      return {};
    case Certificate::Comparison: {
      const double a = comparison_a_star(*in.field);
      auto f = copy_field();
      const InjectionRegion r = detail::default_patch(*f);
      detail::for_region(r, [&](std::size_t s, std::size_t x, std::size_t e) { f->w(s, x, e) = 0.5 * a * (1.0 - f->eta[e]); });
      in.field = f;
      return r;
    }
    case Certificate::StabilityOperator:
      in.consts.beta0 = in.consts.beta0_max;
      return {};
  }
  return {};
}

}  // namespace prandtl

#endif  // PRANDTL_BARRIERS_HPP
