#ifndef PRANDTL_PARAMS_HPP
#define PRANDTL_PARAMS_HPP

/// \file
///
/// Hypothesis parameters and the chain of constants derived from them
/// (b, K, delta, beta, beta0).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <string>

#include "prandtl/errors.hpp"

namespace prandtl {

/// Hypothesis parameters. C0 = 1/c0 is derived, never set independently.
class ParamSet {
 public:
  ParamSet() = default;
  ParamSet(double c0, double mu, double alpha0, double C1, double X, double T, double x0,
           double C2 = 0.0)
      : c0_(c0), mu_(mu), alpha0_(alpha0), C1_(C1), X_(X), T_(T), x0_(x0), C2_(C2) {
    validate();
  }

  double c0() const noexcept { return c0_; }
  double mu() const noexcept { return mu_; }
  double alpha0() const noexcept { return alpha0_; }
  double C1() const noexcept { return C1_; }
  double X() const noexcept { return X_; }
  double T() const noexcept { return T_; }
  double x0() const noexcept { return x0_; }
  double C2() const noexcept { return C2_; }
  double C0() const noexcept { return 1.0 / c0_; }

  /// Throws ConfigError naming the violated range.
  void validate() const {
    auto need = [](bool ok, const std::string& msg) {
      if (!ok) throw ConfigError(msg);
    };
    need(c0_ > 0 && c0_ < 1, "c0 must lie in (0,1)");
    need(mu_ > 0 && mu_ < 0.01, "mu must lie in (0,1/100)");
    need(alpha0_ > 0 && alpha0_ < 1, "alpha0 must lie in (0,1)");
    need(C1_ > 0, "C1 must be positive");
    need(X_ > 0, "X must be positive");
    need(T_ > 0, "T must be positive");
    need(x0_ > 0, "x0 must be positive");
    need(C2_ >= 0, "C2 must be nonnegative");
  }

  bool operator==(const ParamSet&) const = default;

 private:
  double c0_ = 0.5, mu_ = 0.005, alpha0_ = 0.5, C1_ = 1.0, X_ = 1.0, T_ = 5.0, x0_ = 1.0, C2_ = 0.0;
};

struct DerivedConstants {
  double beta = 0;
  double b = 0;
  double K = 0;
  double delta = 0;
  double beta0_max = 0;
  double beta0 = 0;
  double alpha0 = 0;  // echoed so beta0_default needs only the constants
};

/// The concave-in-eta upper envelope C0 (1-eta) sqrt(-ln(mu (1-eta))).
inline double upper_envelope(double C0, double mu, double eta) {
  const double s = 1.0 - eta;
  return C0 * s * std::sqrt(-std::log(mu * s));
}

/// Barrier profile of the uniform lower bound: (1-eta) exp(8/3 eta - 8/3).
inline double lower_barrier(double eta) { return (1.0 - eta) * std::exp((8.0 / 3.0) * eta - 8.0 / 3.0); }

/// Its second eta-derivative, exp(8/3 eta - 8/3) [(64/9)(1-eta) - 16/3].
inline double lower_barrier_dd(double eta) {
  return std::exp((8.0 / 3.0) * eta - 8.0 / 3.0) * ((64.0 / 9.0) * (1.0 - eta) - 16.0 / 3.0);
}

/// The beta needed at a single eta so that
///   -(1/4) beta phi(eta) + W(eta)^2 |phi''(eta)| <= 0.
inline double beta_required_at(double eta, double envelope) {
  return 4.0 * envelope * envelope * std::abs(lower_barrier_dd(eta)) / lower_barrier(eta);
}

inline constexpr double kBetaSafetyFactor = 1.1;
inline constexpr double kBetaEtaCut = 1e-6;

/// Minimal grid-certified beta (times the 1.1 safety factor) for a given
/// upper envelope W(eta), searched over eta in (1/4, 1 - eta_cut).
inline double compute_beta(std::size_t eta_resolution, const std::function<double(double)>& envelope,
                           double eta_cut = kBetaEtaCut) {
  if (eta_resolution < 2) throw ConfigError("compute_beta: eta_resolution must be >= 2");
  const double lo = 0.25, hi = 1.0 - eta_cut;
  double worst = 0.0;
  for (std::size_t i = 1; i <= eta_resolution; ++i) {
    const double eta = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(eta_resolution);
    const double need = beta_required_at(eta, envelope(eta));
    if (!std::isfinite(need)) {
      throw NumericalError("compute_beta: non-finite requirement at eta=" + std::to_string(eta));
    }
    worst = std::max(worst, need);
  }
  return kBetaSafetyFactor * worst;
}

inline double compute_beta(const ParamSet& p, std::size_t eta_resolution) {
  p.validate();
  const double C0 = p.C0(), mu = p.mu();
  return compute_beta(eta_resolution, [=](double eta) { return upper_envelope(C0, mu, eta); });
}

inline double beta0_default(const DerivedConstants& k) { return 0.9 * k.beta0_max; }

/// Evaluates b, K, delta and the admissible decay-rate range for a given
/// beta. The scalar form skips ParamSet validation so closed-form boundary
/// cases (c0 = 1, X = 0) can be evaluated.
inline DerivedConstants derive_constants(double c0, double alpha0, double C1, double X, double beta,
                                         std::optional<double> beta0_override = std::nullopt) {
  if (!(beta >= 0)) throw ConfigError("derive_constants: beta must be nonnegative");
  DerivedConstants k;
  k.beta = beta;
  k.alpha0 = alpha0;
  k.b = c0 / 4.0 * std::exp(-beta * X) * std::exp(-8.0 / 3.0);
  k.K = std::exp(X) * std::max(2.0, 2.0 * std::pow(C1, 1.0 / alpha0 - 1.0));
  // alpha(1-alpha) is concave, so its minimum over [alpha0/2, alpha0] sits at an endpoint.
  const double a_lo = alpha0 / 2.0, a_hi = alpha0;
  const double endpoint_min = std::min(a_lo * (1.0 - a_lo), a_hi * (1.0 - a_hi));
  const double t1 = 0.1 * endpoint_min * k.b * k.b;
  const double t2 = 1.0 / (321.0 * std::exp(X));
  const double t3 = std::min(1.0, C1) / (k.b * std::pow(2.0, alpha0));
  k.delta = std::min({t1, t2, t3});
  k.beta0_max = k.b * k.b * alpha0 * (1.0 - alpha0);
  k.beta0 = beta0_override.value_or(beta0_default(k));
  return k;
}

inline DerivedConstants derive_constants(const ParamSet& p, double beta,
                                         std::optional<double> beta0_override = std::nullopt) {
  return derive_constants(p.c0(), p.alpha0(), p.C1(), p.X(), beta, beta0_override);
}

/// compute_beta followed by derive_constants, the usual entry point.
inline DerivedConstants constants_for(const ParamSet& p, std::optional<double> beta0_override = std::nullopt,
                                      std::size_t eta_resolution = 100000) {
  return derive_constants(p, compute_beta(p, eta_resolution), beta0_override);
}

/// Checks the relations every DerivedConstants must satisfy; throws
/// NumericalError on the first violation.
inline void validate_constants(const ParamSet& p, const DerivedConstants& k) {
  if (!(k.b > 0)) throw NumericalError("b underflowed to zero; reduce beta*X");
  if (!(k.delta < 1.0 / (96.0 * std::exp(p.X())))) throw NumericalError("delta >= 1/(96 e^X)");
  if (!(k.beta0 > 0 && k.beta0 < k.beta0_max)) {
    throw NumericalError("beta0 must lie in (0, b^2 alpha0 (1-alpha0))");
  }
}

}  // namespace prandtl

#endif  // PRANDTL_PARAMS_HPP
