#ifndef PRANDTL_INTERP_HPP
#define PRANDTL_INTERP_HPP

/// \file
///
/// One-dimensional interpolation used by the Blasius and Crocco modules:
/// a monotone piecewise-cubic Hermite interpolant (Fritsch-Carlson limited)
/// with an inverse for increasing data, and a natural cubic spline for
/// quantities that need a continuous second derivative.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "prandtl/errors.hpp"

namespace prandtl {

namespace detail {

/// Index k with x[k] <= t < x[k+1], clamped to [0, n-2].
inline std::size_t bracket(std::span<const double> x, double t) {
  const auto it = std::upper_bound(x.begin(), x.end(), t);
  if (it == x.begin()) return 0;
  const auto k = static_cast<std::size_t>(it - x.begin()) - 1;
  return std::min(k, x.size() - 2);
}

inline void require_increasing(std::span<const double> x, const char* what) {
  if (x.size() < 2) throw NumericalError(std::string(what) + ": need at least two nodes");
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (!(x[i] > x[i - 1])) {
      throw NumericalError(std::string(what) + ": abscissae not strictly increasing at index " +
                           std::to_string(i));
    }
  }
}

}  // namespace detail

/// Piecewise cubic Hermite interpolant on strictly increasing nodes.
///
/// When the ordinates are monotone the node slopes are limited with the
/// Fritsch-Carlson conditions so the interpolant is monotone on every
/// interval. Slopes may be supplied (e.g. exact derivatives); otherwise
/// three-point estimates are used.
class MonotoneCubic {
 public:
  MonotoneCubic() = default;

  MonotoneCubic(std::vector<double> x, std::vector<double> y)
      : MonotoneCubic(std::move(x), std::move(y), {}) {}

  MonotoneCubic(std::vector<double> x, std::vector<double> y, std::vector<double> slopes)
      : x_(std::move(x)), y_(std::move(y)), d_(std::move(slopes)) {
    detail::require_increasing(x_, "MonotoneCubic");
    if (y_.size() != x_.size()) throw NumericalError("MonotoneCubic: size mismatch");
    if (d_.empty()) estimate_slopes();
    if (d_.size() != x_.size()) throw NumericalError("MonotoneCubic: slope size mismatch");
    limit_slopes();
  }

  std::span<const double> x() const noexcept { return x_; }
  std::span<const double> y() const noexcept { return y_; }
  double x_min() const noexcept { return x_.front(); }
  double x_max() const noexcept { return x_.back(); }

  /// Value at t; constant extrapolation outside the node range.
  double operator()(double t) const {
    if (t <= x_.front()) return y_.front();
    if (t >= x_.back()) return y_.back();
    const std::size_t k = detail::bracket(x_, t);
    return eval_on(k, t);
  }

  double derivative(double t) const {
    if (t < x_.front() || t > x_.back()) return 0.0;
    const std::size_t k = detail::bracket(x_, t);
    const double h = x_[k + 1] - x_[k];
    const double s = (t - x_[k]) / h;
    const double dh00 = 6 * s * s - 6 * s, dh10 = 3 * s * s - 4 * s + 1;
    const double dh01 = -6 * s * s + 6 * s, dh11 = 3 * s * s - 2 * s;
    return (dh00 * y_[k] + dh01 * y_[k + 1]) / h + dh10 * d_[k] + dh11 * d_[k + 1];
  }

  /// Solves value(t) = target for increasing data. Targets outside
  /// [y.front(), y.back()] clamp to the end nodes.
  double inverse(double target) const {
    if (target <= y_.front()) return x_.front();
    if (target >= y_.back()) return x_.back();
    const auto it = std::upper_bound(y_.begin(), y_.end(), target);
    std::size_t k = static_cast<std::size_t>(it - y_.begin()) - 1;
    k = std::min(k, x_.size() - 2);
    if (y_[k] == target) return x_[k];
    double lo = x_[k], hi = x_[k + 1];
    // Newton with bisection safeguard; the cubic is monotone on [lo, hi].
    double t = lo + (hi - lo) * (target - y_[k]) / (y_[k + 1] - y_[k]);
    for (int it_count = 0; it_count < 100; ++it_count) {
      const double f = eval_on(k, t) - target;
      if (f == 0.0) return t;
      if (f > 0) hi = t; else lo = t;
      const double h = x_[k + 1] - x_[k];
      const double s = (t - x_[k]) / h;
      const double df = (6 * s * s - 6 * s) * (y_[k] - y_[k + 1]) / h + (3 * s * s - 4 * s + 1) * d_[k] +
                        (3 * s * s - 2 * s) * d_[k + 1];
      double next = (df > 0) ? t - f / df : 0.5 * (lo + hi);
      if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
      if (std::abs(next - t) <= 1e-15 * std::max(1.0, std::abs(t))) return next;
      t = next;
    }
    return t;
  }

 private:
  double eval_on(std::size_t k, double t) const {
    const double h = x_[k + 1] - x_[k];
    const double s = (t - x_[k]) / h;
    const double s2 = s * s, s3 = s2 * s;
    const double h00 = 2 * s3 - 3 * s2 + 1, h10 = s3 - 2 * s2 + s;
    const double h01 = -2 * s3 + 3 * s2, h11 = s3 - s2;
    return h00 * y_[k] + h10 * h * d_[k] + h01 * y_[k + 1] + h11 * h * d_[k + 1];
  }

  void estimate_slopes() {
    const std::size_t n = x_.size();
    d_.assign(n, 0.0);
    if (n == 2) {
      d_[0] = d_[1] = (y_[1] - y_[0]) / (x_[1] - x_[0]);
      return;
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
      const double h0 = x_[i] - x_[i - 1], h1 = x_[i + 1] - x_[i];
      const double s0 = (y_[i] - y_[i - 1]) / h0, s1 = (y_[i + 1] - y_[i]) / h1;
      d_[i] = (h1 * s0 + h0 * s1) / (h0 + h1);
    }
    const double h0 = x_[1] - x_[0], h1 = x_[2] - x_[1];
    const double s0 = (y_[1] - y_[0]) / h0, s1 = (y_[2] - y_[1]) / h1;
    d_[0] = ((2 * h0 + h1) * s0 - h0 * s1) / (h0 + h1);
    const double g0 = x_[n - 2] - x_[n - 3], g1 = x_[n - 1] - x_[n - 2];
    const double r0 = (y_[n - 2] - y_[n - 3]) / g0, r1 = (y_[n - 1] - y_[n - 2]) / g1;
    d_[n - 1] = ((2 * g1 + g0) * r1 - g1 * r0) / (g0 + g1);
  }

  // Fritsch-Carlson: zero slopes at extrema, keep (alpha, beta) inside the
  // radius-3 circle on each interval.
  void limit_slopes() {
    const std::size_t n = x_.size();
    std::vector<double> secant(n - 1);
    for (std::size_t k = 0; k + 1 < n; ++k) secant[k] = (y_[k + 1] - y_[k]) / (x_[k + 1] - x_[k]);
    for (std::size_t i = 0; i < n; ++i) {
      const double left = (i > 0) ? secant[i - 1] : secant[0];
      const double right = (i + 1 < n) ? secant[i] : secant[n - 2];
      if (left * right < 0.0 || (i > 0 && i + 1 < n && (left == 0.0 || right == 0.0))) d_[i] = 0.0;
      else if (d_[i] * right < 0.0) d_[i] = 0.0;
    }
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (secant[k] == 0.0) {
        d_[k] = d_[k + 1] = 0.0;
        continue;
      }
      const double a = d_[k] / secant[k], b = d_[k + 1] / secant[k];
      const double r = a * a + b * b;
      if (r > 9.0) {
        const double tau = 3.0 / std::sqrt(r);
        d_[k] = tau * a * secant[k];
        d_[k + 1] = tau * b * secant[k];
      }
    }
  }

  std::vector<double> x_, y_, d_;
};

/// Natural cubic spline (C2), for fields that are differenced twice after
/// interpolation.
class NaturalSpline {
 public:
  NaturalSpline() = default;
  NaturalSpline(std::vector<double> x, std::vector<double> y) : x_(std::move(x)), y_(std::move(y)) {
    detail::require_increasing(x_, "NaturalSpline");
    if (y_.size() != x_.size()) throw NumericalError("NaturalSpline: size mismatch");
    const std::size_t n = x_.size();
    m_.assign(n, 0.0);
    if (n < 3) return;
    std::vector<double> c(n, 0.0), r(n, 0.0);
    // Thomas sweep on the interior second-derivative system.
    for (std::size_t i = 1; i + 1 < n; ++i) {
      const double h0 = x_[i] - x_[i - 1], h1 = x_[i + 1] - x_[i];
      const double rhs = 6.0 * ((y_[i + 1] - y_[i]) / h1 - (y_[i] - y_[i - 1]) / h0);
      const double diag = 2.0 * (h0 + h1) - h0 * c[i - 1];
      c[i] = h1 / diag;
      r[i] = (rhs - h0 * r[i - 1]) / diag;
    }
    for (std::size_t i = n - 2; i >= 1; --i) m_[i] = r[i] - c[i] * m_[i + 1];
  }

  double operator()(double t) const {
    t = std::clamp(t, x_.front(), x_.back());
    const std::size_t k = detail::bracket(x_, t);
    const double h = x_[k + 1] - x_[k];
    const double a = (x_[k + 1] - t) / h, b = (t - x_[k]) / h;
    return a * y_[k] + b * y_[k + 1] + ((a * a * a - a) * m_[k] + (b * b * b - b) * m_[k + 1]) * h * h / 6.0;
  }

 private:
  std::vector<double> x_, y_, m_;
};

/// Cubic Hermite interpolant with caller-supplied slopes and no limiting.
class HermiteCubic {
 public:
  HermiteCubic() = default;
  HermiteCubic(std::vector<double> x, std::vector<double> y, std::vector<double> slopes)
      : x_(std::move(x)), y_(std::move(y)), d_(std::move(slopes)) {
    detail::require_increasing(x_, "HermiteCubic");
    if (y_.size() != x_.size() || d_.size() != x_.size()) throw NumericalError("HermiteCubic: size mismatch");
  }

  double operator()(double t) const {
    t = std::clamp(t, x_.front(), x_.back());
    const std::size_t k = detail::bracket(x_, t);
    const double h = x_[k + 1] - x_[k];
    const double s = (t - x_[k]) / h;
    const double s2 = s * s, s3 = s2 * s;
    return (2 * s3 - 3 * s2 + 1) * y_[k] + (s3 - 2 * s2 + s) * h * d_[k] + (-2 * s3 + 3 * s2) * y_[k + 1] +
           (s3 - s2) * h * d_[k + 1];
  }

 private:
  std::vector<double> x_, y_, d_;
};

/// Finite-difference weights for the first and second derivative at z on
/// the nodes x (Fornberg's recursion). Returns {d1 weights, d2 weights}.
inline std::pair<std::vector<double>, std::vector<double>> fd_weights(double z, std::span<const double> x) {
  const std::size_t n = x.size();
  constexpr std::size_t M = 2;
  std::vector<std::array<double, M + 1>> c(n), prev(n);
  for (auto& row : c) row.fill(0.0);
  c[0][0] = 1.0;
  double c1 = 1.0, c4 = x[0] - z;
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t mn = std::min(i, M);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = x[i] - z;
    for (std::size_t j = 0; j < i; ++j) {
      const double c3 = x[i] - x[j];
      c2 *= c3;
      if (j == i - 1) {
        for (std::size_t k = mn; k >= 1; --k) c[i][k] = c1 * (static_cast<double>(k) * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (std::size_t k = mn; k >= 1; --k) c[j][k] = (c4 * c[j][k] - static_cast<double>(k) * c[j][k - 1]) / c3;
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> d1(n), d2(n);
  for (std::size_t i = 0; i < n; ++i) {
    d1[i] = c[i][1];
    d2[i] = c[i][2];
  }
  return {d1, d2};
}

/// First and second derivatives of sampled data using five-point stencils,
/// centered in the interior and shifted inward at the ends.
inline std::pair<std::vector<double>, std::vector<double>> derivatives5(std::span<const double> x,
                                                                        std::span<const double> f) {
  const std::size_t n = x.size();
  if (n < 5) throw NumericalError("derivatives5: need at least five nodes");
  std::vector<double> d1(n), d2(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t lo = std::min(i >= 2 ? i - 2 : 0, n - 5);
    const auto [w1, w2] = fd_weights(x[i], x.subspan(lo, 5));
    double a = 0.0, b = 0.0;
    for (std::size_t k = 0; k < 5; ++k) {
      a += w1[k] * f[lo + k];
      b += w2[k] * f[lo + k];
    }
    d1[i] = a;
    d2[i] = b;
  }
  return {d1, d2};
}

/// Composite trapezoid rule over sampled values.
inline double trapezoid(std::span<const double> x, std::span<const double> f) {
  double s = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i) s += 0.5 * (x[i] - x[i - 1]) * (f[i] + f[i - 1]);
  return s;
}

}  // namespace prandtl

#endif  // PRANDTL_INTERP_HPP
