#ifndef PRANDTL_GRID_HPP
#define PRANDTL_GRID_HPP

#include <cassert>
#include <cstddef>
#include <span>
#include <vector>

namespace prandtl {

/// Uniformly spaced nodes a, a+h, ..., b (n intervals, n+1 nodes).
inline std::vector<double> linspace(double a, double b, std::size_t n_intervals) {
  std::vector<double> out(n_intervals + 1);
  const double h = (b - a) / static_cast<double>(n_intervals);
  for (std::size_t i = 0; i <= n_intervals; ++i) out[i] = a + h * static_cast<double>(i);
  out.back() = b;
  return out;
}

/// Dense row-major 2-D array. Index (i, j) with j fastest.
class Grid2 {
 public:
  Grid2() = default;
  Grid2(std::size_t n0, std::size_t n1, double fill = 0.0)
      : n0_(n0), n1_(n1), data_(n0 * n1, fill) {}

  std::size_t n0() const noexcept { return n0_; }
  std::size_t n1() const noexcept { return n1_; }
  std::size_t size() const noexcept { return data_.size(); }

  double& operator()(std::size_t i, std::size_t j) {
    assert(i < n0_ && j < n1_);
    return data_[i * n1_ + j];
  }
  double operator()(std::size_t i, std::size_t j) const {
    assert(i < n0_ && j < n1_);
    return data_[i * n1_ + j];
  }

  std::span<double> row(std::size_t i) { return {data_.data() + i * n1_, n1_}; }
  std::span<const double> row(std::size_t i) const { return {data_.data() + i * n1_, n1_}; }

  std::vector<double>& data() noexcept { return data_; }
  const std::vector<double>& data() const noexcept { return data_; }

  bool operator==(const Grid2&) const = default;

 private:
  std::size_t n0_ = 0, n1_ = 0;
  std::vector<double> data_;
};

/// Dense row-major 3-D array, index (i, j, k) with k fastest.
class Grid3 {
 public:
  Grid3() = default;
  Grid3(std::size_t n0, std::size_t n1, std::size_t n2, double fill = 0.0)
      : n0_(n0), n1_(n1), n2_(n2), data_(n0 * n1 * n2, fill) {}

  std::size_t n0() const noexcept { return n0_; }
  std::size_t n1() const noexcept { return n1_; }
  std::size_t n2() const noexcept { return n2_; }
  bool empty() const noexcept { return data_.empty(); }

  double& operator()(std::size_t i, std::size_t j, std::size_t k) {
    assert(i < n0_ && j < n1_ && k < n2_);
    return data_[(i * n1_ + j) * n2_ + k];
  }
  double operator()(std::size_t i, std::size_t j, std::size_t k) const {
    assert(i < n0_ && j < n1_ && k < n2_);
    return data_[(i * n1_ + j) * n2_ + k];
  }

  std::span<double> line(std::size_t i, std::size_t j) {
    return {data_.data() + (i * n1_ + j) * n2_, n2_};
  }
  std::span<const double> line(std::size_t i, std::size_t j) const {
    return {data_.data() + (i * n1_ + j) * n2_, n2_};
  }

  std::vector<double>& data() noexcept { return data_; }
  const std::vector<double>& data() const noexcept { return data_; }

  bool operator==(const Grid3&) const = default;

 private:
  std::size_t n0_ = 0, n1_ = 0, n2_ = 0;
  std::vector<double> data_;
};

}  // namespace prandtl

#endif  // PRANDTL_GRID_HPP
