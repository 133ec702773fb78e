#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>

#include "prandtl/crocco.hpp"

using namespace prandtl;

namespace {

ProfileU exponential_profile(std::size_t n = 2000, double y_max = 20.0) {
  ProfileU p;
  for (std::size_t j = 0; j <= n; ++j) {
    p.y.push_back(y_max * static_cast<double>(j) / static_cast<double>(n));
    p.u.push_back(1.0 - std::exp(-p.y.back()));
  }
  return p;
}

}  // namespace

TEST(EtaGrid, UniformUpToCut) {
  const auto g = uniform_eta_grid(11, 0.01);
  EXPECT_EQ(g.front(), 0.0);
  EXPECT_EQ(g.back(), 0.99);
  EXPECT_THROW(uniform_eta_grid(0), ConfigError);
  EXPECT_THROW(uniform_eta_grid(10, 0.5), ConfigError);
}

TEST(Crocco, ExponentialProfileMapsToOneMinusEta) {
  const auto eta = uniform_eta_grid(401);
  const CroccoProfile cp = forward(exponential_profile(), eta);
  for (std::size_t k = 0; k < eta.size(); ++k) EXPECT_NEAR(cp.w[k], 1.0 - eta[k], 1e-7);
}

TEST(Crocco, InverseHeightOfHalfIsLn2) {
  const CroccoProfile cp = forward(exponential_profile(), uniform_eta_grid(8001));
  EXPECT_NEAR(inverse_y(cp, 0.5), std::log(2.0), 1e-6);
  EXPECT_EQ(inverse_y(cp, 0.0), 0.0);
  EXPECT_THROW(inverse_y(cp, 0.9999), NumericalError);
}

TEST(Crocco, ReconstructRoundTrip) {
  const ProfileU p = exponential_profile();
  const CroccoProfile cp = forward(p, uniform_eta_grid(8001));
  std::vector<double> y;
  for (int j = 0; j <= 100; ++j) y.push_back(0.05 * j);
  Diagnostics d;
  const ProfileU back = reconstruct_u(cp, y, &d);
  for (std::size_t j = 0; j < y.size(); ++j) EXPECT_NEAR(back.u[j], 1.0 - std::exp(-y[j]), 1e-6);
  EXPECT_TRUE(d.warnings.empty());
  reconstruct_u(cp, std::vector<double>{50.0}, &d);
  EXPECT_EQ(d.warnings.size(), 1u);
}

TEST(Crocco, NonMonotoneColumnNamesIndex) {
  ProfileU p = exponential_profile(100);
  p.u[7] = p.u[6];
  try {
    forward(p, uniform_eta_grid(16));
    FAIL();
  } catch (const NumericalError& e) {
    EXPECT_NE(std::string(e.what()).find("index 7"), std::string::npos);
  }
  EXPECT_THROW(validate_profile(p), NumericalError);
}

TEST(Crocco, FlatTailAboveGridIsDiscarded) {
  ProfileU p = exponential_profile(200);
  p.u.back() = 1.0;
  p.u[p.u.size() - 2] = 1.0;
  EXPECT_NO_THROW(forward(p, uniform_eta_grid(32)));
}

TEST(Crocco, ComparisonIntegral) {
  CroccoProfile a{{0.0, 0.5, 1.0}, {1.0, 1.0, 1.0}}, b{{0.0, 0.5, 1.0}, {2.0, 2.0, 2.0}};
  EXPECT_DOUBLE_EQ(comparison_integral(a, b), 1.0);
  EXPECT_EQ(comparison_integral(a, a), 0.0);
  b.eta[1] = 0.4;
  EXPECT_THROW(comparison_integral(a, b), NumericalError);
}

TEST(Crocco, CsvRoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / "prandtl_crocco_csv";
  std::filesystem::create_directories(dir);
  const ProfileU p = exponential_profile(50);
  write_profile_csv(dir / "p.csv", p);
  const ProfileU q = read_profile_csv(dir / "p.csv");
  EXPECT_EQ(p.y, q.y);
  EXPECT_EQ(p.u, q.u);
  const CroccoProfile cp = forward(p, uniform_eta_grid(20));
  write_crocco_csv(dir / "c.csv", cp);
  EXPECT_EQ(read_crocco_csv(dir / "c.csv").w, cp.w);
  std::filesystem::remove_all(dir);
}
