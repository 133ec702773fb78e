#include <gtest/gtest.h>

#include <cmath>

#include "oracle_values.hpp"
#include "prandtl/blasius.hpp"
#include "prandtl/crocco.hpp"
#include "test_support.hpp"

using namespace prandtl;
using testing_support::blasius;

TEST(Blasius, WallShearMatchesOracle) {
  EXPECT_NEAR(blasius().fpp0(), oracle::kFpp0Zmax12, 1e-7);
  EXPECT_NEAR(blasius().fpp0(), oracle::kFpp0Rk4Million, 5e-4);
}

TEST(Blasius, ProfileValuesAtUnitZeta) {
  EXPECT_NEAR(blasius().f_at(1.0), oracle::kFAt1, 1e-7);
  EXPECT_NEAR(blasius().fp_at(1.0), oracle::kFpAt1, 1e-7);
  EXPECT_NEAR(blasius().fpp_at(1.0), oracle::kFppAt1, 1e-7);
}

TEST(Blasius, FarFieldReachesOne) {
  EXPECT_NEAR(blasius().fp().back(), 1.0, 1e-8);
  EXPECT_LT(blasius().fpp().back(), 1e-6);
  EXPECT_EQ(blasius().fp_at(40.0), blasius().fp().back());
}

TEST(Blasius, RejectsBadOptions) {
  EXPECT_THROW(shoot(5.0), ConfigError);
  EXPECT_THROW(shoot(12.0, 10), ConfigError);
  EXPECT_THROW(shoot(12.0, 100000, 1e-2), ConfigError);
}

TEST(Blasius, VelocityFieldIsSelfSimilarAndDivergenceFree) {
  const auto& s = blasius();
  const auto w0 = eval_velocity(s, 0.0, 0.0, 1.0);
  EXPECT_EQ(w0.u, 0.0);
  EXPECT_NEAR(w0.v, 0.0, 1e-15);
  EXPECT_DOUBLE_EQ(eval_velocity(s, 3.0, 2.0, 1.0).u, s.fp_at(1.0));
  const double h = 1e-4;
  for (double x : {0.0, 0.5, 2.0})
    for (double y : {0.3, 1.5, 4.0}) {
      const double ux = (eval_velocity(s, x + h, y, 1.0).u - eval_velocity(s, x - h, y, 1.0).u) / (2 * h);
      const double vy = (eval_velocity(s, x, y + h, 1.0).v - eval_velocity(s, x, y - h, 1.0).v) / (2 * h);
      EXPECT_NEAR(ux + vy, 0.0, 1e-6) << x << "," << y;
    }
}

TEST(Blasius, CroccoImageMatchesNumericTransform) {
  const auto& s = blasius();
  const auto eta = uniform_eta_grid(64);
  const auto w = wB_profile(s, 0.5, 1.0, eta);
  EXPECT_DOUBLE_EQ(w.front(), s.fpp0() / std::sqrt(1.5));
  ProfileU p;
  for (int j = 0; j <= 3000; ++j) {
    p.y.push_back(0.005 * j);
    p.u.push_back(eval_velocity(s, 0.5, p.y.back(), 1.0).u);
  }
  const CroccoProfile cp = forward(p, eta);
  for (std::size_t k = 0; k < eta.size(); ++k) EXPECT_NEAR(cp.w[k], w[k], 1e-6) << eta[k];
}

TEST(Blasius, ClampedEtaIsReported) {
  Diagnostics d;
  const std::vector<double> eta{0.5, 1.5};
  wB_profile(blasius(), 0.0, 1.0, eta, &d);
  EXPECT_EQ(d.warnings.size(), 1u);
}
