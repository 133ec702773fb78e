#include <gtest/gtest.h>

#include <cmath>

#include "oracle_values.hpp"
#include "prandtl/params.hpp"

using namespace prandtl;

namespace {

void expect_config_error(const std::function<void()>& fn, const std::string& needle) {
  try {
    fn();
    FAIL() << "no ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find(needle), std::string::npos) << e.what();
  }
}

void expect_rel(double got, double want, double tol) { EXPECT_LE(std::abs(got - want), tol * std::abs(want)) << got << " vs " << want; }

}  // namespace

TEST(ParamSet, RangeChecksNameTheField) {
  expect_config_error([] { ParamSet(1.5, 0.005, 0.5, 1, 1, 5, 1); }, "c0 must lie in (0,1)");
  expect_config_error([] { ParamSet(0.5, 0.02, 0.5, 1, 1, 5, 1); }, "mu must lie in (0,1/100)");
  expect_config_error([] { ParamSet(0.5, 0.005, 1.0, 1, 1, 5, 1); }, "alpha0");
  expect_config_error([] { ParamSet(0.5, 0.005, 0.5, 0, 1, 5, 1); }, "C1");
  expect_config_error([] { ParamSet(0.5, 0.005, 0.5, 1, 1, 5, 0); }, "x0");
  expect_config_error([] { ParamSet(0.5, 0.005, 0.5, 1, 1, 5, 1, -1); }, "C2");
}

TEST(ParamSet, C0IsReciprocal) {
  const ParamSet p(0.25, 0.005, 0.5, 1, 0.1, 5, 1);
  EXPECT_DOUBLE_EQ(p.C0(), 4.0);
  EXPECT_EQ(ParamSet().c0(), 0.5);
}

TEST(Constants, ReferenceMatchesOracle) {
  const DerivedConstants k = constants_for(ParamSet());
  expect_rel(k.beta, oracle::reference::kBeta, 1e-12);
  expect_rel(k.b, oracle::reference::kB, 1e-12);
  expect_rel(k.K, oracle::reference::kK, 1e-12);
  expect_rel(k.delta, oracle::reference::kDelta, 1e-12);
  expect_rel(k.beta0_max, oracle::reference::kBeta0Max, 1e-12);
  expect_rel(k.beta0, oracle::reference::kBeta0, 1e-12);
}

TEST(Constants, RunParamsMatchOracle) {
  const ParamSet p(0.25, 0.005, 0.5, 1, 0.1, 5, 1);
  const DerivedConstants k = constants_for(p);
  expect_rel(k.beta, oracle::run::kBeta, 1e-12);
  expect_rel(k.b, oracle::run::kB, 1e-12);
  expect_rel(k.K, oracle::run::kK, 1e-12);
  expect_rel(k.delta, oracle::run::kDelta, 1e-12);
  expect_rel(k.beta0_max, oracle::run::kBeta0Max, 1e-12);
  expect_rel(k.beta0, oracle::run::kBeta0, 1e-12);
  EXPECT_NO_THROW(validate_constants(p, k));
}

TEST(Constants, SweepMaxCloseToContinuousMax) {
  const double grid_max = compute_beta(ParamSet(), 100000) / kBetaSafetyFactor;
  expect_rel(grid_max, oracle::reference::kGridMax, 1e-12);
  EXPECT_LE(grid_max, oracle::reference::kContinuousMax);
  expect_rel(grid_max, oracle::reference::kContinuousMax, 1e-9);
}

TEST(Constants, ClosedFormAtUnitC0AndZeroX) {
  const DerivedConstants k = derive_constants(1.0, 0.5, 1.0, 0.0, 50.0);
  EXPECT_DOUBLE_EQ(k.b, 0.25 * std::exp(-8.0 / 3.0));
  EXPECT_DOUBLE_EQ(k.K, 2.0);
  EXPECT_DOUBLE_EQ(k.beta0_max, k.b * k.b * 0.25);
  EXPECT_DOUBLE_EQ(k.beta0, 0.9 * k.beta0_max);
  // 0.1 * min(3/16, 1/4) b^2 is the smallest of the three.
  EXPECT_DOUBLE_EQ(k.delta, 0.1 * (3.0 / 16.0) * k.b * k.b);
}

TEST(Constants, KGrowsWithC1BelowUnitAlpha) {
  EXPECT_DOUBLE_EQ(derive_constants(0.5, 0.5, 4.0, 0.0, 1.0).K, 8.0);
  EXPECT_DOUBLE_EQ(derive_constants(0.5, 0.5, 0.25, 0.0, 1.0).K, 2.0);
}

TEST(Constants, Beta0OverrideAndValidation) {
  const ParamSet p(0.25, 0.005, 0.5, 1, 0.1, 5, 1);
  const DerivedConstants base = constants_for(p);
  const DerivedConstants k = constants_for(p, 0.5 * base.beta0_max);
  EXPECT_DOUBLE_EQ(k.beta0, 0.5 * base.beta0_max);
  EXPECT_THROW(validate_constants(p, constants_for(p, base.beta0_max)), NumericalError);
  EXPECT_THROW(validate_constants(p, constants_for(p, 0.0)), NumericalError);
}

TEST(Constants, UnderflowIsReported) {
  const ParamSet p(0.5, 0.005, 0.5, 1, 10.0, 5, 1);
  const DerivedConstants k = constants_for(p);
  EXPECT_EQ(k.b, 0.0);
  EXPECT_THROW(validate_constants(p, k), NumericalError);
}

TEST(Barrier, ProfileAndSecondDerivative) {
  EXPECT_DOUBLE_EQ(lower_barrier(0.0), std::exp(-8.0 / 3.0));
  EXPECT_EQ(lower_barrier(1.0), 0.0);
  const double h = 1e-4, e = 0.6;
  const double fd = (lower_barrier(e + h) - 2 * lower_barrier(e) + lower_barrier(e - h)) / (h * h);
  EXPECT_NEAR(lower_barrier_dd(e), fd, 1e-6);
  EXPECT_DOUBLE_EQ(upper_envelope(2.0, 0.005, 0.0), 2.0 * std::sqrt(-std::log(0.005)));
}
