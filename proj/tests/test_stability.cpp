#include <gtest/gtest.h>

#include <cmath>

#include "prandtl/stability.hpp"
#include "test_support.hpp"

using namespace prandtl;
using namespace testing_support;

namespace {

SolverConfig small_grid() {
  SolverConfig c;
  c.X = 0.1;
  c.nx = 16;
  c.ny = 96;
  c.dt = 0.005;
  c.t_end = 0.2;
  c.snapshot_stride = 4;
  c.eta_grid_size = 128;
  return c;
}

const SteadyState& small_base() {
  static const SteadyState s = blasius_base(small_grid(), blasius(), 1.0, 1e-9, 400000);
  return s;
}

}  // namespace

TEST(Experiment, ShapeNames) {
  EXPECT_EQ(parse_shape("bump"), PerturbationShape::Bump);
  EXPECT_EQ(to_string(parse_shape("origin_shift")), "origin_shift");
  EXPECT_THROW(parse_shape("wiggle"), ConfigError);
}

TEST(Experiment, SpecValidation) {
  ExperimentSpec s;
  EXPECT_NO_THROW(s.validate());
  s.amplitudes = {1e-3, 1e-2};
  EXPECT_THROW(s.validate(), ConfigError);
  s = ExperimentSpec{};
  s.fit_start = 1.0;
  EXPECT_THROW(s.validate(), ConfigError);
  s = ExperimentSpec{};
  s.beta0 = run_consts().beta0_max;
  EXPECT_NO_THROW(s.validate());
  EXPECT_THROW(s.validate(&run_consts()), ConfigError);
}

TEST(Experiment, BumpVanishesAtWallAndFarField) {
  EXPECT_EQ(bumped(0.0, 0.0, 0.1), 0.0);
  EXPECT_EQ(bumped(1.0, 3.0, 0.1), 1.0);
  EXPECT_DOUBLE_EQ(bumped(0.5, 2.0, 0.1), 0.5 + 0.1 * 4.0 * std::exp(-2.0) * 0.5);
}

TEST(DecayFit, ExactExponential) {
  std::vector<double> t, s;
  for (int i = 0; i <= 20; ++i) {
    t.push_back(0.1 * i);
    s.push_back(2.0 * std::exp(-3.0 * t.back()));
  }
  const DecayFit f = fit_decay(t, s, 1.0, 2.0);
  EXPECT_NEAR(f.rate, 3.0, 1e-12);
  EXPECT_NEAR(f.amplitude, 2.0, 1e-12);
  EXPECT_NEAR(f.r_squared, 1.0, 1e-12);
  EXPECT_EQ(f.points, 11u);
}

TEST(DecayFit, ConstantSeriesHasNoRate) {
  const std::vector<double> t{0, 1, 2, 3}, s{0.5, 0.5, 0.5, 0.5};
  const DecayFit f = fit_decay(t, s, 0, 3);
  EXPECT_EQ(f.rate, 0.0);
  EXPECT_EQ(f.r_squared, 0.0);
}

TEST(DecayFit, FloorAndShortWindows) {
  const std::vector<double> t{0, 1, 2, 3}, s{0.5, 0.2, 0.0, 0.0};
  EXPECT_TRUE(fit_decay(t, s, 0, 3).converged_to_floor);
  EXPECT_THROW(fit_decay(t, s, 0, 1), NumericalError);
  EXPECT_THROW(fit_decay(t, std::vector<double>{1.0}, 0, 1), NumericalError);
}

TEST(GaussianConstant, SolvesDefiningEquation) {
  for (double r : {0.01, 1.0, 50.0})
    for (double y : {0.5, 2.0, 5.0}) {
      const double C = gaussian_constant_for(r, y);
      EXPECT_NEAR(C * std::exp(C * y * y), r, 1e-10 * r);
    }
  EXPECT_EQ(gaussian_constant_for(3.0, 0.0), 3.0);
  EXPECT_EQ(gaussian_constant_for(0.0, 1.0), 0.0);
}

TEST(WithinFactor, Basics) {
  EXPECT_TRUE(within_factor(1.0, 1.9));
  EXPECT_FALSE(within_factor(1.0, 2.1));
  EXPECT_FALSE(within_factor(0.0, 1.0));
}

TEST(OrbitalReport, RatiosAndBounds) {
  OrbitalReport rep;
  rep.runs = {{0.2, {}, {}, 0.4, true, {}}, {0.1, {}, {}, 0.2, true, {}}, {0.05, {}, {}, 0.5, true, {}}};
  const auto q = rep.scaling_ratios();
  ASSERT_EQ(q.size(), 2u);
  EXPECT_DOUBLE_EQ(q[0], 1.0);
  EXPECT_DOUBLE_EQ(q[1], 0.2);
  EXPECT_TRUE(rep.bounded());
  EXPECT_FALSE(rep.scaling_ok());
}

TEST(SteadyBase, ConvergesOnSmallGrid) {
  const SteadyState& s = small_base();
  EXPECT_TRUE(s.converged);
  EXPECT_LT(s.final_rate, 1e-9);
  EXPECT_TRUE(columns_monotone(s.u));
}

TEST(Orbital, ZeroAmplitudeGivesIdenticalRuns) {
  ExperimentSpec spec;
  spec.t_end = 0.2;
  spec.amplitudes = {0.0};
  const auto rep = run_orbital(spec, small_grid(), small_base().u, run_params(), run_consts());
  ASSERT_EQ(rep.runs.size(), 1u);
  for (double s : rep.runs[0].sup_error) EXPECT_EQ(s, 0.0);
  EXPECT_TRUE(rep.bounded());
}

TEST(Orbital, ErrorScalesWithAmplitude) {
  ExperimentSpec spec;
  spec.t_end = 0.2;
  spec.amplitudes = {2e-3, 1e-3};
  const auto rep = run_orbital(spec, small_grid(), small_base().u, run_params(), run_consts());
  EXPECT_TRUE(rep.pass());
  EXPECT_GT(rep.runs[0].max_error, 0.0);
}

TEST(Asymptotic, ZeroAmplitudeSkipsFit) {
  ExperimentSpec spec;
  spec.t_end = 0.2;
  spec.amplitudes = {0.0};
  const auto rep = run_asymptotic(spec, small_grid(), small_base().u, run_params(), run_consts());
  EXPECT_TRUE(rep.fit_skipped);
  EXPECT_FALSE(rep.pass());
  EXPECT_EQ(rep.M, 0.0);
}

TEST(Asymptotic, InflowDecayRateIsRecovered) {
  ExperimentSpec spec;
  spec.t_end = 1.0;
  spec.amplitudes = {1e-3};
  spec.inflow_rate = 1.0;
  const auto rep = run_asymptotic(spec, small_grid(), small_base().u, run_params(), run_consts());
  EXPECT_EQ(rep.beta0, run_consts().beta0);
  EXPECT_TRUE(rep.pass()) << rep.fit.rate << " " << rep.fit.r_squared;
  EXPECT_TRUE(rep.inflow_bound_holds);
}

TEST(Serrin, ZeroAmplitudeLeavesBase) {
  const auto rep = run_serrin(small_grid(), small_base().u, 0.0, 1e-9, 100000);
  EXPECT_TRUE(rep.converged);
  for (double e : rep.error) EXPECT_LT(e, 1e-10);
  EXPECT_FALSE(rep.ladder_ok);
  EXPECT_NEAR(rep.adjustment_x, 0.05, 1e-15);
}

TEST(UDiffBound, FiniteOnInvariantRun) {
  const auto& r = invariant_run();
  const UDiffBound b = u_diff_bound_check(*r.f, *r.fbar, r.run, r.ref, 5.0);
  EXPECT_GT(b.samples, 0u);
  EXPECT_TRUE(b.finite());
  EXPECT_GT(b.C, 0.0);
  EXPECT_DOUBLE_EQ(b.C_y0, b.C * std::exp(b.C * 25.0));
  EXPECT_THROW(u_diff_bound_check(*r.f, testing_support::constant_field(1, 1, r.f->eta, [](double e) { return 1 - e; }), r.run,
                                  r.ref, 5.0),
               NumericalError);
}
