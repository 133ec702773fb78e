#ifndef PRANDTL_TESTS_SUPPORT_HPP
#define PRANDTL_TESTS_SUPPORT_HPP

// Shared runs for the unit tests, computed once per process.

#include <memory>

#include "prandtl/barriers.hpp"
#include "prandtl/blasius.hpp"
#include "prandtl/crocco.hpp"
#include "prandtl/invariants.hpp"
#include "prandtl/params.hpp"
#include "prandtl/solver.hpp"
#include "prandtl/stability.hpp"

namespace testing_support {

using namespace prandtl;

inline const BlasiusSolution& blasius() {
  static const BlasiusSolution sol = shoot();
  return sol;
}

/// c0 = 0.25, X = 0.1: the ParamSet whose b stays representable.
inline ParamSet run_params() { return ParamSet(0.25, 0.005, 0.5, 1.0, 0.1, 5.0, 1.0); }

inline const DerivedConstants& run_consts() {
  static const DerivedConstants k = constants_for(run_params());
  return k;
}

inline SolverConfig invariant_grid() {
  SolverConfig c;
  c.X = 0.1;
  c.y_max = 15.0;
  c.nx = 32;
  c.ny = 256;
  c.dt = 0.002;
  c.t_end = 1.0;
  c.snapshot_stride = 25;
  return c;
}

/// Origin-shift data (a = 0.5) around the converged steady state, plus the
/// steady state marched over the same times.
struct InvariantRun {
  SolverConfig cfg;
  SteadyState base;
  VelocityTrajectory run, ref;
  std::shared_ptr<const CroccoField> f, fbar;
};

inline const InvariantRun& invariant_run() {
  static const InvariantRun r = [] {
    InvariantRun out;
    out.cfg = invariant_grid();
    out.base = blasius_base(out.cfg, blasius(), 1.0, 1e-9, 400000);
    const PerturbedData d = perturbed_data(out.cfg, out.base.u, 0.5, PerturbationShape::OriginShift, 1.0, 0.0);
    out.run = solve(out.cfg, d.init, d.inflow);
    out.ref = solve(out.cfg, out.base.u, fixed_inflow(out.cfg, out.base.u));
    const auto eta = uniform_eta_grid();
    out.f = std::make_shared<const CroccoField>(to_crocco_field(out.run, eta));
    out.fbar = std::make_shared<const CroccoField>(to_crocco_field(out.ref, eta));
    return out;
  }();
  return r;
}

/// Crocco field with every slice equal to the profile w(eta) and zero
/// tau/xi derivatives.
template <class Fn>
CroccoField constant_field(std::size_t nt, std::size_t nx, std::vector<double> eta, Fn&& w) {
  CroccoField f;
  f.eta = std::move(eta);
  for (std::size_t s = 0; s < nt; ++s) f.tau.push_back(0.1 * static_cast<double>(s));
  for (std::size_t x = 0; x < nx; ++x) f.xi.push_back(0.01 * static_cast<double>(x));
  const std::size_t ne = f.eta.size();
  f.w = Grid3(nt, nx, ne);
  f.d_tau_w = Grid3(nt, nx, ne);
  f.d_xi_w = Grid3(nt, nx, ne);
  f.d_eta2_w = Grid3(nt, nx, ne);
  for (std::size_t s = 0; s < nt; ++s)
    for (std::size_t x = 0; x < nx; ++x)
      for (std::size_t e = 0; e < ne; ++e) f.w(s, x, e) = w(f.eta[e]);
  differentiate_field(f);
  return f;
}

}  // namespace testing_support

#endif  // PRANDTL_TESTS_SUPPORT_HPP
