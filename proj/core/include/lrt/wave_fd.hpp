#pragma once

#include "lrt/field.hpp"

namespace lrt {

// Coefficients of the lower-order part of
//   d_t^2 f - c^2 lap f + b_t d_t f + b.grad f + p0 f = 0.
// Each coefficient is the sum of an optional per-slice scalar series (size nt)
// and an optional static spatial field (size n^3); empty vectors mean zero.
struct LowerOrderCoefficients {
  std::vector<double> bt_t;  // b_t(t_j)
  std::vector<double> p0_t;  // p0(t_j)
  std::vector<double> bt_x;  // b_t(x)
  std::vector<double> bx_x, by_x, bz_x;  // spatial advection b_i(x)
  std::vector<double> p0_x;  // p0(x)

  static LowerOrderCoefficients zero() { return {}; }
  bool is_zero() const {
    return bt_t.empty() && p0_t.empty() && bt_x.empty() && bx_x.empty() && by_x.empty() &&
           bz_x.empty() && p0_x.empty();
  }
};

// Leapfrog solver: centered second time difference, 7-point Laplacian,
// centered first-order terms (the damping term is folded into the diagonal
// of the update). First step is the Taylor expansion
// f(dt) = f1 + dt f2 + dt^2/2 * d_t^2 f(0) with the acceleration read off the
// PDE. Enforces the CFL condition c*dt/h <= 1/sqrt(3).
SpacetimeField solve_cauchy_fd(const CauchyData& data, double c,
                               const LowerOrderCoefficients& lower, double t1, int nt);

// Exact discrete transpose of the map (f1,f2) -> SpacetimeField above, with
// respect to <u,w>_M = h^3 dt sum and <f,g>_N = h^3 sum. Needed by the
// normal-equation solvers.
CauchyData fd_adjoint_apply(const SpacetimeField& source, double c,
                            const LowerOrderCoefficients& lower);

// Stable-step bound h/(c*sqrt(3)) used by the CFL checks.
double cfl_max_dt(double c, double spacing);

}  // namespace lrt
