#pragma once

#include "lrt/halfwave.hpp"
#include "lrt/rayset.hpp"

namespace lrt {

enum class TimeQuadrature { Trapezoid, Simpson };
enum class SpatialInterp { Trilinear, Tricubic };

// Trapezoid + trilinear is the tested default; Simpson (odd nt) and tricubic
// exist behind the option for sensitivity checks.
struct TransformOptions {
  TimeQuadrature quad = TimeQuadrature::Trapezoid;
  SpatialInterp interp = SpatialInterp::Trilinear;
};

// X f (y,v) = sum_j w_j dt f(t_j, y + t_j v), interpolated with periodic
// wrap. Exact for fields constant in space; linear in f.
Sinogram transform_physical(const SpacetimeField& f, const RaySet& rays,
                            const TransformOptions& opt = {});

// Exact transpose of transform_physical w.r.t. the weighted sinogram inner
// product and <u,w>_M = h^3 dt sum: smears each value along its ray with the
// same interpolation/quadrature weights scaled by w_v. Full base grid only.
SpacetimeField xray_adjoint(const Sinogram& sino, const SpatialGrid& grid, int nt,
                            const TransformOptions& opt = {});

// Per-mode sinogram multiplier m_pm(xi, v) = (e^{i t1 (v.xi +- c|xi|)} - 1)
// / (i (v.xi +- c|xi|)), equal to t1 exactly where the phase rate vanishes
// (for c = 1 and the plus sign that is the resonance v = -xi/|xi|).
cplx ray_multiplier(double t1, const Vec3& xi, const Vec3& v, double c, int sign);

// Exact sinogram of the wave solution determined by hw: per direction the
// y-spectrum is h1^ m_+ + h2^ m_-, the zero mode contributes
// t1*m0 + t1^2/2 * m1 uniformly. Requires the full base grid.
Sinogram transform_spectral(const HalfWaveData& hw, const RaySet& rays);

}  // namespace lrt
