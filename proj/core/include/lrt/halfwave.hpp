#pragma once

#include "lrt/field.hpp"

namespace lrt {

// Propagator-split Cauchy data: u^(t,xi) = e^{i c t |xi|} h1 + e^{-i c t |xi|} h2
// for xi != 0, with the affine k=0 mode u^(t,0)/n^3 = m0 + t*m1 stored
// separately so no division by |xi| = 0 ever happens.
struct HalfWaveData {
  SpectralField h1;
  SpectralField h2;
  double m0 = 0.0;  // mean of f1
  double m1 = 0.0;  // mean of f2
  double c = 1.0;

  HalfWaveData() = default;
  HalfWaveData(const SpatialGrid& g, double c_) : h1(g), h2(g), c(c_) {}
  const SpatialGrid& grid() const { return h1.grid; }
};

// h1^ = (f1^ + f2^/(i c |xi|))/2, h2^ = (f1^ - f2^/(i c |xi|))/2. Requires
// 0 < c <= 1. Exact inverse of merge_half_waves.
HalfWaveData split_half_waves(const CauchyData& data, double c);

// f1 = h1 + h2, f2 = i c lap^{1/2} (h1 - h2), plus the affine zero mode.
CauchyData merge_half_waves(const HalfWaveData& hw);

// Cauchy data of the evolved solution at time t (phases applied to h1/h2,
// zero mode advanced affinely).
HalfWaveData advance_half_waves(const HalfWaveData& hw, double t);

// Field value u(t, .) as a real grid function.
ScalarField propagate_spectral(const HalfWaveData& hw, double t);

// Exact spectral solution of box_c f = 0 sampled on nt uniform slices.
SpacetimeField solve_cauchy_spectral(const CauchyData& data, double c, double t1, int nt);

}  // namespace lrt
