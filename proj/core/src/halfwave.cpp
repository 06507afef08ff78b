#include "lrt/halfwave.hpp"

#include <cmath>

#include "lrt/fft.hpp"

namespace lrt {

namespace {

void check_speed(double c) {
  if (!(c > 0.0 && c <= 1.0))
    throw PreconditionError("half waves: wave speed must satisfy 0 < c <= 1");
}

}  // namespace

HalfWaveData split_half_waves(const CauchyData& data, double c) {
  check_speed(c);
  const SpatialGrid& g = data.grid();
  const SpectralField F1 = dft3(data.f1);
  const SpectralField F2 = dft3(data.f2);
  HalfWaveData hw(g, c);
  const double n3 = static_cast<double>(g.size());
  hw.m0 = F1.coeff[0].real() / n3;
  hw.m1 = F2.coeff[0].real() / n3;
  for (int ix = 0; ix < g.n; ++ix) {
    const double kx = g.freq(ix);
    for (int iy = 0; iy < g.n; ++iy) {
      const double ky = g.freq(iy);
      for (int iz = 0; iz < g.n; ++iz) {
        const double kz = g.freq(iz);
        const std::int64_t idx = g.lin(ix, iy, iz);
        const double kn = std::sqrt(kx * kx + ky * ky + kz * kz);
        if (kn == 0.0) {
          hw.h1.coeff[idx] = 0.0;
          hw.h2.coeff[idx] = 0.0;
          continue;
        }
        const cplx a = F1.coeff[idx];
        const cplx b = F2.coeff[idx] / (cplx(0.0, 1.0) * (c * kn));
        hw.h1.coeff[idx] = 0.5 * (a + b);
        hw.h2.coeff[idx] = 0.5 * (a - b);
      }
    }
  }
  return hw;
}

CauchyData merge_half_waves(const HalfWaveData& hw) {
  const SpatialGrid& g = hw.grid();
  SpectralField F1(g), F2(g);
  const double n3 = static_cast<double>(g.size());
  for (int ix = 0; ix < g.n; ++ix) {
    const double kx = g.freq(ix);
    for (int iy = 0; iy < g.n; ++iy) {
      const double ky = g.freq(iy);
      for (int iz = 0; iz < g.n; ++iz) {
        const double kz = g.freq(iz);
        const std::int64_t idx = g.lin(ix, iy, iz);
        const double kn = std::sqrt(kx * kx + ky * ky + kz * kz);
        F1.coeff[idx] = hw.h1.coeff[idx] + hw.h2.coeff[idx];
        F2.coeff[idx] = cplx(0.0, 1.0) * (hw.c * kn) * (hw.h1.coeff[idx] - hw.h2.coeff[idx]);
      }
    }
  }
  F1.coeff[0] = cplx(hw.m0 * n3, 0.0);
  F2.coeff[0] = cplx(hw.m1 * n3, 0.0);
  return CauchyData(idft3(F1), idft3(F2));
}

HalfWaveData advance_half_waves(const HalfWaveData& hw, double t) {
  const SpatialGrid& g = hw.grid();
  HalfWaveData out(g, hw.c);
  out.m0 = hw.m0 + t * hw.m1;
  out.m1 = hw.m1;
  for (int ix = 0; ix < g.n; ++ix) {
    const double kx = g.freq(ix);
    for (int iy = 0; iy < g.n; ++iy) {
      const double ky = g.freq(iy);
      for (int iz = 0; iz < g.n; ++iz) {
        const double kz = g.freq(iz);
        const std::int64_t idx = g.lin(ix, iy, iz);
        const double phase = hw.c * t * std::sqrt(kx * kx + ky * ky + kz * kz);
        out.h1.coeff[idx] = hw.h1.coeff[idx] * std::polar(1.0, phase);
        out.h2.coeff[idx] = hw.h2.coeff[idx] * std::polar(1.0, -phase);
      }
    }
  }
  return out;
}

ScalarField propagate_spectral(const HalfWaveData& hw, double t) {
  const SpatialGrid& g = hw.grid();
  SpectralField u(g);
  const double n3 = static_cast<double>(g.size());
  for (int ix = 0; ix < g.n; ++ix) {
    const double kx = g.freq(ix);
    for (int iy = 0; iy < g.n; ++iy) {
      const double ky = g.freq(iy);
      for (int iz = 0; iz < g.n; ++iz) {
        const double kz = g.freq(iz);
        const std::int64_t idx = g.lin(ix, iy, iz);
        const double phase = hw.c * t * std::sqrt(kx * kx + ky * ky + kz * kz);
        u.coeff[idx] = hw.h1.coeff[idx] * std::polar(1.0, phase) +
                       hw.h2.coeff[idx] * std::polar(1.0, -phase);
      }
    }
  }
  u.coeff[0] = cplx((hw.m0 + t * hw.m1) * n3, 0.0);
  return idft3(u);
}

SpacetimeField solve_cauchy_spectral(const CauchyData& data, double c, double t1, int nt) {
  const HalfWaveData hw = split_half_waves(data, c);
  SpacetimeField out(data.grid(), t1, nt);
  for (int j = 0; j < nt; ++j) {
    const ScalarField slice = propagate_spectral(hw, out.time(j));
    std::copy(slice.values.begin(), slice.values.end(), out.slice(j));
  }
  return out;
}

}  // namespace lrt
