#include "lrt/field.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "lrt/fft.hpp"

namespace lrt {

SpatialGrid::SpatialGrid(int n_, double L_) : n(n_), L(L_) {
  if (n < 4) throw PreconditionError("SpatialGrid: n must be >= 4");
  if (!(L > 0.0)) throw PreconditionError("SpatialGrid: L must be positive");
}

ScalarField::ScalarField(const SpatialGrid& g, std::vector<double> v) : grid(g), values(std::move(v)) {
  if (static_cast<std::int64_t>(values.size()) != g.size())
    throw PreconditionError("ScalarField: value count does not match grid");
}

SpacetimeField::SpacetimeField(const SpatialGrid& g, double t1_, int nt_)
    : grid(g), t1(t1_), nt(nt_) {
  if (nt < 2) throw PreconditionError("SpacetimeField: nt must be >= 2");
  if (!(t1 > 0.0)) throw PreconditionError("SpacetimeField: t1 must be positive");
  slices.assign(static_cast<std::int64_t>(nt) * g.size(), 0.0);
}

CauchyData::CauchyData(ScalarField a, ScalarField b) : f1(std::move(a)), f2(std::move(b)) {
  if (!(f1.grid == f2.grid)) throw PreconditionError("CauchyData: components on different grids");
}

SpectralField dft3(const ScalarField& f) {
  SpectralField out(f.grid);
  const std::int64_t m = f.grid.size();
  for (std::int64_t i = 0; i < m; ++i) out.coeff[i] = cplx(f.values[i], 0.0);
  fft::forward3(f.grid.n, out.coeff.data());
  return out;
}

ScalarField idft3(const SpectralField& s) {
  std::vector<cplx> buf = s.coeff;
  fft::backward3(s.grid.n, buf.data());
  ScalarField out(s.grid);
  const double scale = 1.0 / static_cast<double>(s.grid.size());
  const std::int64_t m = s.grid.size();
  for (std::int64_t i = 0; i < m; ++i) out.values[i] = buf[i].real() * scale;
  return out;
}

std::vector<cplx> idft3_complex(const SpectralField& s) {
  std::vector<cplx> buf = s.coeff;
  fft::backward3(s.grid.n, buf.data());
  const double scale = 1.0 / static_cast<double>(s.grid.size());
  for (auto& z : buf) z *= scale;
  return buf;
}

double sobolev_norm(const ScalarField& f, SobolevIndex s) {
  const SpectralField sp = dft3(f);
  const SpatialGrid& g = f.grid;
  const double vol_factor = g.volume() / static_cast<double>(g.size());  // L^3/n^3
  double acc = 0.0;
  for (int ix = 0; ix < g.n; ++ix) {
    const double kx = g.freq(ix);
    for (int iy = 0; iy < g.n; ++iy) {
      const double ky = g.freq(iy);
      for (int iz = 0; iz < g.n; ++iz) {
        const double kz = g.freq(iz);
        const double k2 = kx * kx + ky * ky + kz * kz;
        acc += std::pow(1.0 + k2, s.s) * std::norm(sp.coeff[g.lin(ix, iy, iz)]);
      }
    }
  }
  return std::sqrt(vol_factor * acc / static_cast<double>(g.size()));
}

double l2_norm(const ScalarField& f) {
  double acc = 0.0;
  for (double v : f.values) acc += v * v;
  return std::sqrt(f.grid.cell_volume() * acc);
}

ScalarField fractional_laplacian(const ScalarField& f, double power) {
  if (power == 0.0) return f;
  SpectralField sp = dft3(f);
  const SpatialGrid& g = f.grid;
  if (power < 0.0) {
    double cmax = 0.0;
    for (const auto& z : sp.coeff) cmax = std::max(cmax, std::abs(z));
    if (cmax > 0.0 && std::abs(sp.coeff[0]) > 1e-10 * cmax)
      throw NonzeroMeanError("fractional_laplacian: negative power on a non-mean-zero field");
  }
  for (int ix = 0; ix < g.n; ++ix) {
    const double kx = g.freq(ix);
    for (int iy = 0; iy < g.n; ++iy) {
      const double ky = g.freq(iy);
      for (int iz = 0; iz < g.n; ++iz) {
        const double kz = g.freq(iz);
        const double k2 = kx * kx + ky * ky + kz * kz;
        const std::int64_t idx = g.lin(ix, iy, iz);
        if (k2 == 0.0)
          sp.coeff[idx] = 0.0;  // |0|^{2p} = 0 for p > 0; zeroed by contract for p < 0
        else
          sp.coeff[idx] *= std::pow(k2, power);
      }
    }
  }
  return idft3(sp);
}

namespace {

// Deterministic standard normal from splitmix-style bit mixing + Box-Muller;
// avoids std::normal_distribution, whose stream is implementation-defined.
struct NormalRng {
  std::mt19937_64 gen;
  explicit NormalRng(std::uint64_t seed) : gen(seed) {}
  double uniform() {
    return (gen() >> 11) * 0x1.0p-53 + 0x1.0p-54;  // (0,1)
  }
  double normal() {
    const double u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }
};

}  // namespace

ScalarField make_bandlimited_random(const SpatialGrid& g, int kmax, std::uint64_t seed) {
  if (kmax < 0 || kmax > g.n / 2)
    throw PreconditionError("make_bandlimited_random: need 0 <= kmax <= n/2");
  NormalRng rng(seed);
  SpectralField sp(g);
  // Fill the cube |k|_inf <= kmax in a fixed order, then Hermite-symmetrize
  // so the field is real.
  for (int kx = -kmax; kx <= kmax; ++kx) {
    for (int ky = -kmax; ky <= kmax; ++ky) {
      for (int kz = -kmax; kz <= kmax; ++kz) {
        const int ix = (kx + g.n) % g.n;
        const int iy = (ky + g.n) % g.n;
        const int iz = (kz + g.n) % g.n;
        const double re = rng.normal();
        const double im = rng.normal();
        sp.coeff[g.lin(ix, iy, iz)] = cplx(re, im);
      }
    }
  }
  std::vector<cplx> sym(sp.coeff.size());
  for (int ix = 0; ix < g.n; ++ix) {
    const int jx = (g.n - ix) % g.n;
    for (int iy = 0; iy < g.n; ++iy) {
      const int jy = (g.n - iy) % g.n;
      for (int iz = 0; iz < g.n; ++iz) {
        const int jz = (g.n - iz) % g.n;
        sym[g.lin(ix, iy, iz)] =
            0.5 * (sp.coeff[g.lin(ix, iy, iz)] + std::conj(sp.coeff[g.lin(jx, jy, jz)]));
      }
    }
  }
  sp.coeff = std::move(sym);
  // Scale coefficients to n^3/sqrt(#modes) so grid values are O(1) for any kmax.
  const double nmodes = std::pow(2.0 * kmax + 1.0, 3.0);
  const double scale = static_cast<double>(g.size()) / std::sqrt(nmodes);
  for (auto& z : sp.coeff) z *= scale;
  ScalarField out = idft3(sp);
  for (double v : out.values)
    if (!std::isfinite(v)) throw NumericalError("make_bandlimited_random: non-finite output");
  return out;
}

bool support_check(const CauchyData& data, double c, double t1) {
  const SpatialGrid& g = data.grid();
  const double h = g.spacing();
  const double margin = c * t1 + 2.0 * h;

  double vmax = 0.0;
  for (double v : data.f1.values) vmax = std::max(vmax, std::abs(v));
  for (double v : data.f2.values) vmax = std::max(vmax, std::abs(v));
  if (vmax == 0.0) return true;
  const double thresh = 1e-10 * vmax;

  // Per-axis bounding interval of the essential support.
  int lo[3] = {g.n, g.n, g.n};
  int hi[3] = {-1, -1, -1};
  auto scan = [&](const std::vector<double>& vals) {
    for (int ix = 0; ix < g.n; ++ix)
      for (int iy = 0; iy < g.n; ++iy)
        for (int iz = 0; iz < g.n; ++iz) {
          if (std::abs(vals[g.lin(ix, iy, iz)]) <= thresh) continue;
          const int idx[3] = {ix, iy, iz};
          for (int a = 0; a < 3; ++a) {
            lo[a] = std::min(lo[a], idx[a]);
            hi[a] = std::max(hi[a], idx[a]);
          }
        }
  };
  scan(data.f1.values);
  scan(data.f2.values);
  for (int a = 0; a < 3; ++a) {
    if (hi[a] < 0) continue;  // empty support on this axis
    const double lo_x = lo[a] * h - margin;
    const double hi_x = hi[a] * h + margin;
    if (lo_x <= 0.0 || hi_x >= g.L) return false;
  }
  return true;
}

ScalarField resample_bandlimited(const ScalarField& f, const SpatialGrid& fine) {
  if (fine.L != f.grid.L)
    throw PreconditionError("resample_bandlimited: boxes must match");
  if (fine.n < f.grid.n)
    throw PreconditionError("resample_bandlimited: target grid must be at least as fine");
  const SpectralField sp = dft3(f);
  SpectralField out(fine);
  const SpatialGrid& g = f.grid;
  const double scale = static_cast<double>(fine.size()) / static_cast<double>(g.size());
  for (int ix = 0; ix < g.n; ++ix) {
    const int kx = g.signed_index(ix);
    for (int iy = 0; iy < g.n; ++iy) {
      const int ky = g.signed_index(iy);
      for (int iz = 0; iz < g.n; ++iz) {
        const int kz = g.signed_index(iz);
        const int jx = (kx + fine.n) % fine.n;
        const int jy = (ky + fine.n) % fine.n;
        const int jz = (kz + fine.n) % fine.n;
        out.coeff[out.grid.lin(jx, jy, jz)] = sp.coeff[g.lin(ix, iy, iz)] * scale;
      }
    }
  }
  return idft3(out);
}

double field_max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

void axpy(double a, const std::vector<double>& x, std::vector<double>& y) {
  for (size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double acc = 0.0;
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

double smoothstep_c2(double u) {
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return 1.0;
  return u * u * u * (10.0 + u * (-15.0 + 6.0 * u));
}

double mean(const std::vector<double>& v) {
  double acc = 0.0;
  for (double x : v) acc += x;
  return acc / static_cast<double>(v.size());
}

}  // namespace lrt
