#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "lrt/errors.hpp"

namespace lrt {

using cplx = std::complex<double>;
using Vec3 = std::array<double, 3>;

// Periodic cube [0,L)^3 sampled at n points per axis. The frequency lattice
// is xi_k = 2*pi*k/L with k in {-n/2, ..., n/2-1} per axis; index j in
// [0, n) maps to k = j for j < n/2 and k = j - n otherwise.
struct SpatialGrid {
  int n = 0;
  double L = 0.0;

  SpatialGrid() = default;
  SpatialGrid(int n_, double L_);

  double spacing() const { return L / n; }
  std::int64_t size() const { return static_cast<std::int64_t>(n) * n * n; }
  double cell_volume() const { return spacing() * spacing() * spacing(); }
  double volume() const { return L * L * L; }

  // Signed lattice integer of axis index j.
  int signed_index(int j) const { return j < n / 2 ? j : j - n; }
  // Physical frequency of axis index j.
  double freq(int j) const { return 2.0 * M_PI * signed_index(j) / L; }

  std::int64_t lin(int ix, int iy, int iz) const {
    return (static_cast<std::int64_t>(ix) * n + iy) * n + iz;
  }

  bool operator==(const SpatialGrid& o) const { return n == o.n && L == o.L; }
};

struct SobolevIndex {
  double s = 0.0;
};

// Real grid function on a SpatialGrid, row-major values[n][n][n].
struct ScalarField {
  SpatialGrid grid;
  std::vector<double> values;

  ScalarField() = default;
  explicit ScalarField(const SpatialGrid& g) : grid(g), values(g.size(), 0.0) {}
  ScalarField(const SpatialGrid& g, std::vector<double> v);

  double& operator()(int ix, int iy, int iz) { return values[grid.lin(ix, iy, iz)]; }
  double operator()(int ix, int iy, int iz) const { return values[grid.lin(ix, iy, iz)]; }
};

// Discrete Fourier coefficients of a grid function, same layout as the grid
// with axis index j <-> signed frequency index. For real fields the
// coefficients satisfy c(-k) = conj(c(k)) to round-off.
struct SpectralField {
  SpatialGrid grid;
  std::vector<cplx> coeff;

  SpectralField() = default;
  explicit SpectralField(const SpatialGrid& g) : grid(g), coeff(g.size(), cplx(0.0)) {}

  cplx& operator()(int ix, int iy, int iz) { return coeff[grid.lin(ix, iy, iz)]; }
  cplx operator()(int ix, int iy, int iz) const { return coeff[grid.lin(ix, iy, iz)]; }
};

// Time slices of a space-time field on [0,t1] x grid; slice j is at
// t_j = j*dt with dt = t1/(nt-1).
struct SpacetimeField {
  SpatialGrid grid;
  double t1 = 0.0;
  int nt = 0;
  std::vector<double> slices;  // nt * n^3, slice-major

  SpacetimeField() = default;
  SpacetimeField(const SpatialGrid& g, double t1_, int nt_);

  double dt() const { return t1 / (nt - 1); }
  double time(int j) const { return j * dt(); }
  double* slice(int j) { return slices.data() + static_cast<std::int64_t>(j) * grid.size(); }
  const double* slice(int j) const {
    return slices.data() + static_cast<std::int64_t>(j) * grid.size();
  }
};

// Cauchy pair (f1, f2) = (f, d_t f) on the initial surface.
struct CauchyData {
  ScalarField f1;
  ScalarField f2;

  CauchyData() = default;
  explicit CauchyData(const SpatialGrid& g) : f1(g), f2(g) {}
  CauchyData(ScalarField a, ScalarField b);

  const SpatialGrid& grid() const { return f1.grid; }
};

// -- transforms ----------------------------------------------------------

// Forward DFT, coeff(k) = sum_x f(x) exp(-i xi_k . x); no 1/n^3.
SpectralField dft3(const ScalarField& f);
// Inverse DFT carrying the 1/n^3; imaginary part is discarded.
ScalarField idft3(const SpectralField& s);
// Complex-coefficient inverse without the real cast (test/diagnostic use).
std::vector<cplx> idft3_complex(const SpectralField& s);

// -- norms and multipliers -------------------------------------------------

// Discrete H^s surrogate ((L^3/n^3) sum_k (1+|xi_k|^2)^s |f^(k)|^2 / n^3)^{1/2};
// s = 0 is the grid L^2 norm by Parseval.
double sobolev_norm(const ScalarField& f, SobolevIndex s);
double l2_norm(const ScalarField& f);

// Multiplier |xi|^{2*power}; the k=0 coefficient is zeroed for power < 0.
// Throws NonzeroMeanError if power < 0 and the input mean exceeds
// 1e-10 * max|coeff|.
ScalarField fractional_laplacian(const ScalarField& f, double power);

// Deterministic band-limited Gaussian field: coefficients vanish for
// |k|_inf > kmax.
ScalarField make_bandlimited_random(const SpatialGrid& g, int kmax, std::uint64_t seed);

// True iff the essential support of (f1, f2), dilated per axis by
// c*t1 + 2*spacing, stays inside the fundamental domain, so light cones from
// the data cannot wrap around the torus within [0, t1].
bool support_check(const CauchyData& data, double c, double t1);

// Re-sample a band-limited field on a finer grid of the same box (spectral
// zero-padding); used by refinement studies that fix the continuum datum.
ScalarField resample_bandlimited(const ScalarField& f, const SpatialGrid& fine);

// -- small helpers ---------------------------------------------------------

double field_max_abs(const std::vector<double>& v);
void axpy(double a, const std::vector<double>& x, std::vector<double>& y);
double dot(const std::vector<double>& a, const std::vector<double>& b);

// Smoothstep of class C^2: 0 for u<=0, 1 for u>=1, 6u^5-15u^4+10u^3 between.
double smoothstep_c2(double u);

double mean(const std::vector<double>& v);

}  // namespace lrt
