#include "lrt/rayset.hpp"

#include <cmath>

#include "lrt/fft.hpp"

namespace lrt {

RaySet make_rayset(const SpatialGrid& grid, int nd, double t1, int stride) {
  if (nd < 6) throw TooFewDirections("make_rayset: need at least 6 directions");
  if (stride < 1 || grid.n % stride != 0)
    throw PreconditionError("make_rayset: stride must divide n");
  if (!(t1 > 0.0)) throw PreconditionError("make_rayset: t1 must be positive");
  RaySet r;
  r.grid = grid;
  r.stride = stride;
  r.t1 = t1;
  r.directions.reserve(nd);
  if (nd == 6) {
    r.directions = {Vec3{1, 0, 0}, Vec3{-1, 0, 0}, Vec3{0, 1, 0},
                    Vec3{0, -1, 0}, Vec3{0, 0, 1}, Vec3{0, 0, -1}};
  } else {
    // Fibonacci sphere with the golden angle; uniform in cos(theta).
    const double golden = M_PI * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < nd; ++i) {
      const double z = 1.0 - (2.0 * i + 1.0) / nd;
      const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
      const double phi = golden * i;
      Vec3 v{rho * std::cos(phi), rho * std::sin(phi), z};
      const double nrm = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
      r.directions.push_back(Vec3{v[0] / nrm, v[1] / nrm, v[2] / nrm});
    }
  }
  r.weights.assign(r.directions.size(), 4.0 * M_PI / nd);
  return r;
}

double sinogram_dot(const Sinogram& a, const Sinogram& b) {
  if (a.values.size() != b.values.size())
    throw PreconditionError("sinogram_dot: incompatible shapes");
  const double hb = a.rays.grid.spacing() * a.rays.stride;
  const double cell = hb * hb * hb;
  const std::int64_t nb = a.rays.base_count();
  double acc = 0.0;
  for (int v = 0; v < a.rays.nd(); ++v) {
    const double* pa = a.dir_slice(v);
    const double* pb = b.dir_slice(v);
    double s = 0.0;
    for (std::int64_t i = 0; i < nb; ++i) s += pa[i] * pb[i];
    acc += a.rays.weights[v] * cell * s;
  }
  return acc;
}

double sinogram_norm(const Sinogram& s) { return std::sqrt(sinogram_dot(s, s)); }

double sinogram_sobolev_norm(const Sinogram& s, double exponent) {
  if (!s.rays.full_base())
    throw StridedBaseError("sinogram_sobolev_norm: full base grid required");
  const SpatialGrid& g = s.rays.grid;
  const std::int64_t m = g.size();
  const double spec_w = g.volume() / (static_cast<double>(m) * static_cast<double>(m));
  std::vector<cplx> buf(m);
  double acc = 0.0;
  for (int v = 0; v < s.rays.nd(); ++v) {
    const double* p = s.dir_slice(v);
    for (std::int64_t i = 0; i < m; ++i) buf[i] = cplx(p[i], 0.0);
    fft::forward3(g.n, buf.data());
    double sv = 0.0;
    for (int ix = 0; ix < g.n; ++ix) {
      const double kx = g.freq(ix);
      for (int iy = 0; iy < g.n; ++iy) {
        const double ky = g.freq(iy);
        for (int iz = 0; iz < g.n; ++iz) {
          const double kz = g.freq(iz);
          const double k2 = kx * kx + ky * ky + kz * kz;
          sv += std::pow(1.0 + k2, exponent) * std::norm(buf[g.lin(ix, iy, iz)]);
        }
      }
    }
    acc += s.rays.weights[v] * spec_w * sv;
  }
  return std::sqrt(acc);
}

}  // namespace lrt
