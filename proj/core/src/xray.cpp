#include "lrt/xray.hpp"

#include <cmath>

#include "lrt/fft.hpp"
#include "lrt/parallel.hpp"

namespace lrt {

namespace {

std::vector<double> quad_weights(TimeQuadrature q, int nt) {
  std::vector<double> w(nt, 1.0);
  if (q == TimeQuadrature::Trapezoid) {
    w.front() = 0.5;
    w.back() = 0.5;
  } else {
    if (nt < 3 || nt % 2 == 0)
      throw PreconditionError("Simpson quadrature needs an odd number of slices");
    for (int j = 1; j + 1 < nt; ++j) w[j] = (j % 2 == 1) ? 4.0 / 3.0 : 2.0 / 3.0;
    w.front() = 1.0 / 3.0;
    w.back() = 1.0 / 3.0;
  }
  return w;
}

// Per-axis interpolation stencil for a fractional offset in [0,1).
struct AxisStencil {
  int first = 0;  // offset of the first tap relative to floor(position)
  int taps = 0;
  double w[4] = {0, 0, 0, 0};
};

AxisStencil axis_stencil(SpatialInterp interp, double frac) {
  AxisStencil s;
  if (interp == SpatialInterp::Trilinear) {
    s.first = 0;
    s.taps = 2;
    s.w[0] = 1.0 - frac;
    s.w[1] = frac;
  } else {
    // Catmull-Rom
    const double t = frac, t2 = t * t, t3 = t2 * t;
    s.first = -1;
    s.taps = 4;
    s.w[0] = 0.5 * (-t3 + 2.0 * t2 - t);
    s.w[1] = 0.5 * (3.0 * t3 - 5.0 * t2 + 2.0);
    s.w[2] = 0.5 * (-3.0 * t3 + 4.0 * t2 + t);
    s.w[3] = 0.5 * (t3 - t2);
  }
  return s;
}

struct ShiftTables {
  // idx[axis][tap][grid index] = wrapped linear contribution of that axis
  std::vector<std::int64_t> x[4], y[4], z[4];
  AxisStencil st[3];
};

// Tables for sampling f at (y + shift) for every base point y; `sign` = -1
// builds the adjoint gather at (x - shift).
ShiftTables make_tables(const SpatialGrid& g, int base_n, int stride, const Vec3& shift_cells,
                        SpatialInterp interp, int sign) {
  ShiftTables tb;
  const int n = g.n;
  for (int a = 0; a < 3; ++a) {
    const double s = sign * shift_cells[a];
    const double fl = std::floor(s);
    const double frac = s - fl;
    const int off = static_cast<int>(fl);
    tb.st[a] = axis_stencil(interp, frac);
    for (int tap = 0; tap < tb.st[a].taps; ++tap) {
      auto& vec = (a == 0 ? tb.x[tap] : a == 1 ? tb.y[tap] : tb.z[tap]);
      vec.resize(base_n);
      for (int i = 0; i < base_n; ++i) {
        const int gi = i * stride;
        int j = (gi + off + tb.st[a].first + tap) % n;
        if (j < 0) j += n;
        const std::int64_t lin = j;
        vec[i] = (a == 0) ? lin * n * n : (a == 1) ? lin * n : lin;
      }
    }
  }
  return tb;
}

}  // namespace

Sinogram transform_physical(const SpacetimeField& f, const RaySet& rays,
                            const TransformOptions& opt) {
  if (!(f.grid == rays.grid))
    throw PreconditionError("transform_physical: field and rays on different grids");
  if (std::abs(f.t1 - rays.t1) > 1e-12 * std::max(1.0, rays.t1))
    throw PreconditionError("transform_physical: field t1 does not match ray length");
  const SpatialGrid& g = f.grid;
  const double h = g.spacing();
  const double dt = f.dt();
  const std::vector<double> wq = quad_weights(opt.quad, f.nt);
  const int nb = rays.base_per_axis();

  Sinogram sino(rays);
  parallel_for(rays.nd(), [&](std::int64_t v0, std::int64_t v1) {
    for (std::int64_t v = v0; v < v1; ++v) {
      double* out = sino.dir_slice(v);
      const Vec3& dir = rays.directions[v];
      for (int j = 0; j < f.nt; ++j) {
        const double tj = f.time(j);
        const Vec3 shift{tj * dir[0] / h, tj * dir[1] / h, tj * dir[2] / h};
        const ShiftTables tb = make_tables(g, nb, rays.stride, shift, opt.interp, +1);
        const double qw = wq[j] * dt;
        const double* fj = f.slice(j);
        std::int64_t b = 0;
        for (int bx = 0; bx < nb; ++bx)
          for (int by = 0; by < nb; ++by)
            for (int bz = 0; bz < nb; ++bz, ++b) {
              double acc = 0.0;
              for (int tx = 0; tx < tb.st[0].taps; ++tx) {
                const std::int64_t ox = tb.x[tx][bx];
                const double wx = tb.st[0].w[tx];
                for (int ty = 0; ty < tb.st[1].taps; ++ty) {
                  const std::int64_t oxy = ox + tb.y[ty][by];
                  const double wxy = wx * tb.st[1].w[ty];
                  for (int tz = 0; tz < tb.st[2].taps; ++tz)
                    acc += wxy * tb.st[2].w[tz] * fj[oxy + tb.z[tz][bz]];
                }
              }
              out[b] += qw * acc;
            }
      }
    }
  });
  return sino;
}

SpacetimeField xray_adjoint(const Sinogram& sino, const SpatialGrid& grid, int nt,
                            const TransformOptions& opt) {
  const RaySet& rays = sino.rays;
  if (!rays.full_base()) throw StridedBaseError("xray_adjoint: full base grid required");
  if (!(grid == rays.grid)) throw PreconditionError("xray_adjoint: grid mismatch");
  SpacetimeField out(grid, rays.t1, nt);
  const double h = grid.spacing();
  const std::vector<double> wq = quad_weights(opt.quad, nt);
  const int n = grid.n;

  // Slices are independent; each is a direction-weighted gather of the
  // sinogram at x - t_j v (the transpose of the forward sampling).
  parallel_for(nt, [&](std::int64_t j0, std::int64_t j1) {
    for (std::int64_t j = j0; j < j1; ++j) {
      double* oj = out.slice(j);
      const double tj = out.time(j);
      for (int v = 0; v < rays.nd(); ++v) {
        const Vec3& dir = rays.directions[v];
        const Vec3 shift{tj * dir[0] / h, tj * dir[1] / h, tj * dir[2] / h};
        const ShiftTables tb = make_tables(grid, n, 1, shift, opt.interp, -1);
        const double s = wq[j] * rays.weights[v];
        const double* dv = sino.dir_slice(v);
        std::int64_t b = 0;
        for (int ix = 0; ix < n; ++ix)
          for (int iy = 0; iy < n; ++iy)
            for (int iz = 0; iz < n; ++iz, ++b) {
              double acc = 0.0;
              for (int tx = 0; tx < tb.st[0].taps; ++tx) {
                const std::int64_t ox = tb.x[tx][ix];
                const double wx = tb.st[0].w[tx];
                for (int ty = 0; ty < tb.st[1].taps; ++ty) {
                  const std::int64_t oxy = ox + tb.y[ty][iy];
                  const double wxy = wx * tb.st[1].w[ty];
                  for (int tz = 0; tz < tb.st[2].taps; ++tz)
                    acc += wxy * tb.st[2].w[tz] * dv[oxy + tb.z[tz][iz]];
                }
              }
              oj[b] += s * acc;
            }
      }
    }
  });
  return out;
}

cplx ray_multiplier(double t1, const Vec3& xi, const Vec3& v, double c, int sign) {
  const double kn = std::sqrt(xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2]);
  const double phase_rate = v[0] * xi[0] + v[1] * xi[1] + v[2] * xi[2] + sign * c * kn;
  const double th = t1 * phase_rate;
  if (std::abs(th) < 1e-4) {
    // t1 * sum (i th)^m / (m+1)!; |th| < 1e-4 keeps the truncation below 1e-19.
    const cplx ith(0.0, th);
    return t1 * (1.0 + ith * (1.0 / 2.0 + ith * (1.0 / 6.0 + ith * (1.0 / 24.0))));
  }
  return cplx(std::sin(th) / phase_rate, 2.0 * std::pow(std::sin(0.5 * th), 2) / phase_rate);
}

Sinogram transform_spectral(const HalfWaveData& hw, const RaySet& rays) {
  if (!rays.full_base()) throw StridedBaseError("transform_spectral: full base grid required");
  const SpatialGrid& g = hw.grid();
  if (!(g == rays.grid)) throw PreconditionError("transform_spectral: grid mismatch");
  const double t1 = rays.t1;
  const double n3 = static_cast<double>(g.size());
  const double dc = t1 * (hw.m0 + 0.5 * t1 * hw.m1);

  Sinogram sino(rays);
  parallel_for(rays.nd(), [&](std::int64_t v0, std::int64_t v1) {
    std::vector<cplx> buf(g.size());
    for (std::int64_t v = v0; v < v1; ++v) {
      const Vec3& dir = rays.directions[v];
      for (int ix = 0; ix < g.n; ++ix) {
        const double kx = g.freq(ix);
        for (int iy = 0; iy < g.n; ++iy) {
          const double ky = g.freq(iy);
          for (int iz = 0; iz < g.n; ++iz) {
            const Vec3 xi{kx, ky, g.freq(iz)};
            const std::int64_t idx = g.lin(ix, iy, iz);
            buf[idx] = hw.h1.coeff[idx] * ray_multiplier(t1, xi, dir, hw.c, +1) +
                       hw.h2.coeff[idx] * ray_multiplier(t1, xi, dir, hw.c, -1);
          }
        }
      }
      buf[0] = cplx(n3 * dc, 0.0);
      fft::backward3(g.n, buf.data());
      double* out = sino.dir_slice(v);
      for (std::int64_t i = 0; i < g.size(); ++i) out[i] = buf[i].real() / n3;
    }
  });
  return sino;
}

}  // namespace lrt
