#pragma once

#include <vector>

#include "lrt/field.hpp"

namespace lrt {

// Light-ray parametrization: base points y on the spatial grid (optionally
// strided) and nd unit directions v with quadrature weights summing to 4*pi.
// nd = 6 is the axis-aligned fallback layout; otherwise a Fibonacci sphere.
struct RaySet {
  SpatialGrid grid;
  int stride = 1;
  double t1 = 0.0;
  std::vector<Vec3> directions;
  std::vector<double> weights;

  int nd() const { return static_cast<int>(directions.size()); }
  int base_per_axis() const { return grid.n / stride; }
  std::int64_t base_count() const {
    const std::int64_t b = base_per_axis();
    return b * b * b;
  }
  bool full_base() const { return stride == 1; }
};

RaySet make_rayset(const SpatialGrid& grid, int nd, double t1, int stride = 1);

// Transform values, direction-major: values[v * base_count + y].
struct Sinogram {
  RaySet rays;
  std::vector<double> values;

  Sinogram() = default;
  explicit Sinogram(const RaySet& r) : rays(r), values(r.base_count() * r.nd(), 0.0) {}

  double* dir_slice(int v) { return values.data() + static_cast<std::int64_t>(v) * rays.base_count(); }
  const double* dir_slice(int v) const {
    return values.data() + static_cast<std::int64_t>(v) * rays.base_count();
  }
};

// Weighted L^2 norm sum_v w_v h^3 sum_y |.|^2 (the inner product the adjoint
// is exact for).
double sinogram_norm(const Sinogram& s);
double sinogram_dot(const Sinogram& a, const Sinogram& b);

// H^{s+3/2}-surrogate norm: y-spectral weight (1+|eta|^2)^{(s+3/2)}, summed
// over directions with weights w_v. Full base grid only.
double sinogram_sobolev_norm(const Sinogram& s, double exponent);

}  // namespace lrt
