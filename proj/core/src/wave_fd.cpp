#include "lrt/wave_fd.hpp"

#include <cmath>

#include "lrt/stencil.hpp"

namespace lrt {

namespace stencil {

namespace {

struct Wrap {
  std::vector<int> p, m;
  explicit Wrap(int n) : p(n), m(n) {
    for (int i = 0; i < n; ++i) {
      p[i] = (i + 1) % n;
      m[i] = (i - 1 + n) % n;
    }
  }
};

}  // namespace

void add_laplacian(const SpatialGrid& g, double s, const std::vector<double>& in,
                   std::vector<double>& out) {
  const int n = g.n;
  const Wrap w(n);
  const double f = s / (g.spacing() * g.spacing());
  for (int ix = 0; ix < n; ++ix)
    for (int iy = 0; iy < n; ++iy)
      for (int iz = 0; iz < n; ++iz) {
        const std::int64_t idx = g.lin(ix, iy, iz);
        const double acc = in[g.lin(w.p[ix], iy, iz)] + in[g.lin(w.m[ix], iy, iz)] +
                           in[g.lin(ix, w.p[iy], iz)] + in[g.lin(ix, w.m[iy], iz)] +
                           in[g.lin(ix, iy, w.p[iz])] + in[g.lin(ix, iy, w.m[iz])] -
                           6.0 * in[idx];
        out[idx] += f * acc;
      }
}

namespace {

inline std::int64_t shifted(const SpatialGrid& g, const Wrap& w, int axis, int dir, int ix, int iy,
                            int iz) {
  int c[3] = {ix, iy, iz};
  c[axis] = dir > 0 ? w.p[c[axis]] : w.m[c[axis]];
  return g.lin(c[0], c[1], c[2]);
}

template <typename Get>
void diff_kernel(const SpatialGrid& g, int axis, double s, const Get& get,
                 std::vector<double>& out) {
  const int n = g.n;
  const Wrap w(n);
  const double f = s / (2.0 * g.spacing());
  for (int ix = 0; ix < n; ++ix)
    for (int iy = 0; iy < n; ++iy)
      for (int iz = 0; iz < n; ++iz)
        out[g.lin(ix, iy, iz)] += f * (get(shifted(g, w, axis, +1, ix, iy, iz)) -
                                       get(shifted(g, w, axis, -1, ix, iy, iz)));
}

}  // namespace

void add_diff(const SpatialGrid& g, int axis, double s, const std::vector<double>& in,
              std::vector<double>& out) {
  diff_kernel(g, axis, s, [&](std::int64_t i) { return in[i]; }, out);
}

void add_coeff_diff(const SpatialGrid& g, int axis, double s, const std::vector<double>& coeff,
                    const std::vector<double>& in, std::vector<double>& out) {
  const int n = g.n;
  const Wrap w(n);
  const double f = s / (2.0 * g.spacing());
  for (int ix = 0; ix < n; ++ix)
    for (int iy = 0; iy < n; ++iy)
      for (int iz = 0; iz < n; ++iz) {
        const std::int64_t idx = g.lin(ix, iy, iz);
        out[idx] += f * coeff[idx] * (in[shifted(g, w, axis, +1, ix, iy, iz)] -
                                      in[shifted(g, w, axis, -1, ix, iy, iz)]);
      }
}

void add_diff_coeff(const SpatialGrid& g, int axis, double s, const std::vector<double>& coeff,
                    const std::vector<double>& in, std::vector<double>& out) {
  diff_kernel(g, axis, s, [&](std::int64_t i) { return coeff[i] * in[i]; }, out);
}

void add_second(const SpatialGrid& g, int a, int b, double s, const std::vector<double>& in,
                std::vector<double>& out) {
  const int n = g.n;
  const Wrap w(n);
  const double h2 = g.spacing() * g.spacing();
  if (a == b) {
    const double f = s / h2;
    for (int ix = 0; ix < n; ++ix)
      for (int iy = 0; iy < n; ++iy)
        for (int iz = 0; iz < n; ++iz) {
          const std::int64_t idx = g.lin(ix, iy, iz);
          out[idx] += f * (in[shifted(g, w, a, +1, ix, iy, iz)] - 2.0 * in[idx] +
                           in[shifted(g, w, a, -1, ix, iy, iz)]);
        }
    return;
  }
  const double f = s / (4.0 * h2);
  for (int ix = 0; ix < n; ++ix)
    for (int iy = 0; iy < n; ++iy)
      for (int iz = 0; iz < n; ++iz) {
        int c[3] = {ix, iy, iz};
        int cpp[3] = {c[0], c[1], c[2]}, cpm[3] = {c[0], c[1], c[2]};
        int cmp[3] = {c[0], c[1], c[2]}, cmm[3] = {c[0], c[1], c[2]};
        cpp[a] = w.p[c[a]]; cpp[b] = w.p[c[b]];
        cpm[a] = w.p[c[a]]; cpm[b] = w.m[c[b]];
        cmp[a] = w.m[c[a]]; cmp[b] = w.p[c[b]];
        cmm[a] = w.m[c[a]]; cmm[b] = w.m[c[b]];
        out[g.lin(c[0], c[1], c[2])] +=
            f * (in[g.lin(cpp[0], cpp[1], cpp[2])] - in[g.lin(cpm[0], cpm[1], cpm[2])] -
                 in[g.lin(cmp[0], cmp[1], cmp[2])] + in[g.lin(cmm[0], cmm[1], cmm[2])]);
      }
}

void add_coeff_second(const SpatialGrid& g, int a, int b, double s,
                      const std::vector<double>& coeff, const std::vector<double>& in,
                      std::vector<double>& out) {
  std::vector<double> tmp(in.size(), 0.0);
  add_second(g, a, b, s, in, tmp);
  for (size_t i = 0; i < out.size(); ++i) out[i] += coeff[i] * tmp[i];
}

void add_second_coeff(const SpatialGrid& g, int a, int b, double s,
                      const std::vector<double>& coeff, const std::vector<double>& in,
                      std::vector<double>& out) {
  std::vector<double> tmp(in.size());
  for (size_t i = 0; i < in.size(); ++i) tmp[i] = coeff[i] * in[i];
  add_second(g, a, b, s, tmp, out);
}

}  // namespace stencil

double cfl_max_dt(double c, double spacing) {
  if (c <= 0.0) return std::numeric_limits<double>::infinity();
  return spacing / (c * std::sqrt(3.0));
}

namespace {

// Apply the spatial part S_m(u) = c^2 lap u - b.grad u - p0 u, accumulating
// into out (zeroed here).
void spatial_op(const SpatialGrid& g, double c, const LowerOrderCoefficients& lo, int j,
                const std::vector<double>& u, std::vector<double>& out) {
  std::fill(out.begin(), out.end(), 0.0);
  stencil::add_laplacian(g, c * c, u, out);
  if (!lo.bx_x.empty()) stencil::add_coeff_diff(g, 0, -1.0, lo.bx_x, u, out);
  if (!lo.by_x.empty()) stencil::add_coeff_diff(g, 1, -1.0, lo.by_x, u, out);
  if (!lo.bz_x.empty()) stencil::add_coeff_diff(g, 2, -1.0, lo.bz_x, u, out);
  const double p0t = lo.p0_t.empty() ? 0.0 : lo.p0_t[j];
  if (p0t != 0.0)
    for (size_t i = 0; i < out.size(); ++i) out[i] -= p0t * u[i];
  if (!lo.p0_x.empty())
    for (size_t i = 0; i < out.size(); ++i) out[i] -= lo.p0_x[i] * u[i];
}

// Transpose of spatial_op: c^2 lap v + sum_i d_i(b_i v) - p0 v.
void spatial_op_T(const SpatialGrid& g, double c, const LowerOrderCoefficients& lo, int j,
                  const std::vector<double>& v, std::vector<double>& out) {
  std::fill(out.begin(), out.end(), 0.0);
  stencil::add_laplacian(g, c * c, v, out);
  if (!lo.bx_x.empty()) stencil::add_diff_coeff(g, 0, 1.0, lo.bx_x, v, out);
  if (!lo.by_x.empty()) stencil::add_diff_coeff(g, 1, 1.0, lo.by_x, v, out);
  if (!lo.bz_x.empty()) stencil::add_diff_coeff(g, 2, 1.0, lo.bz_x, v, out);
  const double p0t = lo.p0_t.empty() ? 0.0 : lo.p0_t[j];
  if (p0t != 0.0)
    for (size_t i = 0; i < out.size(); ++i) out[i] -= p0t * v[i];
  if (!lo.p0_x.empty())
    for (size_t i = 0; i < out.size(); ++i) out[i] -= lo.p0_x[i] * v[i];
}

double bt_at(const LowerOrderCoefficients& lo, int j, std::int64_t idx) {
  double b = lo.bt_t.empty() ? 0.0 : lo.bt_t[j];
  if (!lo.bt_x.empty()) b += lo.bt_x[idx];
  return b;
}

void validate_coeffs(const LowerOrderCoefficients& lo, const SpatialGrid& g, int nt) {
  auto check_t = [&](const std::vector<double>& v, const char* name) {
    if (!v.empty() && static_cast<int>(v.size()) != nt)
      throw PreconditionError(std::string("lower-order coefficients: ") + name +
                              " series must have nt entries");
  };
  auto check_x = [&](const std::vector<double>& v, const char* name) {
    if (!v.empty() && static_cast<std::int64_t>(v.size()) != g.size())
      throw PreconditionError(std::string("lower-order coefficients: ") + name +
                              " field must match the grid");
  };
  check_t(lo.bt_t, "b_t");
  check_t(lo.p0_t, "p0");
  check_x(lo.bt_x, "b_t");
  check_x(lo.bx_x, "b_x");
  check_x(lo.by_x, "b_y");
  check_x(lo.bz_x, "b_z");
  check_x(lo.p0_x, "p0");
  for (const auto* v : {&lo.bt_t, &lo.p0_t, &lo.bt_x, &lo.bx_x, &lo.by_x, &lo.bz_x, &lo.p0_x})
    for (double x : *v)
      if (!std::isfinite(x)) throw PreconditionError("lower-order coefficients must be finite");
}

}  // namespace

SpacetimeField solve_cauchy_fd(const CauchyData& data, double c,
                               const LowerOrderCoefficients& lower, double t1, int nt) {
  const SpatialGrid& g = data.grid();
  SpacetimeField out(g, t1, nt);
  const double dt = out.dt();
  if (dt > cfl_max_dt(c, g.spacing()) * (1.0 + 1e-12))
    throw CFLViolation("solve_cauchy_fd: c*dt/h exceeds 1/sqrt(3)");
  validate_coeffs(lower, g, nt);

  const std::int64_t m = g.size();
  std::vector<double> work(m);

  // slice 0
  std::copy(data.f1.values.begin(), data.f1.values.end(), out.slice(0));

  // Taylor first step with the PDE acceleration at t = 0.
  spatial_op(g, c, lower, 0, data.f1.values, work);
  double* s1 = out.slice(1);
  for (std::int64_t i = 0; i < m; ++i) {
    const double acc0 = work[i] - bt_at(lower, 0, i) * data.f2.values[i];
    s1[i] = data.f1.values[i] + dt * data.f2.values[i] + 0.5 * dt * dt * acc0;
  }

  std::vector<double> um(m), umm(m);
  for (int step = 1; step + 1 < nt; ++step) {
    std::copy(out.slice(step), out.slice(step) + m, um.begin());
    std::copy(out.slice(step - 1), out.slice(step - 1) + m, umm.begin());
    spatial_op(g, c, lower, step, um, work);
    double* next = out.slice(step + 1);
    const double idt2 = 1.0 / (dt * dt);
    for (std::int64_t i = 0; i < m; ++i) {
      const double bt = bt_at(lower, step, i);
      const double alpha = idt2 + bt / (2.0 * dt);
      next[i] = ((2.0 * um[i] - umm[i]) * idt2 + bt * umm[i] / (2.0 * dt) + work[i]) / alpha;
    }
    if ((step & 15) == 0 && !std::isfinite(next[0]))
      throw UnstableEvolution("solve_cauchy_fd: non-finite values during evolution");
  }
  for (double x : out.slices)
    if (!std::isfinite(x)) throw UnstableEvolution("solve_cauchy_fd: non-finite solution");
  return out;
}

CauchyData fd_adjoint_apply(const SpacetimeField& source, double c,
                            const LowerOrderCoefficients& lower) {
  const SpatialGrid& g = source.grid;
  const int nt = source.nt;
  const double dt = source.dt();
  if (dt > cfl_max_dt(c, g.spacing()) * (1.0 + 1e-12))
    throw CFLViolation("fd_adjoint_apply: c*dt/h exceeds 1/sqrt(3)");
  validate_coeffs(lower, g, nt);

  const std::int64_t m = g.size();
  // Cotangents per slice, initialized with the source.
  std::vector<std::vector<double>> ubar(nt, std::vector<double>(m));
  for (int j = 0; j < nt; ++j) std::copy(source.slice(j), source.slice(j) + m, ubar[j].begin());

  std::vector<double> v(m), w(m);
  const double idt2 = 1.0 / (dt * dt);
  for (int step = nt - 2; step >= 1; --step) {
    // v = D_m^T ubar^{m+1} (diagonal)
    for (std::int64_t i = 0; i < m; ++i) {
      const double bt = bt_at(lower, step, i);
      v[i] = ubar[step + 1][i] / (idt2 + bt / (2.0 * dt));
    }
    // ubar^m += (2/dt^2) v + S_m^T v
    spatial_op_T(g, c, lower, step, v, w);
    for (std::int64_t i = 0; i < m; ++i) ubar[step][i] += 2.0 * idt2 * v[i] + w[i];
    // ubar^{m-1} += (-1/dt^2 + bt/(2dt)) v
    for (std::int64_t i = 0; i < m; ++i) {
      const double bt = bt_at(lower, step, i);
      ubar[step - 1][i] += (-idt2 + bt / (2.0 * dt)) * v[i];
    }
  }

  CauchyData out(g);
  // u1 = C1 f1 + C2 f2, u0 = f1.
  spatial_op_T(g, c, lower, 0, ubar[1], w);
  for (std::int64_t i = 0; i < m; ++i) {
    const double bt0 = bt_at(lower, 0, i);
    out.f1.values[i] = ubar[0][i] + ubar[1][i] + 0.5 * dt * dt * w[i];
    out.f2.values[i] = dt * ubar[1][i] - 0.5 * dt * dt * bt0 * ubar[1][i];
  }
  // Inner-product convention: <Solve f, g>_M = h^3 dt sum vs <f,.>_N = h^3 sum.
  for (std::int64_t i = 0; i < m; ++i) {
    out.f1.values[i] *= dt;
    out.f2.values[i] *= dt;
  }
  return out;
}

}  // namespace lrt
