#include <doctest.h>

#include <cmath>
#include <complex>

#include "lrt/field.hpp"

using namespace lrt;

namespace {

double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(1e-300, std::abs(want));
}

double rel_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double num = 0.0, den = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    num += (a[i] - b[i]) * (a[i] - b[i]);
    den += b[i] * b[i];
  }
  return std::sqrt(num / std::max(1e-300, den));
}

// Direct O(N^2) DFT, the independent oracle for the FFT path.
SpectralField dft3_direct(const ScalarField& f) {
  const SpatialGrid& g = f.grid;
  SpectralField out(g);
  for (int kx = 0; kx < g.n; ++kx)
    for (int ky = 0; ky < g.n; ++ky)
      for (int kz = 0; kz < g.n; ++kz) {
        cplx acc = 0.0;
        for (int ix = 0; ix < g.n; ++ix)
          for (int iy = 0; iy < g.n; ++iy)
            for (int iz = 0; iz < g.n; ++iz) {
              const double ph = -2.0 * M_PI *
                                (double(kx) * ix + double(ky) * iy + double(kz) * iz) / g.n;
              acc += f.values[g.lin(ix, iy, iz)] * std::polar(1.0, ph);
            }
        out.coeff[g.lin(kx, ky, kz)] = acc;
      }
  return out;
}

ScalarField cos_mode(const SpatialGrid& g, int kx, int ky, int kz, double amp = 1.0) {
  ScalarField f(g);
  for (int ix = 0; ix < g.n; ++ix)
    for (int iy = 0; iy < g.n; ++iy)
      for (int iz = 0; iz < g.n; ++iz) {
        const double ph = 2.0 * M_PI * (double(kx) * ix + double(ky) * iy + double(kz) * iz) / g.n;
        f.values[g.lin(ix, iy, iz)] = amp * std::cos(ph);
      }
  return f;
}

ScalarField radial_bump(const SpatialGrid& g, double r0, double width) {
  ScalarField f(g);
  const double cx = 0.5 * g.L;
  for (int ix = 0; ix < g.n; ++ix)
    for (int iy = 0; iy < g.n; ++iy)
      for (int iz = 0; iz < g.n; ++iz) {
        const double dx = ix * g.spacing() - cx;
        const double dy = iy * g.spacing() - cx;
        const double dz = iz * g.spacing() - cx;
        const double r = std::sqrt(dx * dx + dy * dy + dz * dz);
        f.values[g.lin(ix, iy, iz)] = 1.0 - smoothstep_c2((r - r0) / width + 1.0);
      }
  return f;
}

}  // namespace

TEST_CASE("dft3: DC mode of the constant field") {
  SpatialGrid g(8, 2.0 * M_PI);
  ScalarField one(g);
  std::fill(one.values.begin(), one.values.end(), 1.0);
  SpectralField s = dft3(one);
  CHECK(s.coeff[0].real() == doctest::Approx(double(g.size())).epsilon(1e-14));
  double off = 0.0;
  for (size_t i = 1; i < s.coeff.size(); ++i) off = std::max(off, std::abs(s.coeff[i]));
  CHECK(off < 1e-10);
}

TEST_CASE("dft3/idft3 round trip on a random field") {
  SpatialGrid g(16, 3.0);
  ScalarField f = make_bandlimited_random(g, 6, 42);
  ScalarField back = idft3(dft3(f));
  CHECK(rel_diff(back.values, f.values) < 1e-12);
}

TEST_CASE("dft3: pure mode against direct summation on n=4") {
  SpatialGrid g(4, 1.0);
  ScalarField f = cos_mode(g, 1, 0, 1, 0.7);
  SpectralField fast = dft3(f);
  SpectralField slow = dft3_direct(f);
  for (size_t i = 0; i < fast.coeff.size(); ++i)
    CHECK(std::abs(fast.coeff[i] - slow.coeff[i]) < 1e-10);
  // the sampled cosine splits between k and -k
  CHECK(std::abs(fast.coeff[g.lin(1, 0, 1)] - cplx(0.5 * 0.7 * g.size(), 0.0)) < 1e-10);
  CHECK(std::abs(fast.coeff[g.lin(3, 0, 3)] - cplx(0.5 * 0.7 * g.size(), 0.0)) < 1e-10);
}

TEST_CASE("sobolev_norm: zero field, Parseval, single mode") {
  SpatialGrid g(16, 2.0 * M_PI);
  ScalarField zero(g);
  CHECK(sobolev_norm(zero, {1.5}) == 0.0);

  ScalarField f = make_bandlimited_random(g, 5, 7);
  CHECK(rel_err(sobolev_norm(f, {0.0}), l2_norm(f)) < 1e-12);

  // Single mode k = (2,1,0): H^1 weight is (1+|xi|^2)^{1/2}.
  ScalarField m = cos_mode(g, 2, 1, 0);
  const double k2 = 4.0 + 1.0;
  CHECK(rel_err(sobolev_norm(m, {1.0}), std::sqrt(1.0 + k2) * l2_norm(m)) < 1e-12);
}

TEST_CASE("fractional_laplacian: identity, diagonal action, inverse pair, linearity") {
  SpatialGrid g(16, 2.0 * M_PI);
  ScalarField f = make_bandlimited_random(g, 4, 3);

  ScalarField same = fractional_laplacian(f, 0.0);
  CHECK(rel_diff(same.values, f.values) == 0.0);

  ScalarField m = cos_mode(g, 0, 3, 0);
  ScalarField half = fractional_laplacian(m, 0.5);
  ScalarField scaled = m;
  for (auto& v : scaled.values) v *= 3.0;  // |xi| = 3 on the 2*pi box
  CHECK(rel_diff(half.values, scaled.values) < 1e-12);

  // mean-zero input: lap^{1/2} then lap^{-1/2} is the identity
  ScalarField mz = f;
  const double mu = mean(mz.values);
  for (auto& v : mz.values) v -= mu;
  ScalarField round = fractional_laplacian(fractional_laplacian(mz, 0.5), -0.5);
  CHECK(rel_diff(round.values, mz.values) < 1e-12);

  // linearity
  ScalarField a = make_bandlimited_random(g, 4, 10);
  ScalarField b = make_bandlimited_random(g, 4, 11);
  ScalarField lin(g);
  for (size_t i = 0; i < lin.values.size(); ++i)
    lin.values[i] = 2.0 * a.values[i] - 0.5 * b.values[i];
  ScalarField lhs = fractional_laplacian(lin, 1.0);
  ScalarField ra = fractional_laplacian(a, 1.0);
  ScalarField rb = fractional_laplacian(b, 1.0);
  ScalarField rhs(g);
  for (size_t i = 0; i < rhs.values.size(); ++i)
    rhs.values[i] = 2.0 * ra.values[i] - 0.5 * rb.values[i];
  CHECK(rel_diff(lhs.values, rhs.values) < 1e-12);

  ScalarField notmz(g);
  std::fill(notmz.values.begin(), notmz.values.end(), 1.0);
  CHECK_THROWS_AS(fractional_laplacian(notmz, -0.5), NonzeroMeanError);
}

TEST_CASE("make_bandlimited_random: determinism, cutoff, kmax=0") {
  SpatialGrid g(16, 1.0);
  ScalarField a = make_bandlimited_random(g, 3, 99);
  ScalarField b = make_bandlimited_random(g, 3, 99);
  CHECK(a.values == b.values);

  SpectralField s = dft3(a);
  double out_of_band = 0.0;
  for (int ix = 0; ix < g.n; ++ix)
    for (int iy = 0; iy < g.n; ++iy)
      for (int iz = 0; iz < g.n; ++iz) {
        const int kx = std::abs(g.signed_index(ix));
        const int ky = std::abs(g.signed_index(iy));
        const int kz = std::abs(g.signed_index(iz));
        if (std::max({kx, ky, kz}) > 3)
          out_of_band = std::max(out_of_band, std::abs(s.coeff[g.lin(ix, iy, iz)]));
      }
  CHECK(out_of_band < 1e-8);

  ScalarField c = make_bandlimited_random(g, 0, 5);
  const double v0 = c.values[0];
  for (double v : c.values) CHECK(v == doctest::Approx(v0).epsilon(1e-14));
}

TEST_CASE("support_check: zero data, full box, centered bump") {
  SpatialGrid g(32, 2.0 * M_PI);
  CauchyData zero(g);
  CHECK(support_check(zero, 1.0, 1.0));

  CauchyData full(g);
  std::fill(full.f1.values.begin(), full.f1.values.end(), 1.0);
  CHECK_FALSE(support_check(full, 1.0, 1.0));

  // bump radius r with r + c*t1 < L/2 (minus the 2h guard)
  const double r = 0.8, c = 1.0, t1 = 1.5;
  REQUIRE(r + c * t1 + 3.0 * g.spacing() < 0.5 * g.L);
  CauchyData bump(g);
  bump.f1 = radial_bump(g, r - 0.3, 0.3);
  CHECK(support_check(bump, c, t1));
  CHECK_FALSE(support_check(bump, c, 4.0));
}

TEST_CASE("resample_bandlimited reproduces samples of the same continuum field") {
  SpatialGrid coarse(8, 2.0 * M_PI), fine(16, 2.0 * M_PI);
  ScalarField f = make_bandlimited_random(coarse, 3, 17);
  ScalarField up = resample_bandlimited(f, fine);
  // coarse nodes are every other fine node
  for (int ix = 0; ix < coarse.n; ++ix)
    for (int iy = 0; iy < coarse.n; ++iy)
      for (int iz = 0; iz < coarse.n; ++iz)
        CHECK(up.values[fine.lin(2 * ix, 2 * iy, 2 * iz)] ==
              doctest::Approx(f.values[coarse.lin(ix, iy, iz)]).epsilon(1e-11));
}
