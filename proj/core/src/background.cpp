#include "lrt/background.hpp"

#include <cmath>

namespace lrt {

namespace {

// Cubic (Catmull-Rom) interpolation on a uniform table, clamped ends.
double interp_cubic(const std::vector<double>& sg, const std::vector<double>& v, double s) {
  const int n = static_cast<int>(sg.size());
  const double ds = sg[1] - sg[0];
  double u = (s - sg[0]) / ds;
  int i = static_cast<int>(std::floor(u));
  i = std::max(0, std::min(n - 2, i));
  const double t = u - i;
  auto at = [&](int j) { return v[std::max(0, std::min(n - 1, j))]; };
  const double p0 = at(i - 1), p1 = at(i), p2 = at(i + 1), p3 = at(i + 2);
  return p1 + 0.5 * t * (p2 - p0 + t * (2.0 * p0 - 5.0 * p1 + 4.0 * p2 - p3 +
                                        t * (3.0 * (p1 - p2) + p3 - p0)));
}

double deriv_tab(const std::vector<double>& sg, const std::vector<double>& v, double s) {
  const double ds = sg[1] - sg[0];
  const double sp = std::min(s + ds, sg.back());
  const double sm = std::max(s - ds, sg.front());
  return (interp_cubic(sg, v, sp) - interp_cubic(sg, v, sm)) / (sp - sm);
}

}  // namespace

double FLRWBackground::a(double s) const {
  switch (model) {
    case Model::Matter: return (s / s0) * (s / s0);
    case Model::Radiation: return s / s0;
    case Model::Custom: return interp_cubic(s_grid, a_tab, s);
  }
  return 1.0;
}

double FLRWBackground::H(double s) const {
  switch (model) {
    case Model::Matter: return 2.0 / s;
    case Model::Radiation: return 1.0 / s;
    case Model::Custom: return interp_cubic(s_grid, H_tab, s);
  }
  return 0.0;
}

double FLRWBackground::Hprime(double s) const {
  switch (model) {
    case Model::Matter: return -2.0 / (s * s);
    case Model::Radiation: return -1.0 / (s * s);
    case Model::Custom: return deriv_tab(s_grid, H_tab, s);
  }
  return 0.0;
}

CosmologyModel make_flrw(const std::string& tag, double s0, double s1, int samples) {
  if (!(s0 > 0.0) || !(s1 > s0)) throw PreconditionError("make_flrw: need 0 < s0 < s1");
  if (samples < 4) throw PreconditionError("make_flrw: need at least 4 samples");
  CosmologyModel model;
  model.tag = tag;
  FLRWBackground& bg = model.bg;
  bg.s0 = s0;
  bg.s1 = s1;
  if (tag == "matter") bg.model = FLRWBackground::Model::Matter;
  else if (tag == "radiation") bg.model = FLRWBackground::Model::Radiation;
  else throw PreconditionError("make_flrw: unknown tag '" + tag + "' (use make_flrw_custom)");
  bg.s_grid.resize(samples);
  bg.a_tab.resize(samples);
  bg.H_tab.resize(samples);
  for (int i = 0; i < samples; ++i) {
    const double s = s0 + (s1 - s0) * i / (samples - 1);
    bg.s_grid[i] = s;
    bg.a_tab[i] = bg.a(s);
    bg.H_tab[i] = bg.H(s);
  }
  return model;
}

CosmologyModel make_flrw_custom(std::vector<double> s_grid, std::vector<double> a_tab) {
  if (s_grid.size() != a_tab.size() || s_grid.size() < 4)
    throw PreconditionError("make_flrw_custom: need matching tabs with >= 4 samples");
  CosmologyModel model;
  model.tag = "custom";
  FLRWBackground& bg = model.bg;
  bg.model = FLRWBackground::Model::Custom;
  bg.s0 = s_grid.front();
  bg.s1 = s_grid.back();
  const int n = static_cast<int>(s_grid.size());
  bg.H_tab.resize(n);
  for (int i = 0; i < n; ++i) {
    if (!(a_tab[i] > 0.0)) throw PreconditionError("make_flrw_custom: a must stay positive");
    const int ip = std::min(n - 1, i + 1), im = std::max(0, i - 1);
    const double da = (a_tab[ip] - a_tab[im]) / (s_grid[ip] - s_grid[im]);
    bg.H_tab[i] = da / a_tab[i];
  }
  bg.s_grid = std::move(s_grid);
  bg.a_tab = std::move(a_tab);
  return model;
}

LowerOrderCoefficients bardeen_coefficients(const FLRWBackground& bg, double cs, int nt) {
  if (!(cs >= 0.0 && cs <= 1.0)) throw PreconditionError("bardeen: need 0 <= cs <= 1");
  LowerOrderCoefficients lo;
  lo.bt_t.resize(nt);
  lo.p0_t.resize(nt);
  const double t1 = bg.s1 - bg.s0;
  for (int j = 0; j < nt; ++j) {
    const double s = bg.s0 + t1 * j / (nt - 1);
    const double H = bg.H(s);
    const double Hp = bg.Hprime(s);
    lo.bt_t[j] = 3.0 * H * (1.0 + cs * cs);
    lo.p0_t[j] = 2.0 * Hp + (1.0 + 3.0 * cs * cs) * H * H;
  }
  return lo;
}

SpacetimeField solve_bardeen(const FLRWBackground& bg, double cs, const ScalarField& phi0,
                             const ScalarField& phi0_prime, int nt) {
  const LowerOrderCoefficients lo = bardeen_coefficients(bg, cs, nt);
  return solve_cauchy_fd(CauchyData(phi0, phi0_prime), cs, lo, bg.s1 - bg.s0, nt);
}

LowerOrderCoefficients scalar_perturbation_coefficients(const FLRWBackground& bg,
                                                        const std::vector<double>& phi0_history,
                                                        int nt) {
  if (phi0_history.size() != bg.s_grid.size())
    throw PreconditionError("scalar perturbation: phi0 history must live on the background s-grid");
  const int ns = static_cast<int>(bg.s_grid.size());
  const double ds = bg.s_grid[1] - bg.s_grid[0];
  std::vector<double> d1(ns), d2(ns);
  for (int i = 0; i < ns; ++i) {
    const int ip = std::min(ns - 1, i + 1), im = std::max(0, i - 1);
    d1[i] = (phi0_history[ip] - phi0_history[im]) / ((ip - im) * ds);
    if (i == 0)
      d2[i] = (phi0_history[2] - 2.0 * phi0_history[1] + phi0_history[0]) / (ds * ds);
    else if (i == ns - 1)
      d2[i] = (phi0_history[ns - 1] - 2.0 * phi0_history[ns - 2] + phi0_history[ns - 3]) / (ds * ds);
    else
      d2[i] = (phi0_history[i + 1] - 2.0 * phi0_history[i] + phi0_history[i - 1]) / (ds * ds);
  }
  double scale = 0.0;
  for (double v : d1) scale = std::max(scale, std::abs(v));
  LowerOrderCoefficients lo;
  lo.bt_t.resize(nt);
  lo.p0_t.resize(nt);
  const double t1 = bg.s1 - bg.s0;
  for (int j = 0; j < nt; ++j) {
    const double s = bg.s0 + t1 * j / (nt - 1);
    const double p1 = interp_cubic(bg.s_grid, d1, s);
    if (std::abs(p1) < 1e-8 * std::max(1.0, scale))
      throw DegenerateBackground("scalar perturbation: phi0' crosses zero on [s0,s1]");
    const double ratio = interp_cubic(bg.s_grid, d2, s) / p1;
    const double H = bg.H(s);
    lo.bt_t[j] = 2.0 * (H - ratio);
    lo.p0_t[j] = 2.0 * (bg.Hprime(s) - H * ratio);
  }
  return lo;
}

SpacetimeField solve_scalar_perturbation(const FLRWBackground& bg,
                                         const std::vector<double>& phi0_history,
                                         const ScalarField& Phi0, const ScalarField& Phi0_prime,
                                         int nt) {
  const LowerOrderCoefficients lo = scalar_perturbation_coefficients(bg, phi0_history, nt);
  return solve_cauchy_fd(CauchyData(Phi0, Phi0_prime), 1.0, lo, bg.s1 - bg.s0, nt);
}

}  // namespace lrt
