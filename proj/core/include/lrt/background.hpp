#pragma once

#include <string>
#include <vector>

#include "lrt/field.hpp"
#include "lrt/wave_fd.hpp"

namespace lrt {

// FLRW background in conformal time s on [s0, s1]: tabulated scale factor
// a(s) on a uniform grid plus H = a'/a. The built-in matter (a ~ s^2) and
// radiation (a ~ s) eras carry exact closed forms; custom tabulations fall
// back to centered differences and cubic interpolation.
struct FLRWBackground {
  enum class Model { Matter, Radiation, Custom };
  Model model = Model::Matter;
  double s0 = 1.0;
  double s1 = 2.0;
  std::vector<double> s_grid;
  std::vector<double> a_tab;
  std::vector<double> H_tab;

  double H(double s) const;        // a'/a
  double Hprime(double s) const;   // dH/ds
  double a(double s) const;
};

struct CosmologyModel {
  std::string tag;  // "matter", "radiation", "custom"
  FLRWBackground bg;
};

// samples: tabulation resolution. s0 must be positive (the built-in eras are
// singular at s = 0).
CosmologyModel make_flrw(const std::string& tag, double s0, double s1, int samples);
CosmologyModel make_flrw_custom(std::vector<double> s_grid, std::vector<double> a_tab);

// Bardeen potential equation
//   Phi'' + 3H(1+cs^2) Phi' - cs^2 lap Phi + [2H' + (1+3cs^2)H^2] Phi = 0,
// time-stepped by the flat FD solver with speed cs on s in [s0, s1].
SpacetimeField solve_bardeen(const FLRWBackground& bg, double cs, const ScalarField& phi0,
                             const ScalarField& phi0_prime, int nt);

// Coefficient series the Bardeen solver feeds to solve_cauchy_fd (also used
// by the normal-equation preconditioner).
LowerOrderCoefficients bardeen_coefficients(const FLRWBackground& bg, double cs, int nt);

// Scalar-field-driven perturbation equation
//   Phi'' + 2(H - phi0''/phi0') Phi' - lap Phi + 2(H' - H phi0''/phi0') Phi = 0
// with speed 1; phi0 is the background scalar field tabulated on bg.s_grid.
SpacetimeField solve_scalar_perturbation(const FLRWBackground& bg,
                                         const std::vector<double>& phi0_history,
                                         const ScalarField& Phi0, const ScalarField& Phi0_prime,
                                         int nt);

LowerOrderCoefficients scalar_perturbation_coefficients(const FLRWBackground& bg,
                                                        const std::vector<double>& phi0_history,
                                                        int nt);

}  // namespace lrt
