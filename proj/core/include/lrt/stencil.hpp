#pragma once

#include <vector>

#include "lrt/field.hpp"

namespace lrt::stencil {

// Periodic second-order stencils on the cubic grid. All routines accumulate
// into `out` (callers zero it when needed).

// out += s * lap(in), 7-point Laplacian.
void add_laplacian(const SpatialGrid& g, double s, const std::vector<double>& in,
                   std::vector<double>& out);

// out += s * d_axis(in), centered first difference along axis in {0,1,2}.
void add_diff(const SpatialGrid& g, int axis, double s, const std::vector<double>& in,
              std::vector<double>& out);

// out += s * coeff .* d_axis(in)   (variable-coefficient advection term)
void add_coeff_diff(const SpatialGrid& g, int axis, double s, const std::vector<double>& coeff,
                    const std::vector<double>& in, std::vector<double>& out);

// out += s * d_axis(coeff .* in)   (its transpose partner, up to sign)
void add_diff_coeff(const SpatialGrid& g, int axis, double s, const std::vector<double>& coeff,
                    const std::vector<double>& in, std::vector<double>& out);

// out += s * d_a d_b (in), centered second derivative (a==b: 3-point; a!=b:
// 4-point cross). Self-transpose on the periodic grid.
void add_second(const SpatialGrid& g, int a, int b, double s, const std::vector<double>& in,
                std::vector<double>& out);

// out += s * coeff .* (d_a d_b in)
void add_coeff_second(const SpatialGrid& g, int a, int b, double s,
                      const std::vector<double>& coeff, const std::vector<double>& in,
                      std::vector<double>& out);

// out += s * d_a d_b (coeff .* in)
void add_second_coeff(const SpatialGrid& g, int a, int b, double s,
                      const std::vector<double>& coeff, const std::vector<double>& in,
                      std::vector<double>& out);

}  // namespace lrt::stencil
