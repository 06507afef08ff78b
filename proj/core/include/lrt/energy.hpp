#pragma once

#include "lrt/field.hpp"

namespace lrt {

// Conservation diagnostic E(t) = 1/2 int |d_t f|^2 + c^2 |grad f|^2 for the
// interior slices j = 1..nt-2. The time derivative is the centered difference
// of the stored slices with the per-mode factor c|xi|dt/sin(c|xi|dt), which
// makes E exactly constant for spectral propagator solutions while leaving
// the O(dt^2) drift of FD solutions visible.
std::vector<double> energy(const SpacetimeField& f, double c);

}  // namespace lrt
