#pragma once

#include "gzk/field.hpp"

namespace gzk {

/// phi(xi, eta) = xi^3 + xi eta^2
inline double phase_symbol(double xi, double eta) noexcept { return xi * xi * xi + xi * eta * eta; }

/// exp(i t phi(xi, eta))
complex symbol(double xi, double eta, double t) noexcept;

/// exp(i t phi) on the grid lattice in FFT order; the Nyquist mode of the odd
/// variable xi is zeroed.
std::vector<complex> group_multiplier(const GridSpec& g, double t);

/// W(t)u. Keeps the input representation.
Field propagate(const Field& u, double t);

}  // namespace gzk
