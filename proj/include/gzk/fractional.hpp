#pragma once

#include <vector>

#include "gzk/field.hpp"

namespace gzk {

/// |xi|^alpha (axis X) or |eta|^alpha (axis Y) as a spectral multiplier;
/// keeps the input representation. alpha = 0 returns u unchanged.
Field frac_deriv(const Field& u, Axis axis, double alpha);
inline Field frac_deriv_x(const Field& u, double alpha) { return frac_deriv(u, Axis::X, alpha); }
inline Field frac_deriv_y(const Field& u, double alpha) { return frac_deriv(u, Axis::Y, alpha); }

/// Fourier coefficients of |x|^alpha restricted to one period of length l:
///   K_m = (1/l) * integral_{-l/2}^{l/2} |x|^alpha exp(-i 2 pi m x / l) dx,  m = 0..count-1.
/// The sequence is real and even in m.
std::vector<double> box_kernel(double l, double alpha, std::size_t count);

/// Phi_{j,t,alpha} on the spectral lattice: the part of the coefficients of
/// |x_j|^alpha W(t)u that is not W(t) applied to those of |x_j|^alpha u,
/// up to the phase factor, i.e.
///   |x_j|^alpha W(t)u  ^=  g (|x_j|^alpha u)^ + g Phi,   g = exp(i t phi).
/// The shift integral runs over the lattice with box-exact kernel weights.
Field phi_operator(const Field& u_hat, Axis axis, double t, double alpha);

}  // namespace gzk
