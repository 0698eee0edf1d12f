#pragma once

#include "gzk/field.hpp"

namespace gzk {

inline constexpr int kDefaultCuspOrder = 6;

/// Lattice Fourier coefficients of |x_j|^alpha f for a physical field f,
/// where x_j is the coordinate along `axis`.
///
/// The plain DFT of the samples |x_n|^alpha f_n carries an O(h^{1+alpha})
/// error from the cusp at x = 0; it is removed with the zeta-function
/// endpoint expansion
///   (h^{1+alpha}/l) sum_{k<=order} 2 zeta(-alpha-2k) (-1)^k/(2k)! sum_j c_j (z_j - z_m)^{2k},
/// z = xi h, using the band-limited coefficients c_j of f.
Field cusp_weighted_spectrum(const Field& f, Axis axis, double alpha, int order = kDefaultCuspOrder);

}  // namespace gzk
