#pragma once

#include <functional>

#include "gzk/field.hpp"

namespace gzk {

/// Physical -> spectral. Forward carries 1/(nx*ny); see Field for the convention.
Field forward(const Field& f);
/// Spectral -> physical, no normalization factor.
Field inverse(const Field& f);

/// Returns the field in the requested representation (copy if already there).
Field to_spectral(const Field& f);
Field to_physical(const Field& f);

/// Modes with |m| >= n/(p+1) on either axis are removed from products of
/// degree p (p = 2 is the 2/3 rule).
double dealias_cutoff(std::size_t n, int product_degree);
Field dealias(const Field& spectral, int product_degree);

/// Multiplies the spectrum by symbol(ix, iy); the result keeps the input's
/// representation.
Field apply_multiplier(const Field& f, const std::function<complex(std::size_t, std::size_t)>& symbol);

/// Spectral d/dx and d/dy (Nyquist mode zeroed). Keeps representation.
Field derivative(const Field& f, Axis axis);

/// Projects a spectral field onto the Hermitian-symmetric subspace
/// c(-m,-n) = conj(c(m,n)), i.e. the spectrum of a real function.
void hermitian_symmetrize(Field& spectral);

/// Drops the imaginary part of a physical field.
Field real_part(const Field& physical);

}  // namespace gzk
