#pragma once

#include <map>
#include <utility>
#include <vector>

#include "gzk/field.hpp"

namespace gzk {

/// Quadrature for the directional singular integral
///   D_{j,alpha} f(x) = (1/d_alpha) * integral (f(x + y e_j) - f(x)) / |y|^{1+alpha} dy.
/// |y| < h is replaced by the second-order Taylor term, [h, Y] uses Gauss-Legendre
/// panels on a geometric mesh, and |y| > Y is folded onto one period [Y, Y+l]
/// with Hurwitz-zeta weights (exact for periodic fields).
struct SteinQuadrature {
  double inner_cutoff = 1e-3;
  double outer_cutoff = 1.0;
  std::size_t nodes_per_panel = 8;
  /// d_alpha per (axis, alpha) after calibrate_stein; falls back to the
  /// analytic constant when absent.
  std::map<std::pair<Axis, double>, double> constants;

  double constant(Axis axis, double alpha) const;
  void validate() const;
};

/// -pi / (Gamma(1+alpha) sin(pi alpha / 2)): the 1D normalization that makes
/// the integral equal the |xi|^alpha multiplier.
double stein_analytic_constant(double alpha);
/// The n = 1 value of pi^{n/2} 2^{-alpha} Gamma(-alpha/2) / Gamma((n+2)/2), recorded for comparison.
double stein_reference_constant(double alpha);

/// Shift nodes y_i > 0 and weights w_i such that the integral over |y| >= h
/// of (f(x+y) - f(x))|y|^{-1-alpha} equals sum_i w_i (f(x+y_i) + f(x-y_i) - 2 f(x))
/// for fields periodic with period `period`.
struct SteinNodes {
  std::vector<double> y;
  std::vector<double> w;
};
SteinNodes stein_nodes(const SteinQuadrature& q, double alpha, double period, double max_wavenumber);

/// Unnormalized symbol (no 1/d) of the quadrature at wavenumber xi.
double stein_raw_symbol(const SteinQuadrature& q, const SteinNodes& nodes, double alpha, double xi);

/// Quadrature Stein derivative along `axis`, normalized by q.constant(axis, alpha).
Field stein_deriv(const Field& u, Axis axis, double alpha, const SteinQuadrature& q);

struct SteinCalibration {
  Axis axis = Axis::X;
  double alpha = 0.0;
  double calibrated = 0.0;   // fitted d_alpha
  double analytic = 0.0;     // stein_analytic_constant
  double reference = 0.0;    // stein_reference_constant
  double residual = 0.0;     // relative L2 error vs frac_deriv after fitting
};

/// Fits d_alpha by least squares so stein_deriv matches frac_deriv on a
/// reference Gaussian on `grid`, and stores it in q.
SteinCalibration calibrate_stein(SteinQuadrature& q, const GridSpec& grid, Axis axis, double alpha);

/// Phi_{j,phi,alpha}(f)(x) = (1/d) integral (exp(i t (phi(x+y e_j) - phi(x))) - 1) f(x+y e_j) |y|^{-1-alpha} dy
/// evaluated in physical space with phi(x, y) = x^3 + x y^2 at box-wrapped positions,
/// so that D(g f) = g D f + g Phi(f) for g = exp(i t phi) on the periodic box.
Field phi_physical(const Field& f, Axis axis, double t, double alpha, const SteinQuadrature& q);

}  // namespace gzk
