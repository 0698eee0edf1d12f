#pragma once

#include "gzk/field.hpp"
#include "gzk/weight_params.hpp"

namespace gzk {

/// ||u|| + ||D_x^s u|| + ||D_y^s u||. At s = 0 this is 3||u||.
double hs_norm(const Field& u, double s);

/// ||(1 + xi^2 + eta^2)^{s/2} u^||, the Bessel-potential form, for cross-checks.
double bessel_norm(const Field& u, double s);

/// (integral (|x|^{2 r1} + |y|^{2 r2}) |u|^2)^{1/2}. Runs the boundary-tail check.
double weighted_l2(const Field& u, double r1, double r2);

/// ||(|x|^{r1} + |y|^{r2}) u||_2, the weight used in mu2. Runs the boundary-tail check.
double weighted_l2_sum(const Field& u, double r1, double r2);

/// hs_norm(u, s) + weighted_l2(u, r1, r2).
double z_norm(const Field& u, const WeightParams& w);

}  // namespace gzk
