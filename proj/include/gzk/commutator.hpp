#pragma once

#include "gzk/field.hpp"
#include "gzk/report.hpp"
#include "gzk/weight_params.hpp"

namespace gzk {

struct CommutatorOptions {
  int cusp_order = 6;
};

/// Checks |x|^{r1} W(t)u0 = W(t)(|x|^{r1} u0) + W(t) Phi_x (and the y analogue)
/// on the spectral lattice. Values per direction d in {x, y}:
///   residual_d     ||LHS - RHS|| / ||LHS||
///   phi_norm_d     ||Phi_d||_2
///   bound_ratio_d  ||Phi_d|| / ((1+|t|)(||u0|| + ||D_x^s u0|| + ||D_y^s u0||))
/// plus residual_max and bound_ratio_max.
NormReport commutator_check(const Field& u0, double t, const WeightParams& w,
                            const CommutatorOptions& opt = {});

/// Same with the directional D^beta applied to both sides (D_x^beta for the x
/// identity, D_y^beta for y); the bound uses order beta + s.
NormReport commutator_check_beta(const Field& u0, double t, const WeightParams& w,
                                 const CommutatorOptions& opt = {});

}  // namespace gzk
