#include "gzk/commutator.hpp"

#include <algorithm>
#include <cmath>

#include "gzk/diagnostics.hpp"
#include "gzk/errors.hpp"
#include "gzk/fractional.hpp"
#include "gzk/linear_group.hpp"
#include "gzk/norms.hpp"
#include "gzk/transform.hpp"
#include "gzk/weighted_spectrum.hpp"

namespace gzk {

namespace {

NormReport check(const Field& u0_in, double t, const WeightParams& w, double beta,
                 const CommutatorOptions& opt) {
  if (!(w.r1 > 0.0 && w.r1 < 1.0) || !(w.r2 > 0.0 && w.r2 < 1.0)) {
    throw ValidationError("commutator_check: r1, r2 must lie in (0,1)");
  }
  const Field u0 = to_physical(u0_in);
  check_finite(u0, "commutator_check");
  check_tail(u0, "commutator_check");
  const auto& g = u0.grid();

  const Field u0_hat = forward(u0);
  const auto phase = group_multiplier(g, t);
  Field v_hat = u0_hat;
  for (std::size_t n = 0; n < g.size(); ++n) v_hat.values()[n] *= phase[n];
  const Field v = inverse(v_hat);

  const double order = beta + w.s;
  const double denom = (1.0 + std::abs(t)) *
                       (l2_norm(u0_hat) + l2_norm(frac_deriv_x(u0_hat, order)) +
                        l2_norm(frac_deriv_y(u0_hat, order)));
  if (!std::isfinite(denom)) throw NumericalGuardError("commutator_check: infinite data norm");

  NormReport rep;
  double worst = 0.0, worst_ratio = 0.0;
  for (const Axis axis : {Axis::X, Axis::Y}) {
    const double r = axis == Axis::X ? w.r1 : w.r2;
    const char* tag = axis == Axis::X ? "x" : "y";

    Field lhs = cusp_weighted_spectrum(v, axis, r, opt.cusp_order);
    Field rhs = cusp_weighted_spectrum(u0, axis, r, opt.cusp_order);
    Field phi = phi_operator(u0_hat, axis, t, r);
    for (std::size_t n = 0; n < g.size(); ++n) {
      rhs.values()[n] = phase[n] * (rhs.values()[n] + phi.values()[n]);
    }
    if (beta > 0.0) {
      lhs = frac_deriv(lhs, axis, beta);
      rhs = frac_deriv(rhs, axis, beta);
      phi = frac_deriv(phi, axis, beta);
    }
    const double lhs_norm = l2_norm(lhs);
    const double res = lhs_norm > 0.0 ? l2_norm(lhs - rhs) / lhs_norm : l2_norm(lhs - rhs);
    const double phi_norm = l2_norm(phi);
    const double ratio = denom > 0.0 ? phi_norm / denom : 0.0;
    rep.set(std::string("residual_") + tag, res);
    rep.set(std::string("phi_norm_") + tag, phi_norm);
    rep.set(std::string("bound_ratio_") + tag, ratio);
    worst = std::max(worst, res);
    worst_ratio = std::max(worst_ratio, ratio);
  }
  rep.set("residual_max", worst);
  rep.set("bound_ratio_max", worst_ratio);
  rep.set("data_norm", denom / (1.0 + std::abs(t)));
  rep.set_meta("grid", std::to_string(g.nx()) + "x" + std::to_string(g.ny()) + " box " +
                           format_double(g.lx()) + "x" + format_double(g.ly()));
  rep.set_meta("t", format_double(t));
  if (!rep.all_finite()) throw NumericalGuardError("commutator_check: non-finite result");
  return rep;
}

}  // namespace

NormReport commutator_check(const Field& u0, double t, const WeightParams& w, const CommutatorOptions& opt) {
  return check(u0, t, w, 0.0, opt);
}

NormReport commutator_check_beta(const Field& u0, double t, const WeightParams& w,
                                 const CommutatorOptions& opt) {
  const double rmin = std::min(w.r1, w.r2);
  if (!(w.beta > 0.0 && w.beta < rmin)) {
    throw ValidationError("commutator_check_beta: beta=" + format_double(w.beta) +
                          " must lie in (0, min{r1,r2}=" + format_double(rmin) + ")");
  }
  return check(u0, t, w, w.beta, opt);
}

}  // namespace gzk
