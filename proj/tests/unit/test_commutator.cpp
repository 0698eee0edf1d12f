#include <doctest.h>

#include "gzk/commutator.hpp"
#include "gzk/errors.hpp"
#include "gzk/linear_group.hpp"
#include "gzk/transform.hpp"
#include "gzk/weighted_spectrum.hpp"
#include "oracles.hpp"

using namespace gzk;

namespace {
WeightParams weights(double r, double beta = 0.0) {
  WeightParams w;
  w.r1 = w.r2 = r;
  w.s = std::max(1.0, 2 * r);
  w.beta = beta;
  return w;
}
}  // namespace

TEST_CASE("cusp-corrected spectrum of |x|^a times a Gaussian converges to the continuum coefficients") {
  // c_m = (1/l) int |x|^a e^{-x^2/2} e^{-i xi x} dx by fine midpoint sums in x = v^2
  const double a = 0.5, l = 20.0;
  const auto g = make_grid(64, 8, l, l);
  const Field f = Field::sample(g, [](double x, double) { return complex{std::exp(-x * x / 2)}; });
  const Field c = cusp_weighted_spectrum(f, Axis::X, a);
  const Field plain = cusp_weighted_spectrum(f, Axis::X, a, 0);
  double err = 0, err_plain = 0;
  for (std::size_t i = 0; i < 64; ++i) {
    const double xi = g.xi()[i];
    const std::size_t n = 400000;
    const double vmax = std::sqrt(l / 2);
    double acc = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const double v = (static_cast<double>(k) + 0.5) * vmax / static_cast<double>(n);
      const double x = v * v;
      acc += 2 * v * std::pow(x, a) * std::exp(-x * x / 2) * std::cos(xi * x);
    }
    acc *= 2 * vmax / static_cast<double>(n) / l;
    err = std::max(err, std::abs(c(i, 0) - acc));
    err_plain = std::max(err_plain, std::abs(plain(i, 0) - acc));
  }
  CHECK(err < 5e-6);
  CHECK(err_plain > 100 * err);
}

TEST_CASE("t = 0 gives zero residual") {
  const auto g = make_grid(64, 64, 20, 20);
  const NormReport r = commutator_check(oracle::gaussian(g), 0.0, weights(0.5));
  CHECK(r.get("residual_x") < 1e-14);
  CHECK(r.get("residual_y") < 1e-14);
  CHECK(r.get("phi_norm_x") == 0.0);
}

TEST_CASE("Gaussian identity at 256^2 on the 40-box, r = 0.5, t = 1") {
  const auto g = make_grid(256, 256, 40, 40);
  const NormReport r = commutator_check(oracle::gaussian(g), 1.0, weights(0.5));
  CHECK(r.get("residual_max") <= 1e-4);
  CHECK(r.get("bound_ratio_max") > 0.0);
  CHECK(std::isfinite(r.get("bound_ratio_max")));
}

TEST_CASE("residual decreases under refinement") {
  std::vector<double> res;
  for (std::size_t n : {64, 128, 256}) {
    const auto g = make_grid(n, n, 40, 40);
    res.push_back(commutator_check(oracle::gaussian(g), 0.5, weights(0.25)).get("residual_max"));
  }
  CHECK(res[1] < res[0]);
  CHECK(res[2] < res[1]);
}

TEST_CASE("beta identity and its beta -> 0 limit") {
  const auto g = make_grid(128, 128, 40, 40);
  const Field u = oracle::gaussian(g);
  const NormReport r = commutator_check_beta(u, 0.5, weights(0.6, 0.25));
  CHECK(r.get("residual_max") <= 1e-3);
  const NormReport base = commutator_check(u, 0.5, weights(0.6));
  const NormReport tiny = commutator_check_beta(u, 0.5, weights(0.6, 1e-8));
  CHECK(tiny.get("residual_x") == doctest::Approx(base.get("residual_x")).epsilon(1e-5));
  // D^beta drops the mean mode for every beta > 0, so the bound moves slightly
  CHECK(tiny.get("bound_ratio_x") == doctest::Approx(base.get("bound_ratio_x")).epsilon(1e-2));
}

TEST_CASE("errors: beta out of range, tail violation, non-finite data") {
  const auto g = make_grid(64, 64, 20, 20);
  const Field u = oracle::gaussian(g);
  CHECK_THROWS_AS(commutator_check_beta(u, 1.0, weights(0.5, 0.0)), ValidationError);
  CHECK_THROWS_AS(commutator_check_beta(u, 1.0, weights(0.5, 0.6)), ValidationError);
  CHECK_THROWS_AS(commutator_check(oracle::gaussian(g, 4.0), 1.0, weights(0.5)), TailViolation);
  Field bad = u;
  bad(3, 3) = NAN;
  CHECK_THROWS_AS(commutator_check(bad, 1.0, weights(0.5)), NumericalGuardError);
}
