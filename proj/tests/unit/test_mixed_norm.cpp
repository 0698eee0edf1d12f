#include <doctest.h>

#include <numbers>

#include "gzk/errors.hpp"
#include "gzk/mixed_norm.hpp"
#include "gzk/mu_norms.hpp"
#include "gzk/norms.hpp"
#include "oracles.hpp"

using namespace gzk;
using D = NormDim;

namespace {

Trajectory sample_trajectory() {
  const auto g = make_grid(8, 8, 6, 5);
  std::vector<Field> fs;
  std::vector<double> ts;
  for (int m = 0; m < 4; ++m) {
    ts.push_back(0.1 * m);
    fs.push_back(Field::sample(g, [&](double x, double y) {
      return complex{std::exp(-(x * x + 0.5 * y * y)) * (1 + 0.3 * m) + 0.1 * std::sin(x + m * y)};
    }));
  }
  return Trajectory(ts, fs);
}

}  // namespace

TEST_CASE("constant field") {
  const auto g = make_grid(8, 8, 3, 2);
  const Field c = Field::sample(g, [](double, double) { return complex{2.5}; });
  const auto tr = Trajectory::stationary(c, 0.5, 10);
  CHECK(mixed_norm(tr, {}) == doctest::Approx(2.5 * std::sqrt(6 * 0.5)));
  MixedNormSpec inf{{D::T, D::X, D::Y}, {kInf, kInf, kInf}};
  CHECK(mixed_norm(tr, inf) == doctest::Approx(2.5));
}

TEST_CASE("single time with L^inf_T is the spatial norm") {
  const auto g = make_grid(16, 16, 10, 10);
  const Field u = oracle::gaussian(g);
  const Trajectory tr({0.0}, {u});
  MixedNormSpec sp{{D::T, D::X, D::Y}, {kInf, 2, 2}};
  CHECK(mixed_norm(tr, sp) == doctest::Approx(l2_norm(u)));
}

TEST_CASE("agrees with a direct nested sum for every family pattern") {
  const auto tr = sample_trajectory();
  for (int k = 1; k <= 9; ++k) {
    WeightParams w;
    w.k = k;
    for (const auto& term : mu1_terms(w)) {
      if (term.hs_sup) continue;
      CAPTURE(term.name);
      CHECK(mixed_norm(tr, term.spec) == doctest::Approx(oracle::brute_mixed_norm(tr, term.spec)).epsilon(1e-12));
    }
  }
  MixedNormSpec odd{{D::Y, D::T, D::X}, {3, 1.5, kInf}, InnerOp::Dx};
  CHECK(mixed_norm(tr, odd) == doctest::Approx(oracle::brute_mixed_norm(tr, odd)).epsilon(1e-12));
}

TEST_CASE("equal exponents commute") {
  const auto tr = sample_trajectory();
  MixedNormSpec a{{D::T, D::X, D::Y}, {2, 2, 2}};
  MixedNormSpec b{{D::Y, D::X, D::T}, {2, 2, 2}};
  CHECK(mixed_norm(tr, a) == doctest::Approx(mixed_norm(tr, b)).epsilon(1e-13));
  MixedNormSpec c{{D::X, D::T, D::Y}, {kInf, kInf, kInf}};
  MixedNormSpec d{{D::Y, D::X, D::T}, {kInf, kInf, kInf}};
  CHECK(mixed_norm(tr, c) == mixed_norm(tr, d));
}

TEST_CASE("invalid specifications") {
  const auto tr = sample_trajectory();
  MixedNormSpec dup{{D::T, D::T, D::Y}, {2, 2, 2}};
  CHECK_THROWS_AS(mixed_norm(tr, dup), ValidationError);
  MixedNormSpec small{{D::T, D::X, D::Y}, {0.5, 2, 2}};
  CHECK_THROWS_AS(mixed_norm(tr, small), ValidationError);
  CHECK_THROWS_AS(Trajectory({0.0, 0.1, 0.3}, {tr[0], tr[1], tr[2]}), ValidationError);
}
