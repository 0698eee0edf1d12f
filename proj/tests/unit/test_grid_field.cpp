#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gzk/errors.hpp"
#include "gzk/field.hpp"
#include "gzk/grid.hpp"

using namespace gzk;
constexpr double pi = std::numbers::pi;

TEST_CASE("make_grid on the 2pi box has integer wavenumbers") {
  const auto g = make_grid(8, 8, 2 * pi, 2 * pi);
  std::vector<double> modes;
  for (std::size_t i = 0; i < 8; ++i) modes.push_back(g.xi()[i]);
  const std::vector<double> expect{0, 1, 2, 3, -4, -3, -2, -1};
  for (std::size_t i = 0; i < 8; ++i) CHECK(modes[i] == doctest::Approx(expect[i]).epsilon(1e-15));
  CHECK(g.is_nyquist(Axis::X, 4));
  CHECK(g.xi_odd()[4] == 0.0);
  CHECK(g.xi()[4] == doctest::Approx(-4.0));
}

TEST_CASE("wavenumber spacing is 2pi/l") {
  const auto g = make_grid(8, 8, 4 * pi, 2 * pi);
  CHECK(g.xi()[1] == doctest::Approx(0.5));
  CHECK(g.eta()[1] == doctest::Approx(1.0));
}

TEST_CASE("max wavenumber of a 16-point 40-box") {
  const auto g = make_grid(16, 16, 40, 40);
  CHECK(g.max_wavenumber(Axis::X) == doctest::Approx(2 * pi * 8 / 40).epsilon(1e-14));
  CHECK(std::abs(g.xi()[8]) == doctest::Approx(1.2566370614359172));
}

TEST_CASE("box-centered coordinates") {
  const auto g = make_grid(8, 16, 4.0, 8.0);
  CHECK(g.x(0) == doctest::Approx(-2.0));
  CHECK(g.x(4) == doctest::Approx(0.0));
  CHECK(g.y(8) == doctest::Approx(0.0));
  CHECK(g.dx() == doctest::Approx(0.5));
}

TEST_CASE("make_grid rejects bad sizes and lengths") {
  CHECK_THROWS_AS(make_grid(12, 8, 1, 1), ValidationError);
  CHECK_THROWS_AS(make_grid(4, 8, 1, 1), ValidationError);
  CHECK_THROWS_AS(make_grid(8, 96, 1, 1), ValidationError);
  CHECK_THROWS_AS(make_grid(8, 8, 0.0, 1), ValidationError);
  CHECK_THROWS_AS(make_grid(8, 8, 1, -2.0), ValidationError);
  CHECK_THROWS_AS(make_grid(8, 8, NAN, 1), ValidationError);
}

TEST_CASE("field arithmetic and norms") {
  const auto g = make_grid(8, 8, 2.0, 2.0);
  Field a = Field::sample(g, [](double x, double) { return complex{x, 0}; });
  Field b = Field::sample(g, [](double, double y) { return complex{0, y}; });
  Field c = a + b;
  CHECK(c(3, 5) == complex{g.x(3), g.y(5)});
  c -= b;
  CHECK(c(3, 5) == a(3, 5));
  c.axpy(2.0, b);
  CHECK(c(1, 2).imag() == doctest::Approx(2 * g.y(2)));
  const Field one = Field::sample(g, [](double, double) { return complex{1.0}; });
  CHECK(l2_norm(one) == doctest::Approx(2.0));  // sqrt(area)
  CHECK(pointwise_product(a, one)(2, 2) == a(2, 2));
  CHECK(one.all_finite());
  Field bad = one;
  bad(0, 0) = NAN;
  CHECK_FALSE(bad.all_finite());
}

TEST_CASE("mismatched fields are rejected") {
  const Field a(make_grid(8, 8, 1, 1), Representation::Physical);
  const Field b(make_grid(16, 8, 1, 1), Representation::Physical);
  const Field c(make_grid(8, 8, 1, 1), Representation::Spectral);
  CHECK_THROWS_AS(a + b, ValidationError);
  CHECK_THROWS_AS(a + c, ValidationError);
}
