#include "gzk/weighted_spectrum.hpp"

#include <gsl/gsl_sf_zeta.h>

#include <cmath>

#include "gzk/errors.hpp"
#include "gzk/transform.hpp"

namespace gzk {

Field cusp_weighted_spectrum(const Field& f, Axis axis, double alpha, int order) {
  if (!f.is_physical()) throw ValidationError("cusp_weighted_spectrum: expects a physical field");
  if (!(alpha > 0.0) || order < 0) throw ValidationError("cusp_weighted_spectrum: need alpha > 0, order >= 0");
  const auto& g = f.grid();
  const std::size_t nx = g.nx(), ny = g.ny();

  Field weighted = f;
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t j = 0; j < ny; ++j) {
      weighted(i, j) *= std::pow(std::abs(axis == Axis::X ? g.x(i) : g.y(j)), alpha);
    }
  }
  Field out = forward(weighted);
  const Field c = forward(f);

  const double h = g.spacing(axis);
  const std::size_t n = g.n(axis);
  const std::size_t other = axis == Axis::X ? ny : nx;
  const auto& k = g.wavenumbers(axis);
  const std::size_t lmax = 2 * static_cast<std::size_t>(order);

  std::vector<double> coef(order + 1);
  double fact = 1.0;
  for (int q = 0; q <= order; ++q) {
    if (q > 0) fact *= (2.0 * q - 1.0) * (2.0 * q);
    coef[q] = 2.0 * gsl_sf_zeta(-alpha - 2.0 * q) * (q % 2 ? -1.0 : 1.0) / fact;
  }
  // binomial table
  std::vector<std::vector<double>> binom(lmax + 1, std::vector<double>(lmax + 1, 0.0));
  for (std::size_t a = 0; a <= lmax; ++a) {
    binom[a][0] = 1.0;
    for (std::size_t b = 1; b <= a; ++b) binom[a][b] = binom[a - 1][b - 1] + (b < a ? binom[a - 1][b] : 0.0);
  }

  const double pref = std::pow(h, 1.0 + alpha) / g.length(axis);
  auto at = [&](Field& F, std::size_t i, std::size_t o) -> complex& {
    return axis == Axis::X ? F(i, o) : F(o, i);
  };
  std::vector<complex> mu(lmax + 1);
  std::vector<double> zpow(lmax + 1);
  for (std::size_t o = 0; o < other; ++o) {
    std::fill(mu.begin(), mu.end(), complex{});
    for (std::size_t i = 0; i < n; ++i) {
      const complex ci = axis == Axis::X ? c(i, o) : c(o, i);
      const double z = k[i] * h;
      double p = 1.0;
      for (std::size_t l = 0; l <= lmax; ++l, p *= z) mu[l] += ci * p;
    }
    for (std::size_t m = 0; m < n; ++m) {
      const double zm = -k[m] * h;
      double p = 1.0;
      for (std::size_t l = 0; l <= lmax; ++l, p *= zm) zpow[l] = p;
      complex corr{};
      for (int q = 0; q <= order; ++q) {
        const std::size_t e = 2 * static_cast<std::size_t>(q);
        complex acc{};
        for (std::size_t l = 0; l <= e; ++l) acc += binom[e][l] * zpow[e - l] * mu[l];
        corr += coef[q] * acc;
      }
      at(out, m, o) -= pref * corr;
    }
  }
  return out;
}

}  // namespace gzk
