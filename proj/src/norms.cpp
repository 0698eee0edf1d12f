#include "gzk/norms.hpp"

#include <cmath>

#include "gzk/diagnostics.hpp"
#include "gzk/errors.hpp"
#include "gzk/transform.hpp"

namespace gzk {

namespace {

void check_order(double s) {
  if (!(s >= 0.0) || !std::isfinite(s)) throw ValidationError("Sobolev order must be nonnegative");
}

template <class Weight>
double spectral_weighted(const Field& c, Weight&& weight) {
  const auto& g = c.grid();
  double acc = 0.0;
  for (std::size_t i = 0; i < g.nx(); ++i)
    for (std::size_t j = 0; j < g.ny(); ++j) {
      const double w = weight(i, j);
      acc += w * w * std::norm(c(i, j));
    }
  return std::sqrt(g.area() * acc);
}

template <class Weight>
double physical_weighted(const Field& p, Weight&& weight) {
  const auto& g = p.grid();
  double acc = 0.0;
  for (std::size_t i = 0; i < g.nx(); ++i)
    for (std::size_t j = 0; j < g.ny(); ++j) acc += weight(g.x(i), g.y(j)) * std::norm(p(i, j));
  return std::sqrt(g.cell_area() * acc);
}

}  // namespace

double hs_norm(const Field& u, double s) {
  check_order(s);
  const Field c = to_spectral(u);
  const auto& xi = c.grid().xi();
  const auto& eta = c.grid().eta();
  const double base = l2_norm(c);
  if (s == 0.0) return 3.0 * base;
  return base +
         spectral_weighted(c, [&](std::size_t i, std::size_t) { return std::pow(std::abs(xi[i]), s); }) +
         spectral_weighted(c, [&](std::size_t, std::size_t j) { return std::pow(std::abs(eta[j]), s); });
}

double bessel_norm(const Field& u, double s) {
  check_order(s);
  const Field c = to_spectral(u);
  const auto& xi = c.grid().xi();
  const auto& eta = c.grid().eta();
  return spectral_weighted(c, [&](std::size_t i, std::size_t j) {
    return std::pow(1.0 + xi[i] * xi[i] + eta[j] * eta[j], 0.5 * s);
  });
}

double weighted_l2(const Field& u, double r1, double r2) {
  const Field p = to_physical(u);
  check_tail(p, "weighted_l2");
  return physical_weighted(p, [&](double x, double y) {
    return std::pow(std::abs(x), 2.0 * r1) + std::pow(std::abs(y), 2.0 * r2);
  });
}

double weighted_l2_sum(const Field& u, double r1, double r2) {
  const Field p = to_physical(u);
  check_tail(p, "weighted_l2_sum");
  return physical_weighted(p, [&](double x, double y) {
    const double w = std::pow(std::abs(x), r1) + std::pow(std::abs(y), r2);
    return w * w;
  });
}

double z_norm(const Field& u, const WeightParams& w) {
  return hs_norm(u, w.s) + weighted_l2(u, w.r1, w.r2);
}

}  // namespace gzk
