#include "gzk/stein.hpp"

#include <gsl/gsl_sf_zeta.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gzk/diagnostics.hpp"
#include "gzk/errors.hpp"
#include "gzk/fractional.hpp"
#include "gzk/linear_group.hpp"
#include "gzk/quadrature.hpp"
#include "gzk/transform.hpp"

namespace gzk {

namespace {

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw ValidationError("Stein derivative order alpha=" + std::to_string(alpha) + " must lie in (0,1)");
  }
}

double inner_cell(double h, double alpha) { return std::pow(h, 2.0 - alpha) / (2.0 - alpha); }

double wrap(double v, double l) {
  const double r = v + 0.5 * l;
  return r - l * std::floor(r / l) - 0.5 * l;
}

}  // namespace

double stein_analytic_constant(double alpha) {
  return -std::numbers::pi / (std::tgamma(1.0 + alpha) * std::sin(0.5 * std::numbers::pi * alpha));
}

double stein_reference_constant(double alpha) {
  return std::sqrt(std::numbers::pi) * std::pow(2.0, -alpha) * std::tgamma(-0.5 * alpha) / std::tgamma(1.5);
}

double SteinQuadrature::constant(Axis axis, double alpha) const {
  if (auto it = constants.find({axis, alpha}); it != constants.end()) return it->second;
  return stein_analytic_constant(alpha);
}

void SteinQuadrature::validate() const {
  if (!(inner_cutoff > 0.0) || !(outer_cutoff > inner_cutoff)) {
    throw ValidationError("Stein quadrature needs 0 < h < Y (h=" + std::to_string(inner_cutoff) +
                          ", Y=" + std::to_string(outer_cutoff) + ")");
  }
  if (nodes_per_panel < 2) throw ValidationError("Stein quadrature needs at least 2 nodes per panel");
}

SteinNodes stein_nodes(const SteinQuadrature& q, double alpha, double period, double max_wavenumber) {
  q.validate();
  check_alpha(alpha);
  const auto& gl = gauss_legendre(q.nodes_per_panel);
  const double wmax = std::min(0.5, 3.0 / max_wavenumber);
  SteinNodes out;
  auto add_panels = [&](double a, double b, auto&& weight) {
    const auto pieces = static_cast<std::size_t>(std::ceil((b - a) / wmax - 1e-12));
    for (std::size_t p = 0; p < std::max<std::size_t>(pieces, 1); ++p) {
      const double lo = a + (b - a) * static_cast<double>(p) / static_cast<double>(std::max<std::size_t>(pieces, 1));
      const double hi = a + (b - a) * static_cast<double>(p + 1) / static_cast<double>(std::max<std::size_t>(pieces, 1));
      for (std::size_t n = 0; n < gl.nodes.size(); ++n) {
        const double y = 0.5 * (hi - lo) * gl.nodes[n] + 0.5 * (hi + lo);
        out.y.push_back(y);
        out.w.push_back(0.5 * (hi - lo) * gl.weights[n] * weight(y));
      }
    }
  };
  const double big_y = q.outer_cutoff;
  for (double a = q.inner_cutoff; a < big_y;) {
    const double b = std::min(2.0 * a, big_y);
    add_panels(a, b, [&](double y) { return std::pow(y, -1.0 - alpha); });
    a = b;
  }
  const double scale = std::pow(period, -1.0 - alpha);
  add_panels(big_y, big_y + period,
             [&](double y) { return scale * gsl_sf_hzeta(1.0 + alpha, y / period); });
  return out;
}

double stein_raw_symbol(const SteinQuadrature& q, const SteinNodes& nodes, double alpha, double xi) {
  double acc = 0.0;
  for (std::size_t n = 0; n < nodes.y.size(); ++n) acc += nodes.w[n] * (2.0 * std::cos(xi * nodes.y[n]) - 2.0);
  return acc - xi * xi * inner_cell(q.inner_cutoff, alpha);
}

namespace {

std::vector<double> raw_symbols(const GridSpec& g, Axis axis, double alpha, const SteinQuadrature& q) {
  const auto nodes = stein_nodes(q, alpha, g.length(axis), g.max_wavenumber(axis));
  const auto& k = g.wavenumbers(axis);
  std::vector<double> m(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) m[i] = stein_raw_symbol(q, nodes, alpha, k[i]);
  return m;
}

Field apply_axis_symbol(const Field& u, Axis axis, const std::vector<double>& m) {
  if (axis == Axis::X) return apply_multiplier(u, [&](std::size_t i, std::size_t) { return complex{m[i]}; });
  return apply_multiplier(u, [&](std::size_t, std::size_t j) { return complex{m[j]}; });
}

}  // namespace

Field stein_deriv(const Field& u, Axis axis, double alpha, const SteinQuadrature& q) {
  check_alpha(alpha);
  auto m = raw_symbols(u.grid(), axis, alpha, q);
  const double d = q.constant(axis, alpha);
  for (auto& v : m) v /= d;
  return apply_axis_symbol(u, axis, m);
}

SteinCalibration calibrate_stein(SteinQuadrature& q, const GridSpec& grid, Axis axis, double alpha) {
  check_alpha(alpha);
  const double sigma = std::min(grid.lx(), grid.ly()) / 20.0;
  const Field ref = Field::sample(grid, [&](double x, double y) {
    return complex{std::exp(-(x * x + y * y) / (2.0 * sigma * sigma))};
  });
  const Field raw = apply_axis_symbol(ref, axis, raw_symbols(grid, axis, alpha, q));
  const Field target = frac_deriv(ref, axis, alpha);
  double num = 0.0, den = 0.0;
  for (std::size_t n = 0; n < raw.values().size(); ++n) {
    num += std::real(std::conj(raw.values()[n]) * target.values()[n]);
    den += std::norm(raw.values()[n]);
  }
  SteinCalibration cal;
  cal.axis = axis;
  cal.alpha = alpha;
  cal.calibrated = den / num;
  cal.analytic = stein_analytic_constant(alpha);
  cal.reference = stein_reference_constant(alpha);
  Field fitted = raw;
  fitted *= complex{1.0 / cal.calibrated};
  cal.residual = l2_norm(fitted - target) / l2_norm(target);
  q.constants[{axis, alpha}] = cal.calibrated;
  return cal;
}

Field phi_physical(const Field& f, Axis axis, double t, double alpha, const SteinQuadrature& q) {
  check_alpha(alpha);
  const Field fp = to_physical(f);
  const auto& g = fp.grid();
  Field out(g, Representation::Physical);
  if (t == 0.0) return out;

  const double period = g.length(axis);
  const auto nodes = stein_nodes(q, alpha, period, g.max_wavenumber(axis));
  const Field fs = forward(fp);
  const auto& k = g.wavenumbers(axis);
  const std::size_t nx = g.nx(), ny = g.ny();

  auto phase = [](double x, double y) { return phase_symbol(x, y); };
  std::vector<double> base(g.size());
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < ny; ++j) base[g.index(i, j)] = phase(g.x(i), g.y(j));

  auto ov = out.values();
  for (std::size_t n = 0; n < nodes.y.size(); ++n) {
    for (const double y : {nodes.y[n], -nodes.y[n]}) {
      // f(x + y e_j) by spectral translation
      Field shifted = fs;
      for (std::size_t i = 0; i < nx; ++i) {
        for (std::size_t j = 0; j < ny; ++j) {
          const double kk = axis == Axis::X ? k[i] : k[j];
          shifted(i, j) *= std::polar(1.0, kk * y);
        }
      }
      const Field sp = inverse(shifted);
      for (std::size_t i = 0; i < nx; ++i) {
        for (std::size_t j = 0; j < ny; ++j) {
          const double xs = axis == Axis::X ? wrap(g.x(i) + y, period) : g.x(i);
          const double ys = axis == Axis::Y ? wrap(g.y(j) + y, period) : g.y(j);
          const std::size_t idx = g.index(i, j);
          const complex e = std::polar(1.0, t * (phase(xs, ys) - base[idx])) - 1.0;
          ov[idx] += nodes.w[n] * e * sp.values()[idx];
        }
      }
    }
  }

  // |y| < h: second-order Taylor term of the integrand.
  const Field fd = derivative(fp, axis);
  const double cell = 2.0 * inner_cell(q.inner_cutoff, alpha);
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t j = 0; j < ny; ++j) {
      const double x = g.x(i), y = g.y(j);
      const double p1 = axis == Axis::X ? 3.0 * x * x + y * y : 2.0 * x * y;
      const double p2 = axis == Axis::X ? 6.0 * x : 2.0 * x;
      const std::size_t idx = g.index(i, j);
      const complex c2 = complex{0.0, t * p1} * fd.values()[idx] +
                         complex{-0.5 * t * t * p1 * p1, 0.5 * t * p2} * fp.values()[idx];
      ov[idx] += cell * c2;
    }
  }
  out *= complex{1.0 / q.constant(axis, alpha)};
  return out;
}

}  // namespace gzk
