#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include "gzk/field.hpp"
#include "gzk/mixed_norm.hpp"
#include "gzk/trajectory.hpp"

namespace oracle {

using gzk::complex;
using gzk::Field;
using gzk::GridSpec;

/// Direct double-sum DFT in the box-centered convention:
///   c(m,n) = 1/(nx ny) sum f(x_i, y_j) exp(-i(xi_m x_i + eta_n y_j)).
inline std::vector<complex> naive_dft(const Field& f) {
  const GridSpec& g = f.grid();
  std::vector<complex> c(g.size());
  for (std::size_t m = 0; m < g.nx(); ++m)
    for (std::size_t n = 0; n < g.ny(); ++n) {
      complex acc{};
      for (std::size_t i = 0; i < g.nx(); ++i)
        for (std::size_t j = 0; j < g.ny(); ++j)
          acc += f(i, j) * std::polar(1.0, -(g.xi()[m] * g.x(i) + g.eta()[n] * g.y(j)));
      c[g.index(m, n)] = acc / static_cast<double>(g.size());
    }
  return c;
}

/// Direct inverse: f(x_i, y_j) = sum c(m,n) exp(i(xi_m x_i + eta_n y_j)).
inline std::vector<complex> naive_idft(const GridSpec& g, const std::vector<complex>& c) {
  std::vector<complex> f(g.size());
  for (std::size_t i = 0; i < g.nx(); ++i)
    for (std::size_t j = 0; j < g.ny(); ++j) {
      complex acc{};
      for (std::size_t m = 0; m < g.nx(); ++m)
        for (std::size_t n = 0; n < g.ny(); ++n)
          acc += c[g.index(m, n)] * std::polar(1.0, g.xi()[m] * g.x(i) + g.eta()[n] * g.y(j));
      f[g.index(i, j)] = acc;
    }
  return f;
}

inline double rel_diff(const std::vector<complex>& a, const std::vector<complex>& b) {
  double num = 0, den = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num += std::norm(a[i] - b[i]);
    den += std::norm(b[i]);
  }
  return std::sqrt(num / den);
}

inline double rel_diff(const Field& a, const Field& b) { return rel_diff(a.data(), b.data()); }

inline Field gaussian(const GridSpec& g, double sigma = 1.0, double amp = 1.0) {
  return Field::sample(g, [&](double x, double y) {
    return complex{amp * std::exp(-(x * x + y * y) / (2 * sigma * sigma))};
  });
}

inline Field random_field(const GridSpec& g, std::mt19937_64& rng, bool real = false) {
  std::normal_distribution<double> n;
  Field f(g, gzk::Representation::Physical);
  for (auto& v : f.values()) v = real ? complex{n(rng), 0.0} : complex{n(rng), n(rng)};
  return f;
}

/// Mixed norm by direct nested loops over the sample array.
inline double brute_mixed_norm(const gzk::Trajectory& tr, const gzk::MixedNormSpec& sp) {
  using gzk::NormDim;
  std::vector<Field> f;
  for (const auto& x : tr.fields()) f.push_back(gzk::apply_inner_op(x, sp.op, sp.s));
  const auto& g = tr.grid();
  const std::size_t nt = tr.size();
  const std::array<std::size_t, 3> len{nt, g.nx(), g.ny()};
  auto weight = [&](NormDim d, std::size_t i) {
    if (d == NormDim::T) return i + 1 < nt ? tr.dt() : 0.0;
    return d == NormDim::X ? g.dx() : g.dy();
  };
  std::array<std::size_t, 3> idx{};
  std::function<double(int)> rec = [&](int level) -> double {
    const NormDim d = sp.order[level];
    const double p = sp.exponents[level];
    double acc = 0;
    for (std::size_t i = 0; i < len[static_cast<int>(d)]; ++i) {
      idx[static_cast<int>(d)] = i;
      const double v = level == 2 ? std::abs(f[idx[0]](idx[1], idx[2])) : rec(level + 1);
      if (std::isinf(p)) acc = std::max(acc, v);
      else acc += weight(d, i) * std::pow(v, p);
    }
    return std::isinf(p) ? acc : std::pow(acc, 1 / p);
  };
  return rec(0);
}

}  // namespace oracle
