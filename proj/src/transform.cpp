#include "gzk/transform.hpp"

#include <cmath>

#include "gzk/errors.hpp"
#include "gzk/fft.hpp"

namespace gzk {

namespace {

// exp(-i xi_m x_i) with x_i = -l/2 + i h differs from the FFT kernel by (-1)^m.
void checkerboard(Field& f) {
  const auto& g = f.grid();
  for (std::size_t i = 0; i < g.nx(); ++i) {
    for (std::size_t j = 0; j < g.ny(); ++j) {
      if ((i + j) % 2 == 1) f(i, j) = -f(i, j);
    }
  }
}

}  // namespace

Field forward(const Field& f) {
  if (!f.is_physical()) throw ValidationError("forward: field is not in physical representation");
  const auto& g = f.grid();
  Field out(g, Representation::Spectral, f.data());
  fft::transform_2d(out.values(), g.nx(), g.ny(), fft::Direction::Forward);
  const double scale = 1.0 / static_cast<double>(g.size());
  for (auto& v : out.values()) v *= scale;
  checkerboard(out);
  return out;
}

Field inverse(const Field& f) {
  if (!f.is_spectral()) throw ValidationError("inverse: field is not in spectral representation");
  const auto& g = f.grid();
  Field out(g, Representation::Physical, f.data());
  checkerboard(out);
  fft::transform_2d(out.values(), g.nx(), g.ny(), fft::Direction::Backward);
  return out;
}

Field to_spectral(const Field& f) { return f.is_spectral() ? f : forward(f); }
Field to_physical(const Field& f) { return f.is_physical() ? f : inverse(f); }

double dealias_cutoff(std::size_t n, int product_degree) {
  if (product_degree < 2) throw ValidationError("dealias: product degree must be at least 2");
  return static_cast<double>(n) / static_cast<double>(product_degree + 1);
}

Field dealias(const Field& spectral, int product_degree) {
  if (!spectral.is_spectral()) throw ValidationError("dealias: field is not spectral");
  const auto& g = spectral.grid();
  const double cx = dealias_cutoff(g.nx(), product_degree);
  const double cy = dealias_cutoff(g.ny(), product_degree);
  Field out = spectral;
  for (std::size_t i = 0; i < g.nx(); ++i) {
    const bool cut_x = std::abs(static_cast<double>(g.mode(Axis::X, i))) >= cx;
    for (std::size_t j = 0; j < g.ny(); ++j) {
      if (cut_x || std::abs(static_cast<double>(g.mode(Axis::Y, j))) >= cy) out(i, j) = 0.0;
    }
  }
  return out;
}

Field apply_multiplier(const Field& f,
                       const std::function<complex(std::size_t, std::size_t)>& symbol) {
  Field s = to_spectral(f);
  const auto& g = s.grid();
  for (std::size_t i = 0; i < g.nx(); ++i) {
    for (std::size_t j = 0; j < g.ny(); ++j) s(i, j) *= symbol(i, j);
  }
  return f.is_physical() ? inverse(s) : s;
}

Field derivative(const Field& f, Axis axis) {
  const auto& k = f.grid().wavenumbers_odd(axis);
  if (axis == Axis::X) {
    return apply_multiplier(f, [&](std::size_t i, std::size_t) { return complex{0.0, k[i]}; });
  }
  return apply_multiplier(f, [&](std::size_t, std::size_t j) { return complex{0.0, k[j]}; });
}

void hermitian_symmetrize(Field& s) {
  if (!s.is_spectral()) throw ValidationError("hermitian_symmetrize: field is not spectral");
  const auto& g = s.grid();
  const std::size_t nx = g.nx(), ny = g.ny();
  for (std::size_t i = 0; i < nx; ++i) {
    const std::size_t ip = (nx - i) % nx;
    for (std::size_t j = 0; j < ny; ++j) {
      const std::size_t jp = (ny - j) % ny;
      const std::size_t a = g.index(i, j), b = g.index(ip, jp);
      if (a > b) continue;
      auto v = s.values();
      const complex avg = 0.5 * (v[a] + std::conj(v[b]));
      v[a] = avg;
      v[b] = std::conj(avg);
    }
  }
}

Field real_part(const Field& physical) {
  Field out = physical;
  for (auto& v : out.values()) v = complex{v.real(), 0.0};
  return out;
}

}  // namespace gzk
