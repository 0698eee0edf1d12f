#include "gzk/grid.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "gzk/errors.hpp"

namespace gzk {

namespace {

std::vector<double> wavenumbers_for(std::size_t n, double l, bool zero_nyquist) {
  std::vector<double> k(n);
  const double base = 2.0 * std::numbers::pi / l;
  for (std::size_t i = 0; i < n; ++i) {
    const long m = i < n / 2 ? static_cast<long>(i) : static_cast<long>(i) - static_cast<long>(n);
    k[i] = base * static_cast<double>(m);
  }
  if (zero_nyquist) k[n / 2] = 0.0;
  return k;
}

}  // namespace

GridSpec::GridSpec(std::size_t nx, std::size_t ny, double lx, double ly)
    : nx_(nx), ny_(ny), lx_(lx), ly_(ly),
      xi_(wavenumbers_for(nx, lx, false)),
      eta_(wavenumbers_for(ny, ly, false)),
      xi_odd_(wavenumbers_for(nx, lx, true)),
      eta_odd_(wavenumbers_for(ny, ly, true)) {}

long GridSpec::mode(Axis a, std::size_t i) const noexcept {
  const std::size_t len = n(a);
  return i < len / 2 ? static_cast<long>(i) : static_cast<long>(i) - static_cast<long>(len);
}

double GridSpec::max_wavenumber(Axis a) const noexcept {
  return std::numbers::pi * static_cast<double>(n(a)) / length(a);
}

GridSpec make_grid(std::size_t nx, std::size_t ny, double lx, double ly) {
  auto check_size = [](std::size_t n, const char* name) {
    if (n < 8 || !std::has_single_bit(n)) {
      throw ValidationError(std::string(name) + "=" + std::to_string(n) +
                            " must be a power of two and at least 8");
    }
  };
  check_size(nx, "nx");
  check_size(ny, "ny");
  if (!(lx > 0.0) || !(ly > 0.0) || !std::isfinite(lx) || !std::isfinite(ly)) {
    throw ValidationError("box lengths must be positive and finite");
  }
  return GridSpec(nx, ny, lx, ly);
}

}  // namespace gzk
