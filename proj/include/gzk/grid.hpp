#pragma once

#include <cstddef>
#include <vector>

namespace gzk {

enum class Axis { X = 0, Y = 1 };

/// Periodic box [-lx/2, lx/2) x [-ly/2, ly/2) sampled on nx x ny points.
///
/// Spectral index i (FFT order) maps to the signed mode m = i for i < n/2 and
/// m = i - n otherwise, with wavenumber 2*pi*m/l. The Nyquist mode m = -n/2 is
/// kept for even multipliers and zeroed in odd ones (see `xi_odd`).
class GridSpec {
 public:
  GridSpec() = default;
  GridSpec(std::size_t nx, std::size_t ny, double lx, double ly);

  std::size_t nx() const noexcept { return nx_; }
  std::size_t ny() const noexcept { return ny_; }
  double lx() const noexcept { return lx_; }
  double ly() const noexcept { return ly_; }
  std::size_t size() const noexcept { return nx_ * ny_; }

  std::size_t n(Axis a) const noexcept { return a == Axis::X ? nx_ : ny_; }
  double length(Axis a) const noexcept { return a == Axis::X ? lx_ : ly_; }
  double spacing(Axis a) const noexcept { return length(a) / static_cast<double>(n(a)); }

  double dx() const noexcept { return lx_ / static_cast<double>(nx_); }
  double dy() const noexcept { return ly_ / static_cast<double>(ny_); }
  double cell_area() const noexcept { return dx() * dy(); }
  double area() const noexcept { return lx_ * ly_; }

  double x(std::size_t i) const noexcept { return -0.5 * lx_ + static_cast<double>(i) * dx(); }
  double y(std::size_t j) const noexcept { return -0.5 * ly_ + static_cast<double>(j) * dy(); }
  double coord(Axis a, std::size_t i) const noexcept { return a == Axis::X ? x(i) : y(i); }

  /// Signed mode number of spectral index i along an axis.
  long mode(Axis a, std::size_t i) const noexcept;
  bool is_nyquist(Axis a, std::size_t i) const noexcept { return i == n(a) / 2; }

  const std::vector<double>& xi() const noexcept { return xi_; }
  const std::vector<double>& eta() const noexcept { return eta_; }
  const std::vector<double>& xi_odd() const noexcept { return xi_odd_; }
  const std::vector<double>& eta_odd() const noexcept { return eta_odd_; }
  const std::vector<double>& wavenumbers(Axis a) const noexcept { return a == Axis::X ? xi_ : eta_; }
  const std::vector<double>& wavenumbers_odd(Axis a) const noexcept {
    return a == Axis::X ? xi_odd_ : eta_odd_;
  }

  /// Largest |wavenumber| on the axis (the Nyquist magnitude pi*n/l).
  double max_wavenumber(Axis a) const noexcept;

  std::size_t index(std::size_t i, std::size_t j) const noexcept { return i * ny_ + j; }

  friend bool operator==(const GridSpec& a, const GridSpec& b) noexcept {
    return a.nx_ == b.nx_ && a.ny_ == b.ny_ && a.lx_ == b.lx_ && a.ly_ == b.ly_;
  }

 private:
  std::size_t nx_ = 0, ny_ = 0;
  double lx_ = 0.0, ly_ = 0.0;
  std::vector<double> xi_, eta_, xi_odd_, eta_odd_;
};

/// Validating constructor: sizes >= 8 and powers of two, lengths > 0.
GridSpec make_grid(std::size_t nx, std::size_t ny, double lx, double ly);

}  // namespace gzk
