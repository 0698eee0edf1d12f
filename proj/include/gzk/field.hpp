#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "gzk/grid.hpp"

namespace gzk {

using complex = std::complex<double>;

enum class Representation { Physical, Spectral };

/// Samples of a function on a GridSpec, row-major with x as the slow index.
///
/// Spectral values are the box-centered Fourier coefficients
///   c(m,n) = 1/(nx*ny) * sum_{i,j} f(x_i, y_j) exp(-i(xi_m x_i + eta_n y_j)),
/// stored in FFT index order, so f(x,y) = sum c(m,n) exp(i(xi_m x + eta_n y)).
class Field {
 public:
  Field() = default;
  Field(GridSpec grid, Representation rep);
  Field(GridSpec grid, Representation rep, std::vector<complex> values);

  static Field zeros(const GridSpec& grid, Representation rep = Representation::Physical) {
    return Field(grid, rep);
  }
  /// Samples fn(x, y) at the grid nodes.
  static Field sample(const GridSpec& grid, const std::function<complex(double, double)>& fn);

  const GridSpec& grid() const noexcept { return grid_; }
  Representation representation() const noexcept { return rep_; }
  bool is_physical() const noexcept { return rep_ == Representation::Physical; }
  bool is_spectral() const noexcept { return rep_ == Representation::Spectral; }

  std::span<complex> values() noexcept { return values_; }
  std::span<const complex> values() const noexcept { return values_; }
  std::vector<complex>& data() noexcept { return values_; }
  const std::vector<complex>& data() const noexcept { return values_; }

  complex& operator()(std::size_t i, std::size_t j) noexcept { return values_[grid_.index(i, j)]; }
  const complex& operator()(std::size_t i, std::size_t j) const noexcept {
    return values_[grid_.index(i, j)];
  }

  bool all_finite() const noexcept;
  /// Largest |Im| over the samples.
  double max_imag() const noexcept;

  Field& operator+=(const Field& other);
  Field& operator-=(const Field& other);
  Field& operator*=(complex s) noexcept;
  /// this += a * other
  Field& axpy(complex a, const Field& other);

 private:
  void require_compatible(const Field& other) const;

  GridSpec grid_;
  Representation rep_ = Representation::Physical;
  std::vector<complex> values_;
};

Field operator+(Field a, const Field& b);
Field operator-(Field a, const Field& b);
Field operator*(complex s, Field a);

/// Pointwise product of two fields in the same representation.
Field pointwise_product(const Field& a, const Field& b);

/// L2 norm of the represented function: sqrt(dx dy sum |f|^2) for physical
/// fields and sqrt(lx ly sum |c|^2) for spectral ones (these agree).
double l2_norm(const Field& f);

}  // namespace gzk
