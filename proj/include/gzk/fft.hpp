#pragma once

#include <complex>
#include <cstddef>
#include <span>

namespace gzk::fft {

enum class Direction { Forward = -1, Backward = +1 };

/// Unnormalized in-place 2D DFT of an nx x ny row-major array.
void transform_2d(std::span<std::complex<double>> data, std::size_t nx, std::size_t ny,
                  Direction dir);

/// Unnormalized in-place DFTs of `count` lines of length n, element stride
/// `stride` and line-to-line distance `dist`.
void transform_lines(std::span<std::complex<double>> data, std::size_t n, std::size_t count,
                     std::size_t stride, std::size_t dist, Direction dir);

/// Unnormalized in-place 1D DFT.
inline void transform_1d(std::span<std::complex<double>> data, Direction dir) {
  transform_lines(data, data.size(), 1, 1, data.size(), dir);
}

}  // namespace gzk::fft
