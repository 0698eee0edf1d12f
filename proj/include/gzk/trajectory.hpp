#pragma once

#include <vector>

#include "gzk/field.hpp"

namespace gzk {

/// Fields at uniformly spaced times t_0 < ... < t_M on one grid.
class Trajectory {
 public:
  Trajectory() = default;
  /// Validates uniform spacing, shared grid and matching sizes.
  Trajectory(std::vector<double> times, std::vector<Field> fields);

  /// M+1 copies of u at times 0, dt, ..., T.
  static Trajectory stationary(const Field& u, double horizon, std::size_t steps);

  std::size_t size() const noexcept { return fields_.size(); }
  bool empty() const noexcept { return fields_.empty(); }
  const std::vector<double>& times() const noexcept { return times_; }
  const std::vector<Field>& fields() const noexcept { return fields_; }
  const Field& operator[](std::size_t m) const { return fields_[m]; }
  const GridSpec& grid() const { return fields_.front().grid(); }
  /// Spacing; 0 for a single sample.
  double dt() const noexcept;
  double horizon() const noexcept { return times_.empty() ? 0.0 : times_.back() - times_.front(); }

  Trajectory scaled(complex s) const;

 private:
  std::vector<double> times_;
  std::vector<Field> fields_;
};

}  // namespace gzk
