#include "gzk/trajectory.hpp"

#include <cmath>

#include "gzk/errors.hpp"

namespace gzk {

Trajectory::Trajectory(std::vector<double> times, std::vector<Field> fields)
    : times_(std::move(times)), fields_(std::move(fields)) {
  if (times_.size() != fields_.size()) throw ValidationError("trajectory: times and fields differ in length");
  if (fields_.empty()) return;
  for (const auto& f : fields_) {
    if (!(f.grid() == fields_.front().grid())) throw ValidationError("trajectory: fields on different grids");
  }
  if (times_.size() > 1) {
    const double dt = (times_.back() - times_.front()) / static_cast<double>(times_.size() - 1);
    if (!(dt > 0.0)) throw ValidationError("trajectory: times must increase");
    for (std::size_t m = 0; m < times_.size(); ++m) {
      const double expect = times_.front() + dt * static_cast<double>(m);
      if (std::abs(times_[m] - expect) > 1e-9 * std::max(1.0, std::abs(expect))) {
        throw ValidationError("trajectory: times must be uniformly spaced");
      }
    }
  }
}

Trajectory Trajectory::stationary(const Field& u, double horizon, std::size_t steps) {
  std::vector<double> t(steps + 1);
  for (std::size_t m = 0; m <= steps; ++m) {
    t[m] = steps ? horizon * static_cast<double>(m) / static_cast<double>(steps) : 0.0;
  }
  return Trajectory(std::move(t), std::vector<Field>(steps + 1, u));
}

double Trajectory::dt() const noexcept {
  if (times_.size() < 2) return 0.0;
  return (times_.back() - times_.front()) / static_cast<double>(times_.size() - 1);
}

Trajectory Trajectory::scaled(complex s) const {
  std::vector<Field> f = fields_;
  for (auto& x : f) x *= s;
  return Trajectory(times_, std::move(f));
}

}  // namespace gzk
