#include "gzk/field.hpp"

#include <cmath>

#include "gzk/errors.hpp"

namespace gzk {

Field::Field(GridSpec grid, Representation rep)
    : grid_(std::move(grid)), rep_(rep), values_(grid_.size(), complex{0.0, 0.0}) {}

Field::Field(GridSpec grid, Representation rep, std::vector<complex> values)
    : grid_(std::move(grid)), rep_(rep), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw ValidationError("field value count does not match grid size");
  }
}

Field Field::sample(const GridSpec& grid, const std::function<complex(double, double)>& fn) {
  Field f(grid, Representation::Physical);
  for (std::size_t i = 0; i < grid.nx(); ++i) {
    const double x = grid.x(i);
    for (std::size_t j = 0; j < grid.ny(); ++j) f(i, j) = fn(x, grid.y(j));
  }
  return f;
}

bool Field::all_finite() const noexcept {
  for (const auto& v : values_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  }
  return true;
}

double Field::max_imag() const noexcept {
  double m = 0.0;
  for (const auto& v : values_) m = std::max(m, std::abs(v.imag()));
  return m;
}

void Field::require_compatible(const Field& other) const {
  if (!(grid_ == other.grid_)) throw ValidationError("fields live on different grids");
  if (rep_ != other.rep_) throw ValidationError("fields have different representations");
}

Field& Field::operator+=(const Field& other) {
  require_compatible(other);
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] += other.values_[k];
  return *this;
}

Field& Field::operator-=(const Field& other) {
  require_compatible(other);
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] -= other.values_[k];
  return *this;
}

Field& Field::operator*=(complex s) noexcept {
  for (auto& v : values_) v *= s;
  return *this;
}

Field& Field::axpy(complex a, const Field& other) {
  require_compatible(other);
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] += a * other.values_[k];
  return *this;
}

Field operator+(Field a, const Field& b) { return a += b; }
Field operator-(Field a, const Field& b) { return a -= b; }
Field operator*(complex s, Field a) { return a *= s; }

Field pointwise_product(const Field& a, const Field& b) {
  if (!(a.grid() == b.grid()) || a.representation() != b.representation()) {
    throw ValidationError("pointwise_product: incompatible fields");
  }
  Field out(a.grid(), a.representation());
  auto o = out.values();
  auto av = a.values();
  auto bv = b.values();
  for (std::size_t k = 0; k < o.size(); ++k) o[k] = av[k] * bv[k];
  return out;
}

double l2_norm(const Field& f) {
  double acc = 0.0;
  for (const auto& v : f.values()) acc += std::norm(v);
  const double w = f.is_physical() ? f.grid().cell_area() : f.grid().area();
  return std::sqrt(w * acc);
}

}  // namespace gzk
