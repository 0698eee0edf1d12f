#include "gzk/mixed_norm.hpp"

#include <algorithm>
#include <cmath>

#include "gzk/errors.hpp"
#include "gzk/fractional.hpp"
#include "gzk/transform.hpp"

namespace gzk {

void MixedNormSpec::validate() const {
  auto o = order;
  std::sort(o.begin(), o.end());
  if (o != std::array{NormDim::T, NormDim::X, NormDim::Y}) {
    throw ValidationError("mixed norm order must name each of T, x, y once");
  }
  for (double p : exponents) {
    if (!(p >= 1.0)) throw ValidationError("mixed norm exponents must lie in [1, inf]");
  }
  if (!(s >= 0.0)) throw ValidationError("mixed norm inner order s must be nonnegative");
}

std::string MixedNormSpec::describe() const {
  static const char* names[] = {"T", "x", "y"};
  std::string out;
  for (std::size_t a = 0; a < 3; ++a) {
    out += "L^";
    out += std::isinf(exponents[a]) ? std::string("inf") : std::to_string(exponents[a]).substr(0, 6);
    out += "_";
    out += names[static_cast<int>(order[a])];
    if (a < 2) out += " ";
  }
  return out;
}

Field apply_inner_op(const Field& u, InnerOp op, double s) {
  switch (op) {
    case InnerOp::Identity:
      return to_physical(u);
    case InnerOp::Dx:
      return to_physical(derivative(u, Axis::X));
    case InnerOp::DxsDx:
      return to_physical(frac_deriv_x(derivative(to_spectral(u), Axis::X), s));
    case InnerOp::DysDx:
      return to_physical(frac_deriv_y(derivative(to_spectral(u), Axis::X), s));
  }
  throw ValidationError("unknown inner operator");
}

namespace {

// Accumulates one L^p reduction.
struct Reducer {
  double p;
  double acc = 0.0;
  void add(double v, double w) {
    if (std::isinf(p)) {
      acc = std::max(acc, v);
    } else if (w > 0.0 && v > 0.0) {
      acc += w * std::pow(v, p);
    }
  }
  double result() const { return std::isinf(p) ? acc : std::pow(acc, 1.0 / p); }
};

}  // namespace

double mixed_norm(const Trajectory& traj, const MixedNormSpec& spec) {
  if (traj.empty()) throw ValidationError("mixed_norm: empty trajectory");
  spec.validate();
  const auto& g = traj.grid();
  const std::size_t nt = traj.size(), nx = g.nx(), ny = g.ny();

  std::vector<double> a(nt * nx * ny);
  for (std::size_t m = 0; m < nt; ++m) {
    const Field f = apply_inner_op(traj[m], spec.op, spec.s);
    for (std::size_t n = 0; n < nx * ny; ++n) a[m * nx * ny + n] = std::abs(f.values()[n]);
  }

  const double dt = traj.dt();
  auto extent = [&](NormDim d) { return d == NormDim::T ? nt : d == NormDim::X ? nx : ny; };
  auto weight = [&](NormDim d, std::size_t k) {
    if (d == NormDim::T) return k + 1 < nt ? dt : 0.0;
    return d == NormDim::X ? g.dx() : g.dy();
  };
  const auto [d0, d1, d2] = spec.order;
  std::array<std::size_t, 3> idx{};  // (t, x, y)
  auto slot = [](NormDim d) { return static_cast<std::size_t>(d); };

  Reducer outer{spec.exponents[0]};
  for (std::size_t i0 = 0; i0 < extent(d0); ++i0) {
    idx[slot(d0)] = i0;
    Reducer mid{spec.exponents[1]};
    for (std::size_t i1 = 0; i1 < extent(d1); ++i1) {
      idx[slot(d1)] = i1;
      Reducer inner{spec.exponents[2]};
      for (std::size_t i2 = 0; i2 < extent(d2); ++i2) {
        idx[slot(d2)] = i2;
        inner.add(a[(idx[0] * nx + idx[1]) * ny + idx[2]], weight(d2, i2));
      }
      mid.add(inner.result(), weight(d1, i1));
    }
    outer.add(mid.result(), weight(d0, i0));
  }
  return outer.result();
}

}  // namespace gzk
