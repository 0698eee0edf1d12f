#include "gzk/fractional.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gzk/errors.hpp"
#include "gzk/fft.hpp"
#include "gzk/linear_group.hpp"
#include "gzk/quadrature.hpp"
#include "gzk/transform.hpp"

namespace gzk {

Field frac_deriv(const Field& u, Axis axis, double alpha) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw ValidationError("fractional order must be nonnegative (got " + std::to_string(alpha) + ")");
  }
  if (alpha == 0.0) return u;
  const auto& k = u.grid().wavenumbers(axis);
  std::vector<double> m(k.size());
  std::transform(k.begin(), k.end(), m.begin(), [&](double v) { return std::pow(std::abs(v), alpha); });
  if (axis == Axis::X) return apply_multiplier(u, [&](std::size_t i, std::size_t) { return complex{m[i]}; });
  return apply_multiplier(u, [&](std::size_t, std::size_t j) { return complex{m[j]}; });
}

std::vector<double> box_kernel(double l, double alpha, std::size_t count) {
  const double a = 0.5 * l;
  const double kmax = 2.0 * std::numbers::pi * static_cast<double>(std::max<std::size_t>(count, 2) - 1) / l;
  const double width = std::numbers::pi / kmax;
  const auto& gl = gauss_legendre(16);

  // Graded first panel x = p v^10 absorbs the x^alpha cusp at the origin.
  std::vector<double> xs, ws;
  const double p = std::min(a, width);
  constexpr double grade = 10.0;
  for (std::size_t q = 0; q < gl.nodes.size(); ++q) {
    const double v = 0.5 * (gl.nodes[q] + 1.0);
    const double x = p * std::pow(v, grade);
    xs.push_back(x);
    ws.push_back(0.5 * gl.weights[q] * p * grade * std::pow(v, grade - 1.0) * std::pow(x, alpha));
  }
  const auto panels = static_cast<std::size_t>(std::ceil((a - p) / width));
  for (std::size_t b = 0; b < panels; ++b) {
    const double lo = p + (a - p) * static_cast<double>(b) / static_cast<double>(panels);
    const double hi = p + (a - p) * static_cast<double>(b + 1) / static_cast<double>(panels);
    for (std::size_t q = 0; q < gl.nodes.size(); ++q) {
      const double x = 0.5 * (hi - lo) * gl.nodes[q] + 0.5 * (hi + lo);
      xs.push_back(x);
      ws.push_back(0.5 * (hi - lo) * gl.weights[q] * std::pow(x, alpha));
    }
  }

  std::vector<double> kernel(count);
  const double base = 2.0 * std::numbers::pi / l;
  for (std::size_t m = 0; m < count; ++m) {
    const double xi = base * static_cast<double>(m);
    double acc = 0.0;
    for (std::size_t n = 0; n < xs.size(); ++n) acc += ws[n] * std::cos(xi * xs[n]);
    kernel[m] = 2.0 * acc / l;
  }
  return kernel;
}

namespace {

// Linear (non-circular) convolution of every lattice line along `axis` with
// the even kernel K_{|m-n|}, in natural mode order, via zero-padded FFTs.
class LineConvolver {
 public:
  LineConvolver(const GridSpec& g, Axis axis, const std::vector<double>& kernel)
      : g_(g), axis_(axis), n_(g.n(axis)), count_(g.size() / n_), pad_(4 * n_) {
    // kernel entries for offsets -(n-1)..(n-1) placed at 0..2n-2
    kfft_.assign(pad_, complex{});
    for (std::size_t d = 0; d + 1 < 2 * n_; ++d) {
      const long off = static_cast<long>(d) - static_cast<long>(n_ - 1);
      kfft_[d] = kernel[static_cast<std::size_t>(std::abs(off))];
    }
    fft::transform_1d(kfft_, fft::Direction::Forward);
  }

  // Natural-order position of FFT index i: mode m maps to m + n/2.
  std::size_t natural(std::size_t i) const { return (i + n_ / 2) % n_; }

  Field apply(const Field& in) const {
    std::vector<complex> buf(pad_ * count_, complex{});
    const std::size_t other = axis_ == Axis::X ? g_.ny() : g_.nx();
    for (std::size_t c = 0; c < other; ++c) {
      for (std::size_t i = 0; i < n_; ++i) buf[c * pad_ + natural(i)] = at(in, i, c);
    }
    fft::transform_lines(buf, pad_, count_, 1, pad_, fft::Direction::Forward);
    for (std::size_t c = 0; c < count_; ++c) {
      for (std::size_t q = 0; q < pad_; ++q) buf[c * pad_ + q] *= kfft_[q];
    }
    fft::transform_lines(buf, pad_, count_, 1, pad_, fft::Direction::Backward);
    Field out(g_, Representation::Spectral);
    const double scale = 1.0 / static_cast<double>(pad_);
    for (std::size_t c = 0; c < other; ++c) {
      for (std::size_t i = 0; i < n_; ++i) at(out, i, c) = scale * buf[c * pad_ + natural(i) + n_ - 1];
    }
    return out;
  }

 private:
  complex& at(Field& f, std::size_t i, std::size_t c) const {
    return axis_ == Axis::X ? f(i, c) : f(c, i);
  }
  const complex& at(const Field& f, std::size_t i, std::size_t c) const {
    return axis_ == Axis::X ? f(i, c) : f(c, i);
  }

  GridSpec g_;
  Axis axis_;
  std::size_t n_, count_, pad_;
  std::vector<complex> kfft_;
};

}  // namespace

Field phi_operator(const Field& u_hat, Axis axis, double t, double alpha) {
  if (!u_hat.is_spectral()) throw ValidationError("phi_operator: expects a spectral field");
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw ValidationError("phi_operator: alpha=" + std::to_string(alpha) + " must lie in (0,1)");
  }
  const auto& g = u_hat.grid();
  if (t == 0.0) return Field(g, Representation::Spectral);

  const LineConvolver conv(g, axis, box_kernel(g.length(axis), alpha, g.n(axis)));
  const auto phase = group_multiplier(g, t);

  Field shifted = u_hat;
  auto sv = shifted.values();
  for (std::size_t n = 0; n < sv.size(); ++n) sv[n] *= phase[n];

  Field out = conv.apply(shifted);
  const Field plain = conv.apply(u_hat);
  auto ov = out.values();
  const auto pv = plain.values();
  for (std::size_t n = 0; n < ov.size(); ++n) ov[n] = std::conj(phase[n]) * ov[n] - pv[n];
  return out;
}

}  // namespace gzk
