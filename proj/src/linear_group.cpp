#include "gzk/linear_group.hpp"

#include <cmath>

#include "gzk/diagnostics.hpp"
#include "gzk/transform.hpp"

namespace gzk {

complex symbol(double xi, double eta, double t) noexcept {
  return std::polar(1.0, t * phase_symbol(xi, eta));
}

std::vector<complex> group_multiplier(const GridSpec& g, double t) {
  std::vector<complex> m(g.size());
  const auto& xi = g.xi_odd();
  const auto& eta = g.eta();
  for (std::size_t i = 0; i < g.nx(); ++i) {
    for (std::size_t j = 0; j < g.ny(); ++j) m[g.index(i, j)] = symbol(xi[i], eta[j], t);
  }
  return m;
}

Field propagate(const Field& u, double t) {
  check_finite(u, "propagate");
  if (t == 0.0) return u;
  Field s = to_spectral(u);
  const auto m = group_multiplier(s.grid(), t);
  auto v = s.values();
  for (std::size_t n = 0; n < v.size(); ++n) v[n] *= m[n];
  return u.is_physical() ? inverse(s) : s;
}

}  // namespace gzk
