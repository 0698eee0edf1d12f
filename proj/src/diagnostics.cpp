#include "gzk/diagnostics.hpp"

#include <cmath>
#include <cstdio>

#include "gzk/errors.hpp"
#include "gzk/transform.hpp"

namespace gzk {

double tail_fraction(const Field& f) {
  const Field p = to_physical(f);
  const auto& g = p.grid();
  const double ex = kTailShell * 0.5 * g.lx(), ey = kTailShell * 0.5 * g.ly();
  double total = 0.0, tail = 0.0;
  for (std::size_t i = 0; i < g.nx(); ++i) {
    const bool outer_x = std::abs(g.x(i)) >= ex;
    for (std::size_t j = 0; j < g.ny(); ++j) {
      const double m = std::norm(p(i, j));
      total += m;
      if (outer_x || std::abs(g.y(j)) >= ey) tail += m;
    }
  }
  return total > 0.0 ? tail / total : 0.0;
}

void check_tail(const Field& f, const std::string& context, double threshold) {
  const double frac = tail_fraction(f);
  if (frac > threshold) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s: %.3e of the L2 mass lies in the outer 10%% of the box (limit %.1e); enlarge the box",
                  context.c_str(), frac, threshold);
    throw TailViolation(buf, frac);
  }
}

void check_finite(const Field& f, const std::string& context) {
  if (!f.all_finite()) throw NumericalGuardError(context + ": non-finite values");
}

}  // namespace gzk
