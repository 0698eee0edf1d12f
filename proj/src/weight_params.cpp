#include "gzk/weight_params.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "gzk/errors.hpp"

namespace gzk {

namespace {

[[noreturn]] void fail(const char* fmt, double a, double b = 0.0) {
  char buf[200];
  std::snprintf(buf, sizeof buf, fmt, a, b);
  throw ValidationError(buf);
}

}  // namespace

double regularity_threshold(int k) {
  if (k < 1) throw ValidationError("k=" + std::to_string(k) + " must be at least 1");
  return k <= 7 ? 0.75 : 1.0 - 2.0 / k;
}

void WeightParams::validate() const {
  if (k < 1) throw ValidationError("k=" + std::to_string(k) + " must be at least 1");
  for (double v : {s, r1, r2, beta}) {
    if (!std::isfinite(v)) throw ValidationError("weight parameters must be finite");
  }
  if (!(r1 > 0.0 && r1 < 1.0)) fail("r1=%g violates r ∈ (0,1)", r1);
  if (!(r2 > 0.0 && r2 < 1.0)) fail("r2=%g violates r ∈ (0,1)", r2);
  const double rmax = std::max(r1, r2);
  if (s < 2.0 * rmax) fail("s=%g violates s ≥ 2·max{r1,r2}=%g", s, 2.0 * rmax);
  const double sk = regularity_threshold(k);
  if (!(s > sk)) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "s=%g violates s > s_k=%g for k=%d", s, sk, k);
    throw ValidationError(buf);
  }
  const double rmin = std::min(r1, r2);
  if (beta < 0.0 || beta >= rmin) fail("beta=%g violates beta ∈ [0, min{r1,r2}=%g)", beta, rmin);
}

}  // namespace gzk
