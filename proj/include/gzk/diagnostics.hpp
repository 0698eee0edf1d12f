#pragma once

#include <string>

#include "gzk/field.hpp"

namespace gzk {

inline constexpr double kTailThreshold = 1e-6;
inline constexpr double kTailShell = 0.9;

/// Fraction of the L2 mass in the outer shell |x| >= 0.9 lx/2 or |y| >= 0.9 ly/2.
double tail_fraction(const Field& f);

/// Throws TailViolation when tail_fraction(f) exceeds `threshold`.
void check_tail(const Field& f, const std::string& context, double threshold = kTailThreshold);

/// Throws NumericalGuardError on NaN/Inf.
void check_finite(const Field& f, const std::string& context);

}  // namespace gzk
