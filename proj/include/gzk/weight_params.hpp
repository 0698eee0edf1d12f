#pragma once

namespace gzk {

/// Regularity/decay parameters of the weighted space: H^s with weight
/// |x|^{2 r1} + |y|^{2 r2}, extra fractional order beta, nonlinearity power k.
struct WeightParams {
  double s = 1.0;
  double r1 = 0.5;
  double r2 = 0.5;
  double beta = 0.0;
  int k = 1;

  /// Throws ValidationError naming the violated constraint.
  void validate() const;
};

/// Regularity threshold: 3/4 for k <= 7, 1 - 2/k for k >= 8.
double regularity_threshold(int k);

}  // namespace gzk
