#pragma once

#include <array>
#include <limits>
#include <string>

#include "gzk/trajectory.hpp"

namespace gzk {

enum class NormDim { T, X, Y };

/// Operator applied to each time slice before measuring.
enum class InnerOp { Identity, Dx, DxsDx, DysDx };

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Nested L^{p0}_{d0} L^{p1}_{d1} L^{p2}_{d2}, d0 outermost. Exponents lie in
/// [1, inf]. Time uses the left-endpoint rule (weight dt, last sample 0);
/// L^inf is the maximum over samples.
struct MixedNormSpec {
  std::array<NormDim, 3> order{NormDim::T, NormDim::X, NormDim::Y};
  std::array<double, 3> exponents{2.0, 2.0, 2.0};
  InnerOp op = InnerOp::Identity;
  double s = 0.0;  // order of D^s for DxsDx / DysDx

  void validate() const;
  std::string describe() const;
};

/// Applies spec.op to a field, returning physical samples.
Field apply_inner_op(const Field& u, InnerOp op, double s);

double mixed_norm(const Trajectory& traj, const MixedNormSpec& spec);

}  // namespace gzk
