#pragma once

#include <vector>

#include "gzk/field.hpp"
#include "gzk/trajectory.hpp"

namespace gzk {

struct SolverConfig {
  int k = 1;                     // nonlinearity power
  double horizon = 0.1;          // T
  std::size_t steps = 64;        // trajectory intervals M
  std::size_t substeps = 1;      // stepper steps per trajectory interval
  double s = 1.0;                // Sobolev order for Picard differences and local_time
  std::size_t picard_max_iterations = 50;
  double picard_tolerance = 1e-10;
  double c = 1.0;                // time-rule constant
  double gamma = 0.5;            // time-rule exponent
  double t_max = 0.5;            // local_time for zero data
  bool nonlinear = true;
  bool override_time = false;    // allow T > local_time or T >= 1

  void validate() const;
};

struct InvariantRecord {
  double mass = 0.0;
  double energy = 0.0;
};

/// u^k u_x with the product dealiased for degree k+1; u must be real. Returns
/// a physical field.
Field nonlinearity(const Field& u, int k);

/// T = (2 c a^k)^{-1/gamma}, a = 2 c ||u0||_{H^s}; cfg.t_max for zero data.
double local_time(const Field& u0, const SolverConfig& cfg);

/// Mass and energy: integral u^2 and integral (|grad u|^2 / 2 - u^{k+2} / ((k+1)(k+2))).
InvariantRecord invariants(const Field& u, int k);

/// Fourth-order exponential time differencing (ETDRK4) with the linear part
/// exact; snapshots at t_m = m T / M.
Trajectory evolve(const Field& u0, const SolverConfig& cfg);

struct PicardResult {
  Trajectory trajectory;
  /// sup_m ||u^{(n+1)}(t_m) - u^{(n)}(t_m)||_{H^s} per iteration.
  std::vector<double> history;
  std::size_t iterations = 0;
};

/// Fixed-point iteration of the Duhamel map with cumulative Simpson
/// quadrature on the trajectory grid, started from W(t)u0.
/// Throws NonConvergence when the tolerance is not met.
PicardResult picard_solve(const Field& u0, const SolverConfig& cfg);

/// One application of the Duhamel map to a trajectory on the same time grid.
Trajectory duhamel_map(const Field& u0, const Trajectory& u, const SolverConfig& cfg);

/// sup_m ||a(t_m) - b(t_m)||_{H^s}
double sup_hs_distance(const Trajectory& a, const Trajectory& b, double s);

}  // namespace gzk
