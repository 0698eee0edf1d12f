#pragma once

#include <string>
#include <vector>

#include "gzk/mixed_norm.hpp"
#include "gzk/report.hpp"
#include "gzk/trajectory.hpp"
#include "gzk/weight_params.hpp"

namespace gzk {

struct MuOptions {
  /// gamma in p_k = 12(k-1)/(7 - 12 gamma) for 3 <= k <= 7; must lie in (0, 1/12).
  double gamma = 1.0 / 24.0;
  /// The "+" of the L_T^{3k/2+} exponent for k >= 8.
  double epsilon = 0.1;
};

struct MuTerm {
  std::string name;
  MixedNormSpec spec;
  bool hs_sup = false;  // the ||u||_{L_T^inf H^s} term
};

/// The terms of the family selected by w.k.
std::vector<MuTerm> mu1_terms(const WeightParams& w, const MuOptions& opt = {});

/// Sum of the family's terms; per-term values are written to `terms` if given.
double mu1(const Trajectory& traj, const WeightParams& w, const MuOptions& opt = {},
           NormReport* terms = nullptr);

/// mu1 + sup_t ||(|x|^{r1} + |y|^{r2}) u(t)||_2.
double mu2(const Trajectory& traj, const WeightParams& w, const MuOptions& opt = {},
           NormReport* terms = nullptr);

}  // namespace gzk
