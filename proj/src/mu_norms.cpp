#include "gzk/mu_norms.hpp"

#include <algorithm>

#include "gzk/errors.hpp"
#include "gzk/norms.hpp"

namespace gzk {

namespace {

MixedNormSpec spec(NormDim a, double pa, NormDim b, double pb, NormDim c, double pc,
                   InnerOp op = InnerOp::Identity, double s = 0.0) {
  return MixedNormSpec{{a, b, c}, {pa, pb, pc}, op, s};
}

}  // namespace

std::vector<MuTerm> mu1_terms(const WeightParams& w, const MuOptions& opt) {
  const int k = w.k;
  if (k < 1) throw ValidationError("mu1: k must be at least 1");
  using D = NormDim;
  std::vector<MuTerm> t;
  t.push_back({"u_LinfT_Hs", {}, true});
  t.push_back({"Dxs_dx_u_Linfx_L2yT", spec(D::X, kInf, D::Y, 2, D::T, 2, InnerOp::DxsDx, w.s)});
  t.push_back({"Dys_dx_u_Linfx_L2yT", spec(D::X, kInf, D::Y, 2, D::T, 2, InnerOp::DysDx, w.s)});
  if (k == 1) {
    t.push_back({"dx_u_L2T_Linfxy", spec(D::T, 2, D::X, kInf, D::Y, kInf, InnerOp::Dx)});
    t.push_back({"u_L2x_LinfyT", spec(D::X, 2, D::Y, kInf, D::T, kInf)});
  } else if (k == 2) {
    t.push_back({"u_L3T_Linfxy", spec(D::T, 3, D::X, kInf, D::Y, kInf)});
    t.push_back({"dx_u_L9/4T_Linfxy", spec(D::T, 9.0 / 4.0, D::X, kInf, D::Y, kInf, InnerOp::Dx)});
    t.push_back({"u_L2x_LinfyT", spec(D::X, 2, D::Y, kInf, D::T, kInf)});
  } else if (k <= 7) {
    if (!(opt.gamma > 0.0 && opt.gamma < 1.0 / 12.0)) {
      throw ValidationError("mu1: gamma=" + format_double(opt.gamma) + " must lie in (0, 1/12)");
    }
    const double pk = 12.0 * (k - 1) / (7.0 - 12.0 * opt.gamma);
    t.push_back({"u_LpkT_Linfxy", spec(D::T, pk, D::X, kInf, D::Y, kInf)});
    t.push_back({"dx_u_L12/5T_Linfxy", spec(D::T, 12.0 / 5.0, D::X, kInf, D::Y, kInf, InnerOp::Dx)});
    t.push_back({"u_L4x_LinfyT", spec(D::X, 4, D::Y, kInf, D::T, kInf)});
  } else {
    if (!(opt.epsilon > 0.0)) throw ValidationError("mu1: epsilon must be positive");
    t.push_back({"dx_u_Linfx_L2yT", spec(D::X, kInf, D::Y, 2, D::T, 2, InnerOp::Dx)});
    t.push_back({"u_L3k/2+T_Linfxy", spec(D::T, 1.5 * k + opt.epsilon, D::X, kInf, D::Y, kInf)});
    t.push_back({"dx_u_L3k/(k+2)T_Linfxy",
                 spec(D::T, 3.0 * k / (k + 2.0), D::X, kInf, D::Y, kInf, InnerOp::Dx)});
    t.push_back({"u_Lk/2x_LinfyT", spec(D::X, 0.5 * k, D::Y, kInf, D::T, kInf)});
  }
  return t;
}

double mu1(const Trajectory& traj, const WeightParams& w, const MuOptions& opt, NormReport* terms) {
  if (traj.empty()) throw ValidationError("mu1: empty trajectory");
  double total = 0.0;
  for (const auto& term : mu1_terms(w, opt)) {
    double v = 0.0;
    if (term.hs_sup) {
      for (const auto& f : traj.fields()) v = std::max(v, hs_norm(f, w.s));
    } else {
      v = mixed_norm(traj, term.spec);
    }
    if (terms) terms->set(term.name, v);
    total += v;
  }
  return total;
}

double mu2(const Trajectory& traj, const WeightParams& w, const MuOptions& opt, NormReport* terms) {
  const double base = mu1(traj, w, opt, terms);
  double sup = 0.0;
  for (const auto& f : traj.fields()) sup = std::max(sup, weighted_l2_sum(f, w.r1, w.r2));
  if (terms) terms->set("weighted_LinfT_L2xy", sup);
  return base + sup;
}

}  // namespace gzk
