#include "gzk/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "gzk/checkpoint.hpp"
#include "gzk/commutator.hpp"
#include "gzk/diagnostics.hpp"
#include "gzk/errors.hpp"
#include "gzk/fractional.hpp"
#include "gzk/mu_norms.hpp"
#include "gzk/norms.hpp"
#include "gzk/solver.hpp"
#include "gzk/stein.hpp"
#include "gzk/transform.hpp"

namespace gzk {

std::string Table::to_csv(const std::string& config_hash) const {
  std::ostringstream out;
  for (const auto& c : columns) out << c << ',';
  out << "config_hash\n";
  for (const auto& r : rows) {
    for (const auto& v : r) out << v << ',';
    out << config_hash << '\n';
  }
  return out.str();
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw ValidationError("slope fit needs at least two points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

namespace {

std::string fmt(double v) { return format_double(v); }
std::string fmt(std::size_t v) { return std::to_string(v); }

// Only the varying dimensions are named, so sweep tables line up across rows.
struct Keys {
  bool by_t, by_n;
  std::string operator()(const std::string& name, double t, std::size_t n) const {
    if (!by_t && !by_n) return name;
    std::string sfx = "[";
    if (by_t) sfx += "t=" + fmt(t) + (by_n ? "," : "");
    if (by_n) sfx += "n=" + fmt(n);
    return name + sfx + "]";
  }
};

void expect(ExperimentResult& r, bool ok, const std::string& what) {
  r.report.set("assert:" + what, ok ? 1.0 : 0.0);
  if (!ok) r.failures.push_back(what);
}

std::vector<std::size_t> resolutions(const ExperimentConfig& cfg) {
  return cfg.resolutions.empty() ? std::vector<std::size_t>{cfg.nx} : cfg.resolutions;
}

GridSpec grid_for(const ExperimentConfig& cfg, std::size_t n) {
  return cfg.resolutions.empty() ? cfg.grid() : cfg.grid(n);
}

ExperimentResult commutator_experiment(const ExperimentConfig& cfg, bool beta) {
  ExperimentResult r;
  const double tol = cfg.tolerance > 0 ? cfg.tolerance : (beta ? 1e-3 : 1e-4);
  r.table.columns = {"t", "n", "residual_x", "residual_y", "residual_max", "phi_norm_x", "phi_norm_y",
                     "bound_ratio_x", "bound_ratio_y"};
  CommutatorOptions opt{cfg.cusp_order};
  const auto ns = resolutions(cfg);
  const Keys key{cfg.times.size() > 1, ns.size() > 1};
  double worst = 0.0;
  for (double t : cfg.times) {
    std::vector<double> seq;
    for (std::size_t n : ns) {
      const GridSpec g = grid_for(cfg, n);
      const Field u0 = make_initial_data(cfg, g);
      const NormReport c = beta ? commutator_check_beta(u0, t, cfg.weights, opt)
                                : commutator_check(u0, t, cfg.weights, opt);
      r.table.add({fmt(t), fmt(g.nx()), fmt(c.get("residual_x")), fmt(c.get("residual_y")),
                   fmt(c.get("residual_max")), fmt(c.get("phi_norm_x")), fmt(c.get("phi_norm_y")),
                   fmt(c.get("bound_ratio_x")), fmt(c.get("bound_ratio_y"))});
      for (const auto& [name, v] : c.values()) r.report.set(key(name, t, g.nx()), v);
      seq.push_back(c.get("residual_max"));
      worst = std::max(worst, c.get("residual_max"));
    }
    // the finest grid is the reference resolution for the tolerance
    expect(r, seq.back() <= tol, "residual<=" + fmt(tol) + " at t=" + fmt(t));
    if (seq.size() > 1) {
      bool mono = true;
      for (std::size_t i = 1; i < seq.size(); ++i) mono = mono && seq[i] < seq[i - 1];
      expect(r, mono, "residual decreases under refinement at t=" + fmt(t));
    }
  }
  r.report.set("residual_worst", worst);
  return r;
}

ExperimentResult phi_growth_experiment(const ExperimentConfig& cfg) {
  ExperimentResult r;
  r.table.columns = {"t", "n", "phi_norm_x", "phi_norm_y", "bound_ratio_x", "bound_ratio_y"};
  const std::vector<double>& times = cfg.times;
  const auto ns = resolutions(cfg);
  const Keys key{times.size() > 1, ns.size() > 1};
  std::vector<std::vector<double>> ratios;  // per resolution
  for (std::size_t n : ns) {
    const GridSpec g = grid_for(cfg, n);
    const Field u0 = make_initial_data(cfg, g);
    check_tail(u0, "phi-growth");
    const Field u0_hat = forward(u0);
    const double order = cfg.weights.s;
    const double data = l2_norm(u0_hat) + l2_norm(frac_deriv_x(u0_hat, order)) + l2_norm(frac_deriv_y(u0_hat, order));
    std::vector<double> px, py, br;
    for (double t : times) {
      const double nx_ = l2_norm(phi_operator(u0_hat, Axis::X, t, cfg.weights.r1));
      const double ny_ = l2_norm(phi_operator(u0_hat, Axis::Y, t, cfg.weights.r2));
      const double bx = nx_ / ((1 + std::abs(t)) * data), by = ny_ / ((1 + std::abs(t)) * data);
      px.push_back(nx_);
      py.push_back(ny_);
      br.push_back(std::max(bx, by));
      r.table.add({fmt(t), fmt(g.nx()), fmt(nx_), fmt(ny_), fmt(bx), fmt(by)});
      r.report.set(key("phi_norm_x", t, g.nx()), nx_);
      r.report.set(key("phi_norm_y", t, g.nx()), ny_);
      r.report.set(key("bound_ratio_max", t, g.nx()), br.back());
    }
    ratios.push_back(br);
    const bool finite = std::all_of(br.begin(), br.end(), [](double v) { return std::isfinite(v); });
    expect(r, finite, "bound ratio finite at n=" + fmt(g.nx()));
    if (times.size() < 2) continue;
    const double sx = loglog_slope(times, px), sy = loglog_slope(times, py);
    r.report.set("slope_x[n=" + fmt(g.nx()) + "]", sx);
    r.report.set("slope_y[n=" + fmt(g.nx()) + "]", sy);
    expect(r, sx <= cfg.slope_limit && sy <= cfg.slope_limit,
           "log-log slope<=" + fmt(cfg.slope_limit) + " at n=" + fmt(g.nx()));
  }
  if (ratios.size() > 1) {
    double change = 0.0;
    for (std::size_t i = 0; i < ratios.back().size(); ++i) {
      const double a = ratios[ratios.size() - 2][i], b = ratios.back()[i];
      change = std::max(change, std::abs(a - b) / std::max(b, 1e-300));
    }
    r.report.set("bound_ratio_refinement_change", change);
    expect(r, change <= 0.05, "bound ratio refinement-stable (<=5%)");
  }
  return r;
}

double effective_horizon(const ExperimentConfig& cfg, const Field& u0, SolverConfig& s) {
  if (cfg.use_local_time) s.horizon = std::min(local_time(u0, s), s.override_time ? 1e300 : s.t_max);
  return s.horizon;
}

ExperimentResult persistence_experiment(const ExperimentConfig& cfg) {
  ExperimentResult r;
  r.table.columns = {"n", "t", "hs_norm", "weighted_l2", "weighted_l2_sum", "mass", "energy"};
  std::vector<double> ks;
  for (std::size_t n : resolutions(cfg)) {
    const GridSpec g = grid_for(cfg, n);
    const Field u0 = make_initial_data(cfg, g);
    SolverConfig s = cfg.solver;
    const double horizon = effective_horizon(cfg, u0, s);
    const Trajectory traj = evolve(u0, s);
    double sup_w = 0.0;
    for (std::size_t m = 0; m < traj.size(); ++m) {
      const Field& u = traj[m];
      const double w = weighted_l2(u, cfg.weights.r1, cfg.weights.r2);
      const auto inv = invariants(u, s.k);
      sup_w = std::max(sup_w, w);
      r.table.add({fmt(g.nx()), fmt(traj.times()[m]), fmt(hs_norm(u, cfg.weights.s)), fmt(w),
                   fmt(weighted_l2_sum(u, cfg.weights.r1, cfg.weights.r2)), fmt(inv.mass), fmt(inv.energy)});
    }
    const double hs0 = hs_norm(u0, cfg.weights.s), w0 = weighted_l2(u0, cfg.weights.r1, cfg.weights.r2);
    const double denom = (1.0 + horizon) * (hs0 + w0);
    const double kfit = denom > 0 ? sup_w / denom : 0.0;
    ks.push_back(kfit);
    NormReport terms;
    const double m1 = mu1(traj, cfg.weights, {}, &terms);
    const double m2 = mu2(traj, cfg.weights, {}, &terms);
    const std::string sfx = cfg.resolutions.size() > 1 ? "[n=" + fmt(g.nx()) + "]" : "";
    r.report.set("horizon" + sfx, horizon);
    r.report.set("hs_norm_u0" + sfx, hs0);
    r.report.set("weighted_l2_u0" + sfx, w0);
    r.report.set("sup_weighted_l2" + sfx, sup_w);
    r.report.set("persistence_constant" + sfx, kfit);
    r.report.set("mu1" + sfx, m1);
    r.report.set("mu2" + sfx, m2);
    for (const auto& [name, v] : terms.values()) r.report.set(name + sfx, v);
    expect(r, std::isfinite(sup_w) && std::isfinite(m2), "weighted norms finite at n=" + fmt(g.nx()));
    expect(r, m2 >= m1, "mu2>=mu1 at n=" + fmt(g.nx()));
    if (cfg.checkpoint) write_checkpoint(cfg.out_dir / ("trajectory_n" + fmt(g.nx())), traj, cfg.hash());
  }
  if (ks.size() > 1) {
    const auto [lo, hi] = std::minmax_element(ks.begin(), ks.end());
    const double spread = *hi > 0 ? (*hi - *lo) / *hi : 0.0;
    r.report.set("persistence_constant_spread", spread);
    expect(r, spread <= 0.2, "persistence constant stable within 20%");
  }
  return r;
}

double max_contraction_ratio(const std::vector<double>& h, double floor) {
  double worst = 0.0;
  for (std::size_t i = 1; i < h.size(); ++i) {
    if (h[i - 1] > floor) worst = std::max(worst, h[i] / h[i - 1]);
  }
  return worst;
}

ExperimentResult picard_experiment(const ExperimentConfig& cfg) {
  ExperimentResult r;
  r.table.columns = {"k", "amplitude", "iteration", "difference", "ratio"};
  const GridSpec g = cfg.grid();
  const std::vector<int> powers = cfg.powers.empty() ? std::vector<int>{cfg.weights.k} : cfg.powers;
  for (int k : powers) {
    SolverConfig s = cfg.solver;
    s.k = k;
    const Field u0 = make_initial_data(cfg, g);
    effective_horizon(cfg, u0, s);
    const PicardResult res = picard_solve(u0, s);
    for (std::size_t i = 0; i < res.history.size(); ++i) {
      const double ratio = i ? res.history[i] / res.history[i - 1] : 0.0;
      r.table.add({fmt(static_cast<double>(k)), fmt(cfg.data.amplitude), fmt(i + 1), fmt(res.history[i]), fmt(ratio)});
    }
    const double floor = 100.0 * s.picard_tolerance * 1e-3;
    const double worst = max_contraction_ratio(res.history, floor);
    const Trajectory psi = duhamel_map(u0, res.trajectory, s);
    const double resid = sup_hs_distance(res.trajectory, psi, s.s);
    const std::string sfx = powers.size() > 1 ? "[k=" + std::to_string(k) + "]" : "";
    r.report.set("horizon" + sfx, s.horizon);
    r.report.set("iterations" + sfx, static_cast<double>(res.iterations));
    r.report.set("max_ratio" + sfx, worst);
    r.report.set("fixed_point_residual" + sfx, resid);
    expect(r, worst <= 0.5, "contraction ratio<=0.5 for k=" + std::to_string(k));
    expect(r, resid <= 10.0 * s.picard_tolerance, "fixed point residual<=10*tol for k=" + std::to_string(k));

    if (cfg.amplitudes.size() >= 2) {
      // first Duhamel correction scales like amplitude^{k+1}
      ExperimentConfig scan = cfg;
      double t_fix = s.horizon;
      for (double a : cfg.amplitudes) {
        scan.data.amplitude = a;
        t_fix = std::min(t_fix, local_time(make_initial_data(scan, g), s));
      }
      std::vector<double> first;
      for (double a : cfg.amplitudes) {
        scan.data.amplitude = a;
        SolverConfig sa = s;
        sa.horizon = t_fix;
        sa.picard_max_iterations = 1;
        sa.picard_tolerance = 1e300;
        const PicardResult one = picard_solve(make_initial_data(scan, g), sa);
        first.push_back(one.history.front());
      }
      const double slope = loglog_slope(cfg.amplitudes, first);
      r.report.set("first_correction_slope" + sfx, slope);
      expect(r, std::abs(slope - (k + 1)) <= 0.2, "first correction ~ amplitude^(k+1) for k=" + std::to_string(k));
    }
  }
  return r;
}

ExperimentResult convergence_experiment(const ExperimentConfig& cfg) {
  ExperimentResult r;
  r.table.columns = {"steps", "dt", "final_error", "observed_order"};
  const GridSpec g = cfg.grid();
  const Field u0 = make_initial_data(cfg, g);
  SolverConfig s = cfg.solver;
  effective_horizon(cfg, u0, s);

  // temporal self-convergence on the final state, optionally over its own horizon
  SolverConfig so = s;
  if (cfg.order_horizon > 0.0) {
    so.horizon = cfg.order_horizon;
    so.override_time = true;
  }
  if (cfg.order_steps > 0) so.steps = cfg.order_steps;
  const bool separate = so.horizon != s.horizon || so.steps != s.steps;
  std::vector<Field> finals;
  std::vector<std::size_t> subs{1, 2, 4, 8};
  Trajectory traj;
  for (std::size_t sub : subs) {
    SolverConfig si = so;
    si.substeps = so.substeps * sub;
    Trajectory t = evolve(u0, si);
    finals.push_back(t.fields().back());
    if (!separate) traj = std::move(t);
  }
  std::vector<double> errors;
  for (std::size_t i = 0; i + 1 < finals.size(); ++i) errors.push_back(l2_norm(finals[i] - finals[i + 1]));
  double order = 0.0;
  for (std::size_t i = 0; i < errors.size(); ++i) {
    const double o = i ? std::log2(errors[i - 1] / errors[i]) : 0.0;
    const std::size_t steps = so.steps * so.substeps * subs[i];
    r.table.add({fmt(steps), fmt(so.horizon / static_cast<double>(steps)), fmt(errors[i]), fmt(o)});
    if (i) order = o;
  }
  r.report.set("order_horizon", so.horizon);
  r.report.set("observed_order", order);
  expect(r, std::abs(order - 4.0) <= 0.3, "temporal order 4+-0.3");

  // invariants on the finest run over the solver horizon
  if (separate) {
    SolverConfig fine = s;
    fine.substeps = s.substeps * subs.back();
    traj = evolve(u0, fine);
  }
  const auto i0 = invariants(traj[0], s.k);
  double dm = 0.0, de = 0.0;
  for (const auto& f : traj.fields()) {
    const auto iv = invariants(f, s.k);
    dm = std::max(dm, std::abs(iv.mass - i0.mass) / std::max(std::abs(i0.mass), 1e-300));
    de = std::max(de, std::abs(iv.energy - i0.energy) / std::max(std::abs(i0.energy), 1e-300));
  }
  r.report.set("mass_drift", dm);
  r.report.set("energy_drift", de);
  expect(r, dm <= 1e-8, "mass drift<=1e-8");
  expect(r, de <= 1e-6, "energy drift<=1e-6");

  // independent-method agreement
  const PicardResult pic = picard_solve(u0, s);
  const Trajectory& ev = traj;
  double num = 0.0, den = 0.0;
  for (std::size_t m = 0; m < ev.size(); ++m) {
    num = std::max(num, hs_norm(ev[m] - pic.trajectory[m], s.s));
    den = std::max(den, hs_norm(ev[m], s.s));
  }
  const double agree = den > 0 ? num / den : num;
  r.report.set("evolve_picard_relative_hs", agree);
  expect(r, agree <= 1e-6, "evolve vs picard<=1e-6");
  r.report.set("horizon", s.horizon);
  if (cfg.checkpoint) write_checkpoint(cfg.out_dir / "trajectory", traj, cfg.hash());
  return r;
}

ExperimentResult stein_experiment(const ExperimentConfig& cfg) {
  ExperimentResult r;
  const double tol = cfg.tolerance > 0 ? cfg.tolerance : 1e-3;
  r.table.columns = {"axis", "alpha", "d_calibrated", "d_analytic", "c_reference", "calibration_residual",
                     "data_error"};
  const GridSpec g = cfg.grid();
  const Field u = make_initial_data(cfg, g);
  SteinQuadrature q;
  for (const Axis axis : {Axis::X, Axis::Y}) {
    const char* tag = axis == Axis::X ? "x" : "y";
    for (double a : cfg.alphas) {
      const auto cal = calibrate_stein(q, g, axis, a);
      const Field ref = frac_deriv(u, axis, a);
      const double rn = l2_norm(ref);
      const double err = rn > 0 ? l2_norm(stein_deriv(u, axis, a, q) - ref) / rn : 0.0;
      r.table.add({tag, fmt(a), fmt(cal.calibrated), fmt(cal.analytic), fmt(cal.reference), fmt(cal.residual),
                   fmt(err)});
      const std::string sfx = std::string("[") + tag + ",alpha=" + fmt(a) + "]";
      r.report.set("d_calibrated" + sfx, cal.calibrated);
      r.report.set("d_analytic" + sfx, cal.analytic);
      r.report.set("c_reference" + sfx, cal.reference);
      r.report.set("calibration_residual" + sfx, cal.residual);
      r.report.set("data_error" + sfx, err);
      expect(r, err <= tol, std::string("stein vs multiplier<=") + fmt(tol) + " " + sfx);
    }
  }
  return r;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  ExperimentResult r;
  if (cfg.experiment == "commutator") r = commutator_experiment(cfg, false);
  else if (cfg.experiment == "commutator-beta") r = commutator_experiment(cfg, true);
  else if (cfg.experiment == "phi-growth") r = phi_growth_experiment(cfg);
  else if (cfg.experiment == "persistence") r = persistence_experiment(cfg);
  else if (cfg.experiment == "picard-contraction") r = picard_experiment(cfg);
  else if (cfg.experiment == "convergence") r = convergence_experiment(cfg);
  else r = stein_experiment(cfg);
  r.report.set_meta("experiment", cfg.experiment);
  r.report.set_meta("config_hash", cfg.hash());
  r.report.set_meta("grid", std::to_string(cfg.nx) + "x" + std::to_string(cfg.ny) + " box " +
                                format_double(cfg.lx) + "x" + format_double(cfg.ly));
  r.report.set_meta("weights", "s=" + format_double(cfg.weights.s) + " r1=" + format_double(cfg.weights.r1) +
                                   " r2=" + format_double(cfg.weights.r2) + " beta=" + format_double(cfg.weights.beta) +
                                   " k=" + std::to_string(cfg.weights.k));
  r.report.set_meta("seed", std::to_string(cfg.seed));
  if (!r.report.all_finite()) throw NumericalGuardError(cfg.experiment + ": non-finite value in report");
  return r;
}

int run(const ExperimentConfig& cfg, std::ostream& log) {
  try {
    const ExperimentResult r = run_experiment(cfg);
    std::filesystem::create_directories(cfg.out_dir);
    const std::string hash = cfg.hash();
    std::ofstream(cfg.out_dir / "report.txt") << r.report.to_text();
    std::ofstream(cfg.out_dir / "report.json") << r.report.to_json();
    std::ofstream(cfg.out_dir / "table.csv") << r.table.to_csv(hash);
    for (const auto& f : r.failures) log << "assertion failed: " << f << '\n';
    log << cfg.experiment << ": " << (r.failures.empty() ? "ok" : "FAILED") << " (" << cfg.out_dir.string()
        << ", config " << hash << ")\n";
    return r.status();
  } catch (const ValidationError& e) {
    log << "validation error: " << e.what() << '\n';
    return kValidationFailed;
  } catch (const NumericalGuardError& e) {
    log << "numerical guard: " << e.what() << '\n';
    return kNumericalGuard;
  } catch (const std::filesystem::filesystem_error& e) {
    log << "validation error: " << e.what() << '\n';
    return kValidationFailed;
  }
}

}  // namespace gzk
