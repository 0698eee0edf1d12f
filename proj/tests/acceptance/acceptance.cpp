// Acceptance runner: one PASS/FAIL line per criterion, exit 1 if any fail.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "gzk/config.hpp"
#include "gzk/experiment.hpp"
#include "gzk/linear_group.hpp"
#include "gzk/mu_norms.hpp"
#include "gzk/stein.hpp"
#include "gzk/transform.hpp"
#include "oracles.hpp"

using namespace gzk;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.pass) ++failures;
  std::printf("AC%d %s  %s (%.1fs)\n", id, o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
  std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

ExperimentConfig config(const std::string& text) {
  std::istringstream in(text);
  return config_from_map(parse_ini(in));
}

std::string g(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// Collects the failed assertion names of a run.
std::string failed(const ExperimentResult& r) {
  std::string out;
  for (const auto& f : r.failures) out += (out.empty() ? "" : "; ") + f;
  return out;
}

Outcome unitarity() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto grid = make_grid(256, 256, 40, 40);
  std::mt19937_64 rng(1);
  double norm_err = 0, comp_err = 0, inv_err = 0;
  for (int n = 0; n < 100; ++n) {
    const Field u = forward(oracle::random_field(grid, rng));
    const double nu = l2_norm(u);
    for (double t : {0.1, 1.0, 10.0}) {
      const Field w = propagate(u, t);
      norm_err = std::max(norm_err, std::abs(l2_norm(w) - nu) / nu);
      comp_err = std::max(comp_err, oracle::rel_diff(propagate(w, t), propagate(u, 2 * t)));
      inv_err = std::max(inv_err, oracle::rel_diff(propagate(w, -t), u));
    }
  }
  const double secs = seconds_since(t0);
  const bool ok = norm_err <= 1e-12 && comp_err <= 1e-12 && inv_err <= 1e-12 && secs < 10;
  return {ok, "norm " + g(norm_err) + ", W(t)W(t)-W(2t) " + g(comp_err) + ", W(-t)W(t)-I " + g(inv_err) +
                  ", " + g(secs) + "s at 256^2"};
}

Outcome commutator_identity() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst256 = 0;
  std::string fails;
  for (const char* r : {"0.25", "0.5", "0.75"}) {
    const std::string s = std::string(r) == "0.75" ? "1.5" : "1";
    const auto cfg = config(std::string("[experiment]\nname = commutator\n[grid]\nlx = 40\n[weights]\nr1 = ") + r +
                            "\ns = " + s + "\n[commutator]\ntimes = 0.1, 1\nresolutions = 128, 256, 512\n");
    const auto res = run_experiment(cfg);
    for (double t : {0.1, 1.0}) {
      const double v = res.report.get("residual_max[t=" + format_double(t) + ",n=256]");
      worst256 = std::max(worst256, v);
      if (v > 1e-4) fails += " r=" + std::string(r) + ",t=" + g(t) + ":" + g(v);
    }
    for (const auto& f : res.failures) {
      if (f.find("decreases") != std::string::npos) fails += " r=" + std::string(r) + ": " + f;
    }
  }
  const double secs = seconds_since(t0);
  if (secs >= 300) fails += " runtime " + g(secs) + "s";
  return {fails.empty(), "worst residual at 256^2 " + g(worst256) + ", monotone 128->512" +
                             (fails.empty() ? "" : ";" + fails)};
}

Outcome beta_identity() {
  const auto cfg = config(
      "[experiment]\nname = commutator-beta\n[grid]\nlx = 40\n[weights]\nr1 = 0.6\ns = 1.2\nbeta = 0.25\n"
      "[commutator]\ntimes = 0.1, 1\nresolutions = 128, 256, 512\n");
  const auto res = run_experiment(cfg);
  return {res.failures.empty(), "worst residual " + g(res.report.get("residual_worst")) + " (finest grid)" +
                                    (res.failures.empty() ? "" : "; " + failed(res))};
}

Outcome bound_shape() {
  const auto cfg = config(
      "[experiment]\nname = phi-growth\n[grid]\nlx = 40\n[commutator]\ntimes = 1, 2, 4, 8\nresolutions = 128, 256\n");
  const auto res = run_experiment(cfg);
  const auto& rp = res.report;
  return {res.failures.empty(), "slopes x " + g(rp.get("slope_x[n=256]")) + " y " + g(rp.get("slope_y[n=256]")) +
                                    ", bound-ratio change " + g(rp.get("bound_ratio_refinement_change")) +
                                    (res.failures.empty() ? "" : "; " + failed(res))};
}

Outcome stein_equivalence() {
  const auto cfg = config("[experiment]\nname = stein-calibration\n[grid]\nnx = 128\nlx = 40\n");
  const auto res = run_experiment(cfg);
  double worst = 0;
  for (const auto& [name, v] : res.report.values())
    if (name.rfind("data_error", 0) == 0) worst = std::max(worst, v);
  return {res.failures.empty() && worst <= 1e-3, "worst relative error " + g(worst)};
}

Outcome product_rule() {
  const auto grid = make_grid(64, 64, 16, 16);
  const Field f = oracle::gaussian(grid);
  SteinQuadrature q;
  double worst = 0;
  for (double a : {0.25, 0.5, 0.75})
    for (double t : {0.05, 0.1}) {
      const Field w = Field::sample(grid, [&](double x, double y) { return std::polar(1.0, t * phase_symbol(x, y)); });
      const Field wf = pointwise_product(w, f);
      for (const Axis ax : {Axis::X, Axis::Y}) {
        const Field lhs = stein_deriv(wf, ax, a, q);
        const Field rhs = pointwise_product(w, stein_deriv(f, ax, a, q) + phi_physical(f, ax, t, a, q));
        worst = std::max(worst, oracle::rel_diff(rhs, lhs));
      }
    }
  return {worst <= 1e-3, "worst decomposition residual " + g(worst)};
}

Outcome picard_contraction() {
  const auto cfg = config(
      "[experiment]\nname = picard-contraction\n[grid]\nnx = 64\nlx = 20\n[data]\namplitude = 0.1\n"
      "[solver]\npowers = 1, 2, 3\n");
  const auto res = run_experiment(cfg);
  std::string d;
  for (int k : {1, 2, 3}) {
    const std::string s = "[k=" + std::to_string(k) + "]";
    d += "k=" + std::to_string(k) + " ratio " + g(res.report.get("max_ratio" + s)) + " resid " +
         g(res.report.get("fixed_point_residual" + s)) + "; ";
  }
  return {res.failures.empty(), d + (res.failures.empty() ? "" : failed(res))};
}

Outcome solver_integrity() {
  // the order study runs over its own horizon, where step error dominates round-off
  const auto res = run_experiment(config(
      "[experiment]\nname = convergence\n[grid]\nnx = 256\nlx = 40\n[solver]\nsteps = 64\n"
      "[convergence]\norder_horizon = 0.5\norder_steps = 8\n"));
  const auto& b = res.report;
  return {res.failures.empty(), "256^2 to T=" + g(b.get("horizon")) + ": mass " + g(b.get("mass_drift")) +
                                    ", energy " + g(b.get("energy_drift")) + ", evolve-picard " +
                                    g(b.get("evolve_picard_relative_hs")) + "; order " + g(b.get("observed_order")) +
                                    " over T=" + g(b.get("order_horizon")) +
                                    (res.failures.empty() ? "" : "; " + failed(res))};
}

Outcome persistence() {
  std::vector<double> ks;
  for (const char* box : {"30", "40"})
    for (const char* n : {"128", "256"}) {
      const auto cfg = config(std::string("[experiment]\nname = persistence\n[grid]\nnx = ") + n + "\nlx = " + box +
                              "\n[weights]\nr1 = 0.5\ns = 1\n[solver]\nsteps = 32\n");
      const auto res = run_experiment(cfg);
      if (!res.failures.empty()) return {false, failed(res)};
      ks.push_back(res.report.get("persistence_constant"));
    }
  const auto [lo, hi] = std::minmax_element(ks.begin(), ks.end());
  const double spread = (*hi - *lo) / *hi;
  return {spread <= 0.2, "K in [" + g(*lo) + ", " + g(*hi) + "], spread " + g(spread)};
}

Outcome norm_oracle() {
  std::mt19937_64 rng(10);
  const auto grid = make_grid(8, 8, 6, 5);
  double worst = 0;
  std::size_t patterns = 0;
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Field> fs;
    for (int m = 0; m < 4; ++m) fs.push_back(oracle::random_field(grid, rng));
    const Trajectory tr({0.0, 0.1, 0.2, 0.3}, fs);
    for (int k = 1; k <= 9; ++k) {
      WeightParams w;
      w.k = k;
      for (const auto& term : mu1_terms(w)) {
        if (term.hs_sup) continue;
        const double ref = oracle::brute_mixed_norm(tr, term.spec);
        worst = std::max(worst, std::abs(mixed_norm(tr, term.spec) - ref) / ref);
        ++patterns;
      }
    }
  }
  return {worst <= 1e-12, std::to_string(patterns) + " evaluations, worst relative difference " + g(worst)};
}

}  // namespace

int main() {
  criterion(1, unitarity);
  criterion(2, commutator_identity);
  criterion(3, beta_identity);
  criterion(4, bound_shape);
  criterion(5, stein_equivalence);
  criterion(6, product_rule);
  criterion(7, picard_contraction);
  criterion(8, solver_integrity);
  criterion(9, persistence);
  criterion(10, norm_oracle);
  return failures == 0 ? 0 : 1;
}
