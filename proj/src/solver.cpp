#include "gzk/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gzk/diagnostics.hpp"
#include "gzk/errors.hpp"
#include "gzk/linear_group.hpp"
#include "gzk/norms.hpp"
#include "gzk/report.hpp"
#include "gzk/transform.hpp"

namespace gzk {

void SolverConfig::validate() const {
  if (k < 1) throw ValidationError("solver: k=" + std::to_string(k) + " must be at least 1");
  if (!(horizon > 0.0) || !std::isfinite(horizon)) throw ValidationError("solver: horizon T must be positive");
  if (steps < 2) throw ValidationError("solver: need at least 2 time steps");
  if (substeps < 1) throw ValidationError("solver: substeps must be at least 1");
  if (!(s >= 0.0)) throw ValidationError("solver: s must be nonnegative");
  if (!(picard_tolerance > 0.0)) throw ValidationError("solver: Picard tolerance must be positive");
  if (!(c > 0.0) || !(gamma > 0.0)) throw ValidationError("solver: time-rule constants c, gamma must be positive");
  if (!(t_max > 0.0)) throw ValidationError("solver: t_max must be positive");
  if (horizon >= 1.0 && !override_time) {
    throw ValidationError("solver: T=" + format_double(horizon) + " >= 1 needs the override flag");
  }
}

namespace {

void require_real(const Field& p, const char* who) {
  double scale = 0.0;
  for (const auto& v : p.values()) scale = std::max(scale, std::abs(v));
  if (p.max_imag() > 1e-10 * std::max(scale, 1.0)) {
    throw ValidationError(std::string(who) + ": field must be real-valued");
  }
}

// Spectral right-hand side -(u^k u_x)^ for a spectral state.
class Nonlinear {
 public:
  explicit Nonlinear(int k) : k_(k) {}

  Field operator()(const Field& v_hat) const {
    const Field p = product(v_hat);
    Field out = dealias(forward(p), k_ + 1);
    out *= complex{-1.0};
    return out;
  }

  // u^k u_x in physical space from a spectral state, inputs dealiased.
  Field product(const Field& v_hat) const {
    const Field vd = dealias(v_hat, k_ + 1);
    const Field u = inverse(vd);
    const Field ux = inverse(derivative(vd, Axis::X));
    Field out(u.grid(), Representation::Physical);
    auto ov = out.values();
    for (std::size_t n = 0; n < ov.size(); ++n) {
      const double uu = u.values()[n].real();
      ov[n] = std::pow(uu, k_) * ux.values()[n].real();
    }
    return out;
  }

 private:
  int k_;
};

struct EtdCoefficients {
  std::vector<complex> e, e2, q, f1, f2, f3;
};

// Kassam-Trefethen contour averages for the ETDRK4 weights.
EtdCoefficients etd_coefficients(const GridSpec& g, double h) {
  constexpr int kPoints = 32;
  std::array<complex, kPoints> roots;
  for (int j = 0; j < kPoints; ++j) {
    roots[j] = std::polar(1.0, std::numbers::pi * (j + 0.5) / kPoints * 2.0);
  }
  EtdCoefficients c;
  const std::size_t n = g.size();
  for (auto* v : {&c.e, &c.e2, &c.q, &c.f1, &c.f2, &c.f3}) v->resize(n);
  const auto& xi = g.xi_odd();
  const auto& eta = g.eta();
  for (std::size_t i = 0; i < g.nx(); ++i) {
    for (std::size_t j = 0; j < g.ny(); ++j) {
      const std::size_t idx = g.index(i, j);
      const complex lh{0.0, h * phase_symbol(xi[i], eta[j])};
      complex q{}, f1{}, f2{}, f3{};
      for (const auto& r : roots) {
        const complex z = lh + r;
        const complex ez = std::exp(z), ez2 = std::exp(0.5 * z);
        const complex z3 = z * z * z;
        q += (ez2 - 1.0) / z;
        f1 += (-4.0 - z + ez * (4.0 - 3.0 * z + z * z)) / z3;
        f2 += (2.0 + z + ez * (z - 2.0)) / z3;
        f3 += (-4.0 - 3.0 * z - z * z + ez * (4.0 - z)) / z3;
      }
      c.e[idx] = std::exp(lh);
      c.e2[idx] = std::exp(0.5 * lh);
      c.q[idx] = h * q / double(kPoints);
      c.f1[idx] = h * f1 / double(kPoints);
      c.f2[idx] = h * f2 / double(kPoints);
      c.f3[idx] = h * f3 / double(kPoints);
    }
  }
  return c;
}

Field combine(const std::vector<complex>& a, const Field& x, const std::vector<complex>& b, const Field& y) {
  Field out(x.grid(), Representation::Spectral);
  auto o = out.values();
  for (std::size_t n = 0; n < o.size(); ++n) o[n] = a[n] * x.values()[n] + b[n] * y.values()[n];
  return out;
}

Field physical_real(const Field& spectral) { return real_part(inverse(spectral)); }

void check_time(const Field& u0, const SolverConfig& cfg) {
  cfg.validate();
  if (!cfg.override_time) {
    const double tl = local_time(u0, cfg);
    if (cfg.horizon > tl * (1.0 + 1e-12)) {
      throw ValidationError("solver: T=" + format_double(cfg.horizon) + " exceeds local_time=" +
                            format_double(tl) + "; use the override flag to run anyway");
    }
  }
}

}  // namespace

Field nonlinearity(const Field& u, int k) {
  if (k < 1) throw ValidationError("nonlinearity: k must be at least 1");
  const Field p = to_physical(u);
  require_real(p, "nonlinearity");
  const Nonlinear nl(k);
  return physical_real(dealias(forward(nl.product(forward(real_part(p)))), k + 1));
}

double local_time(const Field& u0, const SolverConfig& cfg) {
  if (!(cfg.c > 0.0) || !(cfg.gamma > 0.0)) throw ValidationError("local_time: c, gamma must be positive");
  const double hs = hs_norm(u0, cfg.s);
  if (hs == 0.0) return cfg.t_max;
  const double a = 2.0 * cfg.c * hs;
  return std::pow(2.0 * cfg.c * std::pow(a, cfg.k), -1.0 / cfg.gamma);
}

InvariantRecord invariants(const Field& u, int k) {
  const Field p = to_physical(u);
  require_real(p, "invariants");
  const Field s = forward(real_part(p));
  const Field ux = inverse(derivative(s, Axis::X));
  const Field uy = inverse(derivative(s, Axis::Y));
  const auto& g = p.grid();
  double mass = 0.0, energy = 0.0;
  const double denom = (k + 1.0) * (k + 2.0);
  for (std::size_t n = 0; n < g.size(); ++n) {
    const double v = p.values()[n].real();
    const double gx = ux.values()[n].real(), gy = uy.values()[n].real();
    mass += v * v;
    energy += 0.5 * (gx * gx + gy * gy) - std::pow(v, k + 2) / denom;
  }
  return {mass * g.cell_area(), energy * g.cell_area()};
}

Trajectory evolve(const Field& u0, const SolverConfig& cfg) {
  const Field p0 = to_physical(u0);
  require_real(p0, "evolve");
  check_finite(p0, "evolve");
  check_tail(p0, "evolve");
  check_time(p0, cfg);

  const auto& g = p0.grid();
  const double dt = cfg.horizon / static_cast<double>(cfg.steps);
  const double h = dt / static_cast<double>(cfg.substeps);
  const auto c = etd_coefficients(g, h);
  const Nonlinear nl(cfg.k);

  Field v = forward(real_part(p0));
  const double n0 = l2_norm(v);
  std::vector<double> times{0.0};
  std::vector<Field> fields{physical_real(v)};
  times.reserve(cfg.steps + 1);
  fields.reserve(cfg.steps + 1);

  for (std::size_t m = 1; m <= cfg.steps; ++m) {
    for (std::size_t sub = 0; sub < cfg.substeps; ++sub) {
      if (!cfg.nonlinear) {
        for (std::size_t n = 0; n < v.values().size(); ++n) v.values()[n] *= c.e[n];
        continue;
      }
      const Field nv = nl(v);
      const Field a = combine(c.e2, v, c.q, nv);
      const Field na = nl(a);
      const Field b = combine(c.e2, v, c.q, na);
      const Field nb = nl(b);
      Field cc = combine(c.e2, a, c.q, (2.0 * nb) - nv);
      const Field nc = nl(cc);
      Field next(g, Representation::Spectral);
      auto o = next.values();
      for (std::size_t n = 0; n < o.size(); ++n) {
        o[n] = c.e[n] * v.values()[n] + c.f1[n] * nv.values()[n] +
               2.0 * c.f2[n] * (na.values()[n] + nb.values()[n]) + c.f3[n] * nc.values()[n];
      }
      hermitian_symmetrize(next);
      v = std::move(next);
    }
    const double nrm = l2_norm(v);
    if (!std::isfinite(nrm) || (n0 > 0.0 && nrm > 1e6 * n0)) {
      throw NumericalGuardError("evolve: solution norm exploded at t=" +
                                format_double(dt * static_cast<double>(m)) + "; reduce the step size");
    }
    times.push_back(dt * static_cast<double>(m));
    fields.push_back(physical_real(v));
  }
  return Trajectory(std::move(times), std::move(fields));
}

namespace {

// Cumulative Simpson integral of samples G_0..G_M (uniform spacing dt).
std::vector<Field> cumulative_simpson(const std::vector<Field>& gs, double dt) {
  const std::size_t m_count = gs.size();
  std::vector<Field> out(m_count, Field(gs.front().grid(), Representation::Spectral));
  if (m_count < 3) throw ValidationError("Simpson quadrature needs at least 3 samples");
  auto lin = [&](Field& dst, const Field* base, std::initializer_list<std::pair<double, const Field*>> terms) {
    auto d = dst.values();
    for (std::size_t n = 0; n < d.size(); ++n) {
      complex acc = base ? base->values()[n] : complex{};
      for (const auto& [w, f] : terms) acc += w * f->values()[n];
      d[n] = acc;
    }
  };
  lin(out[1], nullptr, {{5.0 * dt / 12.0, &gs[0]}, {8.0 * dt / 12.0, &gs[1]}, {-dt / 12.0, &gs[2]}});
  for (std::size_t m = 2; m < m_count; ++m) {
    if (m % 2 == 0) {
      lin(out[m], &out[m - 2], {{dt / 3.0, &gs[m - 2]}, {4.0 * dt / 3.0, &gs[m - 1]}, {dt / 3.0, &gs[m]}});
    } else {
      lin(out[m], &out[m - 1], {{-dt / 12.0, &gs[m - 2]}, {8.0 * dt / 12.0, &gs[m - 1]}, {5.0 * dt / 12.0, &gs[m]}});
    }
  }
  return out;
}

std::vector<Field> duhamel_spectral(const Field& u0_hat, const std::vector<Field>& states,
                                    const std::vector<double>& times, int k) {
  const auto& g = u0_hat.grid();
  const Nonlinear nl(k);
  std::vector<Field> gs;
  gs.reserve(states.size());
  for (std::size_t m = 0; m < states.size(); ++m) {
    Field n_hat = nl(states[m]);
    const auto back = group_multiplier(g, -times[m]);
    for (std::size_t n = 0; n < g.size(); ++n) n_hat.values()[n] *= back[n];
    gs.push_back(std::move(n_hat));
  }
  const double dt = times[1] - times[0];
  auto integrals = cumulative_simpson(gs, dt);
  std::vector<Field> out;
  out.reserve(states.size());
  for (std::size_t m = 0; m < states.size(); ++m) {
    Field next = u0_hat + integrals[m];
    const auto fwd = group_multiplier(g, times[m]);
    for (std::size_t n = 0; n < g.size(); ++n) next.values()[n] *= fwd[n];
    hermitian_symmetrize(next);
    out.push_back(std::move(next));
  }
  return out;
}

std::vector<double> uniform_times(const SolverConfig& cfg) {
  std::vector<double> t(cfg.steps + 1);
  for (std::size_t m = 0; m <= cfg.steps; ++m) {
    t[m] = cfg.horizon * static_cast<double>(m) / static_cast<double>(cfg.steps);
  }
  return t;
}

Trajectory to_trajectory(const std::vector<double>& times, const std::vector<Field>& states) {
  std::vector<Field> f;
  f.reserve(states.size());
  for (const auto& s : states) f.push_back(physical_real(s));
  return Trajectory(times, std::move(f));
}

double sup_hs_spectral(const std::vector<Field>& a, const std::vector<Field>& b, double s) {
  double sup = 0.0;
  for (std::size_t m = 0; m < a.size(); ++m) sup = std::max(sup, hs_norm(a[m] - b[m], s));
  return sup;
}

}  // namespace

Trajectory duhamel_map(const Field& u0, const Trajectory& u, const SolverConfig& cfg) {
  if (u.size() < 3) throw ValidationError("duhamel_map: need at least 3 samples");
  std::vector<Field> states;
  for (const auto& f : u.fields()) states.push_back(forward(real_part(to_physical(f))));
  const Field u0_hat = forward(real_part(to_physical(u0)));
  std::vector<double> rel(u.times());
  for (auto& t : rel) t -= u.times().front();
  return to_trajectory(u.times(), duhamel_spectral(u0_hat, states, rel, cfg.k));
}

double sup_hs_distance(const Trajectory& a, const Trajectory& b, double s) {
  if (a.size() != b.size()) throw ValidationError("sup_hs_distance: trajectories differ in length");
  double sup = 0.0;
  for (std::size_t m = 0; m < a.size(); ++m) sup = std::max(sup, hs_norm(a[m] - b[m], s));
  return sup;
}

PicardResult picard_solve(const Field& u0, const SolverConfig& cfg) {
  const Field p0 = to_physical(u0);
  require_real(p0, "picard_solve");
  check_finite(p0, "picard_solve");
  check_tail(p0, "picard_solve");
  check_time(p0, cfg);

  const auto times = uniform_times(cfg);
  const Field u0_hat = forward(real_part(p0));
  std::vector<Field> cur;
  cur.reserve(times.size());
  for (double t : times) cur.push_back(propagate(u0_hat, t));

  PicardResult res;
  for (std::size_t it = 1; it <= cfg.picard_max_iterations; ++it) {
    auto next = cfg.nonlinear ? duhamel_spectral(u0_hat, cur, times, cfg.k) : cur;
    const double diff = sup_hs_spectral(next, cur, cfg.s);
    if (!std::isfinite(diff)) throw NumericalGuardError("picard_solve: iterate became non-finite");
    res.history.push_back(diff);
    cur = std::move(next);
    res.iterations = it;
    if (diff < cfg.picard_tolerance) {
      res.trajectory = to_trajectory(times, cur);
      return res;
    }
  }
  std::string hist;
  for (double d : res.history) hist += " " + format_double(d);
  throw NonConvergence("picard_solve: no convergence in " + std::to_string(cfg.picard_max_iterations) +
                       " iterations (T too large for the data?); differences:" + hist);
}

}  // namespace gzk
