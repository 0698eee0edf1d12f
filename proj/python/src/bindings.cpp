#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gzk/commutator.hpp"
#include "gzk/config.hpp"
#include "gzk/errors.hpp"
#include "gzk/experiment.hpp"
#include "gzk/field_io.hpp"
#include "gzk/fractional.hpp"
#include "gzk/linear_group.hpp"
#include "gzk/mixed_norm.hpp"
#include "gzk/mu_norms.hpp"
#include "gzk/norms.hpp"
#include "gzk/solver.hpp"
#include "gzk/stein.hpp"
#include "gzk/transform.hpp"

namespace py = pybind11;
using namespace gzk;

namespace {

using CArray = py::array_t<complex, py::array::c_style | py::array::forcecast>;

Field field_from(const GridSpec& g, const CArray& a, Representation rep) {
  if (a.ndim() != 2 || static_cast<std::size_t>(a.shape(0)) != g.nx() ||
      static_cast<std::size_t>(a.shape(1)) != g.ny()) {
    throw ValidationError("array shape does not match the grid");
  }
  return Field(g, rep, std::vector<complex>(a.data(), a.data() + a.size()));
}

CArray array_from(const Field& f) {
  const auto& g = f.grid();
  CArray out({g.nx(), g.ny()});
  std::copy(f.values().begin(), f.values().end(), out.mutable_data());
  return out;
}

py::array_t<double> vec(const std::vector<double>& v) { return py::array_t<double>(v.size(), v.data()); }

Axis axis_from(const std::string& s) {
  if (s == "x") return Axis::X;
  if (s == "y") return Axis::Y;
  throw ValidationError("axis must be 'x' or 'y'");
}

py::dict report_dict(const NormReport& r) {
  py::dict d;
  for (const auto& [k, v] : r.values()) d[py::str(k)] = v;
  return d;
}

Trajectory trajectory_from(const GridSpec& g, const std::vector<double>& times, const py::array_t<complex>& samples) {
  if (samples.ndim() != 3 || static_cast<std::size_t>(samples.shape(0)) != times.size()) {
    throw ValidationError("samples must have shape (len(times), nx, ny)");
  }
  std::vector<Field> fs;
  const auto a = samples.unchecked<3>();
  for (std::size_t m = 0; m < times.size(); ++m) {
    Field f(g, Representation::Physical);
    for (std::size_t i = 0; i < g.nx(); ++i)
      for (std::size_t j = 0; j < g.ny(); ++j) f(i, j) = a(m, i, j);
    fs.push_back(std::move(f));
  }
  return Trajectory(times, std::move(fs));
}

py::tuple trajectory_out(const Trajectory& tr) {
  const auto& g = tr.grid();
  py::array_t<complex> out({tr.size(), g.nx(), g.ny()});
  complex* p = out.mutable_data();
  for (const auto& f : tr.fields()) p = std::copy(f.values().begin(), f.values().end(), p);
  return py::make_tuple(vec(tr.times()), out);
}

SolverConfig solver_config(int k, double horizon, std::size_t steps, std::size_t substeps, bool nonlinear,
                           bool override_time) {
  SolverConfig c;
  c.k = k;
  c.horizon = horizon;
  c.steps = steps;
  c.substeps = substeps;
  c.nonlinear = nonlinear;
  c.override_time = override_time;
  return c;
}

}  // namespace

PYBIND11_MODULE(_gzk, m) {
  m.doc() = "Spectral operators, weighted norms and solvers for the generalized ZK equation";

  static py::exception<ValidationError> validation(m, "ValidationError", PyExc_ValueError);
  static py::exception<NumericalGuardError> guard(m, "NumericalGuardError", PyExc_ArithmeticError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ValidationError& e) {
      py::set_error(validation, e.what());
    } catch (const NumericalGuardError& e) {
      py::set_error(guard, e.what());
    }
  });

  py::class_<GridSpec>(m, "Grid")
      .def(py::init(&make_grid), py::arg("nx"), py::arg("ny"), py::arg("lx"), py::arg("ly"))
      .def_property_readonly("nx", &GridSpec::nx)
      .def_property_readonly("ny", &GridSpec::ny)
      .def_property_readonly("lx", &GridSpec::lx)
      .def_property_readonly("ly", &GridSpec::ly)
      .def_property_readonly("x", [](const GridSpec& g) {
        std::vector<double> v(g.nx());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = g.x(i);
        return vec(v);
      })
      .def_property_readonly("y", [](const GridSpec& g) {
        std::vector<double> v(g.ny());
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = g.y(j);
        return vec(v);
      })
      .def_property_readonly("xi", [](const GridSpec& g) { return vec(g.xi()); })
      .def_property_readonly("eta", [](const GridSpec& g) { return vec(g.eta()); })
      .def("__repr__", [](const GridSpec& g) {
        std::ostringstream s;
        s << "Grid(" << g.nx() << ", " << g.ny() << ", " << g.lx() << ", " << g.ly() << ")";
        return s.str();
      });

  m.def("forward", [](const GridSpec& g, const CArray& u) {
    return array_from(forward(field_from(g, u, Representation::Physical)));
  }, "Box-centered Fourier coefficients of physical samples.");
  m.def("inverse", [](const GridSpec& g, const CArray& c) {
    return array_from(inverse(field_from(g, c, Representation::Spectral)));
  });
  m.def("propagate", [](const GridSpec& g, const CArray& u, double t) {
    return array_from(propagate(field_from(g, u, Representation::Physical), t));
  }, py::arg("grid"), py::arg("u"), py::arg("t"), "Linear group W(t) applied to physical samples.");
  m.def("frac_deriv", [](const GridSpec& g, const CArray& u, const std::string& axis, double alpha) {
    return array_from(to_physical(frac_deriv(field_from(g, u, Representation::Physical), axis_from(axis), alpha)));
  }, py::arg("grid"), py::arg("u"), py::arg("axis"), py::arg("alpha"));
  m.def("stein_deriv", [](const GridSpec& g, const CArray& u, const std::string& axis, double alpha) {
    SteinQuadrature q;
    return array_from(stein_deriv(field_from(g, u, Representation::Physical), axis_from(axis), alpha, q));
  }, py::arg("grid"), py::arg("u"), py::arg("axis"), py::arg("alpha"));
  m.def("phi_operator", [](const GridSpec& g, const CArray& u, const std::string& axis, double t, double alpha) {
    const Field uh = forward(field_from(g, u, Representation::Physical));
    return array_from(to_physical(phi_operator(uh, axis_from(axis), t, alpha)));
  }, py::arg("grid"), py::arg("u"), py::arg("axis"), py::arg("t"), py::arg("alpha"),
        "Phi(t) for physical data, returned as physical samples.");
  m.def("commutator_check", [](const GridSpec& g, const CArray& u, double t, double s, double r1, double r2,
                               double beta) {
    WeightParams w;
    w.s = s;
    w.r1 = r1;
    w.r2 = r2;
    w.beta = beta;
    const Field f = field_from(g, u, Representation::Physical);
    return report_dict(beta > 0 ? commutator_check_beta(f, t, w) : commutator_check(f, t, w));
  }, py::arg("grid"), py::arg("u"), py::arg("t"), py::arg("s") = 1.0, py::arg("r1") = 0.5, py::arg("r2") = 0.5,
        py::arg("beta") = 0.0);

  m.def("hs_norm", [](const GridSpec& g, const CArray& u, double s) {
    return hs_norm(field_from(g, u, Representation::Physical), s);
  }, py::arg("grid"), py::arg("u"), py::arg("s"));
  m.def("weighted_l2", [](const GridSpec& g, const CArray& u, double r1, double r2) {
    return weighted_l2(field_from(g, u, Representation::Physical), r1, r2);
  }, py::arg("grid"), py::arg("u"), py::arg("r1"), py::arg("r2"));
  m.def("weighted_l2_sum", [](const GridSpec& g, const CArray& u, double r1, double r2) {
    return weighted_l2_sum(field_from(g, u, Representation::Physical), r1, r2);
  }, py::arg("grid"), py::arg("u"), py::arg("r1"), py::arg("r2"));
  m.def("mu_norms", [](const GridSpec& g, const std::vector<double>& times, const py::array_t<complex>& samples,
                       double s, double r1, double r2, int k) {
    WeightParams w;
    w.s = s;
    w.r1 = r1;
    w.r2 = r2;
    w.k = k;
    NormReport terms;
    const Trajectory tr = trajectory_from(g, times, samples);
    const double a = mu1(tr, w), b = mu2(tr, w, {}, &terms);
    return py::make_tuple(a, b, report_dict(terms));
  }, py::arg("grid"), py::arg("times"), py::arg("samples"), py::arg("s") = 1.0, py::arg("r1") = 0.5,
        py::arg("r2") = 0.5, py::arg("k") = 1, "Returns (mu1, mu2, per-term values).");

  m.def("local_time", [](const GridSpec& g, const CArray& u, int k, double s) {
    SolverConfig c;
    c.k = k;
    c.s = s;
    return local_time(field_from(g, u, Representation::Physical), c);
  }, py::arg("grid"), py::arg("u"), py::arg("k") = 1, py::arg("s") = 1.0);
  m.def("evolve", [](const GridSpec& g, const CArray& u, int k, double horizon, std::size_t steps,
                     std::size_t substeps, bool nonlinear, bool override_time) {
    return trajectory_out(evolve(field_from(g, u, Representation::Physical),
                                 solver_config(k, horizon, steps, substeps, nonlinear, override_time)));
  }, py::arg("grid"), py::arg("u"), py::arg("k") = 1, py::arg("horizon") = 0.1, py::arg("steps") = 64,
        py::arg("substeps") = 1, py::arg("nonlinear") = true, py::arg("override_time") = false,
        "Returns (times, samples) with samples of shape (steps + 1, nx, ny).");
  m.def("picard_solve", [](const GridSpec& g, const CArray& u, int k, double horizon, std::size_t steps,
                           bool override_time) {
    const auto r = picard_solve(field_from(g, u, Representation::Physical),
                                solver_config(k, horizon, steps, 1, true, override_time));
    const py::tuple out = trajectory_out(r.trajectory);
    return py::make_tuple(out[0], out[1], r.history);
  }, py::arg("grid"), py::arg("u"), py::arg("k") = 1, py::arg("horizon") = 0.1, py::arg("steps") = 64,
        py::arg("override_time") = false, "Returns (times, samples, iterate differences).");
  m.def("invariants", [](const GridSpec& g, const CArray& u, int k) {
    const auto r = invariants(field_from(g, u, Representation::Physical), k);
    return py::make_tuple(r.mass, r.energy);
  }, py::arg("grid"), py::arg("u"), py::arg("k") = 1);

  m.def("save_field", [](const std::string& path, const GridSpec& g, const CArray& u) {
    save_field(path, field_from(g, u, Representation::Physical));
  });
  m.def("load_field", [](const std::string& path) {
    const Field f = to_physical(load_field(path));
    return py::make_tuple(f.grid(), array_from(f));
  });

  m.def("run_experiment", [](const std::map<std::string, std::string>& config) {
    const ExperimentConfig cfg = config_from_map(ConfigMap(config.begin(), config.end()));
    const ExperimentResult r = run_experiment(cfg);
    return py::make_tuple(r.status(), report_dict(r.report), r.failures);
  }, py::arg("config"), "Runs an experiment from flat 'section.key' settings; returns (status, values, failures).");
}
