// Copyright 2026 The paramp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "paramp/config.hpp"
#include "paramp/error.hpp"
#include "paramp/fock.hpp"
#include "paramp/lindblad.hpp"
#include "paramp/model.hpp"
#include "paramp/observables.hpp"
#include "paramp/params_report.hpp"
#include "paramp/recipes.hpp"
#include "paramp/response.hpp"
#include "paramp/semiclassical.hpp"
#include "paramp/squeezing.hpp"
#include "paramp/sweep.hpp"
#include "paramp/wigner.hpp"

namespace py = pybind11;
using namespace paramp;

namespace {

HamiltonianCoefficients make_coeffs(double delta, Complex lambda, double kerr, double cubic, double quartic) {
  HamiltonianCoefficients c;
  c.delta = delta;
  c.lambda = lambda;
  c.kerr = kerr;
  c.cubic = cubic;
  c.quartic = quartic;
  return c;
}

EnvironmentParams make_env(double kappa, double gamma) {
  EnvironmentParams e;
  e.kappa = kappa;
  e.gamma = gamma;
  return e;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Open-system models of flux-pumped Josephson parametric amplifiers";

  static py::exception<Error> error(m, "Error");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InvalidArgument& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<HamiltonianCoefficients>(m, "HamiltonianCoefficients")
      .def(py::init(&make_coeffs), py::arg("delta") = 0.0, py::arg("lambda_") = Complex(0.0),
           py::arg("kerr") = 0.0, py::arg("cubic") = 0.0, py::arg("quartic") = 0.0)
      .def_readwrite("delta", &HamiltonianCoefficients::delta)
      .def_readwrite("lambda_", &HamiltonianCoefficients::lambda)
      .def_readwrite("kerr", &HamiltonianCoefficients::kerr)
      .def_readwrite("cubic", &HamiltonianCoefficients::cubic)
      .def_readwrite("quartic", &HamiltonianCoefficients::quartic)
      .def("is_dpa", &HamiltonianCoefficients::is_dpa);

  py::class_<EnvironmentParams>(m, "Environment")
      .def(py::init(&make_env), py::arg("kappa") = 1.0, py::arg("gamma") = 0.0)
      .def_readwrite("kappa", &EnvironmentParams::kappa)
      .def_readwrite("gamma", &EnvironmentParams::gamma)
      .def_property_readonly("kappa_bar", &EnvironmentParams::kappa_bar);

  py::class_<TruncationSettings>(m, "TruncationSettings")
      .def(py::init<>())
      .def_readwrite("dim", &TruncationSettings::dim)
      .def_readwrite("max_dim", &TruncationSettings::max_dim)
      .def_readwrite("tail_tolerance", &TruncationSettings::tail_tolerance)
      .def_readwrite("adaptive", &TruncationSettings::adaptive);

  m.def(
      "hamiltonian",
      [](const HamiltonianCoefficients& c, int dim) { return build_hamiltonian(c, HilbertSpace(dim)).matrix(); },
      py::arg("coeffs"), py::arg("dim"));

  m.def(
      "steady_state",
      [](const HamiltonianCoefficients& c, const EnvironmentParams& env, const TruncationSettings& t) {
        const SteadyStateReport rep = solve_steady_state(c, env, t);
        py::dict out;
        out["rho"] = rep.state().matrix();
        out["dim"] = rep.dim;
        out["tail"] = rep.tail;
        out["residual"] = rep.residual;
        out["warnings"] = rep.warnings;
        return out;
      },
      py::arg("coeffs"), py::arg("env") = EnvironmentParams{}, py::arg("truncation") = TruncationSettings{});

  m.def(
      "xi",
      [](const HamiltonianCoefficients& c, const EnvironmentParams& env, const TruncationSettings& t) {
        const SteadyStateReport rep = solve_steady_state(c, env, t);
        return deviation_xi(moments(rep.state())).value;
      },
      py::arg("coeffs"), py::arg("env") = EnvironmentParams{}, py::arg("truncation") = TruncationSettings{});

  m.def(
      "squeezing_level",
      [](const HamiltonianCoefficients& c, const EnvironmentParams& env, const TruncationSettings& t) {
        const SteadyStateReport rep = solve_steady_state(c, env, t);
        return OutputNoise(*rep.solver, env).squeezing().level;
      },
      py::arg("coeffs"), py::arg("env") = EnvironmentParams{}, py::arg("truncation") = TruncationSettings{});

  m.def(
      "gain_matrix",
      [](const HamiltonianCoefficients& c, const EnvironmentParams& env, double amplitude) {
        ProbeSpec p;
        p.amplitude = amplitude;
        const GainMatrixResult r = probe_gain_matrix(c, env, p);
        Eigen::Matrix2d g;
        g << r.g.g11, r.g.g12, r.g.g21, r.g.g22;
        return g;
      },
      py::arg("coeffs"), py::arg("env") = EnvironmentParams{}, py::arg("amplitude") = 1e-3);

  m.def(
      "phase_preserving_gain",
      [](const Eigen::Matrix2d& g) { return phase_preserving_gain({g(0, 0), g(0, 1), g(1, 0), g(1, 1)}); },
      py::arg("g"));

  m.def(
      "dpa_gain",
      [](double omega, double delta, Complex lambda, const EnvironmentParams& env) {
        return dpa_gain_closed_form(omega, delta, lambda, env);
      },
      py::arg("omega"), py::arg("delta"), py::arg("lambda_"), py::arg("env") = EnvironmentParams{});
  m.def("parametric_threshold", &parametric_threshold, py::arg("delta"), py::arg("env") = EnvironmentParams{});
  m.def("lossy_zero_gain_threshold", &lossy_zero_gain_threshold, py::arg("env"));
  m.def("caves_efficiency_limit", &caves_efficiency_limit, py::arg("gain"));

  m.def(
      "wigner",
      [](const Eigen::MatrixXcd& rho, double extent, int points) {
        const DensityOperator state(HilbertSpace(static_cast<int>(rho.rows())), rho);
        const WignerField f = wigner(state, QuadratureGrid::square(extent, points));
        return py::make_tuple(f.x, f.p, f.values);
      },
      py::arg("rho"), py::arg("extent") = 6.0, py::arg("points") = 201);

  m.def(
      "fixed_point_populations",
      [](double delta, double lambda, double cubic, const EnvironmentParams& env) {
        return pump_fixed_points(delta, lambda, cubic, env).unique_populations;
      },
      py::arg("delta"), py::arg("lambda_"), py::arg("cubic"), py::arg("env") = EnvironmentParams{});

  m.def("recipe_names", [] {
    std::vector<std::string> out;
    for (auto n : recipe_names()) out.emplace_back(n);
    return out;
  });
  m.def(
      "recipe", [](const std::string& name) { return config_to_json(figure_recipe(name)); }, py::arg("name"));
  m.def(
      "run_sweep_csv",
      [](const std::string& config_json) {
        const SweepConfig c = config_from_json(config_json);
        Dataset d;
        {
          py::gil_scoped_release release;
          d = run_sweep(c);
        }
        return dataset_csv(d);
      },
      py::arg("config_json"));

  m.def(
      "circuit_params",
      [](const std::string& circuit_json, double kappa_mhz) {
        return params_json(params_report(circuit_from_json(circuit_json), kappa_mhz));
      },
      py::arg("circuit_json"), py::arg("kappa_mhz") = kRecipeKappaMhz);

  m.attr("__version__") = PARAMP_VERSION;
}
