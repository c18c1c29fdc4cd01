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

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "paramp/config.hpp"
#include "paramp/error.hpp"
#include "paramp/grid_io.hpp"
#include "paramp/recipes.hpp"
#include "paramp/sweep.hpp"

using namespace paramp;

namespace {

Axis lambda_axis(double start, double stop, int count) {
  Axis a;
  a.name = AxisName::lambda;
  a.start = start;
  a.stop = stop;
  a.count = count;
  return a;
}

Variant raw(const std::string& label, double kerr, double cubic = 0.0) {
  Variant v;
  v.label = label;
  v.model = ModelKind::raw_coefficients;
  v.coefficients.kerr = kerr;
  v.coefficients.cubic = cubic;
  return v;
}

SweepConfig single_dpa_point() {
  SweepConfig c;
  c.name = "single";
  Variant v;
  v.label = "dpa";
  c.variants.push_back(v);
  c.axes.push_back(lambda_axis(0.0, 0.0, 1));
  c.observables = {Observable::xi, Observable::gain, Observable::efficiency, Observable::squeezing};
  c.solver.truncation.dim = 20;
  c.threads = 1;
  return c;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_SUITE("sweep") {
  TEST_CASE("single DPA point at zero drive") {
    const Dataset d = run_sweep(single_dpa_point());
    REQUIRE(d.records.size() == 1);
    CHECK(d.records[0].status == "ok");
    CHECK(d.value(0, "gain") == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(d.value(0, "efficiency") == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(d.value(0, "xi") == 0.0);
    CHECK(d.value(0, "squeezing") == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(d.value(0, "dim") >= 20.0);
    CHECK(std::isfinite(d.value(0, "residual")));
    CHECK(std::isfinite(d.value(0, "probe_amplitude")));
  }

  TEST_CASE("row count equals grid cardinality") {
    SweepConfig c;
    c.name = "grid";
    c.variants = {raw("a", -0.01), raw("b", 0.0, -1e-4)};
    c.axes.push_back(lambda_axis(0.0, 0.3, 3));
    Axis d;
    d.name = AxisName::delta;
    d.points = {-0.1, 0.1};
    c.axes.push_back(d);
    c.observables = {Observable::xi};
    c.solver.truncation.dim = 30;
    CHECK(c.cardinality() == 12);
    const auto pts = sweep_points(c);
    REQUIRE(pts.size() == 12);
    // Variants outermost, last axis fastest.
    CHECK(pts[0].variant == 0);
    CHECK(pts[1].coeffs.delta == 0.1);
    CHECK(pts[2].coeffs.lambda.real() == doctest::Approx(0.15));
    CHECK(pts[6].variant == 1);
    const Dataset data = run_sweep(c);
    CHECK(data.records.size() == 12);
    for (std::size_t i = 0; i < data.records.size(); ++i) {
      CHECK(data.records[i].index == static_cast<long long>(i));
      CHECK(data.records[i].status == "ok");
      CHECK(std::isfinite(data.value(i, "dim")));
      CHECK(std::isfinite(data.value(i, "trace_error")));
    }
  }

  TEST_CASE("cubic ratio follows the drive and zero terms apply last") {
    SweepConfig c;
    Variant v = raw("ratio", -0.01);
    v.cubic_per_lambda = -5e-4;
    v.zero_terms = {"kerr"};
    c.variants = {v};
    c.axes.push_back(lambda_axis(0.2, 0.4, 2));
    c.observables = {Observable::xi};
    const auto pts = sweep_points(c);
    CHECK(pts[1].coeffs.cubic == doctest::Approx(-2e-4));
    CHECK(pts[1].coeffs.kerr == 0.0);
    CHECK(variant_cubic_ratio(v).value() == -5e-4);
  }

  TEST_CASE("circuit variants resolve to units of kappa") {
    Variant v;
    v.label = "sts";
    v.model = ModelKind::sts_inductor;
    v.circuit = kerr_free_sts_circuit();
    const HamiltonianCoefficients k = variant_coefficients(v, EnvironmentConfig{});
    CHECK(k.kerr == 0.0);
    const double phi = circuit_coefficients(*v.circuit).phi_zps;
    CHECK(variant_cubic_ratio(v).value() == doctest::Approx(-phi * phi / 6.0));
  }

  TEST_CASE("point failures are recorded in the row") {
    // A lossy amplifier deamplifies at weak drive, where the added noise is undefined.
    SweepConfig c;
    c.name = "lossy";
    Variant v;
    v.label = "dpa";
    c.variants = {v};
    c.axes.push_back(lambda_axis(0.05, 0.5, 2));
    c.environment.gamma = 0.3;
    c.observables = {Observable::gain, Observable::efficiency};
    c.solver.truncation.dim = 20;
    const Dataset d = run_sweep(c);
    REQUIRE(d.records.size() == 2);
    CHECK(d.records[0].status == "invalid_argument");
    CHECK_FALSE(d.records[0].message.empty());
    CHECK(d.value(0, "gain") < 1.0);
    CHECK(d.records[1].status == "ok");
    CHECK(d.value(1, "efficiency") > 0.0);
  }

  TEST_CASE("output is byte-identical across thread counts and reruns") {
    SweepConfig c;
    c.name = "det";
    c.variants = {raw("kerr", -0.01), raw("cubic", 0.0, -2e-4)};
    c.axes.push_back(lambda_axis(0.0, 0.3, 4));
    c.observables = {Observable::xi, Observable::gain};
    c.solver.truncation.dim = 30;
    c.threads = 1;
    const std::string one = dataset_csv(run_sweep(c));
    c.threads = 4;
    const std::string four = dataset_csv(run_sweep(c));
    const std::string again = dataset_csv(run_sweep(c));
    CHECK(one == four);
    CHECK(four == again);
    CHECK(one.find("started") == std::string::npos);
  }

  TEST_CASE("written files") {
    SweepConfig c = single_dpa_point();
    c.observables = {Observable::wigner};
    c.wigner.points = 21;
    const Dataset d = run_sweep(c);
    const auto dir = std::filesystem::temp_directory_path() / "paramp_sweep_test";
    std::filesystem::remove_all(dir);
    const WrittenFiles w = write_dataset(d, dir.string());
    CHECK(std::filesystem::exists(w.csv));
    CHECK(std::filesystem::exists(w.metadata));
    REQUIRE(w.grids.size() == 1);
    const Grid2D g = read_grid(w.grids[0]);
    CHECK(g.rows == 21);
    CHECK(slurp(w.csv) == dataset_csv(d));
    CHECK(slurp(w.metadata).find("finished_utc") != std::string::npos);
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("CSV formatting") {
    CHECK(format_number(0.1) == "0.1");
    CHECK(format_number(std::nan("")) == "nan");
    CHECK(format_number(-INFINITY) == "-inf");
    const Dataset d = run_sweep(single_dpa_point());
    const std::string csv = dataset_csv(d);
    CHECK(csv.rfind("# ", 0) == 0);
    CHECK(csv.find("\nindex,variant,model,") != std::string::npos);
  }
}
