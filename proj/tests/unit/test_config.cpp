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
#include <cstdlib>
#include <filesystem>
#include <numbers>
#include <string>

#include "paramp/config.hpp"
#include "paramp/error.hpp"
#include "paramp/grid_io.hpp"
#include "paramp/params_report.hpp"
#include "paramp/recipes.hpp"
#include "paramp/wigner.hpp"

using namespace paramp;

namespace {

SweepConfig minimal() {
  SweepConfig c;
  c.name = "minimal";
  Variant v;
  v.label = "dpa";
  c.variants.push_back(v);
  Axis a;
  a.name = AxisName::lambda;
  a.start = 0.0;
  a.stop = 0.4;
  a.count = 5;
  c.axes.push_back(a);
  c.observables = {Observable::xi};
  return c;
}

struct ScopedEnv {
  const char* name;
  ScopedEnv(const char* n, const char* value) : name(n) { setenv(n, value, 1); }
  ~ScopedEnv() { unsetenv(name); }
};

}  // namespace

TEST_SUITE("config") {
  TEST_CASE("enum names round trip") {
    for (auto k : {ModelKind::dpa, ModelKind::jpa, ModelKind::sts_inductor, ModelKind::sts_junction,
                   ModelKind::raw_coefficients})
      CHECK(parse_model_kind(model_kind_name(k)) == k);
    for (auto a : {AxisName::lambda, AxisName::delta, AxisName::gamma, AxisName::omega, AxisName::kerr, AxisName::cubic})
      CHECK(parse_axis_name(axis_name(a)) == a);
    for (auto o : {Observable::xi, Observable::gain, Observable::efficiency, Observable::squeezing, Observable::wigner,
                   Observable::analytic_gain, Observable::fixed_points})
      CHECK(parse_observable(observable_name(o)) == o);
    CHECK_THROWS_AS(parse_observable("entropy"), InvalidArgument);
  }

  TEST_CASE("axis values") {
    Axis a;
    a.start = 0.0;
    a.stop = 0.47;
    a.count = 48;
    const auto v = a.values();
    CHECK(v.size() == 48);
    CHECK(v.front() == 0.0);
    CHECK(v.back() == doctest::Approx(0.47).epsilon(1e-15));
    a.points = {0.1, 0.2};
    CHECK(a.size() == 2);
    a.count = 0;
    a.points.clear();
    CHECK_THROWS_AS(a.validate(), InvalidArgument);
  }

  TEST_CASE("every recipe survives a JSON round trip") {
    for (auto name : recipe_names()) {
      CAPTURE(name);
      const SweepConfig c = figure_recipe(name);
      CHECK_NOTHROW(c.validate());
      const SweepConfig back = config_from_json(config_to_json(c));
      CHECK(back == c);
      CHECK(config_to_json(back) == config_to_json(c));
    }
    CHECK_THROWS_AS(figure_recipe("fig9"), InvalidArgument);
  }

  TEST_CASE("complex drive is serialized with both parts") {
    SweepConfig c = minimal();
    c.variants[0].coefficients.lambda = Complex(0.1, -0.2);
    const SweepConfig back = config_from_json(config_to_json(c));
    CHECK(back.variants[0].coefficients.lambda == Complex(0.1, -0.2));
  }

  TEST_CASE("validation errors") {
    SweepConfig c = minimal();
    c.observables.clear();
    CHECK_THROWS_AS(c.validate(), InvalidArgument);
    c = minimal();
    c.axes.push_back(c.axes[0]);
    CHECK_THROWS_AS(c.validate(), InvalidArgument);
    c = minimal();
    c.variants.push_back(c.variants[0]);
    CHECK_THROWS_AS(c.validate(), InvalidArgument);
    c = minimal();
    c.environment.gamma = -0.1;
    CHECK_THROWS_AS(c.validate(), InvalidArgument);
    c = minimal();
    c.variants[0].coefficients.kerr = 0.01;
    CHECK_THROWS_AS(c.validate(), InvalidArgument);
    c = minimal();
    c.variants[0].model = ModelKind::sts_inductor;
    CHECK_THROWS_AS(c.validate(), InvalidArgument);
    c = minimal();
    c.variants[0].zero_terms = {"delta"};
    CHECK_THROWS_AS(c.validate(), InvalidArgument);
  }

  TEST_CASE("parser rejects malformed input") {
    CHECK_THROWS_AS(config_from_json("{"), InvalidArgument);
    CHECK_THROWS_AS(config_from_json(R"({"name": "x", "bogus": 1})"), InvalidArgument);
    CHECK_THROWS_AS(config_from_json(R"({"name": "x", "variants": [], "axes": [], "observables": []})"),
                    InvalidArgument);
    CHECK_THROWS_AS(load_config("/nonexistent/config.json"), InvalidArgument);
  }

  TEST_CASE("environment overrides") {
    SweepConfig c = minimal();
    {
      ScopedEnv dim("PARAMP_DIM", "300");
      ScopedEnv threads("PARAMP_THREADS", "2");
      ScopedEnv kappa("PARAMP_KAPPA_MHZ", "150");
      apply_env_overrides(c);
    }
    CHECK(c.solver.truncation.dim == 300);
    CHECK(c.solver.truncation.max_dim >= 300);
    CHECK(c.threads == 2);
    CHECK(c.environment.kappa_mhz == 150.0);
    ScopedEnv bad("PARAMP_DIM", "12abc");
    CHECK_THROWS_AS(apply_env_overrides(c), InvalidArgument);
  }

  TEST_CASE("recipe contents") {
    const SweepConfig fig3 = figure_recipe("fig3");
    CHECK(fig3.environment.kappa_mhz == 300.0);
    bool has_squid = false;
    for (const Variant& v : fig3.variants) {
      if (v.circuit && v.circuit->topology == Topology::dc_squid) {
        has_squid = true;
        CHECK(v.circuit->josephson_inductance == doctest::Approx(80e-12));
        CHECK(v.circuit->total_capacitance == doctest::Approx(2e-12));
      }
    }
    CHECK(has_squid);
    const SweepConfig fig4a = figure_recipe("fig4a");
    CHECK(fig4a.variants.size() == 4);
    const Axis* l = fig4a.axis(AxisName::lambda);
    REQUIRE(l != nullptr);
    for (double v : l->values()) {
      CHECK(v >= 0.0);
      CHECK(v < 0.5);
    }
    const SweepConfig fig2cd = figure_recipe("fig2cd");
    CHECK(fig2cd.has(Observable::wigner));
    CHECK(fig2cd.axis(AxisName::lambda)->values() == std::vector<double>{0.45});
  }
}

TEST_SUITE("config") {
  TEST_CASE("PGRD round trip") {
    Grid2D g;
    g.rows = 2;
    g.cols = 3;
    g.x_min = -1.0;
    g.x_max = 1.0;
    g.y_min = -2.0;
    g.y_max = 2.0;
    g.values = {1.0, -2.5, 3.25, 0.0, 1e-300, -7.0};
    const std::string bytes = encode_grid(g);
    CHECK(bytes.size() == 4 + 8 + 32 + 48);
    CHECK(bytes.substr(0, 4) == "PGRD");
    const Grid2D back = decode_grid(bytes);
    CHECK(back.values == g.values);
    CHECK(back.at(1, 2) == -7.0);
    const auto path = (std::filesystem::temp_directory_path() / "paramp_test.pgrd").string();
    write_grid(path, g);
    CHECK(read_grid(path).values == g.values);
    std::filesystem::remove(path);
    CHECK_THROWS_AS(decode_grid("PGRX"), InvalidArgument);
    CHECK_THROWS_AS(decode_grid(bytes.substr(0, bytes.size() - 1)), InvalidArgument);
  }

  TEST_CASE("Wigner grids are stored with momentum rows") {
    const WignerField f = wigner(vacuum_state(HilbertSpace(4)), QuadratureGrid::uniform(-2.0, 2.0, 5, -1.0, 1.0, 3));
    const Grid2D g = grid_from_wigner(f);
    CHECK(g.rows == 3);
    CHECK(g.cols == 5);
    CHECK(g.x_min == -2.0);
    CHECK(g.y_max == 1.0);
    CHECK(g.at(1, 2) == f.values(1, 2));
  }

  TEST_CASE("params report for the Kerr-free inductor") {
    const ParamsReport r = params_report(kerr_free_sts_circuit(), 300.0);
    CHECK(r.kerr_free);
    CHECK(params_text(r, UnitMode::kappa).find("Kerr-free: true") != std::string::npos);
    CHECK(params_json(r).find("\"kerr_free\": true") != std::string::npos);
  }

  TEST_CASE("params report for the junction variant") {
    CircuitSpec c = kerr_free_sts_circuit();
    c.topology = Topology::sts_junction;
    const ParamsReport r = params_report(c, 300.0);
    CHECK_FALSE(r.kerr_free);
    REQUIRE(r.coefficients);
    CHECK(r.coefficients->coeffs.kerr == doctest::Approx(-r.coefficients->ec / 2.0));
    CHECK(params_text(r, UnitMode::si).find("Kerr-free: false") != std::string::npos);
  }

  TEST_CASE("params report warns on a SQUID biased near a half flux quantum") {
    CircuitSpec c = squeezing_jpa_circuit();
    c.static_flux = 1.55;
    const ParamsReport r = params_report(c, 300.0);
    REQUIRE_FALSE(r.warnings.empty());
    CHECK(r.warnings[0].find("invalid bias") != std::string::npos);
    c.static_flux = std::numbers::pi;
    CHECK_FALSE(params_report(c, 300.0).coefficients.has_value());
    CHECK_THROWS_AS(params_report(c, -1.0), InvalidArgument);
  }

  TEST_CASE("circuit JSON round trip") {
    CircuitSpec c = squeezing_jpa_circuit();
    c.pump_frequency = 6.0e10;
    CHECK(circuit_from_json(circuit_to_json(c)) == c);
    CHECK_THROWS_AS(circuit_from_json(R"({"topology": "dc_squid", "colour": 1})"), InvalidArgument);
  }
}
