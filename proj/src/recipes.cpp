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

#include "paramp/recipes.hpp"

#include <numbers>
#include <string>

#include "paramp/error.hpp"

namespace paramp {

namespace {

constexpr double kKerr = -1e-2;
// |lambda| in [0, 0.47] maps onto |Lambda| in [0, 2.36e-4].
constexpr double kFig2CubicRatio = -2.36e-4 / 0.47;
constexpr double kStarDrive = 0.45;
constexpr double kStarCubic = -2.25e-4;
constexpr double kBistableDrive = 0.472631;

Variant raw(std::string label, double kerr, std::optional<double> ratio, double lambda = 0.0, double cubic = 0.0) {
  Variant v;
  v.label = std::move(label);
  v.model = ModelKind::raw_coefficients;
  v.coefficients.kerr = kerr;
  v.coefficients.lambda = lambda;
  v.coefficients.cubic = cubic;
  v.cubic_per_lambda = ratio;
  return v;
}

Variant dpa() {
  Variant v;
  v.label = "dpa";
  v.model = ModelKind::dpa;
  return v;
}

Variant sts() {
  Variant v;
  v.label = "sts";
  v.model = ModelKind::sts_inductor;
  v.circuit = kerr_free_sts_circuit();
  return v;
}

Variant squid(std::string label, std::vector<std::string> zero_terms = {}) {
  Variant v;
  v.label = std::move(label);
  v.model = ModelKind::jpa;
  v.circuit = squeezing_jpa_circuit();
  v.zero_terms = std::move(zero_terms);
  return v;
}

double sts_cubic_ratio() {
  const double phi = circuit_coefficients(kerr_free_sts_circuit()).phi_zps;
  return -phi * phi / 6.0;
}

Axis range(AxisName name, double start, double stop, int count) {
  Axis a;
  a.name = name;
  a.start = start;
  a.stop = stop;
  a.count = count;
  return a;
}

Axis list(AxisName name, std::vector<double> points) {
  Axis a;
  a.name = name;
  a.count = static_cast<int>(points.size());
  a.points = std::move(points);
  return a;
}

SweepConfig base(std::string name, std::string description) {
  SweepConfig c;
  c.name = std::move(name);
  c.description = std::move(description);
  c.environment.kappa_mhz = kRecipeKappaMhz;
  return c;
}

SweepConfig fig2a() {
  SweepConfig c = base("fig2a", "Xi versus two-photon drive for Kerr plus cubic, Kerr only and cubic only");
  c.variants = {raw("kerr_cubic", kKerr, kFig2CubicRatio), raw("kerr_only", kKerr, std::nullopt),
                raw("cubic_only", 0.0, kFig2CubicRatio)};
  c.axes = {range(AxisName::lambda, 0.0, 0.47, 48)};
  c.observables = {Observable::xi};
  return c;
}

SweepConfig fig2b() {
  SweepConfig c = base("fig2b", "Xi versus cubic coefficient with and without Kerr at lambda = 0.45 kappa");
  c.variants = {raw("kerr", kKerr, std::nullopt, kStarDrive), raw("kerr_free", 0.0, std::nullopt, kStarDrive)};
  c.axes = {range(AxisName::cubic, 0.0, -2.5e-4, 26)};
  c.observables = {Observable::xi};
  return c;
}

SweepConfig fig2cd() {
  SweepConfig c = base("fig2cd", "Steady-state Wigner functions at lambda = 0.45 kappa");
  c.variants = {raw("kerr_free", 0.0, std::nullopt, 0.0, kStarCubic), raw("cubic_free", kKerr, std::nullopt)};
  c.axes = {list(AxisName::lambda, {kStarDrive})};
  c.observables = {Observable::xi, Observable::wigner};
  c.wigner.extent = 8.0;
  c.wigner.points = 161;
  return c;
}

SweepConfig fig3() {
  SweepConfig c = base("fig3", "Squeezing level of DPA and single-SQUID JPAs");
  c.variants = {dpa(), squid("jpa"), squid("jpa_kerr_free", {"kerr"}), squid("jpa_cubic_free", {"cubic"})};
  c.axes = {range(AxisName::lambda, 0.0, 0.47, 48)};
  c.observables = {Observable::squeezing};
  return c;
}

std::vector<Variant> gain_variants() {
  const double r = sts_cubic_ratio();
  return {dpa(), sts(), raw("jpa_k1e-3", -1e-3, r), raw("jpa_k1e-2", -1e-2, r)};
}

SweepConfig fig4a() {
  SweepConfig c = base("fig4a", "Phase-preserving gain of DPA, Kerr-free STS and JPAs");
  c.variants = gain_variants();
  c.axes = {range(AxisName::lambda, 0.0, 0.47, 48)};
  c.observables = {Observable::gain};
  return c;
}

SweepConfig fig4a_inset() {
  SweepConfig c = base("fig4a_inset", "Harmonic-balance gain versus signal detuning at lambda = 0.45 kappa");
  c.variants = {dpa(), sts()};
  c.axes = {list(AxisName::lambda, {kStarDrive}), range(AxisName::omega, -0.5, 0.5, 101)};
  c.observables = {Observable::analytic_gain};
  return c;
}

SweepConfig fig4b() {
  SweepConfig c = base("fig4b", "Phase-preserving quantum efficiency of DPA, Kerr-free STS and JPAs");
  c.variants = gain_variants();
  c.axes = {range(AxisName::lambda, 0.0, 0.47, 48)};
  c.observables = {Observable::efficiency};
  return c;
}

SweepConfig figS_stability() {
  SweepConfig c = base("figS_stability", "Number of distinct half-pump fixed points of the Kerr-free STS");
  c.variants = {raw("sts", 0.0, std::nullopt, 0.0, kStarCubic)};
  c.axes = {range(AxisName::lambda, -3.0, 3.0, 61), range(AxisName::delta, -3.0, 3.0, 61)};
  c.observables = {Observable::fixed_points};
  return c;
}

SweepConfig figS_bistable() {
  SweepConfig c = base("figS_bistable", "Half-pump fixed points and intracavity population of the Kerr-free STS");
  c.variants = {sts()};
  c.axes = {list(AxisName::lambda, {kStarDrive, kBistableDrive})};
  c.observables = {Observable::fixed_points, Observable::xi};
  return c;
}

SweepConfig figS_lossy() {
  SweepConfig c = base("figS_lossy", "Kerr-free STS gain versus drive for several internal loss rates");
  c.variants = {sts()};
  c.axes = {list(AxisName::gamma, {0.0, 0.1, 0.3, 0.5}), range(AxisName::lambda, 0.0, 0.475, 39)};
  c.observables = {Observable::gain};
  return c;
}

struct Entry {
  std::string_view name;
  SweepConfig (*make)();
};

constexpr Entry kRecipes[] = {
    {"fig2a", fig2a},
    {"fig2b", fig2b},
    {"fig2cd", fig2cd},
    {"fig3", fig3},
    {"fig4a", fig4a},
    {"fig4a_inset", fig4a_inset},
    {"fig4b", fig4b},
    {"figS_stability", figS_stability},
    {"figS_bistable", figS_bistable},
    {"figS_lossy", figS_lossy},
};

}  // namespace

CircuitSpec squeezing_jpa_circuit() {
  CircuitSpec c;
  c.topology = Topology::dc_squid;
  c.josephson_inductance = 80e-12;
  c.total_capacitance = 2e-12;
  // cos F > 0 keeps the SQUID resonant; F < 0 gives lambda > 0.
  c.static_flux = -std::numbers::pi / 4.0;
  return c;
}

CircuitSpec kerr_free_sts_circuit() {
  CircuitSpec c;
  c.topology = Topology::sts_inductor;
  c.josephson_inductance = 80e-12;
  c.linear_inductance = 100e-12;
  c.total_capacitance = 4e-12;
  c.static_flux = -std::numbers::pi / 2.0;
  return c;
}

std::vector<std::string_view> recipe_names() {
  std::vector<std::string_view> out;
  for (const auto& e : kRecipes) out.push_back(e.name);
  return out;
}

SweepConfig figure_recipe(std::string_view name) {
  for (const auto& e : kRecipes) {
    if (e.name == name) return e.make();
  }
  throw InvalidArgument("unknown figure '" + std::string(name) + "'");
}

}  // namespace paramp
