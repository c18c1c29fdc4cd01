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

// Declarative sweep configuration. Rates are in units of kappa unless a key says
// otherwise; circuit parameters are SI.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "paramp/model.hpp"
#include "paramp/response.hpp"

namespace paramp {

enum class ModelKind { dpa, jpa, sts_inductor, sts_junction, raw_coefficients };

std::string_view model_kind_name(ModelKind kind);
ModelKind parse_model_kind(std::string_view name);

enum class AxisName { lambda, delta, gamma, omega, kerr, cubic };

std::string_view axis_name(AxisName axis);
AxisName parse_axis_name(std::string_view name);

enum class Observable { xi, gain, efficiency, squeezing, wigner, analytic_gain, fixed_points };

std::string_view observable_name(Observable obs);
Observable parse_observable(std::string_view name);

enum class UnitMode { kappa, si };

UnitMode parse_unit_mode(std::string_view name);

struct Axis {
  AxisName name = AxisName::lambda;
  double start = 0.0;
  double stop = 0.0;
  int count = 1;
  // Explicit points; when nonempty they replace start/stop/count.
  std::vector<double> points;

  std::vector<double> values() const;
  int size() const;
  void validate() const;
};

struct Variant {
  std::string label;
  ModelKind model = ModelKind::dpa;
  HamiltonianCoefficients coefficients;
  // When set, cubic = cubic_per_lambda * Re(lambda) after the lambda axis is applied.
  std::optional<double> cubic_per_lambda;
  std::optional<CircuitSpec> circuit;
  // Any of "kerr", "cubic", "quartic"; forced to zero after everything else.
  std::vector<std::string> zero_terms;

  void validate() const;
};

struct EnvironmentConfig {
  double kappa_mhz = 300.0;  // kappa / 2 pi
  double gamma = 0.0;        // units of kappa

  double kappa_angular() const;  // rad/s
  void validate() const;
};

struct SolverConfig {
  TruncationSettings truncation;
  ProbeSpec probe;

  void validate() const;
};

struct WignerConfig {
  double extent = 6.0;
  int points = 201;

  void validate() const;
};

struct SweepConfig {
  std::string name = "sweep";
  std::string description;
  std::vector<Variant> variants;
  std::vector<Axis> axes;
  EnvironmentConfig environment;
  SolverConfig solver;
  std::vector<Observable> observables;
  WignerConfig wigner;
  int threads = 0;  // 0 selects the logical core count
  // Keeps wall-clock data out of the CSV so identical configs give identical bytes.
  bool deterministic = true;

  bool has(Observable obs) const;
  const Axis* axis(AxisName name) const;
  // Number of rows: variants times the product of the axis sizes.
  long long cardinality() const;
  int resolved_threads() const;
  void validate() const;
};

bool operator==(const CircuitSpec& a, const CircuitSpec& b);
bool operator==(const Axis& a, const Axis& b);
bool operator==(const Variant& a, const Variant& b);
bool operator==(const EnvironmentConfig& a, const EnvironmentConfig& b);
bool operator==(const SolverConfig& a, const SolverConfig& b);
bool operator==(const WignerConfig& a, const WignerConfig& b);
bool operator==(const SweepConfig& a, const SweepConfig& b);

std::string config_to_json(const SweepConfig& config, int indent = 2);
SweepConfig config_from_json(std::string_view text);
SweepConfig load_config(const std::string& path);

std::string circuit_to_json(const CircuitSpec& circuit, int indent = 2);
CircuitSpec circuit_from_json(std::string_view text);

// Reads PARAMP_DIM, PARAMP_MAX_DIM, PARAMP_THREADS, PARAMP_TAIL_TOL, PARAMP_KAPPA_MHZ and
// PARAMP_PROBE. Unparseable values throw InvalidArgument.
void apply_env_overrides(SweepConfig& config);

}  // namespace paramp
