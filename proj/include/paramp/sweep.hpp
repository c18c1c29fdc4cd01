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

// Sweep runner and dataset persistence.

#pragma once

#include <atomic>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "paramp/config.hpp"
#include "paramp/lindblad.hpp"
#include "paramp/wigner.hpp"

namespace paramp {

// One grid point after the variant, axes and environment have been combined.
struct SweepPoint {
  long long index = 0;
  std::size_t variant = 0;
  HamiltonianCoefficients coeffs;  // units of kappa
  EnvironmentParams env;
  double omega = 0.0;  // signal detuning, units of kappa
};

struct Record {
  long long index = 0;
  std::string variant;
  ModelKind model = ModelKind::dpa;
  // Aligned with Dataset::columns; NaN where a value was not produced.
  std::vector<double> values;
  std::string status = "ok";  // "ok" or an error code name
  std::string message;
  std::vector<std::string> warnings;
  std::optional<WignerField> wigner;
};

struct Dataset {
  SweepConfig config;
  std::string code_version;
  std::string constants_version;
  std::string started_utc;
  std::string finished_utc;
  std::vector<std::string> columns;
  std::vector<Record> records;

  int column(const std::string& name) const;  // -1 when absent
  double value(std::size_t row, const std::string& name) const;
};

// Numeric column names for a config, in output order.
std::vector<std::string> dataset_columns(const SweepConfig& config);

// Row order: variants outermost, then axes as listed with the last axis fastest.
std::vector<SweepPoint> sweep_points(const SweepConfig& config);

// Coefficients of a variant at its own defaults (before any axis), in units of kappa.
HamiltonianCoefficients variant_coefficients(const Variant& variant, const EnvironmentConfig& env);

// Lambda-proportional cubic term implied by a variant, if any.
std::optional<double> variant_cubic_ratio(const Variant& variant);

Record evaluate_point(const SweepConfig& config, const SweepPoint& point, const std::vector<std::string>& columns);

struct SweepProgress {
  std::atomic<long long> done{0};
  long long total = 0;
};

// Validates the config before any compute; per-point failures are recorded in-row.
Dataset run_sweep(const SweepConfig& config, SweepProgress* progress = nullptr);

std::string format_number(double v);  // %.12g, "nan", "inf", "-inf"

// CSV with a leading "# " JSON metadata block. Timestamps appear only when the config is
// not deterministic.
std::string dataset_csv(const Dataset& data);
std::string dataset_metadata_json(const Dataset& data, bool with_timestamps);

struct WrittenFiles {
  std::string csv;
  std::string metadata;
  std::vector<std::string> grids;
};

// File name of the Wigner grid for a row: <config name>_<index>.pgrd.
std::string wigner_file_name(const Dataset& data, const Record& record);

// Writes <name>.csv, <name>.meta.json and one grid per Wigner field into the directory.
WrittenFiles write_dataset(const Dataset& data, const std::string& directory);

std::string utc_timestamp();

}  // namespace paramp
