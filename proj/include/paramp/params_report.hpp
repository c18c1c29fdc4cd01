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

// Coefficient report for a circuit, used by `paramp params`.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "paramp/config.hpp"
#include "paramp/model.hpp"

namespace paramp {

struct ParamsReport {
  CircuitSpec circuit;
  double kappa_mhz = 300.0;
  std::optional<CircuitCoefficients> coefficients;  // empty when the bias admits no resonance
  bool kerr_free = false;
  std::vector<std::string> warnings;
};

// Below this cos F a DC SQUID is flagged as approaching the capacitor-only limit.
inline constexpr double kSquidBiasWarning = 0.1;

// Invalid circuit parameters throw; an unusable bias is reported as a warning.
ParamsReport params_report(const CircuitSpec& circuit, double kappa_mhz);

std::string params_text(const ParamsReport& report, UnitMode units);
std::string params_json(const ParamsReport& report);

}  // namespace paramp
