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

// Pre-filled sweep configurations for the published figures.

#pragma once

#include <string_view>
#include <vector>

#include "paramp/config.hpp"

namespace paramp {

inline constexpr double kRecipeKappaMhz = 300.0;

// Single-SQUID JPA of the squeezing figure: C = 2 pF, L_J = 80 pH.
CircuitSpec squeezing_jpa_circuit();
// Kerr-free STS of the gain figure: C = 4 pF, L_J = 80 pH, L = 100 pH, F = -pi/2.
CircuitSpec kerr_free_sts_circuit();

std::vector<std::string_view> recipe_names();
SweepConfig figure_recipe(std::string_view name);

}  // namespace paramp
