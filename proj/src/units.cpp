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

#include "paramp/units.hpp"

#include <cmath>

#include "paramp/error.hpp"

namespace paramp::units {

namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw InvalidArgument(std::string(what) + " must be positive and finite");
}

}  // namespace

double angular_from_mhz(double f_mhz) { return 2.0 * std::numbers::pi * f_mhz * 1e6; }

double mhz_from_angular(double omega) { return omega / (2.0 * std::numbers::pi * 1e6); }

double josephson_energy(double inductance) {
  require_positive(inductance, "Josephson inductance");
  return reduced_flux_quantum * reduced_flux_quantum / inductance / reduced_planck;
}

double inductive_energy(double inductance) {
  require_positive(inductance, "linear inductance");
  return reduced_flux_quantum * reduced_flux_quantum / inductance / reduced_planck;
}

double charging_energy(double capacitance) {
  require_positive(capacitance, "capacitance");
  return elementary_charge * elementary_charge / (2.0 * capacitance) / reduced_planck;
}

double inductance_from_energy(double energy) {
  require_positive(energy, "inductive energy");
  return reduced_flux_quantum * reduced_flux_quantum / energy / reduced_planck;
}

double capacitance_from_charging_energy(double energy) {
  require_positive(energy, "charging energy");
  return elementary_charge * elementary_charge / (2.0 * energy) / reduced_planck;
}

}  // namespace paramp::units
