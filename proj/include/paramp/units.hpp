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

// Physical constants and SI <-> internal unit conversion. Internally every rate is an
// angular frequency measured in units of the signal-port coupling kappa.

#pragma once

#include <numbers>
#include <string_view>

namespace paramp::units {

// CODATA 2018 exact values.
inline constexpr double elementary_charge = 1.602176634e-19;  // C
inline constexpr double planck = 6.62607015e-34;              // J s
inline constexpr double reduced_planck = planck / (2.0 * std::numbers::pi);
// Reduced flux quantum phi0 = hbar / 2e.
inline constexpr double reduced_flux_quantum = reduced_planck / (2.0 * elementary_charge);
inline constexpr std::string_view constants_version = "CODATA-2018";

// f in MHz (cycles) to an angular frequency in rad/s.
double angular_from_mhz(double f_mhz);
double mhz_from_angular(double omega);

// Characteristic energies expressed as angular frequencies (rad/s).
double josephson_energy(double inductance);   // phi0^2 / L_J / hbar
double inductive_energy(double inductance);   // phi0^2 / L / hbar
double charging_energy(double capacitance);   // e^2 / (2 C) / hbar

double inductance_from_energy(double energy);
double capacitance_from_charging_energy(double energy);

}  // namespace paramp::units
