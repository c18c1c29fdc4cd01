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

// Rotating-frame Hamiltonians and their circuit-derived coefficients.

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "paramp/fock.hpp"

namespace paramp {

// H = delta a^dag a + (lambda/2) a^dag^2 + (lambda*/2) a^2 + kerr a^dag^2 a^2
//     + cubic (a^dag^3 a + a^dag a^3) + quartic (a^dag^4 + a^4)
struct HamiltonianCoefficients {
  double delta = 0.0;
  Complex lambda = 0.0;
  double kerr = 0.0;
  double cubic = 0.0;
  double quartic = 0.0;

  void validate() const;
  HamiltonianCoefficients scaled(double factor) const;
  bool is_dpa() const noexcept { return kerr == 0.0 && cubic == 0.0 && quartic == 0.0; }
};

Operator build_hamiltonian(const HamiltonianCoefficients& coeffs, HilbertSpace space);

// H_probe = eps a^dag + eps* a.
Operator probe_hamiltonian(Complex eps, HilbertSpace space);

enum class Topology { dc_squid, sts_inductor, sts_junction };

std::string_view topology_name(Topology t);
Topology parse_topology(std::string_view name);

// SI inputs: henries, farads, radians, rad/s.
struct CircuitSpec {
  Topology topology = Topology::sts_inductor;
  double josephson_inductance = 80e-12;
  double linear_inductance = 100e-12;
  double total_capacitance = 4e-12;
  double static_flux = 0.0;
  double modulation_depth = 0.0;
  std::optional<double> pump_frequency;

  void validate() const;
};

struct JosephsonFourierEnergies {
  double e0 = 0.0;
  double e1 = 0.0;
  double e2 = 0.0;
};

enum class BesselMode { exact, small_depth };

JosephsonFourierEnergies josephson_fourier_energies(double ej, double flux, double depth,
                                                    BesselMode mode = BesselMode::exact);

// Everything in rad/s unless noted.
struct CircuitCoefficients {
  HamiltonianCoefficients coeffs;
  double bare_detuning = 0.0;  // omega_a - omega_p / 2
  double kerr_shift = 0.0;     // 2 K, included in coeffs.delta
  double omega_a = 0.0;
  double pump_frequency = 0.0;
  double phi_zps = 0.0;  // Phi_zps / phi0, dimensionless
  double ej = 0.0;
  double ec = 0.0;
  double el = 0.0;
  JosephsonFourierEnergies fourier;
  bool kerr_free = false;

  // Rates divided by the reference (typically kappa in rad/s).
  HamiltonianCoefficients in_units_of(double reference) const;
};

CircuitCoefficients sts_inductor_coefficients(const CircuitSpec& circuit, BesselMode mode = BesselMode::exact);
CircuitCoefficients squid_coefficients(const CircuitSpec& circuit, BesselMode mode = BesselMode::exact);
CircuitCoefficients sts_junction_coefficients(const CircuitSpec& circuit, BesselMode mode = BesselMode::exact);
CircuitCoefficients circuit_coefficients(const CircuitSpec& circuit, BesselMode mode = BesselMode::exact);

// Single-line Kerr estimate -E_C cos F / 2 for comparison with the full expression.
double approximate_kerr(double ec, double flux);

// Modulation depth giving |lambda| = target (rad/s) for the given circuit; the circuit's
// own modulation depth is ignored.
double modulation_depth_for_drive(const CircuitSpec& circuit, double target_lambda,
                                  BesselMode mode = BesselMode::exact);

// Circuit energies in units of a reference rate.
struct InternalEnergies {
  double ej = 0.0;
  double ec = 0.0;
  double el = 0.0;  // zero for topologies without a linear inductor
  double pump = 0.0;
  double reference = 0.0;  // rad/s
};

InternalEnergies si_to_internal(const CircuitSpec& circuit, double reference);
// Rebuilds the SI circuit from internal energies; topology, flux and depth come from the template.
CircuitSpec internal_to_si(const InternalEnergies& energies, const CircuitSpec& templ);

}  // namespace paramp
