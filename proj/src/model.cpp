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

#include "paramp/model.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "paramp/error.hpp"
#include "paramp/units.hpp"

namespace paramp {

namespace {

// cos and sin with the rounding residue of odd/even multiples of pi/2 removed, so that
// F = -pi/2 entered as a double gives an exactly vanishing cos F.
double flux_cos(double f) {
  const double c = std::cos(f);
  return std::abs(c) < 8.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(f)) ? 0.0 : c;
}

double flux_sin(double f) {
  const double s = std::sin(f);
  return std::abs(s) < 8.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(f)) ? 0.0 : s;
}

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) throw InvalidArgument(std::string(name) + " must be finite");
}

// Resolves the pump frequency and fills the detuning bookkeeping.
void set_detuning(CircuitCoefficients& out, const CircuitSpec& circuit) {
  out.kerr_shift = 2.0 * out.coeffs.kerr;
  out.pump_frequency = circuit.pump_frequency ? *circuit.pump_frequency : 2.0 * (out.omega_a + out.kerr_shift);
  out.bare_detuning = out.omega_a - 0.5 * out.pump_frequency;
  out.coeffs.delta = out.bare_detuning + out.kerr_shift;
}

void set_kerr_free(CircuitCoefficients& out) {
  out.kerr_free = std::abs(out.coeffs.kerr) <= 1e-12 * out.omega_a;
}

}  // namespace

void HamiltonianCoefficients::validate() const {
  require_finite(delta, "delta");
  require_finite(lambda.real(), "lambda");
  require_finite(lambda.imag(), "lambda");
  require_finite(kerr, "kerr");
  require_finite(cubic, "cubic");
  require_finite(quartic, "quartic");
}

HamiltonianCoefficients HamiltonianCoefficients::scaled(double factor) const {
  return {delta * factor, lambda * factor, kerr * factor, cubic * factor, quartic * factor};
}

Operator build_hamiltonian(const HamiltonianCoefficients& c, HilbertSpace space) {
  c.validate();
  const int d = space.dim();
  Matrix h = Matrix::Zero(d, d);
  for (int n = 0; n < d; ++n) {
    const double dn = n;
    h(n, n) = c.delta * dn + c.kerr * dn * (dn - 1.0);
    if (n + 2 < d) {
      const double s2 = std::sqrt((dn + 1.0) * (dn + 2.0));
      const Complex up = 0.5 * c.lambda * s2 + c.cubic * dn * s2;
      h(n + 2, n) = up;
      h(n, n + 2) = std::conj(up);
    }
    if (n + 4 < d) {
      const double s4 = std::sqrt((dn + 1.0) * (dn + 2.0) * (dn + 3.0) * (dn + 4.0));
      h(n + 4, n) = c.quartic * s4;
      h(n, n + 4) = c.quartic * s4;
    }
  }
  return Operator(space, std::move(h));
}

Operator probe_hamiltonian(Complex eps, HilbertSpace space) {
  const Matrix a = annihilation(space).matrix();
  return Operator(space, eps * a.adjoint() + std::conj(eps) * a);
}

std::string_view topology_name(Topology t) {
  switch (t) {
    case Topology::dc_squid: return "dc_squid";
    case Topology::sts_inductor: return "sts_inductor";
    case Topology::sts_junction: return "sts_junction";
  }
  return "unknown";
}

Topology parse_topology(std::string_view name) {
  if (name == "dc_squid" || name == "DC_SQUID") return Topology::dc_squid;
  if (name == "sts_inductor" || name == "STS_INDUCTOR") return Topology::sts_inductor;
  if (name == "sts_junction" || name == "STS_JUNCTION") return Topology::sts_junction;
  throw InvalidArgument("unknown topology '" + std::string(name) + "'");
}

void CircuitSpec::validate() const {
  if (!(josephson_inductance > 0.0) || !std::isfinite(josephson_inductance))
    throw InvalidArgument("josephson_inductance must be positive");
  if (topology == Topology::sts_inductor && (!(linear_inductance > 0.0) || !std::isfinite(linear_inductance)))
    throw InvalidArgument("linear_inductance must be positive for sts_inductor");
  if (!(total_capacitance > 0.0) || !std::isfinite(total_capacitance))
    throw InvalidArgument("total_capacitance must be positive");
  require_finite(static_flux, "static_flux");
  if (!(modulation_depth >= 0.0 && modulation_depth < 1.0))
    throw InvalidArgument("modulation_depth must lie in [0, 1)");
  if (pump_frequency && (!(*pump_frequency > 0.0) || !std::isfinite(*pump_frequency)))
    throw InvalidArgument("pump_frequency must be positive");
}

JosephsonFourierEnergies josephson_fourier_energies(double ej, double flux, double depth, BesselMode mode) {
  if (!(depth >= 0.0)) throw InvalidArgument("modulation depth must be non-negative");
  require_finite(ej, "E_J");
  require_finite(flux, "static flux");
  const double c = flux_cos(flux);
  const double s = flux_sin(flux);
  if (mode == BesselMode::small_depth) {
    return {ej * c, -ej * depth * s, -ej * depth * depth * c / 4.0};
  }
  return {ej * std::cyl_bessel_j(0.0, depth) * c, -2.0 * ej * std::cyl_bessel_j(1.0, depth) * s,
          -2.0 * ej * std::cyl_bessel_j(2.0, depth) * c};
}

HamiltonianCoefficients CircuitCoefficients::in_units_of(double reference) const {
  if (!(reference > 0.0)) throw InvalidArgument("reference rate must be positive");
  return coeffs.scaled(1.0 / reference);
}

CircuitCoefficients sts_inductor_coefficients(const CircuitSpec& circuit, BesselMode mode) {
  if (circuit.topology != Topology::sts_inductor) throw InvalidArgument("sts_inductor_coefficients needs sts_inductor");
  circuit.validate();
  CircuitCoefficients out;
  out.ej = units::josephson_energy(circuit.josephson_inductance);
  out.ec = units::charging_energy(circuit.total_capacitance);
  out.el = units::inductive_energy(circuit.linear_inductance);
  const double stiffness = out.el + 2.0 * out.ej * flux_cos(circuit.static_flux);
  if (!(stiffness > 0.0)) throw InvalidArgument("imaginary resonance: E_L + 2 E_J cos F <= 0");
  out.omega_a = std::sqrt(8.0 * out.ec * stiffness);
  const double p2 = 4.0 * out.ec / out.omega_a;
  out.phi_zps = std::sqrt(p2);
  out.fourier = josephson_fourier_energies(out.ej, circuit.static_flux, circuit.modulation_depth, mode);
  const auto& f = out.fourier;
  out.coeffs.lambda = f.e1 * p2;
  out.coeffs.kerr = -f.e0 * p2 * p2 / 2.0;
  out.coeffs.cubic = -f.e1 * p2 * p2 / 6.0;
  out.coeffs.quartic = -f.e2 * p2 * p2 / 24.0;
  set_detuning(out, circuit);
  set_kerr_free(out);
  return out;
}

CircuitCoefficients squid_coefficients(const CircuitSpec& circuit, BesselMode mode) {
  if (circuit.topology != Topology::dc_squid) throw InvalidArgument("squid_coefficients needs dc_squid");
  circuit.validate();
  const double c = flux_cos(circuit.static_flux);
  if (!(c > 0.0)) throw InvalidArgument("invalid bias: cos F <= 0 leaves the SQUID without a resonance");
  CircuitCoefficients out;
  out.ej = units::josephson_energy(circuit.josephson_inductance);
  out.ec = units::charging_energy(circuit.total_capacitance);
  out.omega_a = std::sqrt(8.0 * out.ec * 2.0 * out.ej * c);
  const double p2 = 4.0 * out.ec / out.omega_a;
  out.phi_zps = std::sqrt(p2);
  out.fourier = josephson_fourier_energies(out.ej, circuit.static_flux, circuit.modulation_depth, mode);
  const auto& f = out.fourier;
  out.coeffs.lambda = f.e1 * p2 / 2.0;
  out.coeffs.kerr = -f.e0 * p2 * p2 / 4.0;
  out.coeffs.cubic = -f.e1 * p2 * p2 / 12.0;
  out.coeffs.quartic = -f.e2 * p2 * p2 / 48.0;
  set_detuning(out, circuit);
  set_kerr_free(out);
  return out;
}

CircuitCoefficients sts_junction_coefficients(const CircuitSpec& circuit, BesselMode mode) {
  if (circuit.topology != Topology::sts_junction) throw InvalidArgument("sts_junction_coefficients needs sts_junction");
  circuit.validate();
  CircuitCoefficients out;
  out.ej = units::josephson_energy(circuit.josephson_inductance);
  out.ec = units::charging_energy(circuit.total_capacitance);
  out.fourier = josephson_fourier_energies(out.ej, circuit.static_flux, circuit.modulation_depth, mode);
  const auto& f = out.fourier;
  // Central junction plus the flux-tuned pair.
  const double stiffness = out.ej + 2.0 * f.e0;
  if (!(stiffness > 0.0)) throw InvalidArgument("imaginary resonance: E_J + 2 E_J^(0) <= 0");
  out.omega_a = std::sqrt(8.0 * out.ec * stiffness);
  const double p2 = 4.0 * out.ec / out.omega_a;
  out.phi_zps = std::sqrt(p2);
  out.coeffs.lambda = f.e1 * p2;
  out.coeffs.kerr = -out.ec / 2.0;
  out.coeffs.cubic = -f.e1 * p2 * p2 / 6.0;
  out.coeffs.quartic = -f.e2 * p2 * p2 / 24.0;
  set_detuning(out, circuit);
  set_kerr_free(out);
  return out;
}

CircuitCoefficients circuit_coefficients(const CircuitSpec& circuit, BesselMode mode) {
  switch (circuit.topology) {
    case Topology::dc_squid: return squid_coefficients(circuit, mode);
    case Topology::sts_inductor: return sts_inductor_coefficients(circuit, mode);
    case Topology::sts_junction: return sts_junction_coefficients(circuit, mode);
  }
  throw InvalidArgument("unknown topology");
}

double approximate_kerr(double ec, double flux) { return -ec * flux_cos(flux) / 2.0; }

double modulation_depth_for_drive(const CircuitSpec& circuit, double target_lambda, BesselMode mode) {
  const double target = std::abs(target_lambda);
  if (!std::isfinite(target)) throw InvalidArgument("target drive must be finite");
  CircuitSpec probe = circuit;
  probe.modulation_depth = 0.0;
  if (target == 0.0) return 0.0;
  auto drive = [&](double depth) {
    probe.modulation_depth = depth;
    return std::abs(circuit_coefficients(probe, mode).coeffs.lambda);
  };
  // |lambda| grows monotonically with depth on [0, 1) for every topology.
  double lo = 0.0;
  double hi = 0.999999;
  if (drive(hi) < target) {
    throw InvalidArgument("drive " + std::to_string(target) + " rad/s is out of reach for modulation depth < 1");
  }
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    (drive(mid) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

InternalEnergies si_to_internal(const CircuitSpec& circuit, double reference) {
  if (!(reference > 0.0) || !std::isfinite(reference)) throw InvalidArgument("reference rate must be positive");
  circuit.validate();
  InternalEnergies e;
  e.reference = reference;
  e.ej = units::josephson_energy(circuit.josephson_inductance) / reference;
  e.ec = units::charging_energy(circuit.total_capacitance) / reference;
  if (circuit.topology == Topology::sts_inductor) e.el = units::inductive_energy(circuit.linear_inductance) / reference;
  e.pump = circuit.pump_frequency ? *circuit.pump_frequency / reference : 0.0;
  return e;
}

CircuitSpec internal_to_si(const InternalEnergies& e, const CircuitSpec& templ) {
  if (!(e.reference > 0.0)) throw InvalidArgument("reference rate must be positive");
  CircuitSpec c = templ;
  c.josephson_inductance = units::inductance_from_energy(e.ej * e.reference);
  c.total_capacitance = units::capacitance_from_charging_energy(e.ec * e.reference);
  if (templ.topology == Topology::sts_inductor) c.linear_inductance = units::inductance_from_energy(e.el * e.reference);
  if (e.pump > 0.0) c.pump_frequency = e.pump * e.reference;
  else c.pump_frequency.reset();
  return c;
}

}  // namespace paramp
