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

#include "paramp/params_report.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "paramp/error.hpp"
#include "paramp/sweep.hpp"
#include "paramp/units.hpp"

namespace paramp {

namespace {

struct Row {
  const char* name;
  double rate;  // rad/s
};

std::vector<Row> rate_rows(const CircuitCoefficients& c) {
  return {{"E_J", c.ej},
          {"E_C", c.ec},
          {"E_L", c.el},
          {"omega_a", c.omega_a},
          {"omega_p", c.pump_frequency},
          {"Delta", c.coeffs.delta},
          {"lambda", c.coeffs.lambda.real()},
          {"K", c.coeffs.kerr},
          {"Lambda", c.coeffs.cubic},
          {"zeta", c.coeffs.quartic}};
}

}  // namespace

ParamsReport params_report(const CircuitSpec& circuit, double kappa_mhz) {
  circuit.validate();
  if (!(kappa_mhz > 0.0) || !std::isfinite(kappa_mhz)) throw InvalidArgument("kappa_mhz must be positive");
  ParamsReport r;
  r.circuit = circuit;
  r.kappa_mhz = kappa_mhz;
  if (circuit.topology == Topology::dc_squid) {
    const double c = std::cos(circuit.static_flux);
    if (c < kSquidBiasWarning) {
      r.warnings.push_back("invalid bias: cos F = " + format_number(c) +
                           " leaves too little Josephson inductance; the SQUID reduces to a capacitor");
    }
  }
  try {
    r.coefficients = circuit_coefficients(circuit);
    r.kerr_free = r.coefficients->kerr_free;
  } catch (const InvalidArgument& e) {
    r.warnings.emplace_back(e.what());
  }
  return r;
}

std::string params_text(const ParamsReport& r, UnitMode units) {
  std::ostringstream out;
  const double kappa = units::angular_from_mhz(r.kappa_mhz);
  out << "topology: " << topology_name(r.circuit.topology) << '\n';
  out << "L_J: " << format_number(r.circuit.josephson_inductance * 1e12) << " pH\n";
  if (r.circuit.topology == Topology::sts_inductor) {
    out << "L: " << format_number(r.circuit.linear_inductance * 1e12) << " pH\n";
  }
  out << "C: " << format_number(r.circuit.total_capacitance * 1e12) << " pF\n";
  out << "F: " << format_number(r.circuit.static_flux) << " rad\n";
  out << "delta_f: " << format_number(r.circuit.modulation_depth) << '\n';
  out << "kappa/2pi: " << format_number(r.kappa_mhz) << " MHz\n";
  if (r.coefficients) {
    const auto& c = *r.coefficients;
    out << "Phi_zps/phi0: " << format_number(c.phi_zps) << '\n';
    for (const auto& row : rate_rows(c)) {
      out << row.name << ": ";
      if (units == UnitMode::si) {
        out << format_number(units::mhz_from_angular(row.rate)) << " MHz";
      } else {
        out << format_number(row.rate / kappa) << " kappa";
      }
      out << '\n';
    }
  }
  out << "Kerr-free: " << (r.kerr_free ? "true" : "false") << '\n';
  for (const auto& w : r.warnings) out << "warning: " << w << '\n';
  return out.str();
}

std::string params_json(const ParamsReport& r) {
  nlohmann::ordered_json j;
  j["circuit"] = nlohmann::ordered_json::parse(circuit_to_json(r.circuit, -1));
  j["kappa_mhz"] = r.kappa_mhz;
  j["constants_version"] = std::string(units::constants_version);
  if (r.coefficients) {
    const auto& c = *r.coefficients;
    const double kappa = units::angular_from_mhz(r.kappa_mhz);
    j["phi_zps"] = c.phi_zps;
    nlohmann::ordered_json mhz;
    nlohmann::ordered_json in_kappa;
    for (const auto& row : rate_rows(c)) {
      mhz[row.name] = units::mhz_from_angular(row.rate);
      in_kappa[row.name] = row.rate / kappa;
    }
    j["mhz"] = mhz;
    j["kappa"] = in_kappa;
  } else {
    j["mhz"] = nullptr;
    j["kappa"] = nullptr;
  }
  j["kerr_free"] = r.kerr_free;
  j["warnings"] = r.warnings;
  return j.dump(2);
}

}  // namespace paramp
