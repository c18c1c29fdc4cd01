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

#include "paramp/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "paramp/error.hpp"
#include "paramp/units.hpp"

namespace paramp {

using nlohmann::json;

namespace {

template <typename Enum, std::size_t N>
Enum parse_enum(std::string_view name, const std::pair<std::string_view, Enum> (&table)[N], const char* what) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  for (const auto& [key, value] : table) {
    if (key == lower) return value;
  }
  throw InvalidArgument(std::string("unknown ") + what + " '" + std::string(name) + "'");
}

template <typename Enum, std::size_t N>
std::string_view enum_name(Enum e, const std::pair<std::string_view, Enum> (&table)[N]) {
  for (const auto& [key, value] : table) {
    if (value == e) return key;
  }
  return "unknown";
}

constexpr std::pair<std::string_view, ModelKind> kModels[] = {
    {"dpa", ModelKind::dpa},
    {"jpa", ModelKind::jpa},
    {"sts_inductor", ModelKind::sts_inductor},
    {"sts_junction", ModelKind::sts_junction},
    {"raw_coefficients", ModelKind::raw_coefficients},
};

constexpr std::pair<std::string_view, AxisName> kAxes[] = {
    {"lambda", AxisName::lambda}, {"delta", AxisName::delta}, {"gamma", AxisName::gamma},
    {"omega", AxisName::omega},   {"kerr", AxisName::kerr},   {"cubic", AxisName::cubic},
};

constexpr std::pair<std::string_view, Observable> kObservables[] = {
    {"xi", Observable::xi},
    {"gain", Observable::gain},
    {"efficiency", Observable::efficiency},
    {"squeezing", Observable::squeezing},
    {"wigner", Observable::wigner},
    {"analytic_gain", Observable::analytic_gain},
    {"fixed_points", Observable::fixed_points},
};

constexpr std::pair<std::string_view, UnitMode> kUnits[] = {{"kappa", UnitMode::kappa}, {"si", UnitMode::si}};

constexpr std::string_view kZeroTerms[] = {"kerr", "cubic", "quartic"};

json complex_to_json(Complex z) {
  if (z.imag() == 0.0) return z.real();
  return json{{"re", z.real()}, {"im", z.imag()}};
}

Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_object()) return {j.value("re", 0.0), j.value("im", 0.0)};
  throw InvalidArgument("complex value must be a number or {\"re\", \"im\"}");
}

void check_keys(const json& j, std::initializer_list<std::string_view> allowed, const char* where) {
  if (!j.is_object()) throw InvalidArgument(std::string(where) + " must be an object");
  for (const auto& item : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
      throw InvalidArgument(std::string("unknown key '") + item.key() + "' in " + where);
    }
  }
}

json coefficients_to_json(const HamiltonianCoefficients& c) {
  return json{{"delta", c.delta},
              {"lambda", complex_to_json(c.lambda)},
              {"kerr", c.kerr},
              {"cubic", c.cubic},
              {"quartic", c.quartic}};
}

HamiltonianCoefficients coefficients_from_json(const json& j) {
  check_keys(j, {"delta", "lambda", "kerr", "cubic", "quartic"}, "coefficients");
  HamiltonianCoefficients c;
  c.delta = j.value("delta", 0.0);
  if (j.contains("lambda")) c.lambda = complex_from_json(j.at("lambda"));
  c.kerr = j.value("kerr", 0.0);
  c.cubic = j.value("cubic", 0.0);
  c.quartic = j.value("quartic", 0.0);
  return c;
}

json circuit_json(const CircuitSpec& c) {
  json j{{"topology", topology_name(c.topology)},
         {"josephson_inductance", c.josephson_inductance},
         {"linear_inductance", c.linear_inductance},
         {"total_capacitance", c.total_capacitance},
         {"static_flux", c.static_flux},
         {"modulation_depth", c.modulation_depth}};
  j["pump_frequency"] = c.pump_frequency ? json(*c.pump_frequency) : json(nullptr);
  return j;
}

CircuitSpec circuit_from(const json& j) {
  check_keys(j,
             {"topology", "josephson_inductance", "linear_inductance", "total_capacitance", "static_flux",
              "modulation_depth", "pump_frequency"},
             "circuit");
  CircuitSpec c;
  if (j.contains("topology")) c.topology = parse_topology(j.at("topology").get<std::string>());
  c.josephson_inductance = j.value("josephson_inductance", c.josephson_inductance);
  c.linear_inductance = j.value("linear_inductance", c.linear_inductance);
  c.total_capacitance = j.value("total_capacitance", c.total_capacitance);
  c.static_flux = j.value("static_flux", c.static_flux);
  c.modulation_depth = j.value("modulation_depth", c.modulation_depth);
  if (j.contains("pump_frequency") && !j.at("pump_frequency").is_null()) {
    c.pump_frequency = j.at("pump_frequency").get<double>();
  }
  return c;
}

json axis_to_json(const Axis& a) {
  json j{{"name", axis_name(a.name)}};
  if (!a.points.empty()) {
    j["values"] = a.points;
  } else {
    j["start"] = a.start;
    j["stop"] = a.stop;
    j["count"] = a.count;
  }
  return j;
}

Axis axis_from_json(const json& j) {
  check_keys(j, {"name", "start", "stop", "count", "values"}, "axis");
  Axis a;
  a.name = parse_axis_name(j.at("name").get<std::string>());
  if (j.contains("values")) {
    if (j.contains("start") || j.contains("stop") || j.contains("count")) {
      throw InvalidArgument("axis '" + std::string(axis_name(a.name)) + "' mixes values with start/stop/count");
    }
    a.points = j.at("values").get<std::vector<double>>();
    a.count = static_cast<int>(a.points.size());
  } else {
    a.start = j.at("start").get<double>();
    a.stop = j.value("stop", a.start);
    a.count = j.value("count", 1);
  }
  return a;
}

json variant_to_json(const Variant& v) {
  json j{{"label", v.label}, {"model", model_kind_name(v.model)}, {"coefficients", coefficients_to_json(v.coefficients)}};
  j["cubic_per_lambda"] = v.cubic_per_lambda ? json(*v.cubic_per_lambda) : json(nullptr);
  j["circuit"] = v.circuit ? circuit_json(*v.circuit) : json(nullptr);
  j["zero_terms"] = v.zero_terms;
  return j;
}

Variant variant_from_json(const json& j) {
  check_keys(j, {"label", "model", "coefficients", "cubic_per_lambda", "circuit", "zero_terms"}, "variant");
  Variant v;
  v.model = parse_model_kind(j.at("model").get<std::string>());
  v.label = j.value("label", std::string(model_kind_name(v.model)));
  if (j.contains("coefficients")) v.coefficients = coefficients_from_json(j.at("coefficients"));
  if (j.contains("cubic_per_lambda") && !j.at("cubic_per_lambda").is_null()) {
    v.cubic_per_lambda = j.at("cubic_per_lambda").get<double>();
  }
  if (j.contains("circuit") && !j.at("circuit").is_null()) v.circuit = circuit_from(j.at("circuit"));
  if (j.contains("zero_terms")) v.zero_terms = j.at("zero_terms").get<std::vector<std::string>>();
  return v;
}

json solver_to_json(const SolverConfig& s) {
  const auto& t = s.truncation;
  const auto& p = s.probe;
  return json{{"dim", t.dim},
              {"max_dim", t.max_dim},
              {"tail_tolerance", t.tail_tolerance},
              {"tail_width", t.tail_width},
              {"growth", t.growth},
              {"adaptive", t.adaptive},
              {"near_threshold_ratio", t.near_threshold_ratio},
              {"near_threshold_dim", t.near_threshold_dim},
              {"probe_amplitude", p.amplitude},
              {"probe_phase", p.phase},
              {"max_halvings", p.max_halvings},
              {"linearity_tolerance", p.linearity_tolerance}};
}

SolverConfig solver_from_json(const json& j) {
  check_keys(j,
             {"dim", "max_dim", "tail_tolerance", "tail_width", "growth", "adaptive", "near_threshold_ratio",
              "near_threshold_dim", "probe_amplitude", "probe_phase", "max_halvings", "linearity_tolerance"},
             "solver");
  SolverConfig s;
  auto& t = s.truncation;
  auto& p = s.probe;
  t.dim = j.value("dim", t.dim);
  t.max_dim = j.value("max_dim", std::max(t.max_dim, t.dim));
  t.tail_tolerance = j.value("tail_tolerance", t.tail_tolerance);
  t.tail_width = j.value("tail_width", t.tail_width);
  t.growth = j.value("growth", t.growth);
  t.adaptive = j.value("adaptive", t.adaptive);
  t.near_threshold_ratio = j.value("near_threshold_ratio", t.near_threshold_ratio);
  t.near_threshold_dim = j.value("near_threshold_dim", t.near_threshold_dim);
  p.amplitude = j.value("probe_amplitude", p.amplitude);
  p.phase = j.value("probe_phase", p.phase);
  p.max_halvings = j.value("max_halvings", p.max_halvings);
  p.linearity_tolerance = j.value("linearity_tolerance", p.linearity_tolerance);
  return s;
}

json config_json(const SweepConfig& c) {
  json j;
  j["name"] = c.name;
  j["description"] = c.description;
  j["variants"] = json::array();
  for (const auto& v : c.variants) j["variants"].push_back(variant_to_json(v));
  j["axes"] = json::array();
  for (const auto& a : c.axes) j["axes"].push_back(axis_to_json(a));
  j["environment"] = json{{"kappa_mhz", c.environment.kappa_mhz}, {"gamma", c.environment.gamma}};
  j["solver"] = solver_to_json(c.solver);
  j["observables"] = json::array();
  for (auto o : c.observables) j["observables"].push_back(observable_name(o));
  j["wigner"] = json{{"extent", c.wigner.extent}, {"points", c.wigner.points}};
  j["threads"] = c.threads;
  j["deterministic"] = c.deterministic;
  return j;
}

SweepConfig config_from(const json& j) {
  check_keys(j,
             {"name", "description", "variants", "axes", "environment", "solver", "observables", "wigner", "threads",
              "deterministic"},
             "config");
  SweepConfig c;
  c.name = j.value("name", c.name);
  c.description = j.value("description", std::string());
  for (const auto& v : j.at("variants")) c.variants.push_back(variant_from_json(v));
  for (const auto& a : j.at("axes")) c.axes.push_back(axis_from_json(a));
  if (j.contains("environment")) {
    const auto& e = j.at("environment");
    check_keys(e, {"kappa_mhz", "gamma"}, "environment");
    c.environment.kappa_mhz = e.value("kappa_mhz", c.environment.kappa_mhz);
    c.environment.gamma = e.value("gamma", c.environment.gamma);
  }
  if (j.contains("solver")) c.solver = solver_from_json(j.at("solver"));
  for (const auto& o : j.at("observables")) c.observables.push_back(parse_observable(o.get<std::string>()));
  if (j.contains("wigner")) {
    const auto& w = j.at("wigner");
    check_keys(w, {"extent", "points"}, "wigner");
    c.wigner.extent = w.value("extent", c.wigner.extent);
    c.wigner.points = w.value("points", c.wigner.points);
  }
  c.threads = j.value("threads", c.threads);
  c.deterministic = j.value("deterministic", c.deterministic);
  return c;
}

std::optional<std::string> env_value(const char* key) {
  const char* v = std::getenv(key);
  if (v == nullptr || *v == '\0') return std::nullopt;
  return std::string(v);
}

double env_double(const char* key, const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size()) throw InvalidArgument(std::string(key) + ": '" + text + "' is not a number");
  return v;
}

int env_int(const char* key, const std::string& text) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size()) throw InvalidArgument(std::string(key) + ": '" + text + "' is not an integer");
  return v;
}

}  // namespace

std::string_view model_kind_name(ModelKind kind) { return enum_name(kind, kModels); }
ModelKind parse_model_kind(std::string_view name) { return parse_enum(name, kModels, "model"); }
std::string_view axis_name(AxisName axis) { return enum_name(axis, kAxes); }
AxisName parse_axis_name(std::string_view name) { return parse_enum(name, kAxes, "axis"); }
std::string_view observable_name(Observable obs) { return enum_name(obs, kObservables); }
Observable parse_observable(std::string_view name) { return parse_enum(name, kObservables, "observable"); }
UnitMode parse_unit_mode(std::string_view name) { return parse_enum(name, kUnits, "unit mode"); }

std::vector<double> Axis::values() const {
  if (!points.empty()) return points;
  std::vector<double> out(static_cast<std::size_t>(std::max(count, 0)));
  for (int i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] = count == 1 ? start : start + (stop - start) * i / (count - 1);
  }
  if (count > 1) out.back() = stop;
  return out;
}

int Axis::size() const { return points.empty() ? count : static_cast<int>(points.size()); }

void Axis::validate() const {
  const std::string n(axis_name(name));
  if (!points.empty()) {
    for (double v : points) {
      if (!std::isfinite(v)) throw InvalidArgument("axis '" + n + "' has a non-finite value");
    }
    return;
  }
  if (count < 1) throw InvalidArgument("axis '" + n + "' needs count >= 1");
  if (!std::isfinite(start) || !std::isfinite(stop)) throw InvalidArgument("axis '" + n + "' bounds must be finite");
}

void Variant::validate() const {
  coefficients.validate();
  if (cubic_per_lambda && !std::isfinite(*cubic_per_lambda)) {
    throw InvalidArgument("variant '" + label + "': cubic_per_lambda must be finite");
  }
  for (const auto& t : zero_terms) {
    if (std::find(std::begin(kZeroTerms), std::end(kZeroTerms), t) == std::end(kZeroTerms)) {
      throw InvalidArgument("variant '" + label + "': unknown zero term '" + t + "'");
    }
  }
  switch (model) {
    case ModelKind::dpa:
      if (!coefficients.is_dpa() || cubic_per_lambda || circuit) {
        throw InvalidArgument("variant '" + label + "': a dpa carries only delta and lambda");
      }
      break;
    case ModelKind::jpa:
      if (circuit && circuit->topology != Topology::dc_squid) {
        throw InvalidArgument("variant '" + label + "': a jpa circuit must be a dc_squid");
      }
      break;
    case ModelKind::sts_inductor:
    case ModelKind::sts_junction: {
      if (!circuit) throw InvalidArgument("variant '" + label + "': sts models need a circuit");
      const Topology want = model == ModelKind::sts_inductor ? Topology::sts_inductor : Topology::sts_junction;
      if (circuit->topology != want) {
        throw InvalidArgument("variant '" + label + "': circuit topology does not match the model");
      }
      break;
    }
    case ModelKind::raw_coefficients:
      if (circuit) throw InvalidArgument("variant '" + label + "': raw coefficients take no circuit");
      break;
  }
  if (circuit) circuit->validate();
}

double EnvironmentConfig::kappa_angular() const { return units::angular_from_mhz(kappa_mhz); }

void EnvironmentConfig::validate() const {
  if (!(kappa_mhz > 0.0) || !std::isfinite(kappa_mhz)) throw InvalidArgument("kappa_mhz must be positive");
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) throw InvalidArgument("gamma must be non-negative");
}

void SolverConfig::validate() const {
  truncation.validate();
  probe.validate(EnvironmentParams{});
}

void WignerConfig::validate() const {
  if (!(extent > 0.0) || !std::isfinite(extent)) throw InvalidArgument("wigner extent must be positive");
  if (points < 2) throw InvalidArgument("wigner grid needs at least 2 points per side");
}

bool SweepConfig::has(Observable obs) const {
  return std::find(observables.begin(), observables.end(), obs) != observables.end();
}

const Axis* SweepConfig::axis(AxisName n) const {
  for (const auto& a : axes) {
    if (a.name == n) return &a;
  }
  return nullptr;
}

long long SweepConfig::cardinality() const {
  long long n = static_cast<long long>(variants.size());
  for (const auto& a : axes) n *= a.size();
  return n;
}

int SweepConfig::resolved_threads() const {
  if (threads > 0) return threads;
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

void SweepConfig::validate() const {
  if (variants.empty()) throw InvalidArgument("config needs at least one variant");
  if (axes.empty()) throw InvalidArgument("config needs at least one axis");
  if (observables.empty()) throw InvalidArgument("config needs at least one observable");
  for (std::size_t i = 0; i < axes.size(); ++i) {
    axes[i].validate();
    for (std::size_t k = 0; k < i; ++k) {
      if (axes[k].name == axes[i].name) {
        throw InvalidArgument("axis '" + std::string(axis_name(axes[i].name)) + "' appears twice");
      }
    }
  }
  for (std::size_t i = 0; i < variants.size(); ++i) {
    variants[i].validate();
    for (std::size_t k = 0; k < i; ++k) {
      if (variants[k].label == variants[i].label) throw InvalidArgument("duplicate variant label '" + variants[i].label + "'");
    }
  }
  if (const Axis* g = axis(AxisName::gamma)) {
    for (double v : g->values()) {
      if (!(v >= 0.0)) throw InvalidArgument("gamma axis values must be non-negative");
    }
  }
  environment.validate();
  solver.validate();
  wigner.validate();
  if (threads < 0) throw InvalidArgument("threads must be >= 0");
}

bool operator==(const CircuitSpec& a, const CircuitSpec& b) {
  return a.topology == b.topology && a.josephson_inductance == b.josephson_inductance &&
         a.linear_inductance == b.linear_inductance && a.total_capacitance == b.total_capacitance &&
         a.static_flux == b.static_flux && a.modulation_depth == b.modulation_depth &&
         a.pump_frequency == b.pump_frequency;
}

bool operator==(const Axis& a, const Axis& b) {
  return a.name == b.name && a.values() == b.values();
}

bool operator==(const Variant& a, const Variant& b) {
  const auto& x = a.coefficients;
  const auto& y = b.coefficients;
  return a.label == b.label && a.model == b.model && x.delta == y.delta && x.lambda == y.lambda &&
         x.kerr == y.kerr && x.cubic == y.cubic && x.quartic == y.quartic && a.cubic_per_lambda == b.cubic_per_lambda &&
         a.circuit == b.circuit && a.zero_terms == b.zero_terms;
}

bool operator==(const EnvironmentConfig& a, const EnvironmentConfig& b) {
  return a.kappa_mhz == b.kappa_mhz && a.gamma == b.gamma;
}

bool operator==(const SolverConfig& a, const SolverConfig& b) {
  const auto& s = a.truncation;
  const auto& t = b.truncation;
  return s.dim == t.dim && s.max_dim == t.max_dim && s.tail_tolerance == t.tail_tolerance &&
         s.tail_width == t.tail_width && s.growth == t.growth && s.adaptive == t.adaptive &&
         s.near_threshold_ratio == t.near_threshold_ratio && s.near_threshold_dim == t.near_threshold_dim &&
         a.probe.amplitude == b.probe.amplitude && a.probe.phase == b.probe.phase &&
         a.probe.max_halvings == b.probe.max_halvings && a.probe.linearity_tolerance == b.probe.linearity_tolerance;
}

bool operator==(const WignerConfig& a, const WignerConfig& b) {
  return a.extent == b.extent && a.points == b.points;
}

bool operator==(const SweepConfig& a, const SweepConfig& b) {
  return a.name == b.name && a.description == b.description && a.variants == b.variants && a.axes == b.axes &&
         a.environment == b.environment && a.solver == b.solver && a.observables == b.observables &&
         a.wigner == b.wigner && a.threads == b.threads && a.deterministic == b.deterministic;
}

std::string config_to_json(const SweepConfig& config, int indent) { return config_json(config).dump(indent); }

SweepConfig config_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InvalidArgument(std::string("config is not valid JSON: ") + e.what());
  }
  SweepConfig config;
  try {
    config = config_from(j);
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed config: ") + e.what());
  }
  config.validate();
  return config;
}

SweepConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open config '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return config_from_json(ss.str());
}

std::string circuit_to_json(const CircuitSpec& circuit, int indent) { return circuit_json(circuit).dump(indent); }

CircuitSpec circuit_from_json(std::string_view text) {
  try {
    return circuit_from(json::parse(text.begin(), text.end()));
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed circuit: ") + e.what());
  }
}

void apply_env_overrides(SweepConfig& config) {
  if (auto v = env_value("PARAMP_DIM")) {
    config.solver.truncation.dim = env_int("PARAMP_DIM", *v);
    config.solver.truncation.max_dim = std::max(config.solver.truncation.max_dim, config.solver.truncation.dim);
  }
  if (auto v = env_value("PARAMP_MAX_DIM")) config.solver.truncation.max_dim = env_int("PARAMP_MAX_DIM", *v);
  if (auto v = env_value("PARAMP_THREADS")) config.threads = env_int("PARAMP_THREADS", *v);
  if (auto v = env_value("PARAMP_TAIL_TOL")) config.solver.truncation.tail_tolerance = env_double("PARAMP_TAIL_TOL", *v);
  if (auto v = env_value("PARAMP_KAPPA_MHZ")) config.environment.kappa_mhz = env_double("PARAMP_KAPPA_MHZ", *v);
  if (auto v = env_value("PARAMP_PROBE")) config.solver.probe.amplitude = env_double("PARAMP_PROBE", *v);
}

}  // namespace paramp
