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

#include "paramp/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "paramp/error.hpp"
#include "paramp/grid_io.hpp"
#include "paramp/observables.hpp"
#include "paramp/response.hpp"
#include "paramp/semiclassical.hpp"
#include "paramp/squeezing.hpp"
#include "paramp/units.hpp"

#ifndef PARAMP_VERSION
#define PARAMP_VERSION "0.0.0"
#endif

namespace paramp {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

const char* const kRateColumns[] = {"delta", "lambda_re", "lambda_im", "kerr", "cubic", "quartic", "gamma", "omega"};

bool wants_gain(const SweepConfig& c) { return c.has(Observable::gain) || c.has(Observable::efficiency); }
bool wants_state(const SweepConfig& c) {
  return c.has(Observable::xi) || c.has(Observable::squeezing) || c.has(Observable::wigner);
}
bool wants_dpa_reference(const SweepConfig& c) {
  return wants_gain(c) || c.has(Observable::squeezing) || c.has(Observable::analytic_gain);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

class RowWriter {
 public:
  RowWriter(const std::vector<std::string>& columns, std::vector<double>& values)
      : columns_(columns), values_(values) {}

  void set(const char* name, double v) {
    const auto it = std::find(columns_.begin(), columns_.end(), name);
    if (it == columns_.end()) throw Error(std::string("no column ") + name, ErrorCode::internal);
    values_[static_cast<std::size_t>(it - columns_.begin())] = v;
  }

 private:
  const std::vector<std::string>& columns_;
  std::vector<double>& values_;
};

}  // namespace

int Dataset::column(const std::string& name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  return it == columns.end() ? -1 : static_cast<int>(it - columns.begin());
}

double Dataset::value(std::size_t row, const std::string& name) const {
  const int c = column(name);
  if (c < 0) throw InvalidArgument("dataset has no column '" + name + "'");
  if (row >= records.size()) throw InvalidArgument("row out of range");
  return records[row].values[static_cast<std::size_t>(c)];
}

std::vector<std::string> dataset_columns(const SweepConfig& config) {
  std::vector<std::string> cols;
  for (const char* r : kRateColumns) cols.push_back(std::string(r) + "[kappa]");
  for (const char* r : kRateColumns) cols.push_back(std::string(r) + "[MHz]");
  if (config.has(Observable::xi)) {
    for (const char* c : {"xi", "xi_raw", "photons"}) cols.emplace_back(c);
  }
  if (wants_dpa_reference(config)) cols.emplace_back("gain_dpa[dB]");
  if (wants_gain(config)) {
    for (const char* c : {"gain", "gain[dB]", "g11", "g12", "g21", "g22", "zero_gain_drive[kappa]"}) cols.emplace_back(c);
  }
  if (config.has(Observable::efficiency)) {
    for (const char* c : {"added_noise", "efficiency", "caves_bound", "lambda_dpa[kappa]"}) cols.emplace_back(c);
  }
  if (config.has(Observable::squeezing)) {
    for (const char* c : {"squeezing", "squeezing[dB]", "theta_min", "min_variance"}) cols.emplace_back(c);
  }
  if (config.has(Observable::wigner)) {
    for (const char* c : {"wigner_integral", "wigner_min", "wigner_gaussian_l1"}) cols.emplace_back(c);
  }
  if (config.has(Observable::analytic_gain)) {
    for (const char* c : {"analytic_gain", "analytic_gain[dB]", "analytic_iterations"}) cols.emplace_back(c);
  }
  if (config.has(Observable::fixed_points)) {
    for (const char* c : {"fixed_points", "max_population", "fixed_point_residual"}) cols.emplace_back(c);
  }
  for (const char* c : {"dim", "tail", "residual", "trace_error", "hermiticity", "min_eigenvalue", "probe_amplitude",
                        "probe_halvings", "linearity"}) {
    cols.emplace_back(c);
  }
  return cols;
}

HamiltonianCoefficients variant_coefficients(const Variant& v, const EnvironmentConfig& env) {
  HamiltonianCoefficients c = v.coefficients;
  if (v.circuit) c = circuit_coefficients(*v.circuit).in_units_of(env.kappa_angular());
  if (auto ratio = variant_cubic_ratio(v)) c.cubic = *ratio * c.lambda.real();
  return c;
}

std::optional<double> variant_cubic_ratio(const Variant& v) {
  if (v.cubic_per_lambda) return v.cubic_per_lambda;
  // Every topology gives Lambda / lambda = -(Phi_zps / phi0)^2 / 6.
  if (v.circuit) {
    const double phi = circuit_coefficients(*v.circuit).phi_zps;
    return -phi * phi / 6.0;
  }
  return std::nullopt;
}

std::vector<SweepPoint> sweep_points(const SweepConfig& config) {
  config.validate();
  std::vector<std::vector<double>> axis_values;
  for (const auto& a : config.axes) axis_values.push_back(a.values());

  std::vector<SweepPoint> points;
  points.reserve(static_cast<std::size_t>(config.cardinality()));
  std::vector<std::size_t> idx(config.axes.size(), 0);
  for (std::size_t vi = 0; vi < config.variants.size(); ++vi) {
    const Variant& v = config.variants[vi];
    const HamiltonianCoefficients base = variant_coefficients(v, config.environment);
    const std::optional<double> ratio = variant_cubic_ratio(v);
    std::fill(idx.begin(), idx.end(), 0);
    for (;;) {
      SweepPoint p;
      p.index = static_cast<long long>(points.size());
      p.variant = vi;
      p.coeffs = base;
      p.env.kappa = 1.0;
      p.env.gamma = config.environment.gamma;
      bool cubic_set = false;
      for (std::size_t k = 0; k < config.axes.size(); ++k) {
        const double x = axis_values[k][idx[k]];
        switch (config.axes[k].name) {
          case AxisName::lambda: p.coeffs.lambda = x; break;
          case AxisName::delta: p.coeffs.delta = x; break;
          case AxisName::gamma: p.env.gamma = x; break;
          case AxisName::omega: p.omega = x; break;
          case AxisName::kerr: p.coeffs.kerr = x; break;
          case AxisName::cubic:
            p.coeffs.cubic = x;
            cubic_set = true;
            break;
        }
      }
      if (ratio && !cubic_set) p.coeffs.cubic = *ratio * p.coeffs.lambda.real();
      for (const auto& t : v.zero_terms) {
        if (t == "kerr") p.coeffs.kerr = 0.0;
        if (t == "cubic") p.coeffs.cubic = 0.0;
        if (t == "quartic") p.coeffs.quartic = 0.0;
      }
      points.push_back(p);

      // Odometer increment, last axis fastest.
      bool wrapped = true;
      for (std::size_t k = idx.size(); k-- > 0;) {
        if (++idx[k] < axis_values[k].size()) {
          wrapped = false;
          break;
        }
        idx[k] = 0;
      }
      if (wrapped) break;
    }
  }
  return points;
}

Record evaluate_point(const SweepConfig& config, const SweepPoint& point, const std::vector<std::string>& columns) {
  Record r;
  r.index = point.index;
  r.variant = config.variants[point.variant].label;
  r.model = config.variants[point.variant].model;
  r.values.assign(columns.size(), kNaN);
  RowWriter row(columns, r.values);

  const HamiltonianCoefficients& c = point.coeffs;
  const EnvironmentParams& env = point.env;
  const double mhz = config.environment.kappa_mhz;
  const double rates[] = {c.delta, c.lambda.real(), c.lambda.imag(), c.kerr, c.cubic, c.quartic, env.gamma, point.omega};
  for (std::size_t i = 0; i < std::size(kRateColumns); ++i) {
    row.set((std::string(kRateColumns[i]) + "[kappa]").c_str(), rates[i]);
    row.set((std::string(kRateColumns[i]) + "[MHz]").c_str(), rates[i] * mhz);
  }

  try {
    int dim_used = 0;
    if (wants_dpa_reference(config)) {
      row.set("gain_dpa[dB]", to_db(dpa_gain_closed_form(point.omega, c.delta, c.lambda, env)));
    }
    if (wants_state(config)) {
      const SteadyStateReport rep = solve_steady_state(c, env, config.solver.truncation);
      dim_used = rep.dim;
      row.set("tail", rep.tail);
      row.set("residual", rep.residual);
      const DensityCheck chk = rep.state().check();
      row.set("trace_error", chk.trace_error);
      row.set("hermiticity", chk.hermiticity);
      row.set("min_eigenvalue", chk.min_eigenvalue);
      r.warnings.insert(r.warnings.end(), rep.warnings.begin(), rep.warnings.end());
      const GaussianMoments mom = moments(rep.state());
      if (config.has(Observable::xi)) {
        const XiResult xi = deviation_xi(mom);
        row.set("xi", xi.value);
        row.set("xi_raw", xi.raw);
        row.set("photons", std::norm(mom.mean) + mom.n);
        if (xi.clamped) r.warnings.push_back("xi clamped from " + format_number(xi.raw));
      }
      if (config.has(Observable::squeezing)) {
        const SqueezingResult s = OutputNoise(*rep.solver, env).squeezing();
        row.set("squeezing", s.level);
        row.set("squeezing[dB]", s.level_db);
        row.set("theta_min", s.theta_min);
        row.set("min_variance", s.min_variance);
      }
      if (config.has(Observable::wigner)) {
        const QuadratureGrid grid = QuadratureGrid::square(config.wigner.extent, config.wigner.points);
        WignerField field = wigner(rep.state(), grid);
        row.set("wigner_integral", field.integral());
        row.set("wigner_min", field.min_value());
        row.set("wigner_gaussian_l1", gaussian_deviation(field, mom));
        if (!grid_covers_support(rep.state(), grid)) r.warnings.push_back("wigner grid is narrower than the state");
        r.wigner = std::move(field);
      }
    }
    if (wants_gain(config)) {
      const GainMatrixResult gm = probe_gain_matrix(c, env, config.solver.probe, config.solver.truncation);
      const double g = phase_preserving_gain(gm.g);
      row.set("gain", g);
      row.set("gain[dB]", to_db(g));
      row.set("g11", gm.g.g11);
      row.set("g12", gm.g.g12);
      row.set("g21", gm.g.g21);
      row.set("g22", gm.g.g22);
      row.set("zero_gain_drive[kappa]", lossy_zero_gain_threshold(env));
      row.set("probe_amplitude", gm.probe_amplitude);
      row.set("probe_halvings", gm.halvings);
      row.set("linearity", gm.max_relative_change);
      if (!wants_state(config)) {
        row.set("tail", gm.tail);
        row.set("residual", gm.residual);
      }
      dim_used = std::max(dim_used, gm.dim);
      r.warnings.insert(r.warnings.end(), gm.warnings.begin(), gm.warnings.end());
      if (config.has(Observable::efficiency)) {
        const NoiseResult n = added_noise_and_efficiency(g, c, env);
        row.set("added_noise", n.added_noise);
        row.set("efficiency", n.efficiency);
        row.set("caves_bound", n.caves_bound);
        row.set("lambda_dpa[kappa]", n.lambda_dpa);
      }
    }
    if (dim_used > 0) row.set("dim", dim_used);
    if (config.has(Observable::analytic_gain)) {
      if (c.is_dpa()) {
        const double g = dpa_gain_closed_form(point.omega, c.delta, c.lambda, env);
        row.set("analytic_gain", g);
        row.set("analytic_gain[dB]", to_db(g));
        row.set("analytic_iterations", 0);
      } else {
        const AnalyticGain a = sts_gain_analytic(point.omega, c, env);
        row.set("analytic_gain", a.gain);
        row.set("analytic_gain[dB]", to_db(a.gain));
        row.set("analytic_iterations", a.iterations);
        if (!a.operating_point_separated) r.warnings.push_back("operating point is close to a nontrivial fixed point");
      }
    }
    if (config.has(Observable::fixed_points)) {
      if (c.lambda.imag() != 0.0) throw InvalidArgument("fixed points need a real lambda");
      const FixedPointSet fp = pump_fixed_points(c.delta, c.lambda.real(), c.cubic, env);
      row.set("fixed_points", fp.count());
      row.set("max_population", fp.unique_populations.empty() ? 0.0 : fp.unique_populations.back());
      double worst = 0.0;
      for (const auto& p : fp.points) worst = std::max(worst, p.residual);
      row.set("fixed_point_residual", worst);
      r.warnings.insert(r.warnings.end(), fp.warnings.begin(), fp.warnings.end());
    }
  } catch (const Error& e) {
    r.status = std::string(error_code_name(e.code()));
    r.message = e.what();
  } catch (const std::exception& e) {
    r.status = std::string(error_code_name(ErrorCode::internal));
    r.message = e.what();
  }
  return r;
}

Dataset run_sweep(const SweepConfig& config, SweepProgress* progress) {
  const std::vector<SweepPoint> points = sweep_points(config);
  Dataset data;
  data.config = config;
  data.code_version = PARAMP_VERSION;
  data.constants_version = std::string(units::constants_version);
  data.columns = dataset_columns(config);
  data.started_utc = utc_timestamp();
  data.records.resize(points.size());
  if (progress) progress->total = static_cast<long long>(points.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= points.size()) return;
      data.records[i] = evaluate_point(config, points[i], data.columns);
      if (progress) progress->done.fetch_add(1);
    }
  };
  const int threads = std::min<int>(config.resolved_threads(), static_cast<int>(std::max<std::size_t>(points.size(), 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  data.finished_utc = utc_timestamp();
  return data;
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
  return buf;
}

std::string dataset_metadata_json(const Dataset& data, bool with_timestamps) {
  nlohmann::ordered_json j;
  j["name"] = data.config.name;
  j["code_version"] = data.code_version;
  j["constants_version"] = data.constants_version;
  j["units"] = "rates in units of kappa ([kappa]) and as cycle frequencies ([MHz]) with kappa/2pi = " +
               format_number(data.config.environment.kappa_mhz) + " MHz";
  j["rows"] = data.records.size();
  j["columns"] = data.columns;
  if (with_timestamps) {
    j["started_utc"] = data.started_utc;
    j["finished_utc"] = data.finished_utc;
    j["threads"] = data.config.resolved_threads();
  }
  // The thread count changes scheduling only, so it stays out of the reproducible header.
  auto config = nlohmann::ordered_json::parse(config_to_json(data.config, -1));
  config.erase("threads");
  j["config"] = std::move(config);
  return j.dump(2);
}

std::string wigner_file_name(const Dataset& data, const Record& record) {
  return data.config.name + "_" + std::to_string(record.index) + ".pgrd";
}

std::string dataset_csv(const Dataset& data) {
  std::ostringstream out;
  std::istringstream meta(dataset_metadata_json(data, !data.config.deterministic));
  for (std::string line; std::getline(meta, line);) out << "# " << line << '\n';
  out << "index,variant,model";
  for (const auto& c : data.columns) out << ',' << csv_field(c);
  out << ",status,message,warnings,wigner_file\n";
  for (const auto& r : data.records) {
    out << r.index << ',' << csv_field(r.variant) << ',' << model_kind_name(r.model);
    for (double v : r.values) out << ',' << format_number(v);
    out << ',' << r.status << ',' << csv_field(r.message) << ',' << csv_field(join(r.warnings, "; ")) << ','
        << (r.wigner ? wigner_file_name(data, r) : std::string()) << '\n';
  }
  return out.str();
}

WrittenFiles write_dataset(const Dataset& data, const std::string& directory) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(directory, ec);
  if (ec) throw InvalidArgument("cannot create '" + directory + "': " + ec.message());
  WrittenFiles files;
  const fs::path dir(directory);
  auto write_text = [](const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw InvalidArgument("cannot write '" + path.string() + "'");
    out << text;
  };
  files.csv = (dir / (data.config.name + ".csv")).string();
  write_text(files.csv, dataset_csv(data));
  files.metadata = (dir / (data.config.name + ".meta.json")).string();
  write_text(files.metadata, dataset_metadata_json(data, true) + "\n");
  for (const auto& r : data.records) {
    if (!r.wigner) continue;
    const std::string path = (dir / wigner_file_name(data, r)).string();
    write_grid(path, grid_from_wigner(*r.wigner));
    files.grids.push_back(path);
  }
  return files;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace paramp
