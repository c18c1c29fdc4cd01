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

// paramp command-line front end.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "paramp/config.hpp"
#include "paramp/error.hpp"
#include "paramp/grid_io.hpp"
#include "paramp/params_report.hpp"
#include "paramp/recipes.hpp"
#include "paramp/semiclassical.hpp"
#include "paramp/sweep.hpp"
#include "paramp/units.hpp"

namespace fs = std::filesystem;
using namespace paramp;

namespace {

struct RunOptions {
  std::string config_path;
  std::string out_dir = ".";
  std::optional<int> dim;
  std::optional<int> threads;
  std::string units = "kappa";
  bool plot_script = false;
  bool dump_config = false;
  bool quiet = false;
};

void add_run_options(CLI::App* cmd, RunOptions& o) {
  cmd->add_option("--out", o.out_dir, "Output directory")->capture_default_str();
  cmd->add_option("--dim", o.dim, "Initial Fock dimension")->check(CLI::Range(2, 100000));
  cmd->add_option("--threads", o.threads, "Worker threads (0 = logical cores)")->check(CLI::NonNegativeNumber);
  cmd->add_option("--units", o.units, "Units of the printed summary")
      ->check(CLI::IsMember({"kappa", "si"}))
      ->capture_default_str();
  cmd->add_flag("--plot-script", o.plot_script, "Also write a matplotlib script for the CSV");
  cmd->add_flag("--dump-config", o.dump_config, "Print the resolved config as JSON and exit");
  cmd->add_flag("-q,--quiet", o.quiet, "Suppress the summary");
}

void apply_overrides(SweepConfig& c, const RunOptions& o) {
  apply_env_overrides(c);
  if (o.dim) {
    c.solver.truncation.dim = *o.dim;
    if (c.solver.truncation.max_dim < *o.dim) c.solver.truncation.max_dim = *o.dim;
  }
  if (o.threads) c.threads = *o.threads;
}

std::string y_column(const SweepConfig& c) {
  if (c.has(Observable::efficiency)) return "efficiency";
  if (c.has(Observable::gain)) return "gain[dB]";
  if (c.has(Observable::squeezing)) return "squeezing[dB]";
  if (c.has(Observable::analytic_gain)) return "analytic_gain[dB]";
  if (c.has(Observable::xi)) return "xi";
  return "fixed_points";
}

std::string x_column(const SweepConfig& c) {
  if (c.has(Observable::gain) || c.has(Observable::efficiency) || c.has(Observable::squeezing)) {
    if (c.axis(AxisName::lambda) && c.axis(AxisName::lambda)->size() > 1) return "gain_dpa[dB]";
  }
  for (const auto& a : c.axes) {
    if (a.size() <= 1) continue;
    if (a.name == AxisName::lambda) return "lambda_re[kappa]";
    return std::string(axis_name(a.name)) + "[kappa]";
  }
  return "lambda_re[kappa]";
}

void write_plot_script(const SweepConfig& c, const fs::path& dir) {
  const fs::path path = dir / (c.name + "_plot.py");
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InvalidArgument("cannot write '" + path.string() + "'");
  out << "# Plots " << c.name << ".csv; requires pandas and matplotlib.\n"
      << "import sys\n"
      << "import matplotlib.pyplot as plt\n"
      << "import pandas as pd\n\n"
      << "data = pd.read_csv('" << c.name << ".csv', comment='#')\n"
      << "x, y = '" << x_column(c) << "', '" << y_column(c) << "'\n"
      << "fig, ax = plt.subplots()\n"
      << "for label, rows in data[data.status == 'ok'].groupby('variant', sort=False):\n"
      << "    ax.plot(rows[x], rows[y], label=label)\n"
      << "ax.set_xlabel(x)\n"
      << "ax.set_ylabel(y)\n"
      << "ax.legend()\n"
      << "fig.savefig(sys.argv[1] if len(sys.argv) > 1 else '" << c.name << ".png', dpi=150)\n";
}

int run_config(SweepConfig config, const RunOptions& o) {
  apply_overrides(config, o);
  config.validate();
  if (o.dump_config) {
    std::cout << config_to_json(config) << '\n';
    return 0;
  }
  const Dataset data = run_sweep(config);
  const WrittenFiles files = write_dataset(data, o.out_dir);
  if (o.plot_script) write_plot_script(config, o.out_dir);
  std::size_t failed = 0;
  for (const auto& r : data.records) failed += r.status != "ok";
  if (!o.quiet) {
    std::cout << "wrote " << files.csv << " (" << data.records.size() << " rows";
    if (!files.grids.empty()) std::cout << ", " << files.grids.size() << " grids";
    std::cout << ")\n";
    if (o.units == "si") {
      std::cout << "kappa/2pi = " << format_number(config.environment.kappa_mhz) << " MHz\n";
    } else {
      std::cout << "rates in units of kappa\n";
    }
  }
  if (failed > 0) std::cerr << failed << " point(s) failed; see the status column\n";
  return 0;
}

SweepConfig stability_config(const RunOptions& o) {
  return o.config_path.empty() ? figure_recipe("figS_stability") : load_config(o.config_path);
}

Range range_of(const SweepConfig& c, AxisName name) {
  const Axis* a = c.axis(name);
  if (!a) throw InvalidArgument("stability needs a '" + std::string(axis_name(name)) + "' axis");
  if (!a->points.empty()) throw InvalidArgument("stability axes must be start/stop/count ranges");
  return Range{a->start, a->stop, a->count};
}

int run_stability(const RunOptions& o) {
  SweepConfig c = stability_config(o);
  apply_overrides(c, o);
  c.validate();
  if (o.dump_config) {
    std::cout << config_to_json(c) << '\n';
    return 0;
  }
  const Range delta = range_of(c, AxisName::delta);
  const Range lambda = range_of(c, AxisName::lambda);
  const HamiltonianCoefficients base = variant_coefficients(c.variants.front(), c.environment);
  EnvironmentParams env;
  env.gamma = c.environment.gamma;
  const StabilityMap map = stability_diagram(delta, lambda, base.cubic, env, c.resolved_threads());

  fs::create_directories(o.out_dir);
  const fs::path dir(o.out_dir);
  write_grid((dir / (c.name + "_stability.pgrd")).string(), grid_from_stability(map));
  std::ofstream csv(dir / (c.name + "_stability.csv"), std::ios::binary | std::ios::trunc);
  const double scale = o.units == "si" ? c.environment.kappa_mhz : 1.0;
  const char* unit = o.units == "si" ? "MHz" : "kappa";
  csv << "# cubic[kappa] = " << format_number(base.cubic) << ", gamma[kappa] = " << format_number(env.gamma) << '\n';
  csv << "lambda[" << unit << "],delta[" << unit << "],fixed_points\n";
  for (std::size_t i = 0; i < map.lambda.size(); ++i) {
    for (std::size_t j = 0; j < map.delta.size(); ++j) {
      csv << format_number(map.lambda[i] * scale) << ',' << format_number(map.delta[j] * scale) << ','
          << map.counts(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) << '\n';
    }
  }
  for (const auto& w : map.warnings) std::cerr << "warning: " << w << '\n';
  if (!o.quiet) {
    int counts[8] = {};
    for (Eigen::Index i = 0; i < map.counts.size(); ++i) {
      const int k = map.counts.data()[i];
      if (k >= 0 && k < 8) ++counts[k];
    }
    std::cout << "stability map " << map.lambda.size() << " x " << map.delta.size() << " written to " << o.out_dir
              << '\n';
    for (int k = 1; k < 8; ++k) {
      if (counts[k]) std::cout << "  " << k << " fixed point(s): " << counts[k] << " cells\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"paramp: open-quantum-system models of flux-pumped parametric amplifiers"};
  app.set_version_flag("--version", std::string(PARAMP_VERSION_STRING));
  app.require_subcommand(1);

  RunOptions opts;

  auto* params = app.add_subcommand("params", "Print the effective Hamiltonian coefficients of a circuit");
  CircuitSpec circuit;
  std::string topology = "sts_inductor";
  double lj_ph = 80.0;
  double l_ph = 100.0;
  double c_pf = 4.0;
  std::optional<double> pump_mhz;
  double kappa_mhz = kRecipeKappaMhz;
  bool as_json = false;
  params->add_option("--config", opts.config_path, "Circuit JSON file (SI units)");
  params->add_option("--topology", topology, "dc_squid, sts_inductor or sts_junction")->capture_default_str();
  params->add_option("--lj", lj_ph, "Josephson inductance in pH")->capture_default_str();
  params->add_option("--l", l_ph, "Linear inductance in pH")->capture_default_str();
  params->add_option("--c", c_pf, "Total capacitance in pF")->capture_default_str();
  params->add_option("--flux", circuit.static_flux, "Static flux F in rad")->capture_default_str();
  params->add_option("--depth", circuit.modulation_depth, "Flux modulation depth")->capture_default_str();
  params->add_option("--pump-mhz", pump_mhz, "Pump frequency omega_p / 2pi in MHz");
  params->add_option("--kappa-mhz", kappa_mhz, "kappa / 2pi in MHz")->capture_default_str();
  params->add_option("--units", opts.units, "kappa or si")->check(CLI::IsMember({"kappa", "si"}))->capture_default_str();
  params->add_flag("--json", as_json, "Emit JSON");
  params->add_option("--out", opts.out_dir, "Also write params.json into this directory");

  auto* sweep = app.add_subcommand("sweep", "Run a sweep from a config file");
  sweep->add_option("--config", opts.config_path, "Sweep config (JSON)")->required()->check(CLI::ExistingFile);
  add_run_options(sweep, opts);

  auto* figure = app.add_subcommand("figure", "Run a figure recipe");
  std::string figure_name;
  bool list = false;
  figure->add_option("name", figure_name, "Recipe name");
  figure->add_flag("--list", list, "List recipe names");
  add_run_options(figure, opts);

  auto* stability = app.add_subcommand("stability", "Fixed-point count map over drive and detuning");
  stability->add_option("--config", opts.config_path, "Config with delta and lambda range axes")
      ->check(CLI::ExistingFile);
  add_run_options(stability, opts);

  auto* wigner_cmd = app.add_subcommand("wigner", "Export steady-state Wigner grids");
  wigner_cmd->add_option("--config", opts.config_path, "Sweep config; defaults to the fig2cd recipe")
      ->check(CLI::ExistingFile);
  add_run_options(wigner_cmd, opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (params->parsed()) {
      if (!opts.config_path.empty()) {
        std::ifstream in(opts.config_path, std::ios::binary);
        if (!in) throw InvalidArgument("cannot open '" + opts.config_path + "'");
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        circuit = circuit_from_json(text);
      } else {
        circuit.topology = parse_topology(topology);
        circuit.josephson_inductance = lj_ph * 1e-12;
        circuit.linear_inductance = l_ph * 1e-12;
        circuit.total_capacitance = c_pf * 1e-12;
        if (pump_mhz) circuit.pump_frequency = units::angular_from_mhz(*pump_mhz);
      }
      const ParamsReport report = params_report(circuit, kappa_mhz);
      if (as_json) {
        std::cout << params_json(report) << '\n';
      } else {
        std::cout << params_text(report, parse_unit_mode(opts.units));
      }
      if (params->count("--out")) {
        fs::create_directories(opts.out_dir);
        std::ofstream out(fs::path(opts.out_dir) / "params.json", std::ios::binary | std::ios::trunc);
        out << params_json(report) << '\n';
      }
      return 0;
    }
    if (sweep->parsed()) return run_config(load_config(opts.config_path), opts);
    if (figure->parsed()) {
      if (list) {
        for (auto n : recipe_names()) std::cout << n << '\n';
        return 0;
      }
      if (figure_name.empty()) throw InvalidArgument("figure needs a recipe name (see --list)");
      return run_config(figure_recipe(figure_name), opts);
    }
    if (stability->parsed()) return run_stability(opts);
    if (wigner_cmd->parsed()) {
      SweepConfig c = opts.config_path.empty() ? figure_recipe("fig2cd") : load_config(opts.config_path);
      if (!c.has(Observable::wigner)) c.observables.push_back(Observable::wigner);
      return run_config(std::move(c), opts);
    }
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
