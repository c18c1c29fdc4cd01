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

#include "paramp/response.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "paramp/error.hpp"
#include "paramp/observables.hpp"

namespace paramp {

namespace {

constexpr Complex kI(0.0, 1.0);

// Real amplitude gain on the a_out = g a_in branch at zero detuning and zero signal offset.
double dpa_amplitude_gain(double lambda, const EnvironmentParams& env) {
  const double kb = env.kappa_bar();
  return env.kappa * kb / 2.0 / (kb * kb / 4.0 - lambda * lambda) - 1.0;
}

// Bisection for the root of an increasing function on [lo, hi).
template <class F>
double bisect_increasing(F f, double lo, double hi, double target) {
  for (int it = 0; it < 400; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= 1e-12 * std::max(std::abs(mid), 1e-300)) break;
    (f(mid) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

bool GainMatrix::finite() const {
  return std::isfinite(g11) && std::isfinite(g12) && std::isfinite(g21) && std::isfinite(g22);
}

void ProbeSpec::validate(const EnvironmentParams& env) const {
  if (!(amplitude > 0.0) || amplitude > env.kappa / 100.0) {
    throw InvalidArgument("probe amplitude must lie in (0, kappa/100]");
  }
  if (!std::isfinite(phase)) throw InvalidArgument("probe phase must be finite");
  if (max_halvings < 0) throw InvalidArgument("max_halvings must be non-negative");
  if (!(linearity_tolerance > 0.0)) throw InvalidArgument("linearity tolerance must be positive");
}

Complex probe_input_amplitude(Complex eps, const EnvironmentParams& env) {
  return -kI * eps / std::sqrt(env.kappa);
}

GainMatrixResult probe_gain_matrix(const HamiltonianCoefficients& coeffs, const EnvironmentParams& env,
                                   const ProbeSpec& probe, const TruncationSettings& truncation) {
  env.validate();
  probe.validate(env);
  const SteadyStateReport base = solve_steady_state(coeffs, env, truncation);
  const Complex mean0 = moments(base.state()).mean;
  const double sk = std::sqrt(env.kappa);
  const double s2 = std::numbers::sqrt2;

  GainMatrixResult out;
  out.dim = base.dim;
  out.tail = base.tail;
  out.residual = base.residual;
  out.warnings = base.warnings;

  auto measure = [&](double eps) {
    Eigen::Matrix2d u;
    Eigen::Matrix2d v;
    for (int c = 0; c < 2; ++c) {
      const Complex e = std::polar(eps, probe.phase + c * std::numbers::pi / 2.0);
      const SteadyStateReport rep =
          solve_steady_state_at(coeffs, env, base.dim, e, truncation.tail_width, truncation.tail_tolerance);
      out.residual = std::max(out.residual, rep.residual);
      out.tail = std::max(out.tail, rep.tail);
      const Complex ain = probe_input_amplitude(e, env);
      const Complex aout = sk * (moments(rep.state()).mean - mean0) - ain;
      u(0, c) = s2 * ain.real();
      u(1, c) = s2 * ain.imag();
      v(0, c) = s2 * aout.real();
      v(1, c) = s2 * aout.imag();
    }
    const Eigen::Matrix2d g = v * u.inverse();
    return GainMatrix{g(0, 0), g(0, 1), g(1, 0), g(1, 1)};
  };

  double eps = probe.amplitude;
  GainMatrix g = measure(eps);
  for (int h = 0;; ++h) {
    const GainMatrix gh = measure(eps / 2.0);
    const double full[4] = {g.g11, g.g12, g.g21, g.g22};
    const double half[4] = {gh.g11, gh.g12, gh.g21, gh.g22};
    double gmax = 0.0;
    for (double x : full) gmax = std::max(gmax, std::abs(x));
    const double floor = std::max(1e-6 * gmax, 1e-12);
    double worst = 0.0;
    for (int k = 0; k < 4; ++k) {
      worst = std::max(worst, std::abs(full[k] - half[k]) / std::max(std::abs(full[k]), floor));
    }
    if (!g.finite() || !gh.finite()) throw SolverError("gain matrix is not finite");
    if (worst <= probe.linearity_tolerance) {
      out.g = g;
      out.probe_amplitude = eps;
      out.max_relative_change = worst;
      out.halvings = h;
      return out;
    }
    if (h >= probe.max_halvings) {
      throw ConvergenceError("probe response is nonlinear (relative change " + std::to_string(worst) +
                             " at eps " + std::to_string(eps) + "); shrink the probe");
    }
    eps /= 2.0;
    g = gh;
  }
}

double phase_preserving_gain(const GainMatrix& g) {
  const Complex z(g.g11 + g.g22, g.g21 - g.g12);
  return std::norm(z) / 4.0;
}

double dpa_gain_closed_form(double omega, double delta, Complex lambda, const EnvironmentParams& env, GainForm form) {
  env.validate();
  const double kb = env.kappa_bar();
  const double l2 = std::norm(lambda);
  Complex num;
  Complex den;
  if (form == GainForm::corrected) {
    const Complex w = omega + kI * kb / 2.0;
    num = kI * env.kappa * (omega + delta + kI * kb / 2.0);
    den = w * w - delta * delta + l2;
  } else {
    num = env.kappa * kb / 2.0 - kI * env.kappa * (delta + omega);
    const Complex w = kb / 2.0 - kI * omega;
    den = delta * delta * w * w - l2;
  }
  const double scale = omega * omega + delta * delta + kb * kb / 4.0 + l2;
  if (std::abs(den) <= 1e-15 * scale) return std::numeric_limits<double>::infinity();
  return std::norm(num / den - 1.0);
}

double parametric_threshold(double delta, const EnvironmentParams& env) {
  env.validate();
  const double kb = env.kappa_bar();
  return std::sqrt(delta * delta + kb * kb / 4.0);
}

double dpa_equivalent_drive(double gain, const EnvironmentParams& env) {
  env.validate();
  if (!(gain >= 1.0) || !std::isfinite(gain)) throw InvalidArgument("DPA-equivalent drive needs finite G >= 1");
  const double target = std::sqrt(gain);
  const double crit = parametric_threshold(0.0, env);
  if (dpa_amplitude_gain(0.0, env) >= target) {
    if (dpa_amplitude_gain(0.0, env) - target <= 1e-12 * target) return 0.0;
    throw InvalidArgument("gain " + std::to_string(gain) + " lies below the lossy amplifier branch");
  }
  return bisect_increasing([&](double l) { return dpa_amplitude_gain(l, env); }, 0.0, crit, target);
}

double vacuum_input_noise(const HamiltonianCoefficients& coeffs, const EnvironmentParams& env, double omega) {
  env.validate();
  const HilbertSpace space(16);
  const Matrix a = annihilation(space).matrix();
  const Matrix h = build_hamiltonian(coeffs, space).matrix();
  // sqrt(kappa) a_in = (kb/2 - i w) a - i [H, a] - sqrt(gamma) b_in
  const Matrix o = (env.kappa_bar() / 2.0 - kI * omega) * a - kI * (h * a - a * h);
  const Complex mean = o(0, 0);
  const double sym = 0.5 * ((o * o.adjoint())(0, 0) + (o.adjoint() * o)(0, 0)).real();
  return (sym - std::norm(mean)) / env.kappa + env.gamma / (2.0 * env.kappa);
}

NoiseResult added_noise_and_efficiency(double gain, double lambda_dpa, double input_noise,
                                       const EnvironmentParams& env) {
  env.validate();
  if (!(gain >= 1.0 - 1e-9) || !std::isfinite(gain)) throw InvalidArgument("added noise requires finite G >= 1");
  const double g = std::max(gain, 1.0);
  NoiseResult r;
  r.lambda_dpa = lambda_dpa;
  r.input_noise = input_noise;
  r.added_noise = (g - 1.0) / g * input_noise / (env.kappa / 4.0 + lambda_dpa * lambda_dpa / env.kappa);
  r.efficiency = 1.0 / (1.0 + 2.0 * r.added_noise);
  r.caves_bound = (g - 1.0) / (2.0 * g);
  return r;
}

NoiseResult added_noise_and_efficiency(double gain, const HamiltonianCoefficients& coeffs,
                                       const EnvironmentParams& env) {
  const double g = gain >= 1.0 - 1e-9 ? std::max(gain, 1.0) : gain;
  return added_noise_and_efficiency(g, dpa_equivalent_drive(g, env), vacuum_input_noise(coeffs, env), env);
}

double caves_efficiency_limit(double gain) { return gain / (2.0 * gain - 1.0); }

double lossy_zero_gain_threshold(const EnvironmentParams& env) {
  env.validate();
  if (env.gamma == 0.0) return 0.0;
  const double crit = parametric_threshold(0.0, env);
  if (dpa_amplitude_gain(0.0, env) >= 1.0) throw SolverError("no deamplification crossing below threshold");
  return bisect_increasing([&](double l) { return dpa_amplitude_gain(l, env); }, 0.0, crit, 1.0);
}

}  // namespace paramp
