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

// Mean-field harmonic balance: signal, idler and half-pump amplitudes, pump-mode fixed
// points, stability maps and the analytic small-signal gain.

#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "paramp/lindblad.hpp"
#include "paramp/model.hpp"

namespace paramp {

struct HarmonicState {
  Complex alpha_s = 0.0;
  Complex alpha_i = 0.0;
  Complex alpha_h = 0.0;
};

struct HarmonicDrives {
  Complex signal = 0.0;
  Complex idler = 0.0;
  Complex half_pump = 0.0;
};

struct HarmonicResidual {
  Complex signal = 0.0;
  Complex idler = 0.0;
  Complex half_pump = 0.0;

  double max_abs() const;
};

// Left minus right side of the three in-band amplitude equations (kerr and quartic terms
// are not part of this balance).
HarmonicResidual harmonic_balance_residual(const HarmonicState& state, double omega,
                                           const HamiltonianCoefficients& coeffs, const EnvironmentParams& env,
                                           const HarmonicDrives& drives = {});

// Small-signal half-pump equation (-D + i kb/2 - L a^2) a - (lambda + 3 L |a|^2) a*.
Complex pump_residual(Complex alpha_h, double delta, double lambda, double cubic, const EnvironmentParams& env);

struct FixedPoint {
  double x = 0.0;  // Re alpha_h
  double y = 0.0;  // Im alpha_h
  double residual = 0.0;  // max residual of the scaled cubic pair

  double population() const noexcept { return x * x + y * y; }
};

struct FixedPointSet {
  std::vector<FixedPoint> points;
  std::vector<double> unique_populations;  // ascending, starts with 0
  std::vector<std::string> warnings;

  int count() const noexcept { return static_cast<int>(unique_populations.size()); }
};

// Real solutions of 4 L x^3 + (lambda + D) x + (kb/2) y = 0, 4 L y^3 + (lambda - D) y + (kb/2) x = 0.
FixedPointSet pump_fixed_points(double delta, double lambda, double cubic, const EnvironmentParams& env);

// Scaled polynomial P(X) = X Q(X^2) whose real roots are the x-coordinates of the fixed
// points in units of sqrt(kb / (4|L|)); coefficients from degree 9 down to 0.
std::vector<double> fixed_point_polynomial(double delta, double lambda, double cubic, const EnvironmentParams& env);

struct Range {
  double start = 0.0;
  double stop = 0.0;
  int count = 1;

  std::vector<double> values() const;
  void validate() const;
};

struct StabilityMap {
  std::vector<double> delta;
  std::vector<double> lambda;
  Eigen::MatrixXi counts;  // (lambda index, delta index)
  std::vector<std::string> warnings;
};

StabilityMap stability_diagram(const Range& delta, const Range& lambda, double cubic, const EnvironmentParams& env,
                               int threads = 1);

// Midpoint of the first lambda step where the count changes from `from` to `to` in the
// given delta column; NaN if absent.
double find_transition(const StabilityMap& map, int delta_index, int from, int to);

// Experimental: linear stability of a fixed point of the mean-field flow
// d alpha/dt = -i (D alpha + lambda alpha* + L(3|alpha|^2 alpha* + alpha^3)) - (kb/2) alpha.
enum class LinearStability { stable, unstable, marginal };
LinearStability classify_fixed_point(const FixedPoint& p, double delta, double lambda, double cubic,
                                     const EnvironmentParams& env);

struct EffectiveParams {
  Complex delta_eff = 0.0;
  Complex lambda_eff = 0.0;
};

struct AnalyticGain {
  double gain = 1.0;
  EffectiveParams effective;
  double signal_population = 0.0;
  int iterations = 0;
  double last_residual = 0.0;
  // Smallest nonzero half-pump population of the small-signal fixed points (infinite when
  // alpha_h = 0 is the only one) and whether it lies far outside the intracavity population.
  double nearest_nontrivial_population = 0.0;
  bool operating_point_separated = true;
};

// Signal gain from the two-harmonic linear response around alpha_h = 0. With
// signal_power > 0 (input photon flux |alpha_in,s|^2 in rate units) the effective
// detuning and drive are iterated to self-consistency.
AnalyticGain sts_gain_analytic(double omega, const HamiltonianCoefficients& coeffs, const EnvironmentParams& env,
                               double signal_power = 0.0);

}  // namespace paramp
