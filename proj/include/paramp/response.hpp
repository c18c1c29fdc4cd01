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

// Linear-response gain, added noise and the closed-form degenerate-amplifier gain.

#pragma once

#include "paramp/lindblad.hpp"
#include "paramp/model.hpp"

namespace paramp {

// Quadrature response of (X_out, P_out) to (X_in, P_in), X = (a + a^dag)/sqrt2.
struct GainMatrix {
  double g11 = 1.0;
  double g12 = 0.0;
  double g21 = 0.0;
  double g22 = 1.0;

  bool finite() const;
};

struct ProbeSpec {
  double amplitude = 1e-3;  // epsilon, in the same units as kappa
  double phase = 0.0;       // of the first probe; the second is rotated by pi/2
  int max_halvings = 6;
  double linearity_tolerance = 5e-3;

  void validate(const EnvironmentParams& env) const;
};

struct GainMatrixResult {
  GainMatrix g;
  double probe_amplitude = 0.0;  // accepted epsilon
  double max_relative_change = 0.0;
  int halvings = 0;
  int dim = 0;
  double tail = 0.0;
  double residual = 0.0;
  std::vector<std::string> warnings;
};

// Coherent input equivalent to H_probe = eps a^dag + eps* a.
Complex probe_input_amplitude(Complex eps, const EnvironmentParams& env);

GainMatrixResult probe_gain_matrix(const HamiltonianCoefficients& coeffs, const EnvironmentParams& env,
                                   const ProbeSpec& probe = {}, const TruncationSettings& truncation = {});

double phase_preserving_gain(const GainMatrix& g);

enum class GainForm { corrected, as_printed };

// G = |i kappa (w + D + i kb/2) / ((w + i kb/2)^2 - D^2 + |lambda|^2) - 1|^2; +inf at threshold.
double dpa_gain_closed_form(double omega, double delta, Complex lambda, const EnvironmentParams& env,
                            GainForm form = GainForm::corrected);

double parametric_threshold(double delta, const EnvironmentParams& env);

// lambda in [0, lambda_crit) with dpa_gain_closed_form(0, 0, lambda) = G.
double dpa_equivalent_drive(double gain, const EnvironmentParams& env);

// <|d a_in|^2> in the cavity vacuum, with a_in eliminated through the Langevin equation
// at signal detuning omega (includes the loss-port contribution).
double vacuum_input_noise(const HamiltonianCoefficients& coeffs, const EnvironmentParams& env, double omega = 0.0);

struct NoiseResult {
  double added_noise = 0.0;  // A, photons
  double efficiency = 1.0;   // 1 / (1 + 2A)
  double lambda_dpa = 0.0;
  double input_noise = 0.0;
  double caves_bound = 0.0;  // (G - 1) / (2G)
};

NoiseResult added_noise_and_efficiency(double gain, double lambda_dpa, double input_noise,
                                       const EnvironmentParams& env);
NoiseResult added_noise_and_efficiency(double gain, const HamiltonianCoefficients& coeffs,
                                       const EnvironmentParams& env);

// Largest-efficiency curve G / (2G - 1) allowed by the added-noise bound.
double caves_efficiency_limit(double gain);

// Drive at which the lossy closed-form gain reaches unity from below.
double lossy_zero_gain_threshold(const EnvironmentParams& env);

}  // namespace paramp
