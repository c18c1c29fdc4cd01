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

// Zero-frequency output quadrature noise from the quantum regression theorem.

#pragma once

#include "paramp/lindblad.hpp"

namespace paramp {

struct SqueezingResult {
  double level = 1.0;          // S_f = (1/2) / min variance
  double level_db = 0.0;
  double theta_min = 0.0;      // radians in [0, pi)
  double min_variance = 0.5;
  double max_variance = 0.5;
  // Minimum of the exact sinusoidal form, for cross-checking the search.
  double analytic_min_variance = 0.5;
};

// Output variance of X_theta = (a e^{-i theta} + a^dag e^{i theta})/sqrt2 as a function of
// theta. Two resolvent solves are made at construction; every angle after that is cheap.
class OutputNoise {
 public:
  OutputNoise(const SteadyStateSolver& solver, const EnvironmentParams& env);
  // Uses the supplied steady state of the solver's generator.
  OutputNoise(const SteadyStateSolver& solver, const DensityOperator& rho, const EnvironmentParams& env);

  double variance(double theta) const;
  SqueezingResult squeezing(double tolerance = 1e-4) const;

  // variance(theta) = offset + Re(amplitude e^{-2 i theta}).
  double offset() const noexcept { return offset_; }
  Complex amplitude() const noexcept { return amplitude_; }

 private:
  void init(const SteadyStateSolver& solver, const DensityOperator& rho, const EnvironmentParams& env);

  double offset_ = 0.5;
  Complex amplitude_ = 0.0;
};

double output_quadrature_variance(const Liouvillian& liouvillian, const DensityOperator& rho_ss, double theta,
                                  const EnvironmentParams& env);

SqueezingResult squeezing_level(const Liouvillian& liouvillian, const DensityOperator& rho_ss,
                                const EnvironmentParams& env);

double to_db(double ratio);

}  // namespace paramp
