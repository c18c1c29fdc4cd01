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

// Gaussian moments of a steady state and the deviation parameter Xi.

#pragma once

#include "paramp/fock.hpp"

namespace paramp {

struct GaussianMoments {
  Complex mean = 0.0;  // <a>
  double n = 0.0;      // <a^dag a> - |<a>|^2
  Complex m = 0.0;     // <a^2> - <a>^2
};

GaussianMoments moments(const DensityOperator& rho);

struct XiResult {
  double value = 0.0;  // clamped to [0, 1]
  double raw = 0.0;
  bool vacuum_limit = false;  // N below 1e-12, value set to 0
  bool clamped = false;       // raw value left [0, 1] by more than 1e-6
};

// Xi = 1 - |M| / sqrt(N (N + 1/2)); zero for an ideal degenerate parametric amplifier.
XiResult deviation_xi(const GaussianMoments& mom);

// Quadrature covariance of x = (a + a^dag)/sqrt2, p = i(a^dag - a)/sqrt2.
struct QuadratureCovariance {
  double xx = 0.0;
  double pp = 0.0;
  double xp = 0.0;  // symmetrized
};

QuadratureCovariance quadrature_covariance(const GaussianMoments& mom);

}  // namespace paramp
