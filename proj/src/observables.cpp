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

#include "paramp/observables.hpp"

#include <algorithm>
#include <cmath>

#include "paramp/error.hpp"

namespace paramp {

GaussianMoments moments(const DensityOperator& rho) {
  const Matrix& r = rho.matrix();
  const int d = rho.dim();
  Complex a = 0.0;
  Complex a2 = 0.0;
  double n = 0.0;
  for (int k = 0; k < d; ++k) {
    n += k * r(k, k).real();
    // Tr(a rho) = sum_k sqrt(k+1) rho(k+1, k).
    if (k + 1 < d) a += std::sqrt(double(k + 1)) * r(k + 1, k);
    if (k + 2 < d) a2 += std::sqrt(double(k + 1) * double(k + 2)) * r(k + 2, k);
  }
  GaussianMoments out;
  out.mean = a;
  out.n = n - std::norm(a);
  out.m = a2 - a * a;
  return out;
}

XiResult deviation_xi(const GaussianMoments& mom) {
  if (!(mom.n >= -1e-8)) throw InvalidArgument("deviation_xi requires N >= 0");
  XiResult out;
  if (mom.n < 1e-12) {
    out.vacuum_limit = true;
    return out;
  }
  out.raw = 1.0 - std::abs(mom.m) / std::sqrt(mom.n * (mom.n + 0.5));
  out.clamped = out.raw < -1e-6 || out.raw > 1.0 + 1e-6;
  out.value = std::clamp(out.raw, 0.0, 1.0);
  return out;
}

QuadratureCovariance quadrature_covariance(const GaussianMoments& mom) {
  return {mom.n + 0.5 + mom.m.real(), mom.n + 0.5 - mom.m.real(), mom.m.imag()};
}

}  // namespace paramp
