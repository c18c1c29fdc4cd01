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

#include "paramp/squeezing.hpp"

#include <cmath>
#include <numbers>

#include "paramp/error.hpp"

namespace paramp {

namespace {

constexpr double kPi = std::numbers::pi;

void require_steady(const Liouvillian& l, const DensityOperator& rho) {
  if (rho.dim() != l.dim()) throw DimensionMismatch("state and generator dimensions differ");
  const double r = (l.matrix() * vectorize(rho.matrix())).norm() / std::max(l.norm(), 1e-300);
  if (r > 1e-8) throw InvalidArgument("supplied state is not a steady state of the generator");
}

}  // namespace

double to_db(double ratio) { return 10.0 * std::log10(ratio); }

OutputNoise::OutputNoise(const SteadyStateSolver& solver, const EnvironmentParams& env) {
  init(solver, solver.state(), env);
}

OutputNoise::OutputNoise(const SteadyStateSolver& solver, const DensityOperator& rho, const EnvironmentParams& env) {
  require_steady(solver.liouvillian(), rho);
  init(solver, rho, env);
}

void OutputNoise::init(const SteadyStateSolver& solver, const DensityOperator& rho, const EnvironmentParams& env) {
  env.validate();
  const int d = rho.dim();
  const Matrix a = annihilation(rho.space()).matrix();
  const Matrix& r = rho.matrix();
  const Complex mean = a.cwiseProduct(r.transpose()).sum();
  const Matrix da = a - mean * Matrix::Identity(d, d);
  // y_a = int exp(Lt)(da rho), y_b = int exp(Lt)(rho da^dag).
  const Matrix ya = solver.resolvent(da * r);
  const Matrix yb = solver.resolvent(r * da.adjoint());
  auto tr = [](const Matrix& op, const Matrix& y) { return op.cwiseProduct(y.transpose()).sum(); };
  const Matrix ad = a.adjoint();
  // <:dX(t) dX(0):> integrated over t >= 0, written as c0 + Re(c2 e^{-2 i theta}).
  const Complex t_aa = tr(a, ya);
  const Complex t_ab = tr(a, yb);
  const Complex t_da = tr(ad, ya);
  const Complex t_db = tr(ad, yb);
  // Tr[X y] = (1/2)[e^{-2i th} t_aa + t_ab + t_da + e^{2i th} t_db]
  const double c0 = 0.5 * (t_ab + t_da).real();
  const Complex c2 = 0.5 * (t_aa + std::conj(t_db));
  offset_ = 0.5 + 2.0 * env.kappa * c0;
  amplitude_ = 2.0 * env.kappa * c2;
}

double OutputNoise::variance(double theta) const {
  return offset_ + (amplitude_ * std::polar(1.0, -2.0 * theta)).real();
}

SqueezingResult OutputNoise::squeezing(double tolerance) const {
  // Coarse scan, then golden-section refinement around the best bracket.
  constexpr int coarse = 64;
  int best = 0;
  double best_v = variance(0.0);
  for (int i = 1; i < coarse; ++i) {
    const double v = variance(kPi * i / coarse);
    if (v < best_v) {
      best_v = v;
      best = i;
    }
  }
  double lo = kPi * (best - 1) / coarse;
  double hi = kPi * (best + 1) / coarse;
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = hi - g * (hi - lo);
  double d = lo + g * (hi - lo);
  double fc = variance(c);
  double fd = variance(d);
  while (hi - lo > tolerance) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - g * (hi - lo);
      fc = variance(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + g * (hi - lo);
      fd = variance(d);
    }
  }
  SqueezingResult out;
  double theta = 0.5 * (lo + hi);
  theta = std::fmod(theta, kPi);
  if (theta < 0.0) theta += kPi;
  out.theta_min = theta;
  out.min_variance = variance(theta);
  out.max_variance = offset_ + std::abs(amplitude_);
  out.analytic_min_variance = offset_ - std::abs(amplitude_);
  if (!(out.min_variance > 0.0)) throw SolverError("output variance is not positive; truncation too small");
  out.level = 0.5 / out.min_variance;
  out.level_db = to_db(out.level);
  return out;
}

double output_quadrature_variance(const Liouvillian& liouvillian, const DensityOperator& rho_ss, double theta,
                                  const EnvironmentParams& env) {
  const SteadyStateSolver solver(liouvillian);
  return OutputNoise(solver, rho_ss, env).variance(theta);
}

SqueezingResult squeezing_level(const Liouvillian& liouvillian, const DensityOperator& rho_ss,
                                const EnvironmentParams& env) {
  const SteadyStateSolver solver(liouvillian);
  return OutputNoise(solver, rho_ss, env).squeezing();
}

}  // namespace paramp
