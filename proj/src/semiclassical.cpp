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

#include "paramp/semiclassical.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <string>
#include <thread>

#include <Eigen/Eigenvalues>

#include "paramp/error.hpp"

namespace paramp {

namespace {

constexpr Complex kI(0.0, 1.0);

struct Scaled {
  double sigma;  // sign of the cubic coefficient
  double a;      // (lambda + delta) / kb
  double b;      // (lambda - delta) / kb
  double scale;  // physical amplitude per scaled unit
};

Scaled scaled_system(double delta, double lambda, double cubic, const EnvironmentParams& env) {
  const double kb = env.kappa_bar();
  return {cubic > 0.0 ? 1.0 : -1.0, (lambda + delta) / kb, (lambda - delta) / kb,
          std::sqrt(kb / (4.0 * std::abs(cubic)))};
}

Eigen::Vector2d scaled_residual(const Scaled& s, double x, double y) {
  return {s.sigma * x * x * x + s.a * x + 0.5 * y, s.sigma * y * y * y + s.b * y + 0.5 * x};
}

bool newton_polish(const Scaled& s, double& x, double& y, double& res) {
  for (int it = 0; it < 100; ++it) {
    const Eigen::Vector2d f = scaled_residual(s, x, y);
    res = f.cwiseAbs().maxCoeff();
    if (res < 1e-14) return true;
    Eigen::Matrix2d j;
    j << 3.0 * s.sigma * x * x + s.a, 0.5, 0.5, 3.0 * s.sigma * y * y + s.b;
    const Eigen::Vector2d step = j.fullPivLu().solve(f);
    if (!step.allFinite()) break;
    // Damped update: halve until the residual decreases.
    double t = 1.0;
    for (int k = 0; k < 30; ++k, t *= 0.5) {
      const Eigen::Vector2d fn = scaled_residual(s, x - t * step(0), y - t * step(1));
      if (fn.cwiseAbs().maxCoeff() < res) break;
    }
    x -= t * step(0);
    y -= t * step(1);
  }
  res = scaled_residual(s, x, y).cwiseAbs().maxCoeff();
  return res < 1e-12;
}

}  // namespace

double HarmonicResidual::max_abs() const {
  return std::max({std::abs(signal), std::abs(idler), std::abs(half_pump)});
}

HarmonicResidual harmonic_balance_residual(const HarmonicState& st, double omega, const HamiltonianCoefficients& c,
                                           const EnvironmentParams& env, const HarmonicDrives& dr) {
  env.validate();
  const double hk = env.kappa_bar() / 2.0;
  const double sk = std::sqrt(env.kappa);
  const Complex lam = c.lambda;
  const double L = c.cubic;
  const Complex as = st.alpha_s, ai = st.alpha_i, ah = st.alpha_h;
  const double ns = std::norm(as), ni = std::norm(ai), nh = std::norm(ah);
  const Complex h2 = ah * ah + std::conj(ah) * std::conj(ah);
  HarmonicResidual r;
  r.signal = (omega - c.delta + kI * hk) * as -
             (kI * sk * dr.signal + lam * std::conj(ai) +
              3.0 * L * ((ni + 2.0 * ns + 2.0 * nh) * std::conj(ai) + (h2 + ai * as) * as));
  r.idler = (-omega - c.delta + kI * hk) * ai -
            (kI * sk * dr.idler + lam * std::conj(as) +
             3.0 * L * ((ns + 2.0 * ni + 2.0 * nh) * std::conj(as) + (h2 + ai * as) * ai));
  r.half_pump = (-c.delta + kI * hk) * ah -
                (kI * sk * dr.half_pump + lam * std::conj(ah) +
                 3.0 * L *
                     ((nh + 2.0 * ns + 2.0 * ni) * std::conj(ah) +
                      (2.0 * (ai * as + std::conj(ai) * std::conj(as)) + ah * ah / 3.0) * ah));
  return r;
}

Complex pump_residual(Complex ah, double delta, double lambda, double cubic, const EnvironmentParams& env) {
  env.validate();
  return (-delta + kI * env.kappa_bar() / 2.0 - cubic * ah * ah) * ah -
         (lambda + 3.0 * cubic * std::norm(ah)) * std::conj(ah);
}

std::vector<double> fixed_point_polynomial(double delta, double lambda, double cubic, const EnvironmentParams& env) {
  env.validate();
  if (cubic == 0.0) throw InvalidArgument("fixed-point polynomial needs a nonzero cubic coefficient");
  const Scaled s = scaled_system(delta, lambda, cubic, env);
  const double a = s.a, b = s.b, sg = s.sigma;
  // y = -2(sg x^3 + a x) substituted into the second equation.
  return {-8.0, 0.0, -24.0 * sg * a, 0.0, -24.0 * a * a, 0.0, -(8.0 * sg * a * a * a + 2.0 * sg * b), 0.0,
          0.5 - 2.0 * a * b, 0.0};
}

FixedPointSet pump_fixed_points(double delta, double lambda, double cubic, const EnvironmentParams& env) {
  env.validate();
  if (!std::isfinite(delta) || !std::isfinite(lambda) || !std::isfinite(cubic)) {
    throw InvalidArgument("fixed points need finite parameters");
  }
  FixedPointSet out;
  out.points.push_back({0.0, 0.0, 0.0});
  out.unique_populations.push_back(0.0);
  if (std::abs(cubic) < 1e-14 * env.kappa) return out;

  const Scaled s = scaled_system(delta, lambda, cubic, env);
  const std::vector<double> poly = fixed_point_polynomial(delta, lambda, cubic, env);
  const int deg = 9;
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(deg, deg);
  for (int k = 0; k < deg; ++k) comp(0, k) = -poly[static_cast<std::size_t>(k + 1)] / poly[0];
  for (int k = 1; k < deg; ++k) comp(k, k - 1) = 1.0;
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
  const Eigen::VectorXcd roots = es.eigenvalues();

  std::vector<FixedPoint> scaled;
  for (Eigen::Index k = 0; k < roots.size(); ++k) {
    const Complex z = roots(k);
    if (std::abs(z.imag()) > 1e-6 * (1.0 + std::abs(z))) continue;
    if (std::abs(z) < 1e-10) continue;
    double x = z.real();
    double y = -2.0 * (s.sigma * x * x * x + s.a * x);
    double res = 0.0;
    if (!newton_polish(s, x, y, res)) {
      out.warnings.push_back("fixed-point candidate x=" + std::to_string(z.real()) +
                             " failed to polish (residual " + std::to_string(res) + ")");
      continue;
    }
    if (std::hypot(x, y) < 1e-10) continue;
    bool dup = false;
    for (const auto& p : scaled) dup = dup || (std::abs(p.x - x) < 1e-9 && std::abs(p.y - y) < 1e-9);
    if (!dup) scaled.push_back({x, y, res});
  }
  // Closure under (x, y) -> (-x, -y).
  const std::size_t n0 = scaled.size();
  for (std::size_t k = 0; k < n0; ++k) {
    const FixedPoint m{-scaled[k].x, -scaled[k].y, scaled[k].residual};
    bool dup = false;
    for (const auto& p : scaled) dup = dup || (std::abs(p.x - m.x) < 1e-9 && std::abs(p.y - m.y) < 1e-9);
    if (!dup) scaled.push_back(m);
  }
  std::sort(scaled.begin(), scaled.end(), [](const FixedPoint& l, const FixedPoint& r) {
    return l.population() != r.population() ? l.population() < r.population() : l.x < r.x;
  });
  for (const auto& p : scaled) {
    const FixedPoint phys{p.x * s.scale, p.y * s.scale, p.residual};
    out.points.push_back(phys);
    const double pop = phys.population();
    if (std::abs(pop - out.unique_populations.back()) > 1e-8 * std::max(pop, 1e-300)) {
      out.unique_populations.push_back(pop);
    }
  }
  return out;
}

std::vector<double> Range::values() const {
  validate();
  std::vector<double> v(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    v[static_cast<std::size_t>(k)] = count == 1 ? start : start + (stop - start) * k / (count - 1);
  }
  return v;
}

void Range::validate() const {
  if (count < 1) throw InvalidArgument("range count must be >= 1");
  if (!std::isfinite(start) || !std::isfinite(stop)) throw InvalidArgument("range bounds must be finite");
}

StabilityMap stability_diagram(const Range& delta, const Range& lambda, double cubic, const EnvironmentParams& env,
                               int threads) {
  env.validate();
  StabilityMap map;
  map.delta = delta.values();
  map.lambda = lambda.values();
  const int nd = delta.count, nl = lambda.count;
  map.counts.resize(nl, nd);
  std::vector<std::vector<std::string>> cell_warnings(static_cast<std::size_t>(nl) * nd);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int idx = next++; idx < nl * nd; idx = next++) {
      const int i = idx / nd, j = idx % nd;
      const FixedPointSet fp =
          pump_fixed_points(map.delta[static_cast<std::size_t>(j)], map.lambda[static_cast<std::size_t>(i)], cubic, env);
      map.counts(i, j) = fp.count();
      cell_warnings[static_cast<std::size_t>(idx)] = fp.warnings;
    }
  };
  const int nt = std::max(1, std::min(threads, nl * nd));
  std::vector<std::thread> pool;
  for (int t = 1; t < nt; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (int idx = 0; idx < nl * nd; ++idx) {
    for (const auto& w : cell_warnings[static_cast<std::size_t>(idx)]) {
      map.warnings.push_back("cell (" + std::to_string(idx / nd) + "," + std::to_string(idx % nd) + "): " + w);
    }
  }
  return map;
}

double find_transition(const StabilityMap& map, int delta_index, int from, int to) {
  if (delta_index < 0 || delta_index >= map.counts.cols()) throw InvalidArgument("delta index out of range");
  for (Eigen::Index i = 0; i + 1 < map.counts.rows(); ++i) {
    if (map.counts(i, delta_index) == from && map.counts(i + 1, delta_index) == to) {
      return 0.5 * (map.lambda[static_cast<std::size_t>(i)] + map.lambda[static_cast<std::size_t>(i + 1)]);
    }
  }
  return std::numeric_limits<double>::quiet_NaN();
}

LinearStability classify_fixed_point(const FixedPoint& p, double delta, double lambda, double cubic,
                                     const EnvironmentParams& env) {
  env.validate();
  const double hk = env.kappa_bar() / 2.0;
  auto flow = [&](double x, double y) {
    const Complex a(x, y);
    const Complex d = -kI * (delta * a + lambda * std::conj(a) +
                             cubic * (3.0 * std::norm(a) * std::conj(a) + a * a * a)) - hk * a;
    return Eigen::Vector2d(d.real(), d.imag());
  };
  const double h = 1e-7 * std::max(1.0, std::hypot(p.x, p.y));
  Eigen::Matrix2d j;
  j.col(0) = (flow(p.x + h, p.y) - flow(p.x - h, p.y)) / (2.0 * h);
  j.col(1) = (flow(p.x, p.y + h) - flow(p.x, p.y - h)) / (2.0 * h);
  const Eigen::Vector2cd ev = j.eigenvalues();
  const double re = std::max(ev(0).real(), ev(1).real());
  const double tol = 1e-9 * std::max(1.0, j.norm());
  if (re < -tol) return LinearStability::stable;
  if (re > tol) return LinearStability::unstable;
  return LinearStability::marginal;
}

AnalyticGain sts_gain_analytic(double omega, const HamiltonianCoefficients& c, const EnvironmentParams& env,
                               double signal_power) {
  env.validate();
  c.validate();
  if (!(signal_power >= 0.0)) throw InvalidArgument("signal power must be non-negative");
  const double hk = env.kappa_bar() / 2.0;
  const double k = env.kappa;
  AnalyticGain out;
  out.effective = {c.delta, c.lambda};

  auto gain_of = [&](const EffectiveParams& e) {
    const Complex num = kI * k * (omega + std::conj(e.delta_eff) + kI * hk);
    const Complex den = (omega - e.delta_eff + kI * hk) * (omega + std::conj(e.delta_eff) + kI * hk) +
                        std::norm(e.lambda_eff);
    if (std::abs(den) <= 1e-15 * (omega * omega + std::norm(e.delta_eff) + hk * hk + std::norm(e.lambda_eff))) {
      return std::numeric_limits<double>::infinity();
    }
    return std::norm(num / den - 1.0);
  };

  if (signal_power > 0.0) {
    const Complex drive = kI * std::sqrt(k) * std::sqrt(signal_power);
    double ns = 0.0;
    Complex prod = 0.0;
    double change = std::numeric_limits<double>::infinity();
    int it = 0;
    for (; it < 1000; ++it) {
      const EffectiveParams& e = out.effective;
      const Complex A = omega - e.delta_eff + kI * hk;
      const Complex B = -omega - std::conj(e.delta_eff) - kI * hk;
      // [A, -l; -l*, B] (as, ai*) = (drive, 0)
      const Complex det = A * B - std::norm(e.lambda_eff);
      if (std::abs(det) == 0.0) throw ConvergenceError("self-consistent gain hit the parametric threshold");
      const Complex as = drive * B / det;
      const Complex ai_conj = drive * std::conj(e.lambda_eff) / det;
      const double ns_new = std::norm(as);
      const Complex prod_new = std::conj(ai_conj) * as;
      change = std::max(std::abs(ns_new - ns) / std::max(ns_new, 1e-300),
                        std::abs(prod_new - prod) / std::max(std::abs(prod_new), 1e-300));
      ns = ns_new;
      prod = prod_new;
      out.effective = {c.delta + 6.0 * c.kerr * ns + 3.0 * c.cubic * prod, c.lambda + 9.0 * c.cubic * ns};
      if (change < 1e-10) break;
    }
    out.iterations = it + 1;
    out.last_residual = change;
    out.signal_population = ns;
    if (!(change < 1e-10)) {
      throw ConvergenceError("self-consistent signal population did not converge (last change " +
                             std::to_string(change) + ")");
    }
  }
  out.gain = gain_of(out.effective);

  if (c.cubic != 0.0) {
    const FixedPointSet fp = pump_fixed_points(c.delta, c.lambda.imag() == 0.0 ? c.lambda.real() : std::abs(c.lambda), c.cubic, env);
    out.nearest_nontrivial_population =
        fp.count() > 1 ? fp.unique_populations[1] : std::numeric_limits<double>::infinity();
    // Intracavity scale: signal population plus the DPA-like vacuum-squeezing photon number.
    const double l = std::min(std::abs(c.lambda), 0.999 * hk);
    const double dpa_n = 0.5 * (hk / (2.0 * (hk + l)) + hk / (2.0 * (hk - l)) - 1.0);
    out.operating_point_separated = out.nearest_nontrivial_population > 10.0 * (out.signal_population + dpa_n + 1.0);
  } else {
    out.nearest_nontrivial_population = std::numeric_limits<double>::infinity();
  }
  return out;
}

}  // namespace paramp
