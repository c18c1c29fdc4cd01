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

#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "paramp/error.hpp"
#include "paramp/response.hpp"
#include "paramp/semiclassical.hpp"

using namespace paramp;

namespace {

// Cubic-to-drive ratio of the Kerr-free STS circuit used for the gain figures.
constexpr double kStsRatio = -4.0568e-4;

bool same_populations(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > 1e-6 * std::max(1.0, b[i])) return false;
  return true;
}

}  // namespace

TEST_SUITE("semiclassical") {
  TEST_CASE("harmonic balance vanishes on the empty state") {
    const HarmonicResidual r = harmonic_balance_residual({}, 0.1, HamiltonianCoefficients{}, EnvironmentParams{});
    CHECK(r.max_abs() == 0.0);
  }

  TEST_CASE("linear signal and idler solution") {
    HamiltonianCoefficients c;
    c.delta = 0.1;
    c.lambda = Complex(0.3, 0.05);
    const double omega = 0.2;
    const Complex ds(0.01, -0.02);
    const Complex I(0.0, 1.0);
    // Unknowns (alpha_s, alpha_i^*).
    Eigen::Matrix2cd m;
    m << omega - c.delta + I * 0.5, -c.lambda, -std::conj(c.lambda), -omega - c.delta - I * 0.5;
    const Eigen::Vector2cd sol = m.fullPivLu().solve(Eigen::Vector2cd(I * ds, 0.0));
    HarmonicState st;
    st.alpha_s = sol(0);
    st.alpha_i = std::conj(sol(1));
    HarmonicDrives dr;
    dr.signal = ds;
    CHECK(harmonic_balance_residual(st, omega, c, EnvironmentParams{}, dr).max_abs() < 1e-12);
  }

  TEST_CASE("pump fixed points satisfy the half-pump balance") {
    const double lambda = 0.45;
    const double cubic = kStsRatio * lambda;
    HamiltonianCoefficients c;
    c.lambda = lambda;
    c.cubic = cubic;
    c.delta = 0.3;
    const FixedPointSet fp = pump_fixed_points(c.delta, lambda, cubic, EnvironmentParams{});
    CHECK(fp.count() > 1);
    for (const FixedPoint& p : fp.points) {
      HarmonicState st;
      st.alpha_h = Complex(p.x, p.y);
      const double scale = 1.0 + std::abs(cubic) * std::pow(std::abs(st.alpha_h), 3) + std::abs(st.alpha_h);
      const HarmonicResidual r = harmonic_balance_residual(st, 0.0, c, EnvironmentParams{});
      CHECK(std::abs(r.half_pump) < 1e-10 * scale);
      CHECK(std::abs(pump_residual(st.alpha_h, c.delta, lambda, cubic, EnvironmentParams{})) < 1e-10 * scale);
      CHECK(p.residual < 1e-12);
    }
  }

  TEST_CASE("no cubic term leaves only the origin") {
    for (double l : {0.0, 0.3, 0.7})
      for (double d : {-1.0, 0.0, 0.4}) {
        const FixedPointSet fp = pump_fixed_points(d, l, 0.0, EnvironmentParams{});
        CHECK(fp.count() == 1);
        CHECK(fp.unique_populations[0] == 0.0);
      }
  }

  TEST_CASE("bistable example") {
    const double lambda = 0.472631;
    const FixedPointSet fp = pump_fixed_points(0.0, lambda, kStsRatio * lambda, EnvironmentParams{});
    CHECK(fp.count() == 2);
  }

  TEST_CASE("crossing the bi to tri boundary") {
    const double delta = 0.3;
    const double boundary = std::sqrt(0.25 + delta * delta);
    const double cubic = kStsRatio * 0.45;
    CHECK(pump_fixed_points(delta, boundary - 0.01, cubic, EnvironmentParams{}).count() == 2);
    CHECK(pump_fixed_points(delta, boundary + 0.01, cubic, EnvironmentParams{}).count() == 3);
  }

  TEST_CASE("companion roots agree with Newton multistart") {
    const double cubic = -0.05;
    for (double d : {-1.0, -0.3, 0.0, 0.4, 1.2})
      for (double l : {0.2, 0.45, 0.6, 1.1}) {
        CAPTURE(d);
        CAPTURE(l);
        const auto ref = oracles::fixed_point_populations_newton(d, l, cubic, 1.0);
        CHECK(same_populations(pump_fixed_points(d, l, cubic, EnvironmentParams{}).unique_populations, ref));
      }
  }

  TEST_CASE("stability diagram") {
    const Range d{-1.0, 1.0, 5};
    const Range l{0.0, 1.0, 6};
    const StabilityMap flat = stability_diagram(d, l, 0.0, EnvironmentParams{});
    CHECK(flat.counts.minCoeff() == 1);
    CHECK(flat.counts.maxCoeff() == 1);
    const StabilityMap m = stability_diagram(Range{0.0, 0.0, 1}, Range{0.0, 1.0, 101}, -1e-3, EnvironmentParams{});
    const double t = find_transition(m, 0, 2, 3);
    CHECK(t == doctest::Approx(0.5).epsilon(0.02));
    CHECK(std::isnan(find_transition(flat, 0, 1, 2)));
    CHECK_THROWS_AS(find_transition(flat, 9, 1, 2), InvalidArgument);
    const StabilityMap threaded = stability_diagram(d, l, -1e-3, EnvironmentParams{}, 3);
    const StabilityMap serial = stability_diagram(d, l, -1e-3, EnvironmentParams{}, 1);
    CHECK(threaded.counts == serial.counts);
  }

  TEST_CASE("stability map shows mono, bi, tri and penta regions") {
    const StabilityMap m = stability_diagram(Range{-3.0, 3.0, 61}, Range{-3.0, 3.0, 61}, -2.25e-4, EnvironmentParams{});
    bool seen[6] = {};
    for (Eigen::Index i = 0; i < m.counts.size(); ++i) seen[m.counts.data()[i]] = true;
    CHECK(seen[1]);
    CHECK(seen[2]);
    CHECK(seen[3]);
    CHECK(seen[5]);
  }

  TEST_CASE("origin is linearly stable below threshold") {
    CHECK(classify_fixed_point(FixedPoint{}, 0.0, 0.3, -1e-3, EnvironmentParams{}) == LinearStability::stable);
    CHECK(classify_fixed_point(FixedPoint{}, 0.0, 0.7, -1e-3, EnvironmentParams{}) == LinearStability::unstable);
  }

  TEST_CASE("analytic gain reduces to the DPA without the cubic term") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> w(-1.0, 1.0);
    std::uniform_real_distribution<double> lam(0.0, 0.45);
    for (int i = 0; i < 100; ++i) {
      HamiltonianCoefficients c;
      const double omega = w(rng);
      c.delta = 0.5 * w(rng);
      c.lambda = lam(rng);
      const double ref = dpa_gain_closed_form(omega, c.delta, c.lambda, EnvironmentParams{});
      CHECK(sts_gain_analytic(omega, c, EnvironmentParams{}).gain == doctest::Approx(ref).epsilon(1e-12));
    }
  }

  TEST_CASE("analytic STS gain at the operating point") {
    HamiltonianCoefficients c;
    c.lambda = 0.45;
    c.cubic = -2.25e-4;
    const AnalyticGain g = sts_gain_analytic(0.0, c, EnvironmentParams{});
    CHECK(g.gain == doctest::Approx(90.7506925207756).epsilon(1e-9));
    CHECK(g.operating_point_separated);
    for (double omega : {-0.3, -0.1, 0.05, 0.2}) {
      CHECK(sts_gain_analytic(omega, c, EnvironmentParams{}).gain ==
            doctest::Approx(dpa_gain_closed_form(omega, 0.0, 0.45, EnvironmentParams{})).epsilon(1e-9));
    }
    const AnalyticGain loaded = sts_gain_analytic(0.0, c, EnvironmentParams{}, 1e-4);
    CHECK(loaded.iterations >= 1);
    CHECK(loaded.signal_population > 0.0);
    CHECK_THROWS_AS(sts_gain_analytic(0.0, c, EnvironmentParams{}, -1.0), InvalidArgument);
  }
}
