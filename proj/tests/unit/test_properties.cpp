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
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "paramp/fock.hpp"
#include "paramp/lindblad.hpp"
#include "paramp/model.hpp"
#include "paramp/observables.hpp"
#include "paramp/response.hpp"
#include "paramp/semiclassical.hpp"
#include "paramp/wigner.hpp"

using namespace paramp;

namespace {

constexpr double kPi = std::numbers::pi;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Matrix density(int dim) {
    Matrix g(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) g(i, j) = Complex(uniform(-1, 1), uniform(-1, 1));
    Matrix rho = g * g.adjoint();
    rho /= rho.trace();
    return rho;
  }

  HamiltonianCoefficients coefficients(double max_lambda) {
    HamiltonianCoefficients c;
    c.delta = uniform(-0.5, 0.5);
    c.lambda = Complex(uniform(0.0, max_lambda), 0.0);
    c.kerr = uniform(-0.02, 0.02);
    c.cubic = uniform(-1e-3, 1e-3);
    c.quartic = uniform(-1e-4, 1e-4);
    return c;
  }

  CircuitSpec sts(double flux) {
    CircuitSpec c;
    c.topology = Topology::sts_inductor;
    c.josephson_inductance = uniform(50e-12, 200e-12);
    c.linear_inductance = uniform(50e-12, 150e-12);
    c.total_capacitance = uniform(1e-12, 6e-12);
    c.static_flux = flux;
    c.modulation_depth = uniform(0.001, 0.1);
    return c;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("ladder commutator holds on the retained block") {
    Gen g(1);
    for (int k = 0; k < 20; ++k) {
      const HilbertSpace s(g.integer(2, 60));
      const Matrix a = annihilation(s).matrix();
      const Matrix c = a * creation(s).matrix() - creation(s).matrix() * a;
      const int n = s.dim() - 1;
      CHECK((c.topLeftCorner(n, n) - Matrix::Identity(n, n)).norm() < 1e-12);
    }
  }

  TEST_CASE("Hermitian expectations are real") {
    Gen g(2);
    for (int k = 0; k < 30; ++k) {
      const int d = g.integer(2, 20);
      const DensityOperator rho(HilbertSpace(d), g.density(d));
      const Matrix h = g.density(d) * 3.0 - Matrix::Identity(d, d);
      CHECK(std::abs(expectation(Operator(HilbertSpace(d), h), rho).imag()) < 1e-10);
    }
  }

  TEST_CASE("operator constructors are bit-identical") {
    Gen g(3);
    for (int k = 0; k < 10; ++k) {
      const HilbertSpace s(g.integer(2, 40));
      const HamiltonianCoefficients c = g.coefficients(0.5);
      CHECK(annihilation(s).matrix() == annihilation(s).matrix());
      CHECK(build_hamiltonian(c, s).matrix() == build_hamiltonian(c, s).matrix());
      const Complex alpha(g.uniform(-1, 1), g.uniform(-1, 1));
      CHECK(coherent_state(s, alpha).matrix() == coherent_state(s, alpha).matrix());
    }
  }

  TEST_CASE("Hamiltonians are Hermitian") {
    Gen g(4);
    for (int k = 0; k < 30; ++k) {
      HamiltonianCoefficients c = g.coefficients(1.0);
      CHECK(build_hamiltonian(c, HilbertSpace(g.integer(2, 50))).hermiticity_defect() < 1e-13);
    }
  }

  TEST_CASE("inductor Kerr and quartic scale with cos F") {
    Gen g(5);
    for (int k = 0; k < 30; ++k) {
      CircuitSpec a = g.sts(g.uniform(-1.4, 1.4));
      CircuitSpec b = a;
      b.static_flux = g.uniform(-1.4, 1.4);
      const CircuitCoefficients ca = sts_inductor_coefficients(a);
      const CircuitCoefficients cb = sts_inductor_coefficients(b);
      // The zero-point factor depends on F through omega_a; remove it before comparing.
      const double pa = std::pow(ca.phi_zps, 4);
      const double pb = std::pow(cb.phi_zps, 4);
      const double ratio = std::cos(a.static_flux) / std::cos(b.static_flux);
      CHECK((ca.coeffs.kerr / pa) / (cb.coeffs.kerr / pb) == doctest::Approx(ratio).epsilon(1e-12));
      CHECK((ca.coeffs.quartic / pa) / (cb.coeffs.quartic / pb) == doctest::Approx(ratio).epsilon(1e-12));
    }
  }

  TEST_CASE("inductor cubic magnitude tracks the drive") {
    Gen g(6);
    for (int k = 0; k < 30; ++k) {
      const CircuitCoefficients c = sts_inductor_coefficients(g.sts(g.uniform(-kPi / 2 - 0.1, 0.0)));
      const double expect = c.phi_zps * c.phi_zps * std::abs(c.coeffs.lambda) / 6.0;
      CHECK(std::abs(c.coeffs.cubic) == doctest::Approx(expect).epsilon(1e-12));
    }
  }

  TEST_CASE("SQUID Kerr is negative on the admissible bias range") {
    Gen g(7);
    for (int k = 0; k < 30; ++k) {
      CircuitSpec c;
      c.topology = Topology::dc_squid;
      c.josephson_inductance = g.uniform(50e-12, 200e-12);
      c.total_capacitance = g.uniform(1e-12, 6e-12);
      c.static_flux = g.uniform(-1.55, 1.55);
      c.modulation_depth = g.uniform(0.0, 0.05);
      CHECK(squid_coefficients(c).coeffs.kerr < 0.0);
    }
  }

  TEST_CASE("steady states are valid density operators") {
    Gen g(8);
    for (int k = 0; k < 12; ++k) {
      const HamiltonianCoefficients c = g.coefficients(0.4);
      const EnvironmentParams env{1.0, g.uniform(0.0, 0.3)};
      const SteadyStateReport rep = solve_steady_state(c, env, TruncationSettings{});
      const DensityCheck chk = rep.state().check();
      CHECK(chk.valid);
      CHECK(chk.trace_error < 1e-10);
      CHECK(chk.hermiticity < 1e-10);
      CHECK(chk.min_eigenvalue > -1e-8);
      CHECK(rep.tail < 1e-8);
      const GaussianMoments m = moments(rep.state());
      CHECK(m.n >= -1e-8);
      CHECK(std::norm(m.m) <= m.n * (m.n + 1.0) + 1e-6);
      const WignerField w = wigner(rep.state(), QuadratureGrid::square(8.0, 121));
      CHECK(w.integral() == doctest::Approx(1.0).epsilon(1e-3));
    }
  }

  TEST_CASE("efficiency never beats the Caves limit") {
    Gen g(9);
    for (int k = 0; k < 200; ++k) {
      const double lambda = g.uniform(0.0, 0.49);
      const EnvironmentParams env{1.0, 0.0};
      HamiltonianCoefficients c;
      c.lambda = lambda;
      c.cubic = g.uniform(-1e-3, 0.0);
      const double gain = dpa_gain_closed_form(0.0, 0.0, lambda, env);
      const NoiseResult r = added_noise_and_efficiency(gain, c, env);
      CAPTURE(lambda);
      CAPTURE(gain);
      CHECK(r.efficiency <= caves_efficiency_limit(gain) + 1e-6);
    }
  }

  TEST_CASE("probe gain equals the closed form for the DPA") {
    Gen g(10);
    for (int k = 0; k < 6; ++k) {
      HamiltonianCoefficients c;
      c.lambda = g.uniform(0.0, 0.45);
      const double probe = phase_preserving_gain(probe_gain_matrix(c, EnvironmentParams{}).g);
      CHECK(probe == doctest::Approx(dpa_gain_closed_form(0.0, 0.0, c.lambda, EnvironmentParams{})).epsilon(2e-2));
    }
  }

  TEST_CASE("fixed points are symmetric, certified and bounded") {
    Gen g(11);
    for (int k = 0; k < 200; ++k) {
      const double lambda = g.uniform(-3.0, 3.0);
      const double delta = g.uniform(-3.0, 3.0);
      const double cubic = (g.integer(0, 1) ? 1.0 : -1.0) * std::pow(10.0, g.uniform(-5.0, -1.0));
      const EnvironmentParams env{1.0, g.uniform(0.0, 0.5)};
      const FixedPointSet fp = pump_fixed_points(delta, lambda, cubic, env);
      CHECK(fp.count() >= 1);
      CHECK(fp.count() <= 5);
      CHECK(fp.unique_populations.front() == 0.0);
      for (const FixedPoint& p : fp.points) {
        CHECK(p.residual < 1e-12);
        bool mirrored = false;
        for (const FixedPoint& q : fp.points)
          mirrored = mirrored || (std::abs(q.x + p.x) < 1e-9 * std::max(1.0, std::abs(p.x)) &&
                                  std::abs(q.y + p.y) < 1e-9 * std::max(1.0, std::abs(p.y)));
        CHECK(mirrored);
      }
    }
  }

  TEST_CASE("companion roots match dense Newton multistart on a coarse grid") {
    const double cubic = -2e-2;
    int mismatches = 0;
    for (int i = 0; i < 10; ++i) {
      for (int j = 0; j < 10; ++j) {
        const double delta = -2.0 + 4.0 * i / 9.0;
        const double lambda = -2.0 + 4.0 * j / 9.0;
        const auto ref = oracles::fixed_point_populations_newton(delta, lambda, cubic, 1.0, 10000, 99 + i * 10 + j);
        const auto got = pump_fixed_points(delta, lambda, cubic, EnvironmentParams{}).unique_populations;
        bool same = got.size() == ref.size();
        for (std::size_t k = 0; same && k < got.size(); ++k)
          same = std::abs(got[k] - ref[k]) <= 1e-6 * std::max(1.0, ref[k]);
        if (!same) {
          ++mismatches;
          MESSAGE("delta " << delta << " lambda " << lambda << ": " << got.size() << " vs " << ref.size());
        }
      }
    }
    CHECK(mismatches == 0);
  }

  TEST_CASE("stability diagram counts are bounded") {
    Gen g(12);
    for (int k = 0; k < 3; ++k) {
      const double cubic = -std::pow(10.0, g.uniform(-4.0, -2.0));
      const StabilityMap m = stability_diagram(Range{-3.0, 3.0, 13}, Range{-3.0, 3.0, 13}, cubic, EnvironmentParams{});
      CHECK(m.counts.minCoeff() >= 1);
      CHECK(m.counts.maxCoeff() <= 5);
    }
  }
}
