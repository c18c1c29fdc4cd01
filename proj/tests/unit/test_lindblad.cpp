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

#include "oracles.hpp"
#include "paramp/error.hpp"
#include "paramp/lindblad.hpp"
#include "paramp/observables.hpp"

using namespace paramp;

namespace {

HamiltonianCoefficients dpa(double lambda, double delta = 0.0) {
  HamiltonianCoefficients c;
  c.delta = delta;
  c.lambda = lambda;
  return c;
}

Matrix dense(const SparseMatrix& s) { return Matrix(s); }

}  // namespace

TEST_SUITE("lindblad") {
  TEST_CASE("single-photon decay") {
    const HilbertSpace s(4);
    const Liouvillian l(Operator::zero(s), EnvironmentParams{1.0, 0.5});
    const Matrix d = l.apply(fock_state(s, 1).matrix());
    CHECK(d(0, 0).real() == doctest::Approx(1.5));
    CHECK(d(1, 1).real() == doctest::Approx(-1.5));
    CHECK(std::abs(d.trace()) < 1e-15);
  }

  TEST_CASE("sparse superoperator matches the dense Kronecker oracle") {
    HamiltonianCoefficients c;
    c.delta = 0.2;
    c.lambda = Complex(0.3, 0.1);
    c.kerr = -0.01;
    c.cubic = 2e-3;
    c.quartic = 1e-4;
    const int d = 9;
    const Operator h = build_hamiltonian(c, HilbertSpace(d));
    const Liouvillian l(h, EnvironmentParams{1.0, 0.2});
    const oracles::CMat ref = oracles::dense_liouvillian(h.matrix(), 1.2);
    CHECK((dense(l.matrix()) - ref).norm() < 1e-12 * ref.norm());
  }

  TEST_CASE("vectorization round trip is row major") {
    Matrix m(2, 2);
    m << 1.0, 2.0, 3.0, 4.0;
    const Vector v = vectorize(m);
    CHECK(v(1) == Complex(2.0));
    CHECK((unvectorize(v, 2) - m).norm() == 0.0);
  }

  TEST_CASE("trace preservation") {
    const int d = 12;
    const Liouvillian l(build_hamiltonian(dpa(0.3, 0.1), HilbertSpace(d)), EnvironmentParams{});
    const Vector id = vectorize(Matrix::Identity(d, d));
    const Vector left = dense(l.matrix()).adjoint() * id;
    CHECK(left.norm() < 1e-10);
  }

  TEST_CASE("spectral abscissa below threshold") {
    const int d = 16;
    const Liouvillian l(build_hamiltonian(dpa(0.3), HilbertSpace(d)), EnvironmentParams{});
    Eigen::ComplexEigenSolver<Matrix> es(dense(l.matrix()));
    CHECK(es.eigenvalues().real().maxCoeff() <= 1e-10);
  }

  TEST_CASE("empty cavity relaxes to vacuum") {
    for (double delta : {0.0, 0.7, -2.0}) {
      const Liouvillian l(build_hamiltonian(dpa(0.0, delta), HilbertSpace(10)), EnvironmentParams{});
      const DensityOperator rho = steady_state(l);
      CHECK((rho.matrix() - vacuum_state(HilbertSpace(10)).matrix()).norm() < 1e-12);
    }
  }

  TEST_CASE("DPA steady state matches the moment oracle") {
    const oracles::Moments ref = oracles::dpa_moments(0.0, 0.45, 1.0);
    CHECK(ref.n == doctest::Approx(2.131578947368421));
    CHECK(std::abs(ref.m) == doctest::Approx(2.368421052631579));
    const SteadyStateReport rep = solve_steady_state(dpa(0.45), EnvironmentParams{}, TruncationSettings{});
    const GaussianMoments mom = moments(rep.state());
    CHECK(mom.n == doctest::Approx(ref.n).epsilon(1e-6));
    CHECK(std::abs(mom.m - ref.m) < 1e-6);
    CHECK(rep.tail < 1e-8);
    CHECK(rep.tail_converged);
    CHECK(rep.state().check().valid);
  }

  TEST_CASE("sparse steady state agrees with the dense null vector") {
    HamiltonianCoefficients c = dpa(0.35, 0.1);
    c.kerr = -0.05;
    c.cubic = 0.01;
    const int d = 14;
    const Operator h = build_hamiltonian(c, HilbertSpace(d));
    const Liouvillian l(h, EnvironmentParams{1.0, 0.1});
    const oracles::CMat ref = oracles::dense_steady_state(oracles::dense_liouvillian(h.matrix(), 1.1), d);
    CHECK((steady_state(l).matrix() - ref).norm() < 1e-9);
  }

  TEST_CASE("lossy DPA moments use the total damping") {
    const EnvironmentParams env{1.0, 0.3};
    const SteadyStateReport rep = solve_steady_state(dpa(0.5, 0.2), env, TruncationSettings{});
    const oracles::Moments ref = oracles::dpa_moments(0.2, 0.5, 1.3);
    const GaussianMoments mom = moments(rep.state());
    CHECK(mom.n == doctest::Approx(ref.n).epsilon(1e-6));
    CHECK(std::abs(mom.m - ref.m) < 1e-6);
  }

  TEST_CASE("truncation doubling changes the moments negligibly") {
    HamiltonianCoefficients c = dpa(0.45);
    c.kerr = -0.01;
    const SteadyStateReport a = solve_steady_state_at(c, EnvironmentParams{}, 60);
    const SteadyStateReport b = solve_steady_state_at(c, EnvironmentParams{}, 120);
    const GaussianMoments ma = moments(a.state());
    const GaussianMoments mb = moments(b.state());
    CHECK(std::abs(ma.n - mb.n) < 1e-4 * mb.n);
    CHECK(std::abs(std::abs(ma.m) - std::abs(mb.m)) < 1e-4 * std::abs(mb.m));
    CHECK(std::abs(deviation_xi(ma).value - deviation_xi(mb).value) < 1e-4 * std::max(1e-3, deviation_xi(mb).value));
  }

  TEST_CASE("adaptive truncation grows until the tail is small") {
    TruncationSettings t;
    t.dim = 10;
    const SteadyStateReport rep = solve_steady_state(dpa(0.45), EnvironmentParams{}, t);
    CHECK(rep.dim > 10);
    CHECK(rep.tail < t.tail_tolerance);
  }

  TEST_CASE("near-threshold guard") {
    TruncationSettings t;
    t.dim = 40;
    t.max_dim = 130;
    const SteadyStateReport rep = solve_steady_state(dpa(0.485), EnvironmentParams{}, t);
    CHECK(rep.near_threshold);
    CHECK(rep.dim >= 120);
    CHECK_FALSE(rep.warnings.empty());
  }

  TEST_CASE("environment and truncation validation") {
    CHECK_THROWS_AS((EnvironmentParams{0.0, 0.0}).validate(), InvalidArgument);
    CHECK_THROWS_AS((EnvironmentParams{1.0, -0.1}).validate(), InvalidArgument);
    TruncationSettings t;
    t.max_dim = 10;
    t.dim = 20;
    CHECK_THROWS_AS(t.validate(), InvalidArgument);
  }
}
