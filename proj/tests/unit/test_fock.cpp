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

#include "paramp/error.hpp"
#include "paramp/fock.hpp"

using namespace paramp;

TEST_SUITE("fock") {
  TEST_CASE("annihilation on dim 2 is the single ladder step") {
    const Operator a = annihilation(HilbertSpace(2));
    CHECK(a.matrix()(0, 1) == Complex(1.0));
    CHECK(a.matrix()(0, 0) == Complex(0.0));
    CHECK(a.matrix()(1, 0) == Complex(0.0));
    CHECK(a.matrix()(1, 1) == Complex(0.0));
  }

  TEST_CASE("annihilation entries follow sqrt(n)") {
    const Operator a = annihilation(HilbertSpace(3));
    CHECK(a.matrix()(1, 2).real() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    int nonzero = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) nonzero += a.matrix()(i, j) != Complex(0.0);
    CHECK(nonzero == 2);
  }

  TEST_CASE("number operator diagonal") {
    const HilbertSpace s(4);
    const Operator n = creation(s) * annihilation(s);
    for (int k = 0; k < 4; ++k) CHECK(n.matrix()(k, k).real() == doctest::Approx(k));
    CHECK((n.matrix() - number_operator(s).matrix()).norm() < 1e-15);
  }

  TEST_CASE("expectation values") {
    const HilbertSpace s(6);
    CHECK(std::abs(expectation(number_operator(s), vacuum_state(s))) < 1e-15);
    CHECK(expectation(number_operator(s), fock_state(s, 2)).real() == doctest::Approx(2.0));
    const DensityOperator coh = coherent_state(HilbertSpace(40), Complex(0.7, -0.4));
    CHECK(expectation(Operator::identity(HilbertSpace(40)), coh).real() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(expectation(number_operator(HilbertSpace(3)), vacuum_state(s)), DimensionMismatch);
  }

  TEST_CASE("vacuum state") {
    const DensityOperator v = vacuum_state(HilbertSpace(2));
    CHECK(v.matrix()(0, 0) == Complex(1.0));
    CHECK(v.matrix()(1, 1) == Complex(0.0));
    CHECK(v.matrix().trace().real() == 1.0);
    CHECK(v.purity() == doctest::Approx(1.0));
  }

  TEST_CASE("density checks reject invalid matrices") {
    const HilbertSpace s(2);
    Matrix bad = Matrix::Zero(2, 2);
    bad(0, 0) = 0.5;
    CHECK_THROWS_AS(DensityOperator(s, bad), InvalidArgument);
    Matrix nonherm = Matrix::Zero(2, 2);
    nonherm(0, 0) = 1.0;
    nonherm(0, 1) = 0.3;
    CHECK_THROWS_AS(DensityOperator(s, nonherm), InvalidArgument);
    Matrix negative = Matrix::Zero(2, 2);
    negative(0, 0) = 1.5;
    negative(1, 1) = -0.5;
    CHECK_FALSE(check_density(negative).valid);
    CHECK_THROWS_AS(HilbertSpace(0), InvalidArgument);
  }

  TEST_CASE("commutator defect is confined to the last level") {
    const CommutatorDefect d = commutator_defect(HilbertSpace(10));
    CHECK(d.retained_block < 1e-14);
    CHECK(d.full_space == doctest::Approx(10.0));
  }

  TEST_CASE("tail population and populations") {
    const HilbertSpace s(8);
    const DensityOperator f = fock_state(s, 6);
    CHECK(f.tail_population(2) == doctest::Approx(1.0));
    CHECK(f.tail_population(1) == doctest::Approx(0.0));
    CHECK(f.populations()[6] == doctest::Approx(1.0));
  }
}
