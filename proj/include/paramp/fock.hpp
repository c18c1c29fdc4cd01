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

// Truncated Fock-space operators and states.

#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace paramp {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

class HilbertSpace {
 public:
  explicit HilbertSpace(int dim);

  int dim() const noexcept { return dim_; }
  bool operator==(const HilbertSpace& other) const noexcept { return dim_ == other.dim_; }
  bool operator!=(const HilbertSpace& other) const noexcept { return dim_ != other.dim_; }

 private:
  int dim_;
};

class Operator {
 public:
  Operator(HilbertSpace space, Matrix entries);

  static Operator zero(HilbertSpace space);
  static Operator identity(HilbertSpace space);

  const HilbertSpace& space() const noexcept { return space_; }
  const Matrix& matrix() const noexcept { return entries_; }
  int dim() const noexcept { return space_.dim(); }

  Operator adjoint() const;
  // Largest elementwise |A - A^dag|.
  double hermiticity_defect() const;
  bool is_hermitian(double tol = 1e-12) const { return hermiticity_defect() <= tol; }

  Operator& operator+=(const Operator& rhs);
  Operator& operator-=(const Operator& rhs);
  Operator& operator*=(Complex s);

  friend Operator operator+(Operator lhs, const Operator& rhs) { return lhs += rhs; }
  friend Operator operator-(Operator lhs, const Operator& rhs) { return lhs -= rhs; }
  friend Operator operator*(Operator lhs, Complex s) { return lhs *= s; }
  friend Operator operator*(Complex s, Operator rhs) { return rhs *= s; }
  friend Operator operator*(const Operator& lhs, const Operator& rhs);

 private:
  HilbertSpace space_;
  Matrix entries_;
};

struct DensityTolerances {
  double hermiticity = 1e-10;
  double trace = 1e-10;
  double min_eigenvalue = -1e-8;
};

struct DensityCheck {
  double hermiticity = 0.0;
  double trace_error = 0.0;
  double min_eigenvalue = 0.0;
  bool valid = false;
};

DensityCheck check_density(const Matrix& rho, const DensityTolerances& tol = {});

class DensityOperator {
 public:
  // Throws InvalidArgument when the matrix violates the tolerances.
  DensityOperator(HilbertSpace space, Matrix entries, const DensityTolerances& tol = {});

  const HilbertSpace& space() const noexcept { return space_; }
  const Matrix& matrix() const noexcept { return entries_; }
  int dim() const noexcept { return space_.dim(); }

  double purity() const;
  std::vector<double> populations() const;
  // Total population in levels n >= dim - width.
  double tail_population(int width) const;
  DensityCheck check(const DensityTolerances& tol = {}) const;

 private:
  HilbertSpace space_;
  Matrix entries_;
};

Operator annihilation(HilbertSpace space);
Operator creation(HilbertSpace space);
Operator number_operator(HilbertSpace space);

Complex expectation(const Operator& op, const DensityOperator& rho);

DensityOperator vacuum_state(HilbertSpace space);
DensityOperator fock_state(HilbertSpace space, int n);
DensityOperator coherent_state(HilbertSpace space, Complex alpha);

// Frobenius norm of [a, a^dag] - 1 over the retained (dim-1)x(dim-1) block and over
// the full truncated space. The full value is dim for any truncation.
struct CommutatorDefect {
  double retained_block = 0.0;
  double full_space = 0.0;
};

CommutatorDefect commutator_defect(HilbertSpace space);

}  // namespace paramp
