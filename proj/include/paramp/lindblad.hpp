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

// Lindblad generator and steady-state solver.
//
// Density matrices are vectorized row-major: vec(rho)[i * dim + j] = rho(i, j).

#pragma once

#include <memory>
#include <string>
#include <vector>

#include <Eigen/Sparse>

#include "paramp/fock.hpp"
#include "paramp/model.hpp"

namespace paramp {

using SparseMatrix = Eigen::SparseMatrix<Complex>;

struct EnvironmentParams {
  double kappa = 1.0;
  double gamma = 0.0;

  double kappa_bar() const noexcept { return kappa + gamma; }
  void validate() const;
};

class Liouvillian {
 public:
  // Rejects non-Hermitian H. Damping acts at the total rate kappa + gamma.
  Liouvillian(const Operator& hamiltonian, const EnvironmentParams& env);

  // Single decay channel at an arbitrary non-negative rate, including zero.
  static Liouvillian with_damping(const Operator& hamiltonian, double damping_rate);

  const SparseMatrix& matrix() const noexcept { return matrix_; }
  const HilbertSpace& space() const noexcept { return space_; }
  int dim() const noexcept { return space_.dim(); }
  double damping_rate() const noexcept { return damping_; }
  // Frobenius norm of the generator.
  double norm() const noexcept { return norm_; }

  Matrix apply(const Matrix& rho) const;

 private:
  Liouvillian(const Operator& hamiltonian, double damping_rate, bool);

  HilbertSpace space_;
  double damping_;
  SparseMatrix matrix_;
  double norm_ = 0.0;
};

Vector vectorize(const Matrix& rho);
Matrix unvectorize(const Vector& v, int dim);

class SteadyStateSolver {
 public:
  // Factorizes the trace-bordered generator and solves for the steady state. Throws
  // SolverError when the null space is not one-dimensional.
  explicit SteadyStateSolver(const Liouvillian& liouvillian);
  ~SteadyStateSolver();
  SteadyStateSolver(const SteadyStateSolver&) = delete;
  SteadyStateSolver& operator=(const SteadyStateSolver&) = delete;

  const Liouvillian& liouvillian() const noexcept { return liouvillian_; }
  const DensityOperator& state() const { return *state_; }
  // ||L vec(rho)||_2 / ||L||_F.
  double residual() const noexcept { return residual_; }
  // "bordered" or "inverse_iteration".
  const std::string& method() const noexcept { return method_; }

  // Returns y = int_0^inf exp(L t) source dt, i.e. the traceless solution of L y = -source.
  // The source must be traceless.
  Matrix resolvent(const Matrix& source) const;

 private:
  struct Factorization;

  Liouvillian liouvillian_;
  std::unique_ptr<Factorization> lu_;
  std::unique_ptr<DensityOperator> state_;
  double residual_ = 0.0;
  std::string method_;
};

struct TruncationSettings {
  int dim = 80;
  int max_dim = 240;
  double tail_tolerance = 1e-8;
  int tail_width = 5;
  double growth = 1.25;
  bool adaptive = true;
  // Near the parametric threshold the truncation floor is raised.
  double near_threshold_ratio = 0.96;
  int near_threshold_dim = 120;

  void validate() const;
};

struct SteadyStateReport {
  std::shared_ptr<const SteadyStateSolver> solver;
  int dim = 0;
  double tail = 0.0;
  double residual = 0.0;
  bool tail_converged = false;
  bool near_threshold = false;
  std::vector<std::string> warnings;

  const DensityOperator& state() const { return solver->state(); }
};

// Steady state of H(coeffs) + H_probe(probe) with the truncation grown until the tail
// population drops below tolerance.
SteadyStateReport solve_steady_state(const HamiltonianCoefficients& coeffs, const EnvironmentParams& env,
                                     const TruncationSettings& settings, Complex probe = 0.0);

// Single solve at a fixed truncation.
SteadyStateReport solve_steady_state_at(const HamiltonianCoefficients& coeffs, const EnvironmentParams& env,
                                        int dim, Complex probe = 0.0, int tail_width = 5,
                                        double tail_tolerance = 1e-8);

DensityOperator steady_state(const Liouvillian& liouvillian);

}  // namespace paramp
