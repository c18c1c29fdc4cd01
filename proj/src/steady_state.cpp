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

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#ifdef PARAMP_HAVE_UMFPACK
#include <Eigen/UmfPackSupport>
#else
#include <Eigen/SparseLU>
#endif

#include "paramp/error.hpp"
#include "paramp/lindblad.hpp"

namespace paramp {

namespace {

#ifdef PARAMP_HAVE_UMFPACK
using LuSolver = Eigen::UmfPackLU<SparseMatrix>;
#else
using LuSolver = Eigen::SparseLU<SparseMatrix, Eigen::COLAMDOrdering<int>>;
#endif

// Generator with the equation for rho(0,0) replaced by Tr(rho) = 1.
SparseMatrix bordered(const SparseMatrix& l, int dim) {
  std::vector<Eigen::Triplet<Complex>> trip;
  trip.reserve(static_cast<std::size_t>(l.nonZeros()) + dim);
  for (int col = 0; col < l.outerSize(); ++col) {
    for (SparseMatrix::InnerIterator it(l, col); it; ++it) {
      if (it.row() != 0) trip.emplace_back(static_cast<int>(it.row()), col, it.value());
    }
  }
  for (int k = 0; k < dim; ++k) trip.emplace_back(0, k * dim + k, Complex(1.0));
  SparseMatrix m(l.rows(), l.cols());
  m.setFromTriplets(trip.begin(), trip.end());
  m.makeCompressed();
  return m;
}

Matrix hermitize(const Matrix& m) { return 0.5 * (m + m.adjoint()); }

}  // namespace

struct SteadyStateSolver::Factorization {
  SparseMatrix matrix;
  LuSolver lu;
  // Bordered system (trace row) or shifted generator L - mu I.
  bool shifted = false;

  bool factorize(SparseMatrix m) {
    matrix = std::move(m);
    lu.analyzePattern(matrix);
    if (lu.info() != Eigen::Success) return false;
    lu.factorize(matrix);
    return lu.info() == Eigen::Success;
  }

  Vector solve(const Vector& rhs) const {
    Vector x = lu.solve(rhs);
    // One step of iterative refinement.
    const Vector r = rhs - matrix * x;
    x += lu.solve(r);
    return x;
  }
};

SteadyStateSolver::SteadyStateSolver(const Liouvillian& liouvillian)
    : liouvillian_(liouvillian), lu_(std::make_unique<Factorization>()) {
  const int d = liouvillian_.dim();
  const SparseMatrix& l = liouvillian_.matrix();
  const double lnorm = std::max(liouvillian_.norm(), 1e-300);

  Vector x;
  bool ok = lu_->factorize(bordered(l, d));
  if (ok) {
    Vector rhs = Vector::Zero(l.rows());
    rhs(0) = 1.0;
    x = lu_->solve(rhs);
    ok = x.allFinite() && (l * x).norm() <= 1e-6 * lnorm * x.norm();
  }
  if (ok) {
    method_ = "bordered";
  } else {
    // Null-space inverse iteration on a slightly shifted generator from two random starts.
    const double mu = -1e-9 * lnorm / std::sqrt(static_cast<double>(l.rows()));
    SparseMatrix shifted = l;
    for (int k = 0; k < shifted.rows(); ++k) shifted.coeffRef(k, k) -= mu;
    auto fact = std::make_unique<Factorization>();
    fact->shifted = true;
    if (!fact->factorize(std::move(shifted))) {
      throw SolverError("steady state: generator is singular beyond its null space");
    }
    std::mt19937_64 rng(0x5eed);
    std::normal_distribution<double> gauss;
    Vector v[2];
    for (auto& vi : v) {
      vi.resize(l.rows());
      for (Eigen::Index k = 0; k < vi.size(); ++k) vi(k) = Complex(gauss(rng), gauss(rng));
      for (int it = 0; it < 4; ++it) {
        vi = fact->lu.solve(vi);
        if (!vi.allFinite()) throw SolverError("steady state: inverse iteration diverged");
        vi.normalize();
      }
    }
    const double overlap = std::abs(v[0].dot(v[1]));
    if (overlap < 1.0 - 1e-6) {
      throw SolverError("steady state: null space of the generator is multidimensional (overlap " +
                        std::to_string(overlap) + ")");
    }
    x = v[0];
    lu_ = std::move(fact);
    method_ = "inverse_iteration";
  }

  Matrix rho = hermitize(unvectorize(x, d));
  const Complex tr = rho.trace();
  if (std::abs(tr) < 1e-300) throw SolverError("steady state: null vector has zero trace");
  rho /= tr.real();
  residual_ = (l * vectorize(rho)).norm() / lnorm;
  try {
    state_ = std::make_unique<DensityOperator>(HilbertSpace(d), std::move(rho));
  } catch (const InvalidArgument& e) {
    throw SolverError(std::string("steady state failed validation: ") + e.what());
  }
}

SteadyStateSolver::~SteadyStateSolver() = default;

Matrix SteadyStateSolver::resolvent(const Matrix& source) const {
  const int d = liouvillian_.dim();
  if (source.rows() != d || source.cols() != d) throw DimensionMismatch("resolvent source dimension mismatch");
  const double scale = std::max(source.cwiseAbs().maxCoeff(), 1e-300);
  if (std::abs(source.trace()) > 1e-9 * scale * d) throw InvalidArgument("resolvent source must be traceless");
  Vector rhs = -vectorize(source);
  if (!lu_->shifted) rhs(0) = 0.0;
  const Vector y = lu_->solve(rhs);
  if (!y.allFinite()) throw SolverError("resolvent solve produced non-finite values");
  return unvectorize(y, d);
}

void TruncationSettings::validate() const {
  if (dim < 2) throw InvalidArgument("truncation dim must be >= 2");
  if (max_dim < dim) throw InvalidArgument("max_dim must be >= dim");
  if (!(tail_tolerance > 0.0)) throw InvalidArgument("tail_tolerance must be positive");
  if (tail_width < 1 || tail_width >= dim) throw InvalidArgument("tail_width must lie in [1, dim)");
  if (!(growth > 1.0)) throw InvalidArgument("growth factor must exceed 1");
}

SteadyStateReport solve_steady_state_at(const HamiltonianCoefficients& coeffs, const EnvironmentParams& env,
                                        int dim, Complex probe, int tail_width, double tail_tolerance) {
  env.validate();
  const HilbertSpace space(dim);
  Operator h = build_hamiltonian(coeffs, space);
  if (probe != Complex(0.0)) h += probe_hamiltonian(probe, space);
  SteadyStateReport rep;
  rep.solver = std::make_shared<const SteadyStateSolver>(Liouvillian(h, env));
  rep.dim = dim;
  rep.tail = rep.solver->state().tail_population(tail_width);
  rep.residual = rep.solver->residual();
  rep.tail_converged = rep.tail < tail_tolerance;
  return rep;
}

SteadyStateReport solve_steady_state(const HamiltonianCoefficients& coeffs, const EnvironmentParams& env,
                                     const TruncationSettings& s, Complex probe) {
  s.validate();
  env.validate();
  int dim = s.dim;
  const double crit = std::sqrt(coeffs.delta * coeffs.delta + 0.25 * env.kappa_bar() * env.kappa_bar());
  const bool near = std::abs(coeffs.lambda) > s.near_threshold_ratio * crit;
  std::vector<std::string> warnings;
  if (near) {
    dim = std::min(std::max(dim, s.near_threshold_dim), std::max(s.max_dim, s.near_threshold_dim));
    warnings.push_back("drive within " + std::to_string(100.0 * (1.0 - s.near_threshold_ratio)) +
                       "% of the parametric threshold: truncation convergence dominates the error");
  }
  while (true) {
    SteadyStateReport rep = solve_steady_state_at(coeffs, env, dim, probe, s.tail_width, s.tail_tolerance);
    rep.near_threshold = near;
    if (rep.tail_converged || !s.adaptive || dim >= s.max_dim) {
      if (!rep.tail_converged) {
        warnings.push_back("tail population " + std::to_string(rep.tail) + " above tolerance at dim " +
                           std::to_string(dim));
      }
      if (rep.residual > 1e-10) warnings.push_back("steady-state residual " + std::to_string(rep.residual));
      rep.warnings = std::move(warnings);
      return rep;
    }
    dim = std::min(s.max_dim, static_cast<int>(std::ceil(dim * s.growth)));
  }
}

DensityOperator steady_state(const Liouvillian& liouvillian) { return SteadyStateSolver(liouvillian).state(); }

}  // namespace paramp
