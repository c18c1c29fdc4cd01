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

#include "paramp/fock.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "paramp/error.hpp"

namespace paramp {

namespace {

void require_square(const HilbertSpace& space, const Matrix& m) {
  if (m.rows() != space.dim() || m.cols() != space.dim()) {
    throw DimensionMismatch("matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                            " but the space has dim " + std::to_string(space.dim()));
  }
}

double max_abs_hermitian_defect(const Matrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace

HilbertSpace::HilbertSpace(int dim) : dim_(dim) {
  if (dim < 2) throw InvalidArgument("Fock truncation dim must be >= 2, got " + std::to_string(dim));
}

Operator::Operator(HilbertSpace space, Matrix entries) : space_(space), entries_(std::move(entries)) {
  require_square(space_, entries_);
  if (!entries_.allFinite()) throw InvalidArgument("operator has non-finite entries");
}

Operator Operator::zero(HilbertSpace space) {
  return Operator(space, Matrix::Zero(space.dim(), space.dim()));
}

Operator Operator::identity(HilbertSpace space) {
  return Operator(space, Matrix::Identity(space.dim(), space.dim()));
}

Operator Operator::adjoint() const { return Operator(space_, entries_.adjoint()); }

double Operator::hermiticity_defect() const { return max_abs_hermitian_defect(entries_); }

Operator& Operator::operator+=(const Operator& rhs) {
  if (rhs.space_ != space_) throw DimensionMismatch("operator sum across different spaces");
  entries_ += rhs.entries_;
  return *this;
}

Operator& Operator::operator-=(const Operator& rhs) {
  if (rhs.space_ != space_) throw DimensionMismatch("operator difference across different spaces");
  entries_ -= rhs.entries_;
  return *this;
}

Operator& Operator::operator*=(Complex s) {
  entries_ *= s;
  return *this;
}

Operator operator*(const Operator& lhs, const Operator& rhs) {
  if (lhs.space_ != rhs.space_) throw DimensionMismatch("operator product across different spaces");
  return Operator(lhs.space_, lhs.entries_ * rhs.entries_);
}

DensityCheck check_density(const Matrix& rho, const DensityTolerances& tol) {
  DensityCheck out;
  if (rho.rows() != rho.cols() || rho.rows() == 0 || !rho.allFinite()) return out;
  out.hermiticity = max_abs_hermitian_defect(rho);
  out.trace_error = std::abs(rho.trace() - Complex(1.0, 0.0));
  const Matrix herm = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(herm, Eigen::EigenvaluesOnly);
  out.min_eigenvalue = es.eigenvalues().minCoeff();
  out.valid = out.hermiticity <= tol.hermiticity && out.trace_error <= tol.trace &&
              out.min_eigenvalue >= tol.min_eigenvalue;
  return out;
}

DensityOperator::DensityOperator(HilbertSpace space, Matrix entries, const DensityTolerances& tol)
    : space_(space), entries_(std::move(entries)) {
  require_square(space_, entries_);
  const DensityCheck c = check_density(entries_, tol);
  if (!c.valid) {
    throw InvalidArgument("not a density operator: hermiticity " + std::to_string(c.hermiticity) +
                          ", trace error " + std::to_string(c.trace_error) + ", min eigenvalue " +
                          std::to_string(c.min_eigenvalue));
  }
}

double DensityOperator::purity() const { return (entries_ * entries_).trace().real(); }

std::vector<double> DensityOperator::populations() const {
  std::vector<double> p(static_cast<std::size_t>(dim()));
  for (int n = 0; n < dim(); ++n) p[static_cast<std::size_t>(n)] = entries_(n, n).real();
  return p;
}

double DensityOperator::tail_population(int width) const {
  double tail = 0.0;
  for (int n = std::max(0, dim() - width); n < dim(); ++n) tail += entries_(n, n).real();
  return tail;
}

DensityCheck DensityOperator::check(const DensityTolerances& tol) const {
  return check_density(entries_, tol);
}

Operator annihilation(HilbertSpace space) {
  Matrix a = Matrix::Zero(space.dim(), space.dim());
  for (int n = 1; n < space.dim(); ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return Operator(space, std::move(a));
}

Operator creation(HilbertSpace space) { return annihilation(space).adjoint(); }

Operator number_operator(HilbertSpace space) {
  Matrix n = Matrix::Zero(space.dim(), space.dim());
  for (int k = 0; k < space.dim(); ++k) n(k, k) = static_cast<double>(k);
  return Operator(space, std::move(n));
}

Complex expectation(const Operator& op, const DensityOperator& rho) {
  if (op.space() != rho.space()) {
    throw DimensionMismatch("expectation: operator dim " + std::to_string(op.dim()) + " vs state dim " +
                            std::to_string(rho.dim()));
  }
  // Tr(A rho) without forming the product.
  return op.matrix().cwiseProduct(rho.matrix().transpose()).sum();
}

DensityOperator vacuum_state(HilbertSpace space) { return fock_state(space, 0); }

DensityOperator fock_state(HilbertSpace space, int n) {
  if (n < 0 || n >= space.dim()) throw InvalidArgument("Fock level " + std::to_string(n) + " outside the space");
  Matrix rho = Matrix::Zero(space.dim(), space.dim());
  rho(n, n) = 1.0;
  return DensityOperator(space, std::move(rho));
}

DensityOperator coherent_state(HilbertSpace space, Complex alpha) {
  Vector psi(space.dim());
  psi(0) = 1.0;
  for (int n = 1; n < space.dim(); ++n) psi(n) = psi(n - 1) * alpha / std::sqrt(static_cast<double>(n));
  psi.normalize();
  return DensityOperator(space, psi * psi.adjoint());
}

CommutatorDefect commutator_defect(HilbertSpace space) {
  const Matrix a = annihilation(space).matrix();
  const Matrix comm = a * a.adjoint() - a.adjoint() * a - Matrix::Identity(space.dim(), space.dim());
  const int k = space.dim() - 1;
  return {comm.topLeftCorner(k, k).norm(), comm.norm()};
}

}  // namespace paramp
