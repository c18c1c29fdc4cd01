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

#include "paramp/lindblad.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "paramp/error.hpp"

namespace paramp {

void EnvironmentParams::validate() const {
  if (!(kappa > 0.0) || !std::isfinite(kappa)) throw InvalidArgument("kappa must be positive and finite");
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) throw InvalidArgument("gamma must be non-negative and finite");
}

Liouvillian::Liouvillian(const Operator& hamiltonian, const EnvironmentParams& env)
    : Liouvillian(hamiltonian, (env.validate(), env.kappa_bar()), true) {}

Liouvillian Liouvillian::with_damping(const Operator& hamiltonian, double damping_rate) {
  if (!(damping_rate >= 0.0) || !std::isfinite(damping_rate)) {
    throw InvalidArgument("damping rate must be non-negative");
  }
  return Liouvillian(hamiltonian, damping_rate, true);
}

Liouvillian::Liouvillian(const Operator& hamiltonian, double damping_rate, bool)
    : space_(hamiltonian.space()), damping_(damping_rate) {
  if (!hamiltonian.is_hermitian(1e-12 * std::max(1.0, hamiltonian.matrix().cwiseAbs().maxCoeff()))) {
    throw InvalidArgument("Liouvillian requires a Hermitian Hamiltonian (defect " +
                          std::to_string(hamiltonian.hermiticity_defect()) + ")");
  }
  const int d = space_.dim();
  const Matrix& h = hamiltonian.matrix();
  const Complex mi(0.0, -1.0);

  std::vector<std::pair<int, int>> nz;
  for (int k = 0; k < d; ++k) {
    for (int i = 0; i < d; ++i) {
      if (h(i, k) != Complex(0.0)) nz.emplace_back(i, k);
    }
  }

  std::vector<Eigen::Triplet<Complex>> trip;
  trip.reserve(static_cast<std::size_t>(d) * d * (2 * nz.size() / d + 3));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const int row = i * d + j;
      trip.emplace_back(row, row, -0.5 * damping_rate * (i + j));
      if (i + 1 < d && j + 1 < d) {
        trip.emplace_back(row, (i + 1) * d + (j + 1), damping_rate * std::sqrt(double(i + 1) * double(j + 1)));
      }
    }
  }
  // -i H rho and +i rho H.
  for (const auto& [r, c] : nz) {
    const Complex hv = h(r, c);
    for (int j = 0; j < d; ++j) trip.emplace_back(r * d + j, c * d + j, mi * hv);
    for (int i = 0; i < d; ++i) trip.emplace_back(i * d + c, i * d + r, -mi * hv);
  }
  matrix_.resize(d * d, d * d);
  matrix_.setFromTriplets(trip.begin(), trip.end());
  matrix_.makeCompressed();
  norm_ = matrix_.norm();
}

Matrix Liouvillian::apply(const Matrix& rho) const {
  if (rho.rows() != dim() || rho.cols() != dim()) throw DimensionMismatch("Liouvillian::apply dimension mismatch");
  return unvectorize(matrix_ * vectorize(rho), dim());
}

Vector vectorize(const Matrix& rho) {
  const int d = static_cast<int>(rho.rows());
  Vector v(static_cast<Eigen::Index>(d) * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) v(i * d + j) = rho(i, j);
  return v;
}

Matrix unvectorize(const Vector& v, int dim) {
  if (v.size() != static_cast<Eigen::Index>(dim) * dim) throw DimensionMismatch("unvectorize size mismatch");
  Matrix rho(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) rho(i, j) = v(i * dim + j);
  return rho;
}

}  // namespace paramp
