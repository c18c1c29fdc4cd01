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

// Wigner quasiprobability on a quadrature grid, with x = (a + a^dag)/sqrt2 and
// p = i(a^dag - a)/sqrt2, normalized so that the integral over dx dp is one.

#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "paramp/fock.hpp"
#include "paramp/observables.hpp"

namespace paramp {

struct QuadratureGrid {
  std::vector<double> x;
  std::vector<double> p;

  // Uniform points on [-extent, extent] in both quadratures (endpoints included).
  static QuadratureGrid square(double extent = 6.0, int points = 201);
  static QuadratureGrid uniform(double x_min, double x_max, int nx, double p_min, double p_max, int np);
  void validate() const;
};

struct WignerField {
  std::vector<double> x;
  std::vector<double> p;
  // values(i, j) at p[i], x[j].
  Eigen::MatrixXd values;

  double cell_area() const;
  double integral() const;
  double min_value() const { return values.minCoeff(); }
};

double wigner_point(const DensityOperator& rho, double x, double p);
WignerField wigner(const DensityOperator& rho, const QuadratureGrid& grid);

// True when the grid reaches 3 sqrt(2 N_total + 1) from the origin in every direction.
bool grid_covers_support(const DensityOperator& rho, const QuadratureGrid& grid);

// L1 distance between the field and the Gaussian with the same first and second moments.
double gaussian_deviation(const WignerField& field, const GaussianMoments& mom);

// Rows of "x,p,W" with a header line.
std::string wigner_csv(const WignerField& field);

}  // namespace paramp
