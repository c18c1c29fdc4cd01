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

#include "paramp/wigner.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "paramp/error.hpp"

namespace paramp {

namespace {

// Wigner value at a = (x + i p)/sqrt2 from the Laguerre expansion of each matrix
// element, using normalized Laguerre functions f_n^k = sqrt(n!/(n+k)!) y^(k/2) e^(-y/2) L_n^k(y)
// with y = 4|a|^2.
double wigner_alpha(const Matrix& r, Complex alpha) {
  const int d = static_cast<int>(r.rows());
  const double y = 4.0 * std::norm(alpha);
  const double theta = std::arg(alpha);
  const double log_y = y > 0.0 ? std::log(y) : 0.0;
  double total = 0.0;
  for (int k = 0; k < d; ++k) {
    double f0;
    if (y == 0.0) {
      f0 = k == 0 ? 1.0 : 0.0;
    } else {
      f0 = std::exp(0.5 * k * log_y - 0.5 * y - 0.5 * std::lgamma(k + 1.0));
    }
    double f_prev = 0.0;
    double f = f0;
    Complex acc = 0.0;
    for (int n = 0; n + k < d; ++n) {
      const double sign = (n % 2 == 0) ? 1.0 : -1.0;
      acc += sign * f * r(n + k, n);
      const double next =
          n == 0 ? f0 * (1.0 + k - y) / std::sqrt(k + 1.0)
                 : ((2.0 * n + 1.0 + k - y) * f - std::sqrt(double(n) * (n + k)) * f_prev) /
                       std::sqrt((n + 1.0) * (n + k + 1.0));
      f_prev = f;
      f = next;
    }
    const Complex phase = std::polar(1.0, -k * theta);
    total += (k == 0 ? 1.0 : 2.0) * (acc * phase).real();
  }
  return total / std::numbers::pi;
}

}  // namespace

QuadratureGrid QuadratureGrid::square(double extent, int points) {
  return uniform(-extent, extent, points, -extent, extent, points);
}

QuadratureGrid QuadratureGrid::uniform(double x_min, double x_max, int nx, double p_min, double p_max, int np) {
  if (nx < 2 || np < 2) throw InvalidArgument("Wigner grid needs at least 2 points per axis");
  if (!(x_max > x_min) || !(p_max > p_min)) throw InvalidArgument("Wigner grid extents must be increasing");
  QuadratureGrid g;
  g.x.resize(static_cast<std::size_t>(nx));
  g.p.resize(static_cast<std::size_t>(np));
  for (int i = 0; i < nx; ++i) g.x[static_cast<std::size_t>(i)] = x_min + (x_max - x_min) * i / (nx - 1);
  for (int i = 0; i < np; ++i) g.p[static_cast<std::size_t>(i)] = p_min + (p_max - p_min) * i / (np - 1);
  return g;
}

void QuadratureGrid::validate() const {
  if (x.size() < 2 || p.size() < 2) throw InvalidArgument("Wigner grid needs at least 2 points per axis");
}

double WignerField::cell_area() const {
  return (x.back() - x.front()) / double(x.size() - 1) * (p.back() - p.front()) / double(p.size() - 1);
}

double WignerField::integral() const { return values.sum() * cell_area(); }

double wigner_point(const DensityOperator& rho, double x, double p) {
  return wigner_alpha(rho.matrix(), Complex(x, p) / std::numbers::sqrt2);
}

WignerField wigner(const DensityOperator& rho, const QuadratureGrid& grid) {
  grid.validate();
  WignerField out;
  out.x = grid.x;
  out.p = grid.p;
  out.values.resize(static_cast<Eigen::Index>(grid.p.size()), static_cast<Eigen::Index>(grid.x.size()));
  for (std::size_t i = 0; i < grid.p.size(); ++i) {
    for (std::size_t j = 0; j < grid.x.size(); ++j) {
      out.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          wigner_alpha(rho.matrix(), Complex(grid.x[j], grid.p[i]) / std::numbers::sqrt2);
    }
  }
  return out;
}

bool grid_covers_support(const DensityOperator& rho, const QuadratureGrid& grid) {
  const double n = expectation(number_operator(rho.space()), rho).real();
  const double r = 3.0 * std::sqrt(2.0 * n + 1.0);
  return -grid.x.front() >= r && grid.x.back() >= r && -grid.p.front() >= r && grid.p.back() >= r;
}

double gaussian_deviation(const WignerField& field, const GaussianMoments& mom) {
  const QuadratureCovariance c = quadrature_covariance(mom);
  const double det = c.xx * c.pp - c.xp * c.xp;
  if (!(det > 0.0)) throw InvalidArgument("moments do not define a Gaussian");
  const double mx = std::numbers::sqrt2 * mom.mean.real();
  const double mp = std::numbers::sqrt2 * mom.mean.imag();
  const double norm = 1.0 / (2.0 * std::numbers::pi * std::sqrt(det));
  double l1 = 0.0;
  for (std::size_t i = 0; i < field.p.size(); ++i) {
    for (std::size_t j = 0; j < field.x.size(); ++j) {
      const double dx = field.x[j] - mx;
      const double dp = field.p[i] - mp;
      const double q = (c.pp * dx * dx - 2.0 * c.xp * dx * dp + c.xx * dp * dp) / det;
      const double g = norm * std::exp(-0.5 * q);
      l1 += std::abs(field.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) - g);
    }
  }
  return l1 * field.cell_area();
}

std::string wigner_csv(const WignerField& field) {
  std::string out = "x,p,W\n";
  char buf[96];
  for (std::size_t i = 0; i < field.p.size(); ++i) {
    for (std::size_t j = 0; j < field.x.size(); ++j) {
      std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g\n", field.x[j], field.p[i],
                    field.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
      out += buf;
    }
  }
  return out;
}

}  // namespace paramp
