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

// PGRD binary grid files for 2-D fields.
//
// Layout, little-endian throughout:
//   4 bytes   magic "PGRD"
//   u32 rows, u32 cols
//   f64 x_min, x_max, y_min, y_max   (columns span x, rows span y)
//   rows * cols f64 values, row-major

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "paramp/semiclassical.hpp"
#include "paramp/wigner.hpp"

namespace paramp {

struct Grid2D {
  std::uint32_t rows = 0;
  std::uint32_t cols = 0;
  double x_min = 0.0;
  double x_max = 0.0;
  double y_min = 0.0;
  double y_max = 0.0;
  std::vector<double> values;

  double at(std::uint32_t row, std::uint32_t col) const { return values[static_cast<std::size_t>(row) * cols + col]; }
  void validate() const;
};

std::string encode_grid(const Grid2D& grid);
Grid2D decode_grid(const std::string& bytes);

void write_grid(const std::string& path, const Grid2D& grid);
Grid2D read_grid(const std::string& path);

// Rows follow p, columns follow x.
Grid2D grid_from_wigner(const WignerField& field);
// Rows follow lambda, columns follow delta; values are fixed-point counts.
Grid2D grid_from_stability(const StabilityMap& map);

}  // namespace paramp
