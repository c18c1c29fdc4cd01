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

#include "paramp/grid_io.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>

#include "paramp/error.hpp"

namespace paramp {

namespace {

constexpr char kMagic[4] = {'P', 'G', 'R', 'D'};
constexpr std::size_t kHeaderBytes = 4 + 2 * 4 + 4 * 8;

template <typename T>
void put(std::string& out, T value) {
  static_assert(std::is_trivially_copyable_v<T>);
  char bytes[sizeof(T)];
  std::memcpy(bytes, &value, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) {
    for (std::size_t i = 0; i < sizeof(T) / 2; ++i) std::swap(bytes[i], bytes[sizeof(T) - 1 - i]);
  }
  out.append(bytes, sizeof(T));
}

template <typename T>
T get(const std::string& in, std::size_t& pos) {
  if (pos + sizeof(T) > in.size()) throw InvalidArgument("PGRD data is truncated");
  char bytes[sizeof(T)];
  std::memcpy(bytes, in.data() + pos, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) {
    for (std::size_t i = 0; i < sizeof(T) / 2; ++i) std::swap(bytes[i], bytes[sizeof(T) - 1 - i]);
  }
  pos += sizeof(T);
  T value;
  std::memcpy(&value, bytes, sizeof(T));
  return value;
}

}  // namespace

void Grid2D::validate() const {
  if (rows == 0 || cols == 0) throw InvalidArgument("grid must have at least one row and column");
  if (values.size() != static_cast<std::size_t>(rows) * cols) {
    throw DimensionMismatch("grid holds " + std::to_string(values.size()) + " values for " + std::to_string(rows) +
                            " x " + std::to_string(cols));
  }
  for (double e : {x_min, x_max, y_min, y_max}) {
    if (!std::isfinite(e)) throw InvalidArgument("grid extents must be finite");
  }
}

std::string encode_grid(const Grid2D& grid) {
  grid.validate();
  std::string out;
  out.reserve(kHeaderBytes + grid.values.size() * 8);
  out.append(kMagic, 4);
  put(out, grid.rows);
  put(out, grid.cols);
  put(out, grid.x_min);
  put(out, grid.x_max);
  put(out, grid.y_min);
  put(out, grid.y_max);
  for (double v : grid.values) put(out, v);
  return out;
}

Grid2D decode_grid(const std::string& bytes) {
  if (bytes.size() < kHeaderBytes || std::memcmp(bytes.data(), kMagic, 4) != 0) {
    throw InvalidArgument("not a PGRD grid");
  }
  std::size_t pos = 4;
  Grid2D g;
  g.rows = get<std::uint32_t>(bytes, pos);
  g.cols = get<std::uint32_t>(bytes, pos);
  g.x_min = get<double>(bytes, pos);
  g.x_max = get<double>(bytes, pos);
  g.y_min = get<double>(bytes, pos);
  g.y_max = get<double>(bytes, pos);
  const std::size_t n = static_cast<std::size_t>(g.rows) * g.cols;
  if (bytes.size() != kHeaderBytes + n * 8) throw InvalidArgument("PGRD payload size does not match its header");
  g.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) g.values[i] = get<double>(bytes, pos);
  g.validate();
  return g;
}

void write_grid(const std::string& path, const Grid2D& grid) {
  const std::string bytes = encode_grid(grid);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw InvalidArgument("short write to '" + path + "'");
}

Grid2D read_grid(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return decode_grid(ss.str());
}

Grid2D grid_from_wigner(const WignerField& field) {
  if (field.x.empty() || field.p.empty()) throw InvalidArgument("empty Wigner field");
  Grid2D g;
  g.rows = static_cast<std::uint32_t>(field.p.size());
  g.cols = static_cast<std::uint32_t>(field.x.size());
  g.x_min = field.x.front();
  g.x_max = field.x.back();
  g.y_min = field.p.front();
  g.y_max = field.p.back();
  g.values.resize(static_cast<std::size_t>(g.rows) * g.cols);
  for (std::uint32_t i = 0; i < g.rows; ++i) {
    for (std::uint32_t j = 0; j < g.cols; ++j) g.values[static_cast<std::size_t>(i) * g.cols + j] = field.values(i, j);
  }
  return g;
}

Grid2D grid_from_stability(const StabilityMap& map) {
  if (map.delta.empty() || map.lambda.empty()) throw InvalidArgument("empty stability map");
  Grid2D g;
  g.rows = static_cast<std::uint32_t>(map.lambda.size());
  g.cols = static_cast<std::uint32_t>(map.delta.size());
  g.x_min = map.delta.front();
  g.x_max = map.delta.back();
  g.y_min = map.lambda.front();
  g.y_max = map.lambda.back();
  g.values.resize(static_cast<std::size_t>(g.rows) * g.cols);
  for (std::uint32_t i = 0; i < g.rows; ++i) {
    for (std::uint32_t j = 0; j < g.cols; ++j) g.values[static_cast<std::size_t>(i) * g.cols + j] = map.counts(i, j);
  }
  return g;
}

}  // namespace paramp
