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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace paramp {

// Stable identifiers written into sweep rows when a point fails.
enum class ErrorCode {
  ok = 0,
  invalid_argument,
  dimension_mismatch,
  solver,
  convergence,
  internal,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what, ErrorCode code = ErrorCode::internal)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error(what, ErrorCode::invalid_argument) {}
};

class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& what) : Error(what, ErrorCode::dimension_mismatch) {}
};

// Singular or ill-posed linear solves.
class SolverError : public Error {
 public:
  explicit SolverError(const std::string& what) : Error(what, ErrorCode::solver) {}
};

// Iterations that did not reach their tolerance, and rejected linear-response probes.
class ConvergenceError : public Error {
 public:
  explicit ConvergenceError(const std::string& what) : Error(what, ErrorCode::convergence) {}
};

}  // namespace paramp
