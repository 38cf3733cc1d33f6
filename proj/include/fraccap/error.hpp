// Copyright 2026 The fraccap Authors.
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

#ifndef FRACCAP_ERROR_HPP_
#define FRACCAP_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace fraccap {

// Numeric values are shared with the C API (fraccap.h).
enum class ErrorCode {
  kInvalidArgument = 1,
  kDimensionMismatch = 2,
  kSpaceMismatch = 3,
  kNotInSpace = 4,
  kUnsupported = 5,
  kNotConverged = 6,
  kIo = 7,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by the iterative solvers when the iteration cap is hit; carries the
// best bracket on the supremum found so far.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double lower, double upper)
      : Error(ErrorCode::kNotConverged, what), lower_(lower), upper_(upper) {}

  double lower() const noexcept { return lower_; }
  double upper() const noexcept { return upper_; }

 private:
  double lower_;
  double upper_;
};

}  // namespace fraccap

#endif  // FRACCAP_ERROR_HPP_
