// Copyright 2026 The FrameSense Authors.
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace framesense {

// Raised when a caller violates a documented precondition (bad L, empty
// selection, out-of-range index, ...). The CLI maps it to exit status 2.
class ConstraintError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A row whose norm is too small to be normalized or compared.
class ZeroRowError : public ConstraintError {
 public:
  explicit ZeroRowError(std::size_t row)
      : ConstraintError("row " + std::to_string(row + 1) +
                        " has (near-)zero norm"),
        row_(row) {}

  // Zero-based index of the offending row.
  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

// Numerical failure: Jacobi non-convergence, rank deficiency in a solve,
// loss of positive definiteness.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace framesense
