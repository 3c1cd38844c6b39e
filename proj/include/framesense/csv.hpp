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

#include <filesystem>
#include <iosfwd>
#include <string>

#include "framesense/matrix.hpp"

namespace framesense {

// Plain-text CSV: one matrix row per line, comma separated, no header.
// Dimensions are inferred. Blank lines are skipped.
SensingMatrix read_matrix_csv(std::istream& in);
SensingMatrix read_matrix_csv(const std::filesystem::path& path);

// Writes every entry with 17 significant digits, enough to round-trip a
// double exactly.
void write_matrix_csv(std::ostream& out, const SensingMatrix& psi);
void write_matrix_csv(const std::filesystem::path& path, const SensingMatrix& psi);

// "%.17g", with "inf" / "-inf" / "nan" for non-finite values.
std::string format_double(double v);

}  // namespace framesense
