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

#include "framesense/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <vector>

#include "framesense/errors.hpp"

namespace framesense {

namespace {

bool is_blank(const std::string& s) {
  return s.find_first_not_of(" \t\r") == std::string::npos;
}

double parse_field(std::string_view field, std::size_t line) {
  while (!field.empty() && (field.front() == ' ' || field.front() == '\t')) {
    field.remove_prefix(1);
  }
  while (!field.empty() && (field.back() == ' ' || field.back() == '\t' ||
                            field.back() == '\r')) {
    field.remove_suffix(1);
  }
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError(line, "cannot parse number '" + std::string(field) + "'");
  }
  if (!std::isfinite(v)) throw ParseError(line, "non-finite entry");
  return v;
}

}  // namespace

SensingMatrix read_matrix_csv(std::istream& in) {
  std::vector<double> entries;
  std::size_t cols = 0;
  std::size_t rows = 0;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (is_blank(text)) continue;
    std::size_t count = 0;
    std::string_view rest(text);
    while (true) {
      const auto comma = rest.find(',');
      entries.push_back(parse_field(rest.substr(0, comma), line));
      ++count;
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (rows == 0) {
      cols = count;
    } else if (count != cols) {
      throw ParseError(line, "expected " + std::to_string(cols) +
                                 " columns, found " + std::to_string(count));
    }
    ++rows;
  }
  if (rows == 0) throw ParseError(line, "no matrix rows");
  return SensingMatrix(rows, cols, std::move(entries));
}

SensingMatrix read_matrix_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_matrix_csv(in);
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_matrix_csv(std::ostream& out, const SensingMatrix& psi) {
  for (std::size_t i = 0; i < psi.rows(); ++i) {
    for (std::size_t j = 0; j < psi.cols(); ++j) {
      if (j) out << ',';
      out << format_double(psi(i, j));
    }
    out << '\n';
  }
}

void write_matrix_csv(const std::filesystem::path& path,
                      const SensingMatrix& psi) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_matrix_csv(out, psi);
}

}  // namespace framesense
