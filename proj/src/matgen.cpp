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

#include "framesense/matgen.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "framesense/errors.hpp"
#include "framesense/linalg.hpp"
#include "framesense/random.hpp"

namespace framesense {

namespace {

std::vector<double> gaussian_entries(std::size_t n, std::size_t k,
                                     std::uint64_t seed, double stddev) {
  RandomStream rng(seed);
  std::vector<double> e(n * k);
  for (double& v : e) v = stddev * rng.normal();
  return e;
}

// Modified Gram-Schmidt on the columns of a row-major n x k array.
void orthonormalize_columns(std::vector<double>& e, std::size_t n,
                            std::size_t k) {
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t p = 0; p < j; ++p) {
      double s = 0.0;
      for (std::size_t i = 0; i < n; ++i) s += e[i * k + p] * e[i * k + j];
      for (std::size_t i = 0; i < n; ++i) e[i * k + j] -= s * e[i * k + p];
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) norm += e[i * k + j] * e[i * k + j];
    norm = std::sqrt(norm);
    if (!(norm > 1e-12)) throw NumericalError("column orthonormalization failed");
    for (std::size_t i = 0; i < n; ++i) e[i * k + j] /= norm;
  }
}

}  // namespace

std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::kGaussian: return "gaussian";
    case Family::kGaussianRowNormalized: return "gaussian_row_normalized";
    case Family::kRandomTightFrame: return "random_tight_frame";
    case Family::kBernoulli: return "bernoulli";
    case Family::kDctFrame: return "dct_frame";
    case Family::kStackedScaled: return "stacked_scaled";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::kGaussian, Family::kGaussianRowNormalized,
                   Family::kRandomTightFrame, Family::kBernoulli,
                   Family::kDctFrame, Family::kStackedScaled}) {
    if (name == to_string(f)) return f;
  }
  throw ConstraintError("unknown matrix family '" + std::string(name) + "'");
}

SensingMatrix generate(const GeneratorSpec& spec) {
  const std::size_t n = spec.n;
  const std::size_t k = spec.k;
  if (n < 1 || k < 1) throw ConstraintError("generator needs N >= 1, K >= 1");
  if (!(spec.stddev > 0.0)) throw ConstraintError("stddev must be positive");

  switch (spec.family) {
    case Family::kGaussian:
      return SensingMatrix(n, k, gaussian_entries(n, k, spec.seed, spec.stddev));

    case Family::kGaussianRowNormalized:
      return row_normalize(
          SensingMatrix(n, k, gaussian_entries(n, k, spec.seed, spec.stddev)));

    case Family::kRandomTightFrame: {
      if (n <= k) throw ConstraintError("random_tight_frame requires N > K");
      auto e = gaussian_entries(n, k, spec.seed, 1.0);
      orthonormalize_columns(e, n, k);
      return SensingMatrix(n, k, std::move(e));
    }

    case Family::kBernoulli: {
      RandomStream rng(spec.seed);
      std::vector<double> e(n * k);
      for (double& v : e) v = rng.sign();
      return SensingMatrix(n, k, std::move(e));
    }

    case Family::kDctFrame: {
      if (k > n) throw ConstraintError("dct_frame requires K <= N");
      std::vector<double> e(n * k);
      const double nd = static_cast<double>(n);
      for (std::size_t c = 0; c < k; ++c) {
        const double norm = c == 0 ? std::sqrt(nd) : std::sqrt(nd / 2.0);
        for (std::size_t r = 0; r < n; ++r) {
          e[r * k + c] = std::cos(std::numbers::pi * (2.0 * r + 1.0) *
                                  static_cast<double>(c) / (2.0 * nd)) / norm;
        }
      }
      return SensingMatrix(n, k, std::move(e));
    }

    case Family::kStackedScaled: {
      if (n % 2 != 0) throw ConstraintError("stacked_scaled requires even N");
      if (!(spec.scale > 1.0)) throw ConstraintError("stacked_scaled requires C > 1");
      const std::size_t half = n / 2;
      auto top = gaussian_entries(half, k, spec.seed, spec.stddev);
      std::vector<double> e(top);
      e.reserve(n * k);
      for (double v : top) e.push_back(spec.scale * v);
      return SensingMatrix(n, k, std::move(e));
    }
  }
  throw ConstraintError("unknown matrix family");
}

}  // namespace framesense
