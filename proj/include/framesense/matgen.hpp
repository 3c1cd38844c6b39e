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

#include <cstdint>
#include <string>
#include <string_view>

#include "framesense/matrix.hpp"

namespace framesense {

enum class Family {
  kGaussian,
  kGaussianRowNormalized,
  kRandomTightFrame,
  kBernoulli,
  kDctFrame,
  kStackedScaled,
};

// "gaussian", "gaussian_row_normalized", "random_tight_frame", "bernoulli",
// "dct_frame", "stacked_scaled".
std::string_view to_string(Family f) noexcept;
Family parse_family(std::string_view name);

struct GeneratorSpec {
  Family family = Family::kGaussian;
  std::size_t n = 0;
  std::size_t k = 0;
  std::uint64_t seed = 0;
  // Multiplier C > 1 applied to the lower half of stacked_scaled.
  double scale = 2.0;
  // Standard deviation of the Gaussian entries (gaussian, stacked_scaled).
  double stddev = 1.0;
};

// Deterministic in (family, N, K, seed, scale, stddev).
//   gaussian                 i.i.d. N(0, stddev^2)
//   gaussian_row_normalized  gaussian, then unit-norm rows
//   random_tight_frame       gaussian with orthonormalized columns, so
//                            Psi^T Psi = I (rows keep unequal norms)
//   bernoulli                i.i.d. +-1
//   dct_frame                first K DCT-II columns, unit norm; seed unused
//   stacked_scaled           [Psi0; C Psi0], Psi0 gaussian with N / 2 rows
SensingMatrix generate(const GeneratorSpec& spec);

}  // namespace framesense
