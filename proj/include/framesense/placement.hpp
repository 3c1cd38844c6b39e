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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "framesense/matrix.hpp"

namespace framesense {

enum class Algorithm { kFrameSense, kDeterminant, kMse, kMutualInformation, kCoherence, kRandom };

// "framesense", "det", "mse", "mi", "coherence", "random".
std::string_view to_string(Algorithm a) noexcept;
// Throws ConstraintError for an unknown name.
Algorithm parse_algorithm(std::string_view name);

// Result of a placement. Indices are zero-based.
struct Selection {
  // Chosen locations. Ascending for FrameSense (the survivors of the
  // elimination); in order of addition for the best-in greedy baselines;
  // in draw order for random placement.
  std::vector<Index> chosen;
  // Locations not chosen. Elimination order for FrameSense, ascending
  // otherwise.
  std::vector<Index> eliminated;
  // One value per greedy step. FrameSense: frame potential of the surviving
  // rows of the original matrix after each elimination (the first entry is
  // after the initial pair). Best-in baselines: the objective after each
  // addition.
  std::vector<double> objective_trace;

  // `chosen`, sorted.
  std::vector<Index> sorted_chosen() const;
};

struct PlacementOptions {
  Algorithm algorithm = Algorithm::kFrameSense;
  // FrameSense only: pick rows on the unit-row-norm copy of the matrix.
  bool normalize_rows = true;
  std::uint64_t seed = 0;
  double sigma2 = 1.0;
  // Regularizer for the det / mse / mi baselines. Defaults to
  // 1e-6 * (mean squared row norm).
  std::optional<double> ridge;
};

double default_ridge(const SensingMatrix& psi);

// Greedy worst-out frame-potential minimization. Starts by eliminating the
// distinct pair with the largest squared inner product, then repeatedly
// eliminates the row whose removal lowers the frame potential the most.
// Ties go to the lowest index. Requires K <= L <= N - 2.
Selection framesense(const SensingMatrix& psi, std::size_t sensors,
                     const PlacementOptions& opts = {});

// Same elimination rule, recomputing the frame potential of every candidate
// survivor set from scratch at each step. O(N^3 L K); reference only.
Selection framesense_naive(const SensingMatrix& psi, std::size_t sensors,
                           const PlacementOptions& opts = {});

// Decrease of the frame potential of `remaining` when row i is removed:
// 2 * sum_{n in remaining, n != i} G[n][i]^2 + G[i][i]^2.
double marginal_gain(const SymmetricMatrix& row_gram, IndexSet remaining, Index i);

// Best-in greedy maximizing log det(T_A + ridge * I).
Selection greedy_det(const SensingMatrix& psi, std::size_t sensors,
                     const PlacementOptions& opts = {});

// Best-in greedy minimizing trace((T_A + ridge * I)^-1).
Selection greedy_mse(const SensingMatrix& psi, std::size_t sensors,
                     const PlacementOptions& opts = {});

// Mutual-information greedy under the Gaussian model with location
// covariance Sigma = Psi Psi^T + sigma2 * I. Adds the location maximizing
// Var(i | A) / Var(i | V \ (A + i)), both conditional variances computed
// with `ridge` added to the conditioning block. Candidates whose ratio is
// within 1e-12 (relative) of the best are broken by the larger Var(i | A),
// then the lower index.
Selection greedy_mi(const SensingMatrix& psi, std::size_t sensors,
                    const PlacementOptions& opts = {});

// The ratio above for every candidate not in `chosen` (entry is NaN for
// members of `chosen`).
std::vector<double> mi_gains(const SensingMatrix& psi, IndexSet chosen,
                             double sigma2, double ridge);

// Best-in greedy: the least coherent pair first, then the row whose largest
// coherence with the chosen rows is smallest.
Selection greedy_coherence(const SensingMatrix& psi, std::size_t sensors,
                           const PlacementOptions& opts = {});

// Uniform sample of L distinct locations (partial Fisher-Yates).
Selection random_placement(const SensingMatrix& psi, std::size_t sensors,
                           std::uint64_t seed);

// Dispatches on opts.algorithm.
Selection place(const SensingMatrix& psi, std::size_t sensors,
                const PlacementOptions& opts);

enum class OracleObjective { kFramePotential, kMse };

struct OracleResult {
  Selection selection;
  // Optimal objective; +inf for kMse if no subset has full rank.
  double value = 0.0;
};

inline constexpr std::uint64_t kOracleMaxSubsets = 10'000'000;

// Exact minimizer over all C(N, L) subsets (parallel enumeration, ties to
// the lexicographically smallest subset). Throws ConstraintError when
// C(N, L) exceeds kOracleMaxSubsets.
OracleResult exhaustive_oracle(const SensingMatrix& psi, std::size_t sensors,
                               OracleObjective objective, double sigma2 = 1.0);
OracleResult exhaustive_oracle_serial(const SensingMatrix& psi,
                                      std::size_t sensors,
                                      OracleObjective objective,
                                      double sigma2 = 1.0);

}  // namespace framesense
