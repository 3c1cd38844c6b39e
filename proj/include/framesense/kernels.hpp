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

// Data-parallel kernels. Each OpenMP kernel has a *_serial twin that is
// kept as the reference implementation for tests and benchmarks. Parallel
// and serial variants return bit-identical results: every output value is
// computed by the same sequence of floating-point operations, and
// reductions are combined in a fixed order that does not depend on the
// thread count.

#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "framesense/matrix.hpp"

namespace framesense::kernels {

// G = Psi Psi^T, the N x N Gram matrix of the rows.
SymmetricMatrix row_gram(const SensingMatrix& psi);
SymmetricMatrix row_gram_serial(const SensingMatrix& psi);

// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept;

// k-subsets of {0, .., n-1} in lexicographic order.
class Combination {
 public:
  Combination(std::size_t n, std::size_t k);

  // Jumps to the subset with the given lexicographic rank.
  void unrank(std::uint64_t rank);
  // Advances to the next subset; returns false past the last one.
  bool next() noexcept;

  const std::vector<Index>& indices() const noexcept { return idx_; }

 private:
  std::size_t n_;
  std::size_t k_;
  std::vector<Index> idx_;
};

struct SubsetOptimum {
  double value = std::numeric_limits<double>::infinity();
  std::uint64_t rank = 0;
  std::vector<Index> subset;
};

using SubsetObjective = std::function<double(IndexSet)>;

// Minimum of `objective` over all k-subsets of {0..n-1}. Ties (and an
// all-infinite objective) go to the lexicographically smallest subset.
// `objective` must be safe to call concurrently.
SubsetOptimum argmin_subsets(std::size_t n, std::size_t k,
                             const SubsetObjective& objective);
SubsetOptimum argmin_subsets_serial(std::size_t n, std::size_t k,
                                    const SubsetObjective& objective);

// Maximum of `objective` over all k-subsets.
double max_over_subsets(std::size_t n, std::size_t k,
                        const SubsetObjective& objective);
double max_over_subsets_serial(std::size_t n, std::size_t k,
                               const SubsetObjective& objective);

}  // namespace framesense::kernels
