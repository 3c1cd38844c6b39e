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

#include "framesense/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <numeric>

#include "framesense/errors.hpp"
#include "framesense/linalg.hpp"

namespace framesense::kernels {

namespace {

// Chunk count for subset enumeration. Fixed so the reduction order never
// depends on how many threads run.
constexpr std::uint64_t kChunks = 256;

struct ChunkRange {
  std::uint64_t begin;
  std::uint64_t end;
};

ChunkRange chunk_range(std::uint64_t total, std::uint64_t chunks,
                       std::uint64_t c) {
  const std::uint64_t base = total / chunks;
  const std::uint64_t extra = total % chunks;
  const std::uint64_t begin = c * base + std::min(c, extra);
  return {begin, begin + base + (c < extra ? 1 : 0)};
}

SubsetOptimum scan_chunk(std::size_t n, std::size_t k, ChunkRange r,
                         const SubsetObjective& objective) {
  SubsetOptimum best;
  if (r.begin == r.end) return best;
  Combination comb(n, k);
  comb.unrank(r.begin);
  bool first = true;
  for (std::uint64_t rank = r.begin; rank < r.end; ++rank) {
    const double v = objective(comb.indices());
    if (first || v < best.value) {
      best.value = v;
      best.rank = rank;
      best.subset = comb.indices();
      first = false;
    }
    comb.next();
  }
  return best;
}

double max_chunk(std::size_t n, std::size_t k, ChunkRange r,
                 const SubsetObjective& objective) {
  double best = -std::numeric_limits<double>::infinity();
  if (r.begin == r.end) return best;
  Combination comb(n, k);
  comb.unrank(r.begin);
  for (std::uint64_t rank = r.begin; rank < r.end; ++rank) {
    best = std::max(best, objective(comb.indices()));
    comb.next();
  }
  return best;
}

void check_subset_args(std::size_t n, std::size_t k) {
  if (k == 0 || k > n) throw ConstraintError("subset size must be in [1, n]");
}

}  // namespace

SymmetricMatrix row_gram_serial(const SensingMatrix& psi) {
  const std::size_t n = psi.rows();
  SymmetricMatrix g(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto ri = psi.row(i);
    for (std::size_t j = i; j < n; ++j) g.set(i, j, dot(ri, psi.row(j)));
  }
  return g;
}

SymmetricMatrix row_gram(const SensingMatrix& psi) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(psi.rows());
  SymmetricMatrix g(psi.rows());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto ri = psi.row(i);
    for (std::ptrdiff_t j = i; j < n; ++j) g.set(i, j, dot(ri, psi.row(j)));
  }
  return g;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept {
  if (k > n) return 0;
  k = std::min(k, n - k);
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  __extension__ using Wide = unsigned __int128;
  Wide r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) is divisible by i: it is i * C(n - k + i, i).
    r = r * (n - k + i) / i;
    if (r > kMax) return kMax;
  }
  return static_cast<std::uint64_t>(r);
}

Combination::Combination(std::size_t n, std::size_t k) : n_(n), k_(k), idx_(k) {
  check_subset_args(n, k);
  std::iota(idx_.begin(), idx_.end(), Index{0});
}

void Combination::unrank(std::uint64_t rank) {
  std::size_t start = 0;
  for (std::size_t pos = 0; pos < k_; ++pos) {
    for (std::size_t v = start; v < n_; ++v) {
      const std::uint64_t block = binomial(n_ - v - 1, k_ - pos - 1);
      if (rank < block) {
        idx_[pos] = v;
        start = v + 1;
        break;
      }
      rank -= block;
    }
  }
}

bool Combination::next() noexcept {
  std::size_t i = k_;
  while (i > 0) {
    --i;
    if (idx_[i] < n_ - k_ + i) {
      ++idx_[i];
      for (std::size_t j = i + 1; j < k_; ++j) idx_[j] = idx_[j - 1] + 1;
      return true;
    }
  }
  return false;
}

SubsetOptimum argmin_subsets_serial(std::size_t n, std::size_t k,
                                    const SubsetObjective& objective) {
  check_subset_args(n, k);
  const std::uint64_t total = binomial(n, k);
  return scan_chunk(n, k, {0, total}, objective);
}

SubsetOptimum argmin_subsets(std::size_t n, std::size_t k,
                             const SubsetObjective& objective) {
  check_subset_args(n, k);
  const std::uint64_t total = binomial(n, k);
  const std::uint64_t chunks = std::min(kChunks, total);
  std::vector<SubsetOptimum> partial(chunks);
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
    try {
      partial[c] = scan_chunk(n, k, chunk_range(total, chunks, c), objective);
    } catch (...) {
#pragma omp critical(framesense_subset_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  SubsetOptimum best = std::move(partial.front());
  for (std::uint64_t c = 1; c < chunks; ++c) {
    if (partial[c].value < best.value) best = std::move(partial[c]);
  }
  return best;
}

double max_over_subsets_serial(std::size_t n, std::size_t k,
                               const SubsetObjective& objective) {
  check_subset_args(n, k);
  return max_chunk(n, k, {0, binomial(n, k)}, objective);
}

double max_over_subsets(std::size_t n, std::size_t k,
                        const SubsetObjective& objective) {
  check_subset_args(n, k);
  const std::uint64_t total = binomial(n, k);
  const std::uint64_t chunks = std::min(kChunks, total);
  std::vector<double> partial(chunks);
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
    try {
      partial[c] = max_chunk(n, k, chunk_range(total, chunks, c), objective);
    } catch (...) {
#pragma omp critical(framesense_subset_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return *std::max_element(partial.begin(), partial.end());
}

}  // namespace framesense::kernels
