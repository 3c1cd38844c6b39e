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
#include <random>

namespace framesense {

// SplitMix64 finalizer over (seed, stream). Used to derive independent,
// reproducible per-trial seeds from a master seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

// Seeded random stream. The engine is std::mt19937_64, whose output
// sequence is fixed by the standard; the transforms below are implemented
// here rather than with <random> distributions, whose outputs vary across
// standard libraries.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64() { return engine_(); }
  // Uniform in [0, 1) with 53 random bits.
  double uniform();
  // Standard normal via Box-Muller; the second variate of each pair is
  // cached and returned by the following call.
  double normal();
  // Uniform in {0, .., n - 1}, unbiased (rejection sampling). n >= 1.
  std::uint64_t uniform_index(std::uint64_t n);
  // +1 or -1 with equal probability.
  double sign();

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace framesense
