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
#include <sstream>

#include "framesense/csv.hpp"
#include "framesense/errors.hpp"
#include "framesense/linalg.hpp"
#include "gtest/gtest.h"

namespace framesense {
namespace {

constexpr Family kAllFamilies[] = {Family::kGaussian,         Family::kGaussianRowNormalized,
                                   Family::kRandomTightFrame, Family::kBernoulli,
                                   Family::kDctFrame,         Family::kStackedScaled};

std::string as_csv(const SensingMatrix& psi) {
  std::ostringstream os;
  write_matrix_csv(os, psi);
  return os.str();
}

double column_dot(const SensingMatrix& psi, std::size_t a, std::size_t b) {
  double s = 0.0;
  for (Index i = 0; i < psi.rows(); ++i) s += psi(i, a) * psi(i, b);
  return s;
}

TEST(MatgenTest, ShapesAndNames) {
  for (Family f : kAllFamilies) {
    const SensingMatrix psi = generate({f, 12, 4, 3});
    EXPECT_EQ(psi.rows(), 12u);
    EXPECT_EQ(psi.cols(), 4u);
    EXPECT_EQ(parse_family(to_string(f)), f);
  }
  EXPECT_THROW(parse_family("uniform"), ConstraintError);
}

TEST(MatgenTest, RandomTightFrameHasOrthonormalColumns) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const SensingMatrix psi = generate({Family::kRandomTightFrame, 40, 7, seed});
    for (std::size_t a = 0; a < 7; ++a)
      for (std::size_t b = 0; b < 7; ++b)
        EXPECT_NEAR(column_dot(psi, a, b), a == b ? 1.0 : 0.0, 1e-10);
    EXPECT_NEAR(frame_potential(psi), 7.0, 1e-8);
    const double e = psi.total_energy();
    EXPECT_NEAR(frame_potential(psi), e * e / 7.0, 1e-8);
  }
}

TEST(MatgenTest, BernoulliEntriesAreSigns) {
  const SensingMatrix psi = generate({Family::kBernoulli, 50, 9, 1});
  std::size_t plus = 0;
  for (double v : psi.entries()) {
    EXPECT_TRUE(v == 1.0 || v == -1.0);
    plus += v > 0;
  }
  for (Index i = 0; i < psi.rows(); ++i) EXPECT_EQ(psi.row_energy(i), 9.0);
  EXPECT_GT(plus, 150u);
  EXPECT_LT(plus, 300u);
}

TEST(MatgenTest, RowNormalizedGaussianHasUnitRows) {
  const SensingMatrix psi = generate({Family::kGaussianRowNormalized, 30, 5, 2});
  for (Index i = 0; i < psi.rows(); ++i) EXPECT_NEAR(psi.row_norm(i), 1.0, 1e-12);
}

TEST(MatgenTest, DctFrameHasOrthonormalColumnsAndIgnoresSeed) {
  const SensingMatrix psi = generate({Family::kDctFrame, 16, 5, 0});
  for (std::size_t a = 0; a < 5; ++a)
    for (std::size_t b = 0; b < 5; ++b)
      EXPECT_NEAR(column_dot(psi, a, b), a == b ? 1.0 : 0.0, 1e-12);
  EXPECT_NEAR(psi(3, 2), std::sqrt(2.0 / 16.0) * std::cos(std::numbers::pi * 7 * 2 / 32.0), 1e-15);
  EXPECT_EQ(psi, generate({Family::kDctFrame, 16, 5, 99}));
}

TEST(MatgenTest, StackedScaledRowsAreParallel) {
  GeneratorSpec spec{Family::kStackedScaled, 10, 3, 4};
  spec.scale = 3.0;
  const SensingMatrix psi = generate(spec);
  for (Index i = 0; i < 5; ++i) {
    for (std::size_t c = 0; c < 3; ++c) EXPECT_DOUBLE_EQ(psi(i + 5, c), 3.0 * psi(i, c));
    EXPECT_NEAR(psi.row_norm(i + 5) / psi.row_norm(i), 3.0, 1e-14);
  }
  spec.n = 11;
  EXPECT_THROW(generate(spec), ConstraintError);
  spec.n = 10;
  spec.scale = 1.0;
  EXPECT_THROW(generate(spec), ConstraintError);
}

TEST(MatgenTest, DeterministicPerSeed) {
  for (Family f : kAllFamilies) {
    EXPECT_EQ(as_csv(generate({f, 20, 4, 17})), as_csv(generate({f, 20, 4, 17})));
    if (f != Family::kDctFrame) {
      EXPECT_NE(as_csv(generate({f, 20, 4, 17})), as_csv(generate({f, 20, 4, 18})));
    }
  }
}

TEST(MatgenTest, GaussianMoments) {
  const SensingMatrix psi = generate({Family::kGaussian, 1000, 1000, 7});
  double sum = 0.0, sq = 0.0;
  for (double v : psi.entries()) {
    sum += v;
    sq += v * v;
  }
  const double n = static_cast<double>(psi.entries().size());
  const double mean = sum / n;
  EXPECT_NEAR(mean, 0.0, 0.01);
  EXPECT_NEAR(sq / n - mean * mean, 1.0, 0.02);

  GeneratorSpec wide{Family::kGaussian, 200, 50, 7};
  wide.stddev = 0.5;
  const SensingMatrix half = generate(wide);
  double s2 = 0.0;
  for (double v : half.entries()) s2 += v * v;
  EXPECT_NEAR(s2 / 10000.0, 0.25, 0.02);
}

TEST(MatgenTest, Errors) {
  EXPECT_THROW(generate({Family::kRandomTightFrame, 4, 4, 0}), ConstraintError);
  EXPECT_THROW(generate({Family::kGaussian, 0, 3, 0}), ConstraintError);
  EXPECT_THROW(generate({Family::kGaussian, 3, 0, 0}), ConstraintError);
}

}  // namespace
}  // namespace framesense
