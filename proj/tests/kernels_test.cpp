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

#include "framesense/errors.hpp"
#include "framesense/linalg.hpp"
#include "framesense/matgen.hpp"
#include "gtest/gtest.h"
#include "test_util.hpp"

namespace framesense::kernels {
namespace {

TEST(RowGramTest, ParallelMatchesSerialAndDefinition) {
  const SensingMatrix psi = generate({Family::kGaussian, 150, 7, 3});
  const SymmetricMatrix par = row_gram(psi);
  const SymmetricMatrix ser = row_gram_serial(psi);
  EXPECT_EQ(par, ser);
  for (std::size_t i = 0; i < 150; i += 13) {
    for (std::size_t j = 0; j < 150; j += 7) {
      double s = 0.0;
      for (std::size_t c = 0; c < 7; ++c) s += psi(i, c) * psi(j, c);
      EXPECT_NEAR(par(i, j), s, 1e-13);
    }
  }
}

TEST(BinomialTest, Values) {
  EXPECT_EQ(binomial(8, 4), 70u);
  EXPECT_EQ(binomial(12, 6), 924u);
  EXPECT_EQ(binomial(100, 0), 1u);
  EXPECT_EQ(binomial(3, 5), 0u);
  EXPECT_EQ(binomial(60, 30), 118264581564861424ull);
  EXPECT_EQ(binomial(200, 100), std::numeric_limits<std::uint64_t>::max());
}

TEST(CombinationTest, EnumeratesLexicographicallyAndUnranks) {
  std::vector<std::vector<Index>> ref;
  testing::for_each_subset(7, 3, [&](const std::vector<Index>& s) { ref.push_back(s); });
  ASSERT_EQ(ref.size(), binomial(7, 3));
  Combination c(7, 3);
  for (std::size_t r = 0; r < ref.size(); ++r) {
    EXPECT_EQ(c.indices(), ref[r]);
    Combination jump(7, 3);
    jump.unrank(r);
    EXPECT_EQ(jump.indices(), ref[r]);
    EXPECT_EQ(c.next(), r + 1 < ref.size());
  }
}

TEST(SubsetSearchTest, ParallelMatchesSerialForAnyThreadCount) {
  const SensingMatrix psi = generate({Family::kGaussian, 11, 3, 8});
  const SubsetObjective fp = [&](IndexSet s) { return frame_potential(psi, s); };
  const SubsetObjective lam = [&](IndexSet s) {
    return sym_eigenvalues(gram(psi, s)).max;
  };
  const SubsetOptimum ser = argmin_subsets_serial(11, 5, fp);
  const double ser_max = max_over_subsets_serial(11, 5, lam);
  for (int threads : {1, 4, 8}) {
    omp_set_num_threads(threads);
    const SubsetOptimum par = argmin_subsets(11, 5, fp);
    EXPECT_EQ(par.value, ser.value);
    EXPECT_EQ(par.rank, ser.rank);
    EXPECT_EQ(par.subset, ser.subset);
    EXPECT_EQ(max_over_subsets(11, 5, lam), ser_max);
  }
  omp_set_num_threads(omp_get_num_procs());
}

TEST(SubsetSearchTest, TiesGoToLexicographicallySmallest) {
  const SubsetObjective flat = [](IndexSet) { return 1.0; };
  const SubsetOptimum best = argmin_subsets(9, 4, flat);
  EXPECT_EQ(best.rank, 0u);
  EXPECT_EQ(best.subset, (std::vector<Index>{0, 1, 2, 3}));

  // Minimum attained at two subsets; the earlier one wins.
  const SubsetObjective two = [](IndexSet s) {
    return (s[0] == 2 && s[1] == 3) || (s[0] == 4 && s[1] == 5) ? 0.0 : 1.0;
  };
  EXPECT_EQ(argmin_subsets(8, 2, two).subset, (std::vector<Index>{2, 3}));

  const SubsetObjective inf = [](IndexSet) {
    return std::numeric_limits<double>::infinity();
  };
  EXPECT_EQ(argmin_subsets(6, 3, inf).subset, (std::vector<Index>{0, 1, 2}));
}

TEST(SubsetSearchTest, PropagatesObjectiveErrors) {
  const SubsetObjective bad = [](IndexSet s) -> double {
    if (s[0] == 3) throw NumericalError("boom");
    return 0.0;
  };
  EXPECT_THROW(argmin_subsets(8, 2, bad), NumericalError);
  EXPECT_THROW(max_over_subsets(8, 2, bad), NumericalError);
  EXPECT_THROW(argmin_subsets(3, 4, bad), ConstraintError);
}

}  // namespace
}  // namespace framesense::kernels
