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

#include <optional>
#include <span>
#include <vector>

#include "framesense/matrix.hpp"

namespace framesense {

// Eigenvalues of a Gram matrix, largest first, with the summary statistics
// used by the MSE bounds.
struct Spectrum {
  std::vector<double> eigenvalues;  // descending
  double harmonic_mean = 0.0;       // 0 if any eigenvalue is <= 0
  double arithmetic_mean = 0.0;
  double std_dev = 0.0;             // population standard deviation
  double min = 0.0;
  double max = 0.0;

  double sum() const noexcept;
  double sum_of_squares() const noexcept;
};

struct NoiseModel {
  double sigma2 = 1.0;

  explicit NoiseModel(double s2 = 1.0);
};

// Relative eigenvalue threshold below which a selection is treated as
// rank deficient: lambda_k < kRankTolerance * lambda_1.
inline constexpr double kRankTolerance = 1e-10;

// T = Psi_sel^T Psi_sel (K x K). Throws ConstraintError on an empty
// selection or an out-of-range index.
GramMatrix gram(const SensingMatrix& psi, IndexSet sel);
GramMatrix gram(const SensingMatrix& psi);

// Cyclic Jacobi. Stops once the off-diagonal Frobenius norm drops below
// 1e-12 * ||T||_F; throws NumericalError after 100 sweeps.
Spectrum sym_eigenvalues(const SymmetricMatrix& t);

// Sum over every ordered pair (i, j) of sel, diagonal included, of
// <psi_i, psi_j>^2.
double frame_potential(const SensingMatrix& psi, IndexSet sel);
double frame_potential(const SensingMatrix& psi);

// sigma^2 * sum_k 1 / lambda_k, or std::nullopt when the selection does
// not span R^K (smallest eigenvalue below kRankTolerance * largest).
std::optional<double> mse(const SensingMatrix& psi, IndexSet sel,
                          const NoiseModel& noise = NoiseModel{});
std::optional<double> mse(const Spectrum& spectrum,
                          const NoiseModel& noise = NoiseModel{});

// Least-squares estimate from the measurements f taken at sel, solved by
// Householder QR of Psi_sel. Throws NumericalError if the selection is
// rank deficient.
std::vector<double> least_squares(const SensingMatrix& psi, IndexSet sel,
                                  std::span<const double> f);

// Copy of psi with unit-norm rows. Throws ZeroRowError for any row with
// norm <= 1e-12.
SensingMatrix row_normalize(const SensingMatrix& psi);

// |<psi_i, psi_j>| / (||psi_i|| ||psi_j||).
double coherence(const SensingMatrix& psi, Index i, Index j);

double dot(std::span<const double> a, std::span<const double> b) noexcept;

// Lower-triangular Cholesky factor of a symmetric positive definite matrix,
// kept in packed row-major K x K storage. Supports rank-one updates, which
// is what the best-in greedy baselines need.
class Cholesky {
 public:
  Cholesky() = default;
  // Factor of shift * I.
  Cholesky(std::size_t order, double shift);
  // Throws NumericalError if `a` is not positive definite.
  explicit Cholesky(const SymmetricMatrix& a);

  std::size_t order() const noexcept { return order_; }

  // L L^T += v v^T.
  void update(std::span<const double> v);

  // Solves L y = b in place.
  void forward_solve(std::span<double> b) const;
  // Solves L^T x = y in place.
  void backward_solve(std::span<double> y) const;

  double log_det() const noexcept;

 private:
  double& at(std::size_t i, std::size_t j) noexcept { return l_[i * order_ + j]; }
  double at(std::size_t i, std::size_t j) const noexcept {
    return l_[i * order_ + j];
  }

  std::size_t order_ = 0;
  std::vector<double> l_;
};

}  // namespace framesense
