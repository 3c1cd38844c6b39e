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

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace framesense {

using Index = std::size_t;
using IndexSet = std::span<const Index>;

// The N x K linear model. Row i is the sensing vector of candidate
// location i. Entries are stored row-major and never change after
// construction, so the cached row norms always match the entries.
class SensingMatrix {
 public:
  SensingMatrix() = default;
  SensingMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);
  SensingMatrix(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double operator()(std::size_t i, std::size_t j) const noexcept {
    return entries_[i * cols_ + j];
  }
  std::span<const double> row(std::size_t i) const noexcept {
    return {entries_.data() + i * cols_, cols_};
  }
  std::span<const double> entries() const noexcept { return entries_; }

  double row_norm(std::size_t i) const noexcept { return row_norms_[i]; }
  double row_energy(std::size_t i) const noexcept {
    return row_norms_[i] * row_norms_[i];
  }
  // Sum of squared row norms over every row.
  double total_energy() const noexcept;

  // Rows listed in `sel`, in that order.
  SensingMatrix select(IndexSet sel) const;

  friend bool operator==(const SensingMatrix& a, const SensingMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> entries_;
  std::vector<double> row_norms_;
};

// Dense symmetric matrix. Used for the K x K Gram T = Psi_sel^T Psi_sel
// and for the N x N Gram of rows G = Psi Psi^T.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(std::size_t order)
      : order_(order), entries_(order * order, 0.0) {}
  SymmetricMatrix(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t order() const noexcept { return order_; }

  double operator()(std::size_t i, std::size_t j) const noexcept {
    return entries_[i * order_ + j];
  }
  // Writes both (i, j) and (j, i).
  void set(std::size_t i, std::size_t j, double v) noexcept {
    entries_[i * order_ + j] = v;
    entries_[j * order_ + i] = v;
  }
  std::span<const double> row(std::size_t i) const noexcept {
    return {entries_.data() + i * order_, order_};
  }

  double trace() const noexcept;
  double frobenius_norm() const noexcept;

  friend bool operator==(const SymmetricMatrix&, const SymmetricMatrix&) = default;

 private:
  std::size_t order_ = 0;
  std::vector<double> entries_;
};

using GramMatrix = SymmetricMatrix;

}  // namespace framesense
