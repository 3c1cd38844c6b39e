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

#include "framesense/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "framesense/errors.hpp"

namespace framesense {

namespace {

void check_selection(const SensingMatrix& psi, IndexSet sel) {
  if (sel.empty()) throw ConstraintError("selection is empty");
  for (Index i : sel) {
    if (i >= psi.rows()) {
      throw ConstraintError("index " + std::to_string(i + 1) +
                            " out of range (N = " +
                            std::to_string(psi.rows()) + ")");
    }
  }
}

}  // namespace

SensingMatrix::SensingMatrix(std::size_t rows, std::size_t cols,
                             std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) {
    throw ConstraintError("sensing matrix needs N >= 1 and K >= 1");
  }
  if (entries_.size() != rows_ * cols_) {
    throw ConstraintError("entry count does not match N x K");
  }
  for (double v : entries_) {
    if (!std::isfinite(v)) throw ConstraintError("non-finite matrix entry");
  }
  row_norms_.resize(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    auto r = row(i);
    row_norms_[i] = std::sqrt(dot(r, r));
  }
}

SensingMatrix::SensingMatrix(
    std::initializer_list<std::initializer_list<double>> rows) {
  std::size_t n = rows.size();
  std::size_t k = n ? rows.begin()->size() : 0;
  std::vector<double> e;
  e.reserve(n * k);
  for (const auto& r : rows) {
    if (r.size() != k) throw ConstraintError("ragged initializer");
    e.insert(e.end(), r.begin(), r.end());
  }
  *this = SensingMatrix(n, k, std::move(e));
}

double SensingMatrix::total_energy() const noexcept {
  double s = 0.0;
  for (double n : row_norms_) s += n * n;
  return s;
}

SensingMatrix SensingMatrix::select(IndexSet sel) const {
  check_selection(*this, sel);
  std::vector<double> e;
  e.reserve(sel.size() * cols_);
  for (Index i : sel) {
    auto r = row(i);
    e.insert(e.end(), r.begin(), r.end());
  }
  return SensingMatrix(sel.size(), cols_, std::move(e));
}

SymmetricMatrix::SymmetricMatrix(
    std::initializer_list<std::initializer_list<double>> rows)
    : SymmetricMatrix(rows.size()) {
  std::size_t i = 0;
  for (const auto& r : rows) {
    if (r.size() != order_) throw ConstraintError("matrix is not square");
    std::size_t j = 0;
    for (double v : r) entries_[i * order_ + j++] = v;
    ++i;
  }
  for (i = 0; i < order_; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) {
        throw ConstraintError("matrix is not symmetric");
      }
    }
  }
}

double SymmetricMatrix::trace() const noexcept {
  double s = 0.0;
  for (std::size_t i = 0; i < order_; ++i) s += (*this)(i, i);
  return s;
}

double SymmetricMatrix::frobenius_norm() const noexcept {
  return std::sqrt(std::inner_product(entries_.begin(), entries_.end(),
                                      entries_.begin(), 0.0));
}

double Spectrum::sum() const noexcept {
  return std::accumulate(eigenvalues.begin(), eigenvalues.end(), 0.0);
}

double Spectrum::sum_of_squares() const noexcept {
  return std::inner_product(eigenvalues.begin(), eigenvalues.end(),
                            eigenvalues.begin(), 0.0);
}

NoiseModel::NoiseModel(double s2) : sigma2(s2) {
  if (!(s2 > 0.0) || !std::isfinite(s2)) {
    throw ConstraintError("noise variance must be positive");
  }
}

double dot(std::span<const double> a, std::span<const double> b) noexcept {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

GramMatrix gram(const SensingMatrix& psi, IndexSet sel) {
  check_selection(psi, sel);
  const std::size_t k = psi.cols();
  GramMatrix t(k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a; b < k; ++b) {
      double s = 0.0;
      for (Index i : sel) s += psi(i, a) * psi(i, b);
      t.set(a, b, s);
    }
  }
  return t;
}

GramMatrix gram(const SensingMatrix& psi) {
  std::vector<Index> all(psi.rows());
  std::iota(all.begin(), all.end(), Index{0});
  return gram(psi, all);
}

Spectrum sym_eigenvalues(const SymmetricMatrix& t) {
  constexpr int kMaxSweeps = 100;
  constexpr double kOffTolerance = 1e-12;

  const std::size_t n = t.order();
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double v = t(i, j);
      if (!std::isfinite(v)) throw NumericalError("non-finite matrix entry");
      a[i * n + j] = v;
    }
  }
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };

  const double threshold = kOffTolerance * t.frobenius_norm();
  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * at(i, j) * at(i, j);
    return std::sqrt(s);
  };

  int sweep = 0;
  for (; sweep <= kMaxSweeps; ++sweep) {
    if (off_norm() <= threshold) break;
    if (sweep == kMaxSweeps) {
      throw NumericalError("Jacobi eigensolver did not converge in 100 sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        double tr;
        if (std::abs(theta) > 1e150) {
          tr = 0.5 / theta;
        } else {
          tr = (theta >= 0.0 ? 1.0 : -1.0) /
               (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(tr * tr + 1.0);
        const double s = tr * c;
        const double tau = s / (1.0 + c);
        at(p, p) -= tr * apq;
        at(q, q) += tr * apq;
        at(p, q) = at(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double g = at(r, p);
          const double h = at(r, q);
          at(r, p) = at(p, r) = g - s * (h + g * tau);
          at(r, q) = at(q, r) = h + s * (g - h * tau);
        }
      }
    }
  }

  Spectrum out;
  out.eigenvalues.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.eigenvalues[i] = at(i, i);
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end(), std::greater<>());
  if (n == 0) return out;

  const double kd = static_cast<double>(n);
  out.max = out.eigenvalues.front();
  out.min = out.eigenvalues.back();
  out.arithmetic_mean = out.sum() / kd;
  double var = 0.0;
  for (double l : out.eigenvalues) {
    var += (l - out.arithmetic_mean) * (l - out.arithmetic_mean);
  }
  out.std_dev = std::sqrt(var / kd);
  if (out.min > 0.0) {
    double inv = 0.0;
    for (double l : out.eigenvalues) inv += 1.0 / l;
    out.harmonic_mean = kd / inv;
  }
  return out;
}

double frame_potential(const SensingMatrix& psi, IndexSet sel) {
  check_selection(psi, sel);
  double diag = 0.0;
  double cross = 0.0;
  for (std::size_t a = 0; a < sel.size(); ++a) {
    const auto ra = psi.row(sel[a]);
    const double e = dot(ra, ra);
    diag += e * e;
    for (std::size_t b = a + 1; b < sel.size(); ++b) {
      const double ip = dot(ra, psi.row(sel[b]));
      cross += ip * ip;
    }
  }
  return diag + 2.0 * cross;
}

double frame_potential(const SensingMatrix& psi) {
  std::vector<Index> all(psi.rows());
  std::iota(all.begin(), all.end(), Index{0});
  return frame_potential(psi, all);
}

std::optional<double> mse(const Spectrum& spectrum, const NoiseModel& noise) {
  const auto& ev = spectrum.eigenvalues;
  if (ev.empty() || !(ev.front() > 0.0)) return std::nullopt;
  if (ev.back() < kRankTolerance * ev.front()) return std::nullopt;
  double s = 0.0;
  for (double l : ev) s += 1.0 / l;
  return noise.sigma2 * s;
}

std::optional<double> mse(const SensingMatrix& psi, IndexSet sel,
                          const NoiseModel& noise) {
  return mse(sym_eigenvalues(gram(psi, sel)), noise);
}

std::vector<double> least_squares(const SensingMatrix& psi, IndexSet sel,
                                  std::span<const double> f) {
  check_selection(psi, sel);
  if (f.size() != sel.size()) {
    throw ConstraintError("measurement vector length does not match selection");
  }
  if (!mse(psi, sel).has_value()) {
    throw NumericalError("selection is rank deficient");
  }
  const std::size_t m = sel.size();
  const std::size_t k = psi.cols();
  // Column-major copy of Psi_sel, overwritten by the Householder vectors.
  std::vector<double> a(m * k);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < k; ++j) a[j * m + i] = psi(sel[i], j);
  std::vector<double> b(f.begin(), f.end());
  std::vector<double> diag(k);

  for (std::size_t j = 0; j < k; ++j) {
    double* col = a.data() + j * m;
    double norm = 0.0;
    for (std::size_t i = j; i < m; ++i) norm += col[i] * col[i];
    norm = std::sqrt(norm);
    const double alpha = col[j] > 0.0 ? -norm : norm;
    col[j] -= alpha;
    double vnorm2 = 0.0;
    for (std::size_t i = j; i < m; ++i) vnorm2 += col[i] * col[i];
    diag[j] = alpha;
    if (vnorm2 == 0.0) continue;
    for (std::size_t c = j + 1; c < k; ++c) {
      double* other = a.data() + c * m;
      double s = 0.0;
      for (std::size_t i = j; i < m; ++i) s += col[i] * other[i];
      s = 2.0 * s / vnorm2;
      for (std::size_t i = j; i < m; ++i) other[i] -= s * col[i];
    }
    double s = 0.0;
    for (std::size_t i = j; i < m; ++i) s += col[i] * b[i];
    s = 2.0 * s / vnorm2;
    for (std::size_t i = j; i < m; ++i) b[i] -= s * col[i];
  }

  std::vector<double> x(k);
  for (std::size_t j = k; j-- > 0;) {
    double s = b[j];
    for (std::size_t c = j + 1; c < k; ++c) s -= a[c * m + j] * x[c];
    x[j] = s / diag[j];
  }
  return x;
}

SensingMatrix row_normalize(const SensingMatrix& psi) {
  std::vector<double> e(psi.entries().begin(), psi.entries().end());
  const std::size_t k = psi.cols();
  for (std::size_t i = 0; i < psi.rows(); ++i) {
    const double n = psi.row_norm(i);
    if (!(n > 1e-12)) throw ZeroRowError(i);
    for (std::size_t j = 0; j < k; ++j) e[i * k + j] /= n;
  }
  return SensingMatrix(psi.rows(), k, std::move(e));
}

double coherence(const SensingMatrix& psi, Index i, Index j) {
  if (i >= psi.rows() || j >= psi.rows()) {
    throw ConstraintError("coherence index out of range");
  }
  if (!(psi.row_norm(i) > 1e-12)) throw ZeroRowError(i);
  if (!(psi.row_norm(j) > 1e-12)) throw ZeroRowError(j);
  const double c = std::abs(dot(psi.row(i), psi.row(j))) /
                   (psi.row_norm(i) * psi.row_norm(j));
  return std::min(c, 1.0);
}

Cholesky::Cholesky(std::size_t order, double shift)
    : order_(order), l_(order * order, 0.0) {
  if (!(shift > 0.0)) throw NumericalError("Cholesky shift must be positive");
  const double d = std::sqrt(shift);
  for (std::size_t i = 0; i < order_; ++i) at(i, i) = d;
}

Cholesky::Cholesky(const SymmetricMatrix& a)
    : order_(a.order()), l_(a.order() * a.order(), 0.0) {
  for (std::size_t j = 0; j < order_; ++j) {
    double d = a(j, j);
    for (std::size_t p = 0; p < j; ++p) d -= at(j, p) * at(j, p);
    if (!(d > 0.0)) throw NumericalError("matrix is not positive definite");
    const double ljj = std::sqrt(d);
    at(j, j) = ljj;
    for (std::size_t i = j + 1; i < order_; ++i) {
      double s = a(i, j);
      for (std::size_t p = 0; p < j; ++p) s -= at(i, p) * at(j, p);
      at(i, j) = s / ljj;
    }
  }
}

void Cholesky::update(std::span<const double> v) {
  std::vector<double> x(v.begin(), v.end());
  for (std::size_t k = 0; k < order_; ++k) {
    const double lkk = at(k, k);
    const double r = std::hypot(lkk, x[k]);
    const double c = r / lkk;
    const double s = x[k] / lkk;
    at(k, k) = r;
    for (std::size_t i = k + 1; i < order_; ++i) {
      at(i, k) = (at(i, k) + s * x[i]) / c;
      x[i] = c * x[i] - s * at(i, k);
    }
  }
}

void Cholesky::forward_solve(std::span<double> b) const {
  for (std::size_t i = 0; i < order_; ++i) {
    double s = b[i];
    for (std::size_t p = 0; p < i; ++p) s -= at(i, p) * b[p];
    b[i] = s / at(i, i);
  }
}

void Cholesky::backward_solve(std::span<double> y) const {
  for (std::size_t i = order_; i-- > 0;) {
    double s = y[i];
    for (std::size_t p = i + 1; p < order_; ++p) s -= at(p, i) * y[p];
    y[i] = s / at(i, i);
  }
}

double Cholesky::log_det() const noexcept {
  double s = 0.0;
  for (std::size_t i = 0; i < order_; ++i) s += std::log(at(i, i));
  return 2.0 * s;
}

}  // namespace framesense
