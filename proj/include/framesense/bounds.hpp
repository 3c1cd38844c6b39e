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
#include <span>
#include <string>

#include "framesense/matrix.hpp"

namespace framesense {

// Extremes of the sensing energy sum_{i in A} ||psi_i||^2 over |A| = L, and
// its average (L / N) * sum_i ||psi_i||^2.
struct EnergyExtremes {
  double l_min = 0.0;
  double l_max = 0.0;
  double l_mean = 0.0;
};

// Sums of the L smallest / largest squared row norms. Requires 1 <= L <= N.
EnergyExtremes l_min_max(const SensingMatrix& psi, std::size_t sensors);

// Worst-case ratio FP(greedy) / FP(optimal) for FrameSense on psi:
//   1 + (FP(psi) * K / l_min^2 - 1) / e.
// Requires K <= L <= N and l_min > 0.
double fp_approx_factor(const SensingMatrix& psi, std::size_t sensors);

// gamma * (d + delta)^2 / (d - delta)^2 * l_max / l_min. Throws
// ConstraintError when d <= delta (the bound is vacuous) or l_min <= 0.
double mse_approx_factor(double gamma, double d, double delta, double l_min,
                         double l_max);

// Interval enclosing MSE / sigma^2 of the selection:
//   lower = K / l_max * FP(sel) / lambda_1^2
//   upper = K / l_min * FP(sel) / lambda_K^2
// `upper` is absent when the selection is rank deficient.
struct MseInterval {
  double lower = 0.0;
  std::optional<double> upper;
};
MseInterval mse_sandwich(const SensingMatrix& psi, IndexSet sel, double l_min,
                         double l_max);

inline constexpr std::uint64_t kDeltaMaxSubsets = 1'000'000;

// Smallest delta such that every size-L selection has its whole Gram
// spectrum inside [l_mean / K - delta, l_mean / K + delta]. Exhaustive;
// throws ConstraintError when C(N, L) exceeds kDeltaMaxSubsets. The
// parallel and serial variants agree bit for bit.
double delta_bound(const SensingMatrix& psi, std::size_t sensors);
double delta_bound_serial(const SensingMatrix& psi, std::size_t sensors);

// Bounds on A / H (arithmetic over harmonic mean) of a positive set with
// population standard deviation S, minimum m and maximum M:
//   (M - S)^2 / (M (M - 2S))  <=  A / H  <=  (m + S)^2 / (m (m + 2S)).
// When M <= 2S the lower form is undefined; it is replaced by 1 (A >= H
// always) and `lower_clamped` is set.
struct SharmaInterval {
  double lower = 1.0;
  double upper = 1.0;
  bool lower_clamped = false;
};
SharmaInterval sharma_interval(std::span<const double> values);

// Frame potential, MSE and common eigenvalue of an L x K unit-norm tight
// frame: L^2 / K, K^2 / L, L / K.
struct UntfReference {
  double frame_potential = 0.0;
  double mse = 0.0;
  double eigenvalue = 0.0;
};
UntfReference untf_reference(std::size_t sensors, std::size_t k);

// Asymptotic i.i.d. scenario with L = c1 K and N = c2 K, c2 > 1 > c1 > 0,
// rows of unit norm on average.
struct MPScenario {
  double c1 = 0.25;
  double c2 = 6.0;
  std::size_t k = 1;
};

struct MPBounds {
  double gamma = 0.0;      // 1 + (c2^2 - 1) / e
  double eta = 0.0;        // gamma * ((1 + sqrt c1) / (1 - sqrt c1))^4
  double spec_low = 0.0;   // sqrt(1 / c1) (1 - sqrt c1)^2
  double spec_high = 0.0;  // sqrt(1 / c1) (1 + sqrt c1)^2
};
MPBounds mp_scenario(const MPScenario& sc);

// Formatted lines for an MPBounds result, including the note on eta.
std::string to_key_value(const MPScenario& sc, const MPBounds& b);

// All approximation factors and energy quantities for (psi, L), plus the
// MSE interval of a particular selection. eta is absent when delta could
// not be enumerated or the bound is vacuous (d <= delta); `note` says why.
struct BoundsReport {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t l = 0;
  double gamma = 0.0;
  std::optional<double> eta;
  double l_min = 0.0;
  double l_max = 0.0;
  double l_mean = 0.0;
  double d = 0.0;
  std::optional<double> delta;
  double mse_lower = 0.0;
  std::optional<double> mse_upper;
  std::string note;

  // "key=value" lines. Missing values print as "nan", unbounded as "inf".
  std::string to_key_value() const;
  // N,K,L,gamma,eta,l_min,l_max,l_mean,d,delta,lemma3_lower,lemma3_upper
  static std::string csv_header();
  std::string to_csv_row() const;
};

BoundsReport bounds_report(const SensingMatrix& psi, std::size_t sensors,
                           IndexSet sel, bool compute_delta = true);

}  // namespace framesense
