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

#include "framesense/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

#include "framesense/csv.hpp"
#include "framesense/errors.hpp"
#include "framesense/kernels.hpp"
#include "framesense/linalg.hpp"

namespace framesense {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();

kernels::SubsetObjective spectral_deviation(const SensingMatrix& psi,
                                            double centre) {
  return [&psi, centre](IndexSet s) {
    const Spectrum sp = sym_eigenvalues(gram(psi, s));
    // Eigenvalues are sorted, so the extremes bound every deviation.
    return std::max(std::abs(sp.max - centre), std::abs(sp.min - centre));
  };
}

void require_delta(const SensingMatrix& psi, std::size_t sensors) {
  if (sensors < 1 || sensors > psi.rows()) {
    throw ConstraintError("delta requires 1 <= L <= N");
  }
  if (kernels::binomial(psi.rows(), sensors) > kDeltaMaxSubsets) {
    throw ConstraintError("delta enumeration over C(N, L) subsets exceeds the "
                          "10^6 guard");
  }
}

double centre_of(const SensingMatrix& psi, std::size_t sensors) {
  return l_min_max(psi, sensors).l_mean / static_cast<double>(psi.cols());
}

}  // namespace

EnergyExtremes l_min_max(const SensingMatrix& psi, std::size_t sensors) {
  const std::size_t n = psi.rows();
  if (sensors < 1 || sensors > n) {
    throw ConstraintError("energy extremes require 1 <= L <= N");
  }
  std::vector<double> e(n);
  for (std::size_t i = 0; i < n; ++i) e[i] = psi.row_energy(i);
  std::sort(e.begin(), e.end());
  EnergyExtremes out;
  for (std::size_t i = 0; i < sensors; ++i) {
    out.l_min += e[i];
    out.l_max += e[n - 1 - i];
  }
  out.l_mean = static_cast<double>(sensors) / static_cast<double>(n) *
               psi.total_energy();
  return out;
}

double fp_approx_factor(const SensingMatrix& psi, std::size_t sensors) {
  if (sensors < psi.cols() || sensors > psi.rows()) {
    throw ConstraintError("approximation factor requires K <= L <= N");
  }
  const double l_min = l_min_max(psi, sensors).l_min;
  if (!(l_min > 0.0)) {
    throw ConstraintError("L_MIN is zero: the matrix has zero rows");
  }
  const double k = static_cast<double>(psi.cols());
  return 1.0 + (frame_potential(psi) * k / (l_min * l_min) - 1.0) /
                   std::numbers::e;
}

double mse_approx_factor(double gamma, double d, double delta, double l_min,
                         double l_max) {
  if (!(delta >= 0.0)) throw ConstraintError("delta must be non-negative");
  if (!(d > delta)) {
    throw ConstraintError("MSE bound is vacuous: d <= delta");
  }
  if (!(l_min > 0.0)) throw ConstraintError("L_MIN must be positive");
  const double ratio = (d + delta) / (d - delta);
  return gamma * ratio * ratio * l_max / l_min;
}

MseInterval mse_sandwich(const SensingMatrix& psi, IndexSet sel, double l_min,
                         double l_max) {
  if (!(l_min > 0.0) || !(l_max > 0.0)) {
    throw ConstraintError("energy extremes must be positive");
  }
  const Spectrum sp = sym_eigenvalues(gram(psi, sel));
  const double fp = frame_potential(psi, sel);
  const double k = static_cast<double>(psi.cols());
  MseInterval out;
  out.lower = sp.max > 0.0 ? k / l_max * fp / (sp.max * sp.max) : kInf;
  if (mse(sp).has_value()) out.upper = k / l_min * fp / (sp.min * sp.min);
  return out;
}

double delta_bound(const SensingMatrix& psi, std::size_t sensors) {
  require_delta(psi, sensors);
  return kernels::max_over_subsets(
      psi.rows(), sensors, spectral_deviation(psi, centre_of(psi, sensors)));
}

double delta_bound_serial(const SensingMatrix& psi, std::size_t sensors) {
  require_delta(psi, sensors);
  return kernels::max_over_subsets_serial(
      psi.rows(), sensors, spectral_deviation(psi, centre_of(psi, sensors)));
}

SharmaInterval sharma_interval(std::span<const double> values) {
  if (values.size() < 2) throw ConstraintError("need at least two values");
  double m = values.front();
  double big = values.front();
  double sum = 0.0;
  for (double v : values) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw ConstraintError("values must be positive and finite");
    }
    m = std::min(m, v);
    big = std::max(big, v);
    sum += v;
  }
  const double n = static_cast<double>(values.size());
  const double mean = sum / n;
  double var = 0.0;
  for (double v : values) var += (v - mean) * (v - mean);
  const double s = std::sqrt(var / n);

  SharmaInterval out;
  if (big > 2.0 * s) {
    out.lower = (big - s) * (big - s) / (big * (big - 2.0 * s));
  } else {
    out.lower = 1.0;
    out.lower_clamped = true;
  }
  out.upper = (m + s) * (m + s) / (m * (m + 2.0 * s));
  return out;
}

UntfReference untf_reference(std::size_t sensors, std::size_t k) {
  if (k < 1 || sensors < k) throw ConstraintError("requires L >= K >= 1");
  const double l = static_cast<double>(sensors);
  const double kk = static_cast<double>(k);
  return {l * l / kk, kk * kk / l, l / kk};
}

MPBounds mp_scenario(const MPScenario& sc) {
  if (!(sc.c1 > 0.0 && sc.c1 < 1.0 && sc.c2 > 1.0)) {
    throw ConstraintError("scenario requires c2 > 1 > c1 > 0");
  }
  const double r = std::sqrt(sc.c1);
  const double scale = std::sqrt(1.0 / sc.c1);
  MPBounds out;
  out.gamma = 1.0 + (sc.c2 * sc.c2 - 1.0) / std::numbers::e;
  out.spec_low = scale * (1.0 - r) * (1.0 - r);
  out.spec_high = scale * (1.0 + r) * (1.0 + r);
  out.eta = out.gamma * std::pow((1.0 + r) / (1.0 - r), 4);
  return out;
}

std::string to_key_value(const MPScenario& sc, const MPBounds& b) {
  std::ostringstream os;
  os << "c1=" << format_double(sc.c1) << '\n'
     << "c2=" << format_double(sc.c2) << '\n'
     << "gamma=" << format_double(b.gamma) << '\n'
     << "spec_low=" << format_double(b.spec_low) << '\n'
     << "spec_high=" << format_double(b.spec_high) << '\n'
     << "eta=" << format_double(b.eta) << '\n'
     << "note=eta is the closed-form value gamma*((1+sqrt(c1))/(1-sqrt(c1)))^4;"
        " for c1=0.25, c2=6 this is about 1124, not the value 50 that is "
        "sometimes quoted for this scenario\n";
  return os.str();
}

std::string BoundsReport::to_key_value() const {
  std::ostringstream os;
  os << "N=" << n << '\n'
     << "K=" << k << '\n'
     << "L=" << l << '\n'
     << "gamma=" << format_double(gamma) << '\n'
     << "eta=" << format_double(eta.value_or(kNan)) << '\n'
     << "l_min=" << format_double(l_min) << '\n'
     << "l_max=" << format_double(l_max) << '\n'
     << "l_mean=" << format_double(l_mean) << '\n'
     << "d=" << format_double(d) << '\n'
     << "delta=" << format_double(delta.value_or(kNan)) << '\n'
     << "lemma3_lower=" << format_double(mse_lower) << '\n'
     << "lemma3_upper=" << format_double(mse_upper.value_or(kInf)) << '\n';
  if (!note.empty()) os << "note=" << note << '\n';
  return os.str();
}

std::string BoundsReport::csv_header() {
  return "N,K,L,gamma,eta,l_min,l_max,l_mean,d,delta,lemma3_lower,lemma3_upper";
}

std::string BoundsReport::to_csv_row() const {
  std::ostringstream os;
  os << n << ',' << k << ',' << l << ',' << format_double(gamma) << ','
     << format_double(eta.value_or(kNan)) << ',' << format_double(l_min) << ','
     << format_double(l_max) << ',' << format_double(l_mean) << ','
     << format_double(d) << ',' << format_double(delta.value_or(kNan)) << ','
     << format_double(mse_lower) << ','
     << format_double(mse_upper.value_or(kInf));
  return os.str();
}

BoundsReport bounds_report(const SensingMatrix& psi, std::size_t sensors,
                           IndexSet sel, bool compute_delta) {
  BoundsReport r;
  r.n = psi.rows();
  r.k = psi.cols();
  r.l = sensors;
  const EnergyExtremes e = l_min_max(psi, sensors);
  r.l_min = e.l_min;
  r.l_max = e.l_max;
  r.l_mean = e.l_mean;
  r.d = e.l_mean / static_cast<double>(psi.cols());
  r.gamma = fp_approx_factor(psi, sensors);
  const MseInterval iv = mse_sandwich(psi, sel, e.l_min, e.l_max);
  r.mse_lower = iv.lower;
  r.mse_upper = iv.upper;

  if (!compute_delta) {
    r.note = "delta not computed";
  } else if (kernels::binomial(psi.rows(), sensors) > kDeltaMaxSubsets) {
    r.note = "delta not computed: C(N, L) exceeds the enumeration guard";
  } else {
    r.delta = delta_bound(psi, sensors);
    if (r.d > *r.delta) {
      r.eta = mse_approx_factor(r.gamma, r.d, *r.delta, r.l_min, r.l_max);
    } else {
      r.note = "eta undefined: d <= delta, the MSE bound is vacuous";
    }
  }
  return r;
}

}  // namespace framesense
