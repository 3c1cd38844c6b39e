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

#include "framesense/placement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "framesense/errors.hpp"
#include "framesense/kernels.hpp"
#include "framesense/linalg.hpp"
#include "framesense/random.hpp"

namespace framesense {

namespace {

std::string dims(const SensingMatrix& psi, std::size_t sensors) {
  return " (N = " + std::to_string(psi.rows()) +
         ", K = " + std::to_string(psi.cols()) +
         ", L = " + std::to_string(sensors) + ")";
}

void require_best_in_range(const SensingMatrix& psi, std::size_t sensors) {
  if (sensors < psi.cols() || sensors > psi.rows()) {
    throw ConstraintError("sensor count must satisfy K <= L <= N" +
                          dims(psi, sensors));
  }
}

void require_framesense_range(const SensingMatrix& psi, std::size_t sensors) {
  if (psi.rows() < 2 || sensors < psi.cols() || sensors + 2 > psi.rows()) {
    throw ConstraintError(
        "FrameSense requires K <= L <= N - 2, since it always eliminates an "
        "initial pair" + dims(psi, sensors));
  }
}

std::vector<Index> complement(std::size_t n, const std::vector<bool>& taken) {
  std::vector<Index> out;
  for (Index i = 0; i < n; ++i) {
    if (!taken[i]) out.push_back(i);
  }
  return out;
}

// Squared inner products are compared on the working matrix; the pair with
// the largest one (lexicographically smallest on ties) is returned.
std::pair<Index, Index> most_correlated_pair(const SymmetricMatrix& g) {
  const std::size_t n = g.order();
  double best = -1.0;
  std::pair<Index, Index> pair{0, 1};
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      const double v = g(i, j) * g(i, j);
      if (v > best) {
        best = v;
        pair = {i, j};
      }
    }
  }
  return pair;
}

double ridge_of(const SensingMatrix& psi, const PlacementOptions& opts) {
  const double r = opts.ridge.value_or(default_ridge(psi));
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw ConstraintError("ridge must be positive");
  }
  return r;
}

Selection finish_best_in(std::size_t n, std::vector<Index> chosen,
                         std::vector<double> trace) {
  std::vector<bool> taken(n, false);
  for (Index i : chosen) taken[i] = true;
  return {std::move(chosen), complement(n, taken), std::move(trace)};
}

// Per-candidate scores of the mutual-information greedy.
struct MiScores {
  std::vector<double> ratio;
  std::vector<double> var_given_chosen;
};

MiScores mi_scores(const SensingMatrix& psi, const std::vector<bool>& taken,
                   const Cholesky& chosen_factor, double sigma2, double shift) {
  const std::size_t n = psi.rows();
  const std::size_t k = psi.cols();
  std::vector<Index> rest = complement(n, taken);

  GramMatrix rest_gram = gram(psi, rest);
  SymmetricMatrix shifted(k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a; b < k; ++b) {
      shifted.set(a, b, rest_gram(a, b) + (a == b ? shift : 0.0));
    }
  }
  Cholesky rest_factor(shifted);

  constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
  MiScores out{std::vector<double>(n, kNan), std::vector<double>(n, kNan)};
  std::vector<double> y(k);
  for (Index i : rest) {
    auto r = psi.row(i);
    std::copy(r.begin(), r.end(), y.begin());
    chosen_factor.forward_solve(y);
    const double num = sigma2 + shift * dot(y, y);

    std::copy(r.begin(), r.end(), y.begin());
    rest_factor.forward_solve(y);
    const double q = dot(y, y);
    // psi_i^T (T_rest - psi_i psi_i^T + shift I)^-1 psi_i = q / (1 - q).
    if (!(1.0 - q > 1e-14)) {
      throw NumericalError("covariance conditioning failed at location " +
                           std::to_string(i + 1));
    }
    const double den = sigma2 + shift * q / (1.0 - q);
    out.ratio[i] = num / den;
    out.var_given_chosen[i] = num;
  }
  return out;
}

}  // namespace

std::string_view to_string(Algorithm a) noexcept {
  switch (a) {
    case Algorithm::kFrameSense: return "framesense";
    case Algorithm::kDeterminant: return "det";
    case Algorithm::kMse: return "mse";
    case Algorithm::kMutualInformation: return "mi";
    case Algorithm::kCoherence: return "coherence";
    case Algorithm::kRandom: return "random";
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::kFrameSense, Algorithm::kDeterminant,
                      Algorithm::kMse, Algorithm::kMutualInformation,
                      Algorithm::kCoherence, Algorithm::kRandom}) {
    if (name == to_string(a)) return a;
  }
  throw ConstraintError("unknown algorithm '" + std::string(name) + "'");
}

std::vector<Index> Selection::sorted_chosen() const {
  std::vector<Index> s = chosen;
  std::sort(s.begin(), s.end());
  return s;
}

double default_ridge(const SensingMatrix& psi) {
  return 1e-6 * psi.total_energy() / static_cast<double>(psi.rows());
}

double marginal_gain(const SymmetricMatrix& row_gram, IndexSet remaining,
                     Index i) {
  bool found = false;
  double cross = 0.0;
  for (Index n : remaining) {
    if (n == i) {
      found = true;
      continue;
    }
    cross += row_gram(n, i) * row_gram(n, i);
  }
  if (!found) throw ConstraintError("row is not in the remaining set");
  return 2.0 * cross + row_gram(i, i) * row_gram(i, i);
}

Selection framesense(const SensingMatrix& psi, std::size_t sensors,
                     const PlacementOptions& opts) {
  require_framesense_range(psi, sensors);
  const std::size_t n = psi.rows();

  std::optional<SensingMatrix> normalized;
  if (opts.normalize_rows) normalized = row_normalize(psi);
  const SymmetricMatrix g = kernels::row_gram(normalized ? *normalized : psi);

  // Reported objectives always use the original row norms.
  auto original = [&](Index a, Index b) {
    return normalized ? g(a, b) * psi.row_norm(a) * psi.row_norm(b) : g(a, b);
  };

  // score[i]: drop in FP of the surviving set if i is eliminated next.
  // orig_score[i]: the same on the original matrix.
  std::vector<double> score(n, 0.0);
  std::vector<double> orig_score(n, 0.0);
  double fp_original = 0.0;
  for (Index i = 0; i < n; ++i) {
    double cross = 0.0;
    double orig_cross = 0.0;
    for (Index m = 0; m < n; ++m) {
      if (m == i) continue;
      cross += g(i, m) * g(i, m);
      const double o = original(i, m);
      orig_cross += o * o;
    }
    const double oii = original(i, i);
    score[i] = 2.0 * cross + g(i, i) * g(i, i);
    orig_score[i] = 2.0 * orig_cross + oii * oii;
    fp_original += orig_cross + oii * oii;
  }

  Selection out;
  std::vector<bool> alive(n, true);
  auto eliminate = [&](Index r) {
    alive[r] = false;
    out.eliminated.push_back(r);
    fp_original -= orig_score[r];
    for (Index m = 0; m < n; ++m) {
      if (!alive[m]) continue;
      score[m] -= 2.0 * g(m, r) * g(m, r);
      const double o = original(m, r);
      orig_score[m] -= 2.0 * o * o;
    }
  };

  const auto [first, second] = most_correlated_pair(g);
  eliminate(first);
  eliminate(second);
  out.objective_trace.push_back(fp_original);

  while (out.eliminated.size() < n - sensors) {
    Index pick = n;
    double best = -std::numeric_limits<double>::infinity();
    for (Index i = 0; i < n; ++i) {
      if (alive[i] && score[i] > best) {
        best = score[i];
        pick = i;
      }
    }
    eliminate(pick);
    out.objective_trace.push_back(fp_original);
  }
  for (Index i = 0; i < n; ++i) {
    if (alive[i]) out.chosen.push_back(i);
  }
  return out;
}

Selection framesense_naive(const SensingMatrix& psi, std::size_t sensors,
                           const PlacementOptions& opts) {
  require_framesense_range(psi, sensors);
  const std::size_t n = psi.rows();
  const SensingMatrix work = opts.normalize_rows ? row_normalize(psi) : psi;

  Selection out;
  std::vector<bool> dead(n, false);
  auto survivors_without = [&](Index skip) {
    std::vector<Index> s;
    for (Index i = 0; i < n; ++i) {
      if (!dead[i] && i != skip) s.push_back(i);
    }
    return s;
  };

  double best_pair = -1.0;
  Index pi = 0;
  Index pj = 1;
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      const double ip = dot(work.row(i), work.row(j));
      if (ip * ip > best_pair) {
        best_pair = ip * ip;
        pi = i;
        pj = j;
      }
    }
  }
  dead[pi] = dead[pj] = true;
  out.eliminated = {pi, pj};
  out.objective_trace.push_back(frame_potential(psi, survivors_without(n)));

  while (out.eliminated.size() < n - sensors) {
    Index pick = n;
    double best = std::numeric_limits<double>::infinity();
    for (Index i = 0; i < n; ++i) {
      if (dead[i]) continue;
      const double fp = frame_potential(work, survivors_without(i));
      if (fp < best) {
        best = fp;
        pick = i;
      }
    }
    dead[pick] = true;
    out.eliminated.push_back(pick);
    out.objective_trace.push_back(frame_potential(psi, survivors_without(n)));
  }
  out.chosen = complement(n, dead);
  return out;
}

Selection greedy_det(const SensingMatrix& psi, std::size_t sensors,
                     const PlacementOptions& opts) {
  require_best_in_range(psi, sensors);
  const std::size_t n = psi.rows();
  const std::size_t k = psi.cols();
  Cholesky factor(k, ridge_of(psi, opts));
  std::vector<bool> taken(n, false);
  std::vector<Index> chosen;
  std::vector<double> trace;
  std::vector<double> y(k);

  for (std::size_t step = 0; step < sensors; ++step) {
    Index pick = n;
    double best = -std::numeric_limits<double>::infinity();
    for (Index i = 0; i < n; ++i) {
      if (taken[i]) continue;
      auto r = psi.row(i);
      std::copy(r.begin(), r.end(), y.begin());
      factor.forward_solve(y);
      // det(T + psi psi^T) = det(T) (1 + psi^T T^-1 psi).
      const double gain = std::log1p(dot(y, y));
      if (gain > best) {
        best = gain;
        pick = i;
      }
    }
    factor.update(psi.row(pick));
    taken[pick] = true;
    chosen.push_back(pick);
    trace.push_back(factor.log_det());
  }
  return finish_best_in(n, std::move(chosen), std::move(trace));
}

Selection greedy_mse(const SensingMatrix& psi, std::size_t sensors,
                     const PlacementOptions& opts) {
  require_best_in_range(psi, sensors);
  const std::size_t n = psi.rows();
  const std::size_t k = psi.cols();
  const double ridge = ridge_of(psi, opts);
  Cholesky factor(k, ridge);
  double inverse_trace = static_cast<double>(k) / ridge;
  std::vector<bool> taken(n, false);
  std::vector<Index> chosen;
  std::vector<double> trace;
  std::vector<double> y(k);

  for (std::size_t step = 0; step < sensors; ++step) {
    Index pick = n;
    double best = -std::numeric_limits<double>::infinity();
    for (Index i = 0; i < n; ++i) {
      if (taken[i]) continue;
      auto r = psi.row(i);
      std::copy(r.begin(), r.end(), y.begin());
      factor.forward_solve(y);
      const double quad = dot(y, y);  // psi^T M psi, M = (T + ridge I)^-1
      factor.backward_solve(y);       // y = M psi
      // Sherman-Morrison: trace drops by ||M psi||^2 / (1 + psi^T M psi).
      const double drop = dot(y, y) / (1.0 + quad);
      if (drop > best) {
        best = drop;
        pick = i;
      }
    }
    factor.update(psi.row(pick));
    inverse_trace -= best;
    taken[pick] = true;
    chosen.push_back(pick);
    trace.push_back(inverse_trace);
  }
  return finish_best_in(n, std::move(chosen), std::move(trace));
}

std::vector<double> mi_gains(const SensingMatrix& psi, IndexSet chosen,
                             double sigma2, double ridge) {
  const double shift = NoiseModel(sigma2).sigma2 + ridge;
  std::vector<bool> taken(psi.rows(), false);
  Cholesky factor(psi.cols(), shift);
  for (Index i : chosen) {
    if (i >= psi.rows()) throw ConstraintError("index out of range");
    taken[i] = true;
    factor.update(psi.row(i));
  }
  if (std::count(taken.begin(), taken.end(), false) == 0) {
    throw ConstraintError("no candidates left");
  }
  return mi_scores(psi, taken, factor, sigma2, shift).ratio;
}

Selection greedy_mi(const SensingMatrix& psi, std::size_t sensors,
                    const PlacementOptions& opts) {
  const std::size_t n = psi.rows();
  if (sensors < 1 || sensors >= n) {
    throw ConstraintError("mutual-information greedy requires 1 <= L < N" +
                          dims(psi, sensors));
  }
  const double sigma2 = NoiseModel(opts.sigma2).sigma2;
  const double shift = sigma2 + ridge_of(psi, opts);
  Cholesky factor(psi.cols(), shift);
  std::vector<bool> taken(n, false);
  std::vector<Index> chosen;
  std::vector<double> trace;

  for (std::size_t step = 0; step < sensors; ++step) {
    const MiScores s = mi_scores(psi, taken, factor, sigma2, shift);
    double best = -std::numeric_limits<double>::infinity();
    for (Index i = 0; i < n; ++i) {
      if (!taken[i]) best = std::max(best, s.ratio[i]);
    }
    const double cutoff = best - 1e-12 * std::abs(best);
    Index pick = n;
    for (Index i = 0; i < n; ++i) {
      if (taken[i] || s.ratio[i] < cutoff) continue;
      if (pick == n || s.var_given_chosen[i] > s.var_given_chosen[pick]) {
        pick = i;
      }
    }
    factor.update(psi.row(pick));
    taken[pick] = true;
    chosen.push_back(pick);
    trace.push_back(s.ratio[pick]);
  }
  return finish_best_in(n, std::move(chosen), std::move(trace));
}

Selection greedy_coherence(const SensingMatrix& psi, std::size_t sensors,
                           const PlacementOptions&) {
  require_best_in_range(psi, sensors);
  const std::size_t n = psi.rows();
  if (sensors < 2 || n < 2) {
    throw ConstraintError("coherence greedy needs L >= 2" + dims(psi, sensors));
  }
  const SymmetricMatrix g = kernels::row_gram(row_normalize(psi));
  auto coh = [&](Index a, Index b) { return std::min(std::abs(g(a, b)), 1.0); };

  double best = std::numeric_limits<double>::infinity();
  Index pi = 0;
  Index pj = 1;
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      if (coh(i, j) < best) {
        best = coh(i, j);
        pi = i;
        pj = j;
      }
    }
  }
  std::vector<bool> taken(n, false);
  std::vector<Index> chosen{pi, pj};
  taken[pi] = taken[pj] = true;
  double worst = best;
  std::vector<double> trace{worst};
  std::vector<double> max_coh(n);
  for (Index i = 0; i < n; ++i) max_coh[i] = std::max(coh(i, pi), coh(i, pj));

  while (chosen.size() < sensors) {
    Index pick = n;
    double lowest = std::numeric_limits<double>::infinity();
    for (Index i = 0; i < n; ++i) {
      if (!taken[i] && max_coh[i] < lowest) {
        lowest = max_coh[i];
        pick = i;
      }
    }
    taken[pick] = true;
    chosen.push_back(pick);
    worst = std::max(worst, lowest);
    trace.push_back(worst);
    for (Index i = 0; i < n; ++i) max_coh[i] = std::max(max_coh[i], coh(i, pick));
  }
  return finish_best_in(n, std::move(chosen), std::move(trace));
}

Selection random_placement(const SensingMatrix& psi, std::size_t sensors,
                           std::uint64_t seed) {
  const std::size_t n = psi.rows();
  if (sensors < 1 || sensors > n) {
    throw ConstraintError("random placement requires 1 <= L <= N" +
                          dims(psi, sensors));
  }
  RandomStream rng(seed);
  std::vector<Index> perm(n);
  std::iota(perm.begin(), perm.end(), Index{0});
  for (std::size_t i = 0; i < sensors; ++i) {
    const std::size_t j = i + rng.uniform_index(n - i);
    std::swap(perm[i], perm[j]);
  }
  perm.resize(sensors);
  return finish_best_in(n, std::move(perm), {});
}

Selection place(const SensingMatrix& psi, std::size_t sensors,
                const PlacementOptions& opts) {
  switch (opts.algorithm) {
    case Algorithm::kFrameSense: return framesense(psi, sensors, opts);
    case Algorithm::kDeterminant: return greedy_det(psi, sensors, opts);
    case Algorithm::kMse: return greedy_mse(psi, sensors, opts);
    case Algorithm::kMutualInformation: return greedy_mi(psi, sensors, opts);
    case Algorithm::kCoherence: return greedy_coherence(psi, sensors, opts);
    case Algorithm::kRandom: return random_placement(psi, sensors, opts.seed);
  }
  throw ConstraintError("unknown algorithm");
}

namespace {

kernels::SubsetObjective oracle_objective(const SensingMatrix& psi,
                                          OracleObjective objective,
                                          double sigma2) {
  if (objective == OracleObjective::kFramePotential) {
    return [&psi](IndexSet s) { return frame_potential(psi, s); };
  }
  const NoiseModel noise(sigma2);
  return [&psi, noise](IndexSet s) {
    return mse(psi, s, noise).value_or(std::numeric_limits<double>::infinity());
  };
}

void require_oracle(const SensingMatrix& psi, std::size_t sensors) {
  if (sensors < 1 || sensors > psi.rows()) {
    throw ConstraintError("oracle requires 1 <= L <= N" + dims(psi, sensors));
  }
  if (kernels::binomial(psi.rows(), sensors) > kOracleMaxSubsets) {
    throw ConstraintError("exhaustive search over C(N, L) subsets exceeds the "
                          "10^7 guard" + dims(psi, sensors));
  }
}

OracleResult to_oracle_result(std::size_t n, kernels::SubsetOptimum best) {
  return {finish_best_in(n, std::move(best.subset), {}), best.value};
}

}  // namespace

OracleResult exhaustive_oracle(const SensingMatrix& psi, std::size_t sensors,
                               OracleObjective objective, double sigma2) {
  require_oracle(psi, sensors);
  return to_oracle_result(
      psi.rows(), kernels::argmin_subsets(psi.rows(), sensors,
                                          oracle_objective(psi, objective, sigma2)));
}

OracleResult exhaustive_oracle_serial(const SensingMatrix& psi,
                                      std::size_t sensors,
                                      OracleObjective objective, double sigma2) {
  require_oracle(psi, sensors);
  return to_oracle_result(
      psi.rows(), kernels::argmin_subsets_serial(
                      psi.rows(), sensors, oracle_objective(psi, objective, sigma2)));
}

}  // namespace framesense
