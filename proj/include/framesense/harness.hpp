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
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "framesense/bounds.hpp"
#include "framesense/matgen.hpp"
#include "framesense/placement.hpp"

namespace framesense::harness {

// Sweep description. Loaded from a JSON object whose keys are the field
// names below; keys that are absent keep the defaults of the command.
struct ExperimentConfig {
  std::vector<Family> families{Family::kGaussian};
  // When set, every trial uses this matrix instead of generating one.
  std::optional<std::filesystem::path> matrix;
  std::size_t n = 100;
  std::size_t k = 30;
  double scale = 2.0;
  double stddev = 1.0;
  std::vector<std::size_t> l_values{30, 35, 40, 45, 50, 55, 60};
  // Timing sweep only: N grid and L = ceil(sensor_fraction * N).
  std::vector<std::size_t> n_values{20, 50, 80, 110, 140, 170, 200};
  double sensor_fraction = 0.5;
  std::size_t trials = 100;
  std::vector<Algorithm> algorithms{Algorithm::kFrameSense, Algorithm::kDeterminant,
                                    Algorithm::kMse, Algorithm::kMutualInformation,
                                    Algorithm::kRandom};
  double sigma2 = 1.0;
  std::uint64_t master_seed = 1;
  int threads = 1;
  bool normalize_rows = true;
  std::optional<double> ridge;
  std::string out = "framesense";
};

// N = 100, K = 30, L = 30..60 step 5, 100 trials, four random families.
ExperimentConfig default_mse_config();
// Gaussian, K = 10, N = 20..200 step 30, L = ceil(N / 2), 100 trials.
ExperimentConfig default_timing_config();
// Gaussian, N = 12, K = 4, L = 6, 100 trials.
ExperimentConfig default_audit_config();

// Overlays the keys of a JSON object on `base`. Throws ConstraintError for
// unknown keys or values of the wrong type.
ExperimentConfig parse_config(const std::string& json_text, ExperimentConfig base);
ExperimentConfig load_config(const std::filesystem::path& path,
                             ExperimentConfig base);

// Generation seed of a trial. Depends only on (master seed, family, N,
// trial), so any raw row can be regenerated from its recorded seed.
std::uint64_t trial_seed(std::uint64_t master_seed, Family family,
                         std::size_t n, std::size_t trial);

struct ResultRow {
  std::string family;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t l = 0;
  std::string algorithm;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  double mse = 0.0;  // +inf when unbounded, NaN when the placement failed
  double fp = 0.0;
  double wall_time_seconds = 0.0;
};

struct AggregateRow {
  std::string family;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t l = 0;
  std::string algorithm;
  std::size_t count = 0;
  std::size_t unbounded = 0;
  std::size_t failed = 0;
  // Statistics over the finite cells only; population standard deviation.
  double mse_mean = 0.0;
  double mse_std = 0.0;
  double fp_mean = 0.0;
  double fp_std = 0.0;
  double time_mean = 0.0;
  double time_std = 0.0;
};

struct ResultTable {
  std::vector<ResultRow> rows;
  std::vector<AggregateRow> aggregates;
};

// Groups by (family, N, K, L, algorithm) after sorting, so the output does
// not depend on the order of `rows`.
std::vector<AggregateRow> aggregate(const std::vector<ResultRow>& rows);

// For each trial and family: generate, run every algorithm at every L and
// evaluate MSE (sigma2) and FP on the original matrix. Runs on
// cfg.threads workers; output is independent of the worker count.
ResultTable sweep_mse(const ExperimentConfig& cfg);

// Wall time of each placement for every N in cfg.n_values, after one
// untimed warm-up run. Always single-threaded.
ResultTable sweep_timing(const ExperimentConfig& cfg);

struct AuditRow {
  std::string family;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  bool skipped = false;
  BoundsReport bounds;
  double fp_greedy = 0.0;
  double fp_opt = 0.0;
  double mse_greedy = 0.0;
  double mse_opt = 0.0;
  bool fp_pass = false;      // FP(greedy) <= gamma * FP(opt)
  bool interval_pass = false;  // lower <= MSE / sigma2 <= upper
  std::optional<bool> eta_pass;  // MSE(greedy) <= eta * MSE(opt), if eta exists
  std::string note;
};

struct AuditSummary {
  std::string family;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t l = 0;
  std::size_t instances = 0;
  std::size_t skipped = 0;
  std::size_t fp_pass = 0;
  std::size_t interval_pass = 0;
  std::size_t eta_evaluated = 0;
  std::size_t eta_pass = 0;
  double max_fp_ratio = 0.0;
};

struct AuditTable {
  std::vector<AuditRow> rows;
  std::vector<AuditSummary> summaries;
};

// FrameSense (on the un-normalized matrix) against the exhaustive FP and MSE
// optima, with every bound of bounds_report. Instances whose C(N, L)
// exceeds the oracle guard are kept as skipped rows.
AuditTable oracle_audit(const ExperimentConfig& cfg);

std::string raw_csv(const ResultTable& t);
std::string agg_csv(const ResultTable& t);
std::string audit_raw_csv(const AuditTable& t);
std::string audit_agg_csv(const AuditTable& t);

enum class PlotKind { kMseVsSensors, kTimeVsLocations, kAudit };
// Self-contained Python/matplotlib script that reads <prefix>_agg.csv (or
// <prefix>_raw.csv for the audit) from its own directory.
std::string plot_script(PlotKind kind, const std::string& prefix_name);

// Writes <prefix>_raw.csv, <prefix>_agg.csv and <prefix>_plot.py.
void write_outputs(const std::filesystem::path& prefix, const ResultTable& t,
                   PlotKind kind);
void write_outputs(const std::filesystem::path& prefix, const AuditTable& t);

}  // namespace framesense::harness
