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

#include "framesense/harness.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "framesense/csv.hpp"
#include "framesense/errors.hpp"
#include "framesense/linalg.hpp"
#include "framesense/matgen.hpp"
#include "gtest/gtest.h"

namespace framesense::harness {
namespace {

ExperimentConfig small_sweep() {
  ExperimentConfig c = default_mse_config();
  c.n = 16;
  c.k = 4;
  c.l_values = {4, 6, 8};
  c.trials = 6;
  c.algorithms = {Algorithm::kFrameSense, Algorithm::kDeterminant, Algorithm::kMse,
                  Algorithm::kMutualInformation, Algorithm::kCoherence,
                  Algorithm::kRandom};
  return c;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

TEST(ConfigTest, Defaults) {
  const ExperimentConfig m = default_mse_config();
  EXPECT_EQ(m.n, 100u);
  EXPECT_EQ(m.k, 30u);
  EXPECT_EQ(m.l_values, (std::vector<std::size_t>{30, 35, 40, 45, 50, 55, 60}));
  EXPECT_EQ(m.trials, 100u);
  EXPECT_EQ(m.families.size(), 4u);
  EXPECT_EQ(default_timing_config().k, 10u);
  const ExperimentConfig a = default_audit_config();
  EXPECT_EQ(a.n, 12u);
  EXPECT_EQ(a.k, 4u);
  EXPECT_EQ(a.l_values, (std::vector<std::size_t>{6}));
}

TEST(ConfigTest, ParsesKnownKeys) {
  const ExperimentConfig c = parse_config(
      R"({"families": ["bernoulli", "dct_frame"], "n": 20, "k": 5, "l_values": [5, 7],
          "trials": 3, "algorithms": ["framesense", "mi"], "sigma2": 0.5,
          "master_seed": 9, "threads": 4, "normalize_rows": false, "ridge": 0.01,
          "scale": 3.0, "stddev": 0.2, "out": "x", "sensor_fraction": 0.25,
          "n_values": [10, 20]})",
      default_mse_config());
  EXPECT_EQ(c.families, (std::vector<Family>{Family::kBernoulli, Family::kDctFrame}));
  EXPECT_EQ(c.n, 20u);
  EXPECT_EQ(c.k, 5u);
  EXPECT_EQ(c.l_values, (std::vector<std::size_t>{5, 7}));
  EXPECT_EQ(c.trials, 3u);
  EXPECT_EQ(c.algorithms,
            (std::vector<Algorithm>{Algorithm::kFrameSense, Algorithm::kMutualInformation}));
  EXPECT_EQ(c.sigma2, 0.5);
  EXPECT_EQ(c.master_seed, 9u);
  EXPECT_EQ(c.threads, 4);
  EXPECT_FALSE(c.normalize_rows);
  EXPECT_EQ(c.ridge, 0.01);
  EXPECT_EQ(c.scale, 3.0);
  EXPECT_EQ(c.stddev, 0.2);
  EXPECT_EQ(c.out, "x");
  EXPECT_EQ(c.sensor_fraction, 0.25);
  EXPECT_EQ(c.n_values, (std::vector<std::size_t>{10, 20}));

  const ExperimentConfig keep = parse_config(R"({"trials": 2})", default_audit_config());
  EXPECT_EQ(keep.n, 12u);
  EXPECT_EQ(keep.trials, 2u);
}

TEST(ConfigTest, RejectsBadInput) {
  EXPECT_THROW(parse_config(R"({"trails": 3})", {}), ConstraintError);
  EXPECT_THROW(parse_config(R"({"trials": "many"})", {}), ConstraintError);
  EXPECT_THROW(parse_config(R"({"algorithms": ["anneal"]})", {}), ConstraintError);
  EXPECT_THROW(parse_config("[1, 2]", {}), ConstraintError);
  EXPECT_THROW(parse_config("{", {}), ConstraintError);
}

TEST(SweepTest, RowLayoutAndRegeneration) {
  const ExperimentConfig c = small_sweep();
  const ResultTable t = sweep_mse(c);
  ASSERT_EQ(t.rows.size(), 4u * 6u * 3u * 6u);
  for (const ResultRow& r : t.rows) {
    const Family f = parse_family(r.family);
    EXPECT_EQ(r.seed, trial_seed(c.master_seed, f, r.n, r.trial));
    const SensingMatrix psi = generate({f, r.n, r.k, r.seed, c.scale, c.stddev});
    PlacementOptions o;
    o.algorithm = parse_algorithm(r.algorithm);
    o.seed = r.seed;
    const Selection s = place(psi, r.l, o);
    EXPECT_EQ(r.fp, frame_potential(psi, s.chosen));
    EXPECT_EQ(r.mse, mse(psi, s.chosen).value_or(std::numeric_limits<double>::infinity()));
  }
}

TEST(SweepTest, AggregatesMatchRecomputation) {
  const ResultTable t = sweep_mse(small_sweep());
  ASSERT_EQ(t.aggregates.size(), 4u * 3u * 6u);
  for (const AggregateRow& a : t.aggregates) {
    std::vector<double> m, f;
    std::size_t count = 0, unbounded = 0;
    for (const ResultRow& r : t.rows) {
      if (r.family != a.family || r.l != a.l || r.algorithm != a.algorithm) continue;
      ++count;
      if (std::isinf(r.mse)) {
        ++unbounded;
      } else {
        m.push_back(r.mse);
      }
      f.push_back(r.fp);
    }
    EXPECT_EQ(a.count, count);
    EXPECT_EQ(a.unbounded, unbounded);
    EXPECT_EQ(a.failed, 0u);
    if (!m.empty()) {
      double mean = 0.0;
      for (double x : m) mean += x / static_cast<double>(m.size());
      double var = 0.0;
      for (double x : m) var += (x - mean) * (x - mean) / static_cast<double>(m.size());
      EXPECT_NEAR(a.mse_mean, mean, 1e-12 * mean);
      EXPECT_NEAR(a.mse_std, std::sqrt(var), 1e-12 * mean);
    }
    double fmean = 0.0;
    for (double x : f) fmean += x / static_cast<double>(f.size());
    EXPECT_NEAR(a.fp_mean, fmean, 1e-12 * fmean);
  }
}

TEST(SweepTest, IndependentOfThreadCount) {
  ExperimentConfig c = small_sweep();
  c.threads = 1;
  const ResultTable one = sweep_mse(c);
  for (int threads : {4, 8}) {
    c.threads = threads;
    const ResultTable many = sweep_mse(c);
    ASSERT_EQ(one.rows.size(), many.rows.size());
    for (std::size_t i = 0; i < one.rows.size(); ++i) {
      EXPECT_EQ(one.rows[i].seed, many.rows[i].seed);
      EXPECT_EQ(one.rows[i].algorithm, many.rows[i].algorithm);
      EXPECT_EQ(std::isinf(one.rows[i].mse), std::isinf(many.rows[i].mse));
      if (std::isfinite(one.rows[i].mse)) EXPECT_EQ(one.rows[i].mse, many.rows[i].mse);
      EXPECT_EQ(one.rows[i].fp, many.rows[i].fp);
    }
  }
}

TEST(SweepTest, UnboundedCellsAreCounted) {
  // Rows {e1, e1, e1, e2}: most size-2 random draws are rank deficient.
  const auto dir = std::filesystem::temp_directory_path() / "framesense_harness_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "degenerate.csv";
  write_matrix_csv(path, SensingMatrix{{1, 0}, {1, 0}, {1, 0}, {0, 1}});
  ExperimentConfig c;
  c.matrix = path;
  c.l_values = {2};
  c.trials = 20;
  c.algorithms = {Algorithm::kRandom, Algorithm::kFrameSense};
  const ResultTable t = sweep_mse(c);
  ASSERT_EQ(t.aggregates.size(), 2u);
  for (const AggregateRow& a : t.aggregates) {
    EXPECT_EQ(a.family, "file");
    EXPECT_EQ(a.count, 20u);
    if (a.algorithm == "random") {
      EXPECT_GT(a.unbounded, 0u);
      EXPECT_LT(a.unbounded, 20u);
    }
  }
  const std::string raw = raw_csv(t);
  EXPECT_NE(raw.find(",inf,"), std::string::npos);
}

TEST(SweepTest, ConstraintViolationsAreRejectedUpFront) {
  ExperimentConfig c = small_sweep();
  c.l_values = {15};
  EXPECT_THROW(sweep_mse(c), ConstraintError);
  c = small_sweep();
  c.threads = 0;
  EXPECT_THROW(sweep_mse(c), ConstraintError);
}

TEST(TimingTest, RecordsEveryPlacement) {
  ExperimentConfig c = default_timing_config();
  c.n_values = {20, 30};
  c.k = 4;
  c.trials = 2;
  c.algorithms = {Algorithm::kFrameSense, Algorithm::kMse};
  const ResultTable t = sweep_timing(c);
  ASSERT_EQ(t.rows.size(), 2u * 2u * 2u);
  for (const ResultRow& r : t.rows) {
    EXPECT_EQ(r.l, r.n / 2);
    EXPECT_GT(r.wall_time_seconds, 0.0);
  }
}

TEST(AuditTest, GuaranteesHoldOnSmallInstances) {
  ExperimentConfig c = default_audit_config();
  c.trials = 10;
  const AuditTable t = oracle_audit(c);
  ASSERT_EQ(t.rows.size(), 10u);
  ASSERT_EQ(t.summaries.size(), 1u);
  const AuditSummary& s = t.summaries[0];
  EXPECT_EQ(s.instances, 10u);
  EXPECT_EQ(s.skipped, 0u);
  EXPECT_EQ(s.fp_pass, 10u);
  EXPECT_EQ(s.interval_pass, 10u);
  EXPECT_GE(s.max_fp_ratio, 1.0);
  for (const AuditRow& r : t.rows) {
    EXPECT_LE(r.fp_opt, r.fp_greedy);
    EXPECT_LE(r.mse_opt, r.mse_greedy);
  }

  c.threads = 4;
  EXPECT_EQ(audit_raw_csv(oracle_audit(c)), audit_raw_csv(t));
}

TEST(AuditTest, LargeInstancesAreSkipped) {
  ExperimentConfig c = default_audit_config();
  c.n = 60;
  c.l_values = {30};
  c.trials = 1;
  const AuditTable t = oracle_audit(c);
  ASSERT_EQ(t.rows.size(), 1u);
  EXPECT_TRUE(t.rows[0].skipped);
  EXPECT_EQ(t.summaries[0].skipped, 1u);
}

TEST(CsvOutputTest, Headers) {
  ExperimentConfig c = small_sweep();
  c.trials = 1;
  const ResultTable t = sweep_mse(c);
  EXPECT_EQ(first_line(raw_csv(t)), "family,N,K,L,algorithm,trial,seed,mse,fp,wall_time_seconds");
  EXPECT_EQ(first_line(agg_csv(t)),
            "family,N,K,L,algorithm,trials,unbounded,failed,mse_mean,mse_std,fp_mean,"
            "fp_std,time_mean,time_std");
  ExperimentConfig a = default_audit_config();
  a.trials = 1;
  const AuditTable at = oracle_audit(a);
  EXPECT_EQ(first_line(audit_raw_csv(at)),
            "family,trial,seed,N,K,L,gamma,eta,l_min,l_max,l_mean,d,delta,lemma3_lower,"
            "lemma3_upper,fp_greedy,fp_opt,mse_greedy,mse_opt,fp_pass,lemma3_pass,"
            "eta_pass,note");
  EXPECT_EQ(first_line(audit_agg_csv(at)),
            "family,N,K,L,instances,skipped,fp_pass,lemma3_pass,eta_evaluated,eta_pass,"
            "max_fp_ratio");
  // Every raw line has the same number of fields as the header.
  std::istringstream in(raw_csv(t));
  std::string line;
  while (std::getline(in, line)) EXPECT_EQ(std::count(line.begin(), line.end(), ','), 9);
}

TEST(CsvOutputTest, WritesFilesAndPlotScript) {
  const auto dir = std::filesystem::temp_directory_path() / "framesense_harness_test";
  std::filesystem::create_directories(dir);
  ExperimentConfig c = small_sweep();
  c.trials = 1;
  write_outputs(dir / "sweep", sweep_mse(c), PlotKind::kMseVsSensors);
  EXPECT_TRUE(std::filesystem::exists(dir / "sweep_raw.csv"));
  EXPECT_TRUE(std::filesystem::exists(dir / "sweep_agg.csv"));
  EXPECT_TRUE(std::filesystem::exists(dir / "sweep_plot.py"));
  const std::string script = plot_script(PlotKind::kMseVsSensors, "sweep");
  EXPECT_NE(script.find("'sweep'"), std::string::npos);
  EXPECT_NE(script.find("_agg.csv"), std::string::npos);
}

}  // namespace
}  // namespace framesense::harness
