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

// Command-line front end: placement, matrix generation, sweeps, audits and
// bound reports.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "framesense/bounds.hpp"
#include "framesense/csv.hpp"
#include "framesense/errors.hpp"
#include "framesense/harness.hpp"
#include "framesense/linalg.hpp"
#include "framesense/matgen.hpp"
#include "framesense/placement.hpp"

namespace {

using namespace framesense;

struct MatrixArgs {
  std::string matrix;
  std::string family;
  std::size_t n = 0;
  std::size_t k = 0;
  double scale = 2.0;
  double stddev = 1.0;
  std::uint64_t seed = 0;

  void add_to(CLI::App* cmd) {
    auto* m = cmd->add_option("--matrix", matrix, "CSV matrix file");
    auto* g = cmd->add_option("--gen", family, "Generate a matrix of this family");
    m->excludes(g);
    cmd->add_option("--n", n, "Rows of the generated matrix");
    cmd->add_option("--k", k, "Columns of the generated matrix");
    cmd->add_option("--scale", scale, "C for stacked_scaled");
    cmd->add_option("--stddev", stddev, "Gaussian entry standard deviation");
    cmd->add_option("--seed", seed, "Seed for generation and random placement");
  }

  SensingMatrix load() const {
    if (!matrix.empty()) return read_matrix_csv(matrix);
    if (family.empty()) throw ConstraintError("one of --matrix or --gen is required");
    return generate({parse_family(family), n, k, seed, scale, stddev});
  }
};

struct SweepArgs {
  std::string config;
  std::string out;
  std::optional<int> threads;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--config", config, "JSON experiment config");
    cmd->add_option("--out", out, "Output path prefix");
    cmd->add_option("--threads", threads, "Worker threads (overrides config)");
  }

  harness::ExperimentConfig resolve(harness::ExperimentConfig base) const {
    harness::ExperimentConfig cfg =
        config.empty() ? std::move(base) : harness::load_config(config, std::move(base));
    if (!out.empty()) cfg.out = out;
    if (threads) cfg.threads = *threads;
    return cfg;
  }
};

void print_selection(const SensingMatrix& psi, const Selection& sel,
                     double sigma2) {
  std::cout << "chosen:";
  for (Index i : sel.sorted_chosen()) std::cout << ' ' << i + 1;
  std::cout << '\n';
  std::cout << "fp: " << format_double(frame_potential(psi, sel.chosen)) << '\n';
  const auto m = mse(psi, sel.chosen, NoiseModel(sigma2));
  std::cout << "mse: " << (m ? format_double(*m) : std::string("unbounded")) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sensor placement by greedy frame-potential minimization"};
  app.require_subcommand(1);

  // place
  auto* place_cmd = app.add_subcommand("place", "Choose L sensor locations");
  MatrixArgs place_matrix;
  place_matrix.add_to(place_cmd);
  std::size_t sensors = 0;
  std::string algo = "framesense";
  bool no_normalize = false;
  double sigma2 = 1.0;
  std::optional<double> ridge;
  place_cmd->add_option("--sensors", sensors, "Number of sensors L")->required();
  place_cmd->add_option("--algo", algo,
                        "framesense | det | mse | mi | coherence | random");
  place_cmd->add_flag("--no-normalize", no_normalize,
                      "FrameSense: select on the raw rows");
  place_cmd->add_option("--sigma2", sigma2, "Noise variance");
  place_cmd->add_option("--ridge", ridge, "Regularizer of det / mse / mi");

  // matgen
  auto* matgen_cmd = app.add_subcommand("matgen", "Generate sensing matrices");
  SweepArgs matgen_args;
  matgen_args.add_to(matgen_cmd);

  // sweeps
  auto* mse_cmd = app.add_subcommand("sweep-mse", "MSE as a function of L");
  SweepArgs mse_args;
  mse_args.add_to(mse_cmd);
  auto* time_cmd = app.add_subcommand("sweep-time", "Placement time versus N");
  SweepArgs time_args;
  time_args.add_to(time_cmd);
  auto* audit_cmd = app.add_subcommand("audit", "Greedy versus exhaustive optimum");
  SweepArgs audit_args;
  audit_args.add_to(audit_cmd);

  // bounds
  auto* bounds_cmd = app.add_subcommand("bounds", "Approximation factors and MSE interval");
  MatrixArgs bounds_matrix;
  bounds_matrix.add_to(bounds_cmd);
  std::size_t bounds_sensors = 0;
  bool bounds_delta = true;
  bounds_cmd->add_option("--sensors", bounds_sensors, "Number of sensors L")->required();
  bounds_cmd->add_flag("!--no-delta", bounds_delta, "Skip the exhaustive delta");

  // mp
  auto* mp_cmd = app.add_subcommand("mp", "Asymptotic i.i.d. scenario factors");
  MPScenario scenario;
  mp_cmd->add_option("--c1", scenario.c1, "L / K (< 1)");
  mp_cmd->add_option("--c2", scenario.c2, "N / K (> 1)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*place_cmd) {
      const SensingMatrix psi = place_matrix.load();
      PlacementOptions opts;
      opts.algorithm = parse_algorithm(algo);
      opts.normalize_rows = !no_normalize;
      opts.seed = place_matrix.seed;
      opts.sigma2 = NoiseModel(sigma2).sigma2;
      opts.ridge = ridge;
      print_selection(psi, place(psi, sensors, opts), sigma2);
    } else if (*matgen_cmd) {
      harness::ExperimentConfig base;
      base.trials = 1;
      const auto cfg = matgen_args.resolve(base);
      if (cfg.families.empty() || cfg.trials < 1) {
        throw ConstraintError("matgen needs a family and trials >= 1");
      }
      const bool single = cfg.families.size() == 1 && cfg.trials == 1;
      for (Family f : cfg.families) {
        for (std::size_t t = 0; t < cfg.trials; ++t) {
          const auto seed = harness::trial_seed(cfg.master_seed, f, cfg.n, t);
          std::string path = cfg.out;
          if (!single) {
            path += "_" + std::string(to_string(f)) + "_t" + std::to_string(t);
          }
          path += ".csv";
          write_matrix_csv(path, generate({f, cfg.n, cfg.k, seed, cfg.scale, cfg.stddev}));
          std::cout << path << ' ' << seed << '\n';
        }
      }
    } else if (*mse_cmd) {
      const auto cfg = mse_args.resolve(harness::default_mse_config());
      harness::write_outputs(cfg.out, harness::sweep_mse(cfg),
                             harness::PlotKind::kMseVsSensors);
    } else if (*time_cmd) {
      const auto cfg = time_args.resolve(harness::default_timing_config());
      harness::write_outputs(cfg.out, harness::sweep_timing(cfg),
                             harness::PlotKind::kTimeVsLocations);
    } else if (*audit_cmd) {
      const auto cfg = audit_args.resolve(harness::default_audit_config());
      const auto table = harness::oracle_audit(cfg);
      harness::write_outputs(cfg.out, table);
      std::cout << harness::audit_agg_csv(table);
    } else if (*bounds_cmd) {
      const SensingMatrix psi = bounds_matrix.load();
      PlacementOptions opts;
      opts.normalize_rows = false;
      const Selection sel = framesense::framesense(psi, bounds_sensors, opts);
      std::cout << bounds_report(psi, bounds_sensors, sel.chosen, bounds_delta)
                       .to_key_value();
    } else if (*mp_cmd) {
      std::cout << to_key_value(scenario, mp_scenario(scenario));
    }
  } catch (const ConstraintError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
