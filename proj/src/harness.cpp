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

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <limits>
#include <map>
#include <nlohmann/json.hpp>
#include <sstream>
#include <tuple>

#include "framesense/csv.hpp"
#include "framesense/errors.hpp"
#include "framesense/kernels.hpp"
#include "framesense/linalg.hpp"
#include "framesense/random.hpp"

namespace framesense::harness {

namespace {

using json = nlohmann::json;
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::string_view kFileFamily = "file";

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;
};

MeanStd mean_std(const std::vector<double>& v) {
  if (v.empty()) return {kNan, kNan};
  double s = 0.0;
  for (double x : v) s += x;
  const double mean = s / static_cast<double>(v.size());
  double var = 0.0;
  for (double x : v) var += (x - mean) * (x - mean);
  return {mean, std::sqrt(var / static_cast<double>(v.size()))};
}

template <class T>
T get_as(const json& j, const std::string& key) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    throw ConstraintError("config key '" + key + "' has the wrong type");
  }
}

// Source of the matrix for one (family, trial) work item.
struct MatrixSource {
  const ExperimentConfig& cfg;
  std::optional<SensingMatrix> file_matrix;

  explicit MatrixSource(const ExperimentConfig& c) : cfg(c) {
    if (cfg.matrix) file_matrix = read_matrix_csv(*cfg.matrix);
  }

  std::size_t family_count() const {
    return file_matrix ? 1 : cfg.families.size();
  }
  std::string family_name(std::size_t f) const {
    return file_matrix ? std::string(kFileFamily)
                       : std::string(to_string(cfg.families[f]));
  }
  std::uint64_t seed(std::size_t f, std::size_t n, std::size_t trial) const {
    const Family fam = file_matrix ? Family::kGaussian : cfg.families[f];
    return trial_seed(cfg.master_seed, fam, n, trial);
  }
  SensingMatrix make(std::size_t f, std::size_t n, std::size_t k,
                     std::uint64_t seed) const {
    if (file_matrix) return *file_matrix;
    return generate({cfg.families[f], n, k, seed, cfg.scale, cfg.stddev});
  }
  std::size_t rows() const { return file_matrix ? file_matrix->rows() : cfg.n; }
  std::size_t cols() const { return file_matrix ? file_matrix->cols() : cfg.k; }
};

void validate_common(const ExperimentConfig& cfg) {
  if (cfg.trials < 1) throw ConstraintError("trials must be >= 1");
  if (cfg.threads < 1) throw ConstraintError("threads must be >= 1");
  if (cfg.algorithms.empty()) throw ConstraintError("no algorithms configured");
  if (!cfg.matrix && cfg.families.empty()) {
    throw ConstraintError("no matrix families configured");
  }
  NoiseModel{cfg.sigma2};
}

void validate_sensors(std::size_t n, std::size_t k, std::size_t l,
                      const std::vector<Algorithm>& algorithms) {
  const std::string where = " (N = " + std::to_string(n) + ", K = " +
                            std::to_string(k) + ", L = " + std::to_string(l) + ")";
  for (Algorithm a : algorithms) {
    switch (a) {
      case Algorithm::kFrameSense:
        if (l < k || l + 2 > n) {
          throw ConstraintError("framesense needs K <= L <= N - 2" + where);
        }
        break;
      case Algorithm::kMutualInformation:
        if (l < 1 || l >= n) throw ConstraintError("mi needs 1 <= L < N" + where);
        break;
      case Algorithm::kRandom:
        if (l < 1 || l > n) throw ConstraintError("random needs 1 <= L <= N" + where);
        break;
      default:
        if (l < k || l > n) throw ConstraintError(
            std::string(to_string(a)) + " needs K <= L <= N" + where);
    }
  }
}

PlacementOptions options_for(const ExperimentConfig& cfg, Algorithm a,
                             std::uint64_t seed) {
  PlacementOptions o;
  o.algorithm = a;
  o.normalize_rows = cfg.normalize_rows;
  o.seed = seed;
  o.sigma2 = cfg.sigma2;
  o.ridge = cfg.ridge;
  return o;
}

// Fills mse / fp of a row from a placement; failures become NaN.
void evaluate(ResultRow& row, const SensingMatrix& psi, const Selection& sel,
              double sigma2) {
  row.mse = mse(psi, sel.chosen, NoiseModel(sigma2)).value_or(kInf);
  row.fp = frame_potential(psi, sel.chosen);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string bool_str(bool b) { return b ? "pass" : "fail"; }

std::string quoted_note(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

std::filesystem::path with_suffix(const std::filesystem::path& prefix,
                                  const std::string& suffix) {
  std::filesystem::path p = prefix;
  p += suffix;
  return p;
}

}  // namespace

ExperimentConfig default_mse_config() {
  ExperimentConfig c;
  c.families = {Family::kGaussian, Family::kGaussianRowNormalized,
                Family::kRandomTightFrame, Family::kBernoulli};
  return c;
}

ExperimentConfig default_timing_config() {
  ExperimentConfig c;
  c.k = 10;
  return c;
}

ExperimentConfig default_audit_config() {
  ExperimentConfig c;
  c.n = 12;
  c.k = 4;
  c.l_values = {6};
  c.algorithms = {Algorithm::kFrameSense};
  return c;
}

ExperimentConfig parse_config(const std::string& json_text, ExperimentConfig c) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConstraintError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConstraintError("config must be a JSON object");

  for (const auto& [key, value] : j.items()) {
    if (key == "family") {
      c.families = {parse_family(get_as<std::string>(value, key))};
    } else if (key == "families") {
      c.families.clear();
      for (const auto& f : get_as<std::vector<std::string>>(value, key)) {
        c.families.push_back(parse_family(f));
      }
    } else if (key == "matrix") {
      c.matrix = get_as<std::string>(value, key);
    } else if (key == "n") {
      c.n = get_as<std::size_t>(value, key);
    } else if (key == "k") {
      c.k = get_as<std::size_t>(value, key);
    } else if (key == "scale") {
      c.scale = get_as<double>(value, key);
    } else if (key == "stddev") {
      c.stddev = get_as<double>(value, key);
    } else if (key == "l_values") {
      c.l_values = get_as<std::vector<std::size_t>>(value, key);
    } else if (key == "n_values") {
      c.n_values = get_as<std::vector<std::size_t>>(value, key);
    } else if (key == "sensor_fraction") {
      c.sensor_fraction = get_as<double>(value, key);
    } else if (key == "trials") {
      c.trials = get_as<std::size_t>(value, key);
    } else if (key == "algorithms") {
      c.algorithms.clear();
      for (const auto& a : get_as<std::vector<std::string>>(value, key)) {
        c.algorithms.push_back(parse_algorithm(a));
      }
    } else if (key == "sigma2") {
      c.sigma2 = get_as<double>(value, key);
    } else if (key == "master_seed") {
      c.master_seed = get_as<std::uint64_t>(value, key);
    } else if (key == "threads") {
      c.threads = get_as<int>(value, key);
    } else if (key == "normalize_rows") {
      c.normalize_rows = get_as<bool>(value, key);
    } else if (key == "ridge") {
      c.ridge = get_as<double>(value, key);
    } else if (key == "out") {
      c.out = get_as<std::string>(value, key);
    } else {
      throw ConstraintError("unknown config key '" + key + "'");
    }
  }
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path,
                             ExperimentConfig base) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), std::move(base));
}

std::uint64_t trial_seed(std::uint64_t master_seed, Family family,
                         std::size_t n, std::size_t trial) {
  const std::uint64_t fam = derive_seed(master_seed, static_cast<std::uint64_t>(family));
  return derive_seed(derive_seed(fam, n), trial);
}

std::vector<AggregateRow> aggregate(const std::vector<ResultRow>& rows) {
  auto key = [](const ResultRow& r) {
    return std::tie(r.family, r.n, r.k, r.l, r.algorithm);
  };
  std::vector<const ResultRow*> sorted;
  sorted.reserve(rows.size());
  for (const auto& r : rows) sorted.push_back(&r);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [&](const ResultRow* a, const ResultRow* b) {
                     return std::tie(a->family, a->n, a->k, a->l, a->algorithm,
                                     a->trial) <
                            std::tie(b->family, b->n, b->k, b->l, b->algorithm,
                                     b->trial);
                   });

  std::vector<AggregateRow> out;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    std::vector<double> mses, fps, times;
    AggregateRow a;
    const ResultRow& first = *sorted[i];
    a.family = first.family;
    a.n = first.n;
    a.k = first.k;
    a.l = first.l;
    a.algorithm = first.algorithm;
    for (; j < sorted.size() && key(*sorted[j]) == key(first); ++j) {
      const ResultRow& r = *sorted[j];
      ++a.count;
      if (std::isnan(r.mse)) {
        ++a.failed;
        continue;
      }
      if (std::isinf(r.mse)) {
        ++a.unbounded;
      } else {
        mses.push_back(r.mse);
      }
      fps.push_back(r.fp);
      times.push_back(r.wall_time_seconds);
    }
    const MeanStd m = mean_std(mses);
    const MeanStd f = mean_std(fps);
    const MeanStd t = mean_std(times);
    a.mse_mean = m.mean;
    a.mse_std = m.std;
    a.fp_mean = f.mean;
    a.fp_std = f.std;
    a.time_mean = t.mean;
    a.time_std = t.std;
    out.push_back(std::move(a));
    i = j;
  }
  return out;
}

ResultTable sweep_mse(const ExperimentConfig& cfg) {
  validate_common(cfg);
  if (cfg.l_values.empty()) throw ConstraintError("l_values is empty");
  const MatrixSource source(cfg);
  const std::size_t n = source.rows();
  const std::size_t k = source.cols();
  for (std::size_t l : cfg.l_values) validate_sensors(n, k, l, cfg.algorithms);

  const std::size_t families = source.family_count();
  const std::size_t per_item = cfg.l_values.size() * cfg.algorithms.size();
  const std::size_t items = families * cfg.trials;
  std::vector<ResultRow> rows(items * per_item);

  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 1) num_threads(cfg.threads)
  for (std::int64_t item = 0; item < static_cast<std::int64_t>(items); ++item) {
    try {
      const std::size_t f = static_cast<std::size_t>(item) / cfg.trials;
      const std::size_t trial = static_cast<std::size_t>(item) % cfg.trials;
      const std::uint64_t seed = source.seed(f, n, trial);
      const SensingMatrix psi = source.make(f, n, k, seed);
      std::size_t slot = static_cast<std::size_t>(item) * per_item;
      for (std::size_t l : cfg.l_values) {
        for (Algorithm a : cfg.algorithms) {
          ResultRow& row = rows[slot++];
          row = {source.family_name(f), n, k, l, std::string(to_string(a)),
                 trial, seed};
          try {
            const auto t0 = std::chrono::steady_clock::now();
            const Selection sel = place(psi, l, options_for(cfg, a, seed));
            row.wall_time_seconds = seconds_since(t0);
            evaluate(row, psi, sel, cfg.sigma2);
          } catch (const NumericalError&) {
            row.mse = row.fp = kNan;
          }
        }
      }
    } catch (...) {
#pragma omp critical(framesense_sweep_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);

  ResultTable t;
  t.rows = std::move(rows);
  t.aggregates = aggregate(t.rows);
  return t;
}

ResultTable sweep_timing(const ExperimentConfig& cfg) {
  validate_common(cfg);
  if (cfg.n_values.empty()) throw ConstraintError("n_values is empty");
  if (cfg.matrix) throw ConstraintError("timing sweep generates its own matrices");
  if (!(cfg.sensor_fraction > 0.0 && cfg.sensor_fraction <= 1.0)) {
    throw ConstraintError("sensor_fraction must be in (0, 1]");
  }
  const MatrixSource source(cfg);
  const std::size_t k = cfg.k;
  for (std::size_t n : cfg.n_values) {
    const auto l = static_cast<std::size_t>(
        std::ceil(cfg.sensor_fraction * static_cast<double>(n)));
    validate_sensors(n, k, l, cfg.algorithms);
  }

  ResultTable t;
  for (std::size_t f = 0; f < source.family_count(); ++f) {
    for (std::size_t n : cfg.n_values) {
      const auto l = static_cast<std::size_t>(
          std::ceil(cfg.sensor_fraction * static_cast<double>(n)));
      for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
        const std::uint64_t seed = source.seed(f, n, trial);
        const SensingMatrix psi = source.make(f, n, k, seed);
        for (Algorithm a : cfg.algorithms) {
          ResultRow row{source.family_name(f), n, k, l,
                        std::string(to_string(a)), trial, seed};
          const PlacementOptions opts = options_for(cfg, a, seed);
          try {
            (void)place(psi, l, opts);  // warm-up
            const auto t0 = std::chrono::steady_clock::now();
            const Selection sel = place(psi, l, opts);
            row.wall_time_seconds = seconds_since(t0);
            evaluate(row, psi, sel, cfg.sigma2);
          } catch (const NumericalError&) {
            row.mse = row.fp = kNan;
          }
          t.rows.push_back(std::move(row));
        }
      }
    }
  }
  t.aggregates = aggregate(t.rows);
  return t;
}

AuditTable oracle_audit(const ExperimentConfig& cfg) {
  validate_common(cfg);
  if (cfg.l_values.empty()) throw ConstraintError("l_values is empty");
  const MatrixSource source(cfg);
  const std::size_t n = source.rows();
  const std::size_t k = source.cols();
  for (std::size_t l : cfg.l_values) {
    validate_sensors(n, k, l, {Algorithm::kFrameSense});
  }
  const NoiseModel noise(cfg.sigma2);

  const std::size_t families = source.family_count();
  const std::size_t items = families * cfg.trials;
  const std::size_t per_item = cfg.l_values.size();
  std::vector<AuditRow> rows(items * per_item);

  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 1) num_threads(cfg.threads)
  for (std::int64_t item = 0; item < static_cast<std::int64_t>(items); ++item) {
    try {
      const std::size_t f = static_cast<std::size_t>(item) / cfg.trials;
      const std::size_t trial = static_cast<std::size_t>(item) % cfg.trials;
      const std::uint64_t seed = source.seed(f, n, trial);
      const SensingMatrix psi = source.make(f, n, k, seed);
      std::size_t slot = static_cast<std::size_t>(item) * per_item;
      for (std::size_t l : cfg.l_values) {
        AuditRow& row = rows[slot++];
        row.family = source.family_name(f);
        row.trial = trial;
        row.seed = seed;
        row.bounds.n = n;
        row.bounds.k = k;
        row.bounds.l = l;
        if (kernels::binomial(n, l) > kOracleMaxSubsets) {
          row.skipped = true;
          row.note = "skipped: C(N, L) exceeds the oracle guard";
          continue;
        }
        PlacementOptions opts;
        opts.normalize_rows = false;
        const Selection greedy = framesense(psi, l, opts);
        row.bounds = bounds_report(psi, l, greedy.chosen);
        row.note = row.bounds.note;
        row.fp_greedy = frame_potential(psi, greedy.chosen);
        row.mse_greedy = mse(psi, greedy.chosen, noise).value_or(kInf);
        row.fp_opt =
            exhaustive_oracle(psi, l, OracleObjective::kFramePotential).value;
        row.mse_opt =
            exhaustive_oracle(psi, l, OracleObjective::kMse, cfg.sigma2).value;
        row.fp_pass = row.fp_greedy <= row.bounds.gamma * row.fp_opt;
        const double scaled = row.mse_greedy / cfg.sigma2;
        row.interval_pass = std::isfinite(scaled) && row.bounds.mse_upper &&
                            row.bounds.mse_lower <= scaled &&
                            scaled <= *row.bounds.mse_upper;
        if (row.bounds.eta) {
          row.eta_pass = row.mse_greedy <= *row.bounds.eta * row.mse_opt;
        }
      }
    } catch (...) {
#pragma omp critical(framesense_audit_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);

  AuditTable t;
  t.rows = std::move(rows);
  std::map<std::tuple<std::string, std::size_t>, AuditSummary> groups;
  for (const AuditRow& r : t.rows) {
    AuditSummary& s = groups[{r.family, r.bounds.l}];
    s.family = r.family;
    s.n = r.bounds.n;
    s.k = r.bounds.k;
    s.l = r.bounds.l;
    ++s.instances;
    if (r.skipped) {
      ++s.skipped;
      continue;
    }
    s.fp_pass += r.fp_pass;
    s.interval_pass += r.interval_pass;
    if (r.eta_pass) {
      ++s.eta_evaluated;
      s.eta_pass += *r.eta_pass;
    }
    s.max_fp_ratio = std::max(s.max_fp_ratio, r.fp_greedy / r.fp_opt);
  }
  for (auto& [key, s] : groups) t.summaries.push_back(s);
  return t;
}

std::string raw_csv(const ResultTable& t) {
  std::ostringstream os;
  os << "family,N,K,L,algorithm,trial,seed,mse,fp,wall_time_seconds\n";
  for (const ResultRow& r : t.rows) {
    os << r.family << ',' << r.n << ',' << r.k << ',' << r.l << ','
       << r.algorithm << ',' << r.trial << ',' << r.seed << ','
       << format_double(r.mse) << ',' << format_double(r.fp) << ','
       << format_double(r.wall_time_seconds) << '\n';
  }
  return os.str();
}

std::string agg_csv(const ResultTable& t) {
  std::ostringstream os;
  os << "family,N,K,L,algorithm,trials,unbounded,failed,mse_mean,mse_std,"
        "fp_mean,fp_std,time_mean,time_std\n";
  for (const AggregateRow& a : t.aggregates) {
    os << a.family << ',' << a.n << ',' << a.k << ',' << a.l << ','
       << a.algorithm << ',' << a.count << ',' << a.unbounded << ','
       << a.failed << ',' << format_double(a.mse_mean) << ','
       << format_double(a.mse_std) << ',' << format_double(a.fp_mean) << ','
       << format_double(a.fp_std) << ',' << format_double(a.time_mean) << ','
       << format_double(a.time_std) << '\n';
  }
  return os.str();
}

std::string audit_raw_csv(const AuditTable& t) {
  std::ostringstream os;
  os << "family,trial,seed," << BoundsReport::csv_header()
     << ",fp_greedy,fp_opt,mse_greedy,mse_opt,fp_pass,lemma3_pass,eta_pass,note\n";
  for (const AuditRow& r : t.rows) {
    os << r.family << ',' << r.trial << ',' << r.seed << ',';
    if (r.skipped) {
      os << r.bounds.n << ',' << r.bounds.k << ',' << r.bounds.l
         << ",nan,nan,nan,nan,nan,nan,nan,nan,nan,nan,nan,nan,nan,skip,skip,skip,"
         << quoted_note(r.note) << '\n';
      continue;
    }
    os << r.bounds.to_csv_row() << ',' << format_double(r.fp_greedy) << ','
       << format_double(r.fp_opt) << ',' << format_double(r.mse_greedy) << ','
       << format_double(r.mse_opt) << ',' << bool_str(r.fp_pass) << ','
       << bool_str(r.interval_pass) << ','
       << (r.eta_pass ? bool_str(*r.eta_pass) : std::string("n/a")) << ','
       << quoted_note(r.note) << '\n';
  }
  return os.str();
}

std::string audit_agg_csv(const AuditTable& t) {
  std::ostringstream os;
  os << "family,N,K,L,instances,skipped,fp_pass,lemma3_pass,eta_evaluated,"
        "eta_pass,max_fp_ratio\n";
  for (const AuditSummary& s : t.summaries) {
    os << s.family << ',' << s.n << ',' << s.k << ',' << s.l << ','
       << s.instances << ',' << s.skipped << ',' << s.fp_pass << ','
       << s.interval_pass << ',' << s.eta_evaluated << ',' << s.eta_pass << ','
       << format_double(s.max_fp_ratio) << '\n';
  }
  return os.str();
}

std::string plot_script(PlotKind kind, const std::string& prefix_name) {
  std::ostringstream os;
  os << "#!/usr/bin/env python3\n"
        "import csv\nimport os\nimport sys\nfrom collections import defaultdict\n\n"
        "import matplotlib\nmatplotlib.use('Agg')\nimport matplotlib.pyplot as plt\n\n"
        "HERE = os.path.dirname(os.path.abspath(__file__))\n"
        "PREFIX = os.path.join(HERE, '" << prefix_name << "')\n\n";
  switch (kind) {
    case PlotKind::kMseVsSensors:
    case PlotKind::kTimeVsLocations: {
      const bool timing = kind == PlotKind::kTimeVsLocations;
      os << "rows = list(csv.DictReader(open(PREFIX + '_agg.csv')))\n"
            "families = sorted({r['family'] for r in rows})\n"
            "fig, axes = plt.subplots(1, len(families), squeeze=False,\n"
            "                         figsize=(5 * len(families), 4))\n"
            "for ax, fam in zip(axes[0], families):\n"
            "    curves = defaultdict(list)\n"
            "    for r in rows:\n"
            "        if r['family'] == fam:\n"
         << (timing ? "            curves[r['algorithm']].append((int(r['N']), "
                      "float(r['time_mean']), float(r['time_std'])))\n"
                    : "            curves[r['algorithm']].append((int(r['L']), "
                      "float(r['mse_mean']), float(r['mse_std'])))\n")
         << "    for alg, pts in sorted(curves.items()):\n"
            "        pts.sort()\n"
            "        x = [p[0] for p in pts]\n"
            "        y = [p[1] for p in pts]\n"
            "        s = [p[2] for p in pts]\n"
            "        ax.plot(x, y, marker='o', label=alg)\n"
            "        ax.fill_between(x, y, [a + b for a, b in zip(y, s)], alpha=0.2)\n"
            "    ax.set_title(fam)\n"
         << (timing ? "    ax.set_xlabel('N')\n    ax.set_ylabel('time [s]')\n"
                    : "    ax.set_xlabel('L')\n    ax.set_ylabel('MSE')\n")
         << "    ax.set_yscale('log')\n"
            "    ax.legend()\n"
            "fig.tight_layout()\n"
            "fig.savefig(PREFIX + '.png', dpi=150)\n";
      break;
    }
    case PlotKind::kAudit:
      os << "rows = [r for r in csv.DictReader(open(PREFIX + '_raw.csv'))\n"
            "        if r['fp_pass'] != 'skip']\n"
            "ratio = [float(r['fp_greedy']) / float(r['fp_opt']) for r in rows]\n"
            "gamma = [float(r['gamma']) for r in rows]\n"
            "fig, ax = plt.subplots(figsize=(6, 4))\n"
            "ax.plot(ratio, 'o', label='FP(greedy) / FP(opt)')\n"
            "ax.plot(gamma, '_', label='gamma')\n"
            "ax.set_xlabel('instance')\n"
            "ax.set_yscale('log')\n"
            "ax.legend()\n"
            "fig.tight_layout()\n"
            "fig.savefig(PREFIX + '.png', dpi=150)\n";
      break;
  }
  return os.str();
}

void write_outputs(const std::filesystem::path& prefix, const ResultTable& t,
                   PlotKind kind) {
  write_file(with_suffix(prefix, "_raw.csv"), raw_csv(t));
  write_file(with_suffix(prefix, "_agg.csv"), agg_csv(t));
  write_file(with_suffix(prefix, "_plot.py"),
             plot_script(kind, prefix.filename().string()));
}

void write_outputs(const std::filesystem::path& prefix, const AuditTable& t) {
  write_file(with_suffix(prefix, "_raw.csv"), audit_raw_csv(t));
  write_file(with_suffix(prefix, "_agg.csv"), audit_agg_csv(t));
  write_file(with_suffix(prefix, "_plot.py"),
             plot_script(PlotKind::kAudit, prefix.filename().string()));
}

}  // namespace framesense::harness
