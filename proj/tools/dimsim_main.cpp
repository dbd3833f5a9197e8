/*
 * Copyright 2026 The dimsim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Command-line front end: bench, axioms, curve and stats subcommands.
//
// Exit codes: 0 success, 1 argument or dataset error, 2 axiom violations
// found by `axioms --strict`.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dimsim/axioms.hpp"
#include "dimsim/bench.hpp"
#include "dimsim/dataset.hpp"
#include "dimsim/errors.hpp"
#include "dimsim/metrics.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitViolations = 2;

std::vector<dimsim::MetricId> parse_metric_list(const std::string& list) {
  if (list == "all") return {dimsim::kAllMetrics.begin(), dimsim::kAllMetrics.end()};
  std::vector<dimsim::MetricId> out;
  std::stringstream ss(list);
  std::string tag;
  while (std::getline(ss, tag, ',')) {
    if (!tag.empty()) out.push_back(dimsim::parse_metric(tag));
  }
  if (out.empty()) throw dimsim::ArgumentError("no metrics given");
  return out;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw dimsim::ArgumentError("cannot write '" + path + "'");
  out << text;
}

struct BenchArgs {
  std::string manifest;
  std::string metrics = "all";
  std::size_t k = 1;
  std::size_t trials = 10;
  double test_fraction = 0.3;
  std::uint64_t seed = 42;
  bool normalize = false;
  std::string format = "markdown";
  std::string out;
  unsigned threads = 1;
};

int run_bench(const BenchArgs& a) {
  dimsim::TrialConfig cfg;
  cfg.manifest = a.manifest;
  cfg.metrics = parse_metric_list(a.metrics);
  cfg.k = a.k;
  cfg.trials = a.trials;
  cfg.test_fraction = a.test_fraction;
  cfg.base_seed = a.seed;
  cfg.normalize = a.normalize;
  cfg.threads = a.threads;
  const auto format = dimsim::parse_report_format(a.format);

  const dimsim::BenchReport report = dimsim::run_experiment(cfg);
  emit(dimsim::render_report(report, format), a.out);
  for (const auto& f : report.failures) {
    std::cerr << "skipped " << f.name << ": " << f.message << "\n";
  }
  return report.failures.empty() ? kExitOk : kExitError;
}

struct AxiomArgs {
  std::string metric;
  std::uint64_t trials = 100'000;
  std::vector<std::size_t> dims{1, 20};
  std::vector<double> range{-1e6, 1e6};
  std::uint64_t seed = 42;
  bool strict = false;
  std::string format = "text";
  unsigned threads = 1;
};

int run_axioms(const AxiomArgs& a) {
  const dimsim::MetricId metric = dimsim::parse_metric(a.metric);
  dimsim::SampleSpec spec;
  spec.dim_range = {a.dims.at(0), a.dims.at(1)};
  spec.value_range = {a.range.at(0), a.range.at(1)};
  spec.trials = a.trials;
  spec.seed = a.seed;
  if (a.format != "text" && a.format != "csv") {
    throw dimsim::ArgumentError("axioms format must be text or csv");
  }

  const auto reports = dimsim::run_all_axioms(metric, spec, a.threads);
  std::cout << (a.format == "csv" ? dimsim::format_reports_csv(reports)
                                  : dimsim::format_reports_text(metric, reports));
  bool violated = false;
  for (const auto& r : reports) violated = violated || r.violations > 0;
  return (a.strict && violated) ? kExitViolations : kExitOk;
}

struct CurveArgs {
  std::string metric = "hassanat";
  double fixed = 0;
  double lo = -10;
  double hi = 10;
  double step = 0.1;
  std::string out;
};

int run_curve(const CurveArgs& a) {
  const auto points = dimsim::curve_sample(dimsim::parse_metric(a.metric),
                                           a.fixed, a.lo, a.hi, a.step);
  emit(dimsim::curve_to_csv(points), a.out);
  return kExitOk;
}

int run_stats(const std::string& manifest) {
  int status = kExitOk;
  std::cout << "name\texamples\tfeatures\tclasses\tmin\tmax\n";
  for (const auto& entry : dimsim::load_manifest(manifest)) {
    try {
      const auto s = dimsim::compute_stats(dimsim::load_entry(entry));
      char buf[128];
      std::snprintf(buf, sizeof buf, "\t%zu\t%zu\t%zu\t%g\t%g\n", s.num_examples,
                    s.num_features, s.num_classes, s.min_value, s.max_value);
      std::cout << entry.name << buf;
    } catch (const std::exception& e) {
      std::cerr << "skipped " << entry.name << ": " << e.what() << "\n";
      status = kExitError;
    }
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distance metrics, axiom checks and 1-NN benchmarks"};
  app.require_subcommand(1);

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run the k-NN accuracy benchmark");
  bench_cmd->add_option("--manifest", bench.manifest, "Dataset manifest (TSV)")->required();
  bench_cmd->add_option("--metrics", bench.metrics, "Comma-separated metrics or 'all'");
  bench_cmd->add_option("--k", bench.k, "Neighbours per vote");
  bench_cmd->add_option("--trials", bench.trials, "Random splits per dataset");
  bench_cmd->add_option("--test-fraction", bench.test_fraction, "Share of rows held out");
  bench_cmd->add_option("--seed", bench.seed, "Base seed; trial t uses seed + t");
  bench_cmd->add_flag("--normalize", bench.normalize, "Min-max scale every feature first");
  bench_cmd->add_option("--format", bench.format, "markdown, csv, trials or summary");
  bench_cmd->add_option("--out", bench.out, "Output file (default stdout)");
  bench_cmd->add_option("--threads", bench.threads, "Worker threads (0 = all cores)");

  AxiomArgs axioms;
  auto* axioms_cmd = app.add_subcommand("axioms", "Sample the four metric axioms");
  axioms_cmd->add_option("--metric", axioms.metric, "Metric to check")->required();
  axioms_cmd->add_option("--trials", axioms.trials, "Trials per axiom");
  axioms_cmd->add_option("--dims", axioms.dims, "Dimension range LO HI")->expected(2);
  axioms_cmd->add_option("--range", axioms.range, "Component range LO HI")->expected(2);
  axioms_cmd->add_option("--seed", axioms.seed, "Sampler seed");
  axioms_cmd->add_flag("--strict", axioms.strict, "Exit 2 when any violation is found");
  axioms_cmd->add_option("--format", axioms.format, "text or csv");
  axioms_cmd->add_option("--threads", axioms.threads, "Worker threads (0 = all cores)");

  CurveArgs curve;
  auto* curve_cmd = app.add_subcommand("curve", "Sample d([fixed], [n]) over a range as CSV");
  curve_cmd->add_option("--metric", curve.metric, "Metric to sample");
  curve_cmd->add_option("--fixed", curve.fixed, "Fixed point");
  curve_cmd->add_option("--lo", curve.lo, "First n");
  curve_cmd->add_option("--hi", curve.hi, "Last n (inclusive)");
  curve_cmd->add_option("--step", curve.step, "Increment of n");
  curve_cmd->add_option("--out", curve.out, "Output file (default stdout)");

  std::string stats_manifest;
  auto* stats_cmd = app.add_subcommand("stats", "Print per-dataset descriptors");
  stats_cmd->add_option("--manifest", stats_manifest, "Dataset manifest (TSV)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitError;
  }

  try {
    if (*bench_cmd) return run_bench(bench);
    if (*axioms_cmd) return run_axioms(axioms);
    if (*curve_cmd) return run_curve(curve);
    if (*stats_cmd) return run_stats(stats_manifest);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
