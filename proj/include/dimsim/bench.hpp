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

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "dimsim/dataset.hpp"
#include "dimsim/metrics.hpp"

namespace dimsim {

struct TrialConfig {
  std::filesystem::path manifest;
  std::vector<MetricId> metrics{kAllMetrics.begin(), kAllMetrics.end()};
  std::size_t k = 1;
  std::size_t trials = 10;
  double test_fraction = 0.3;
  std::uint64_t base_seed = 42;
  bool normalize = false;
  /// Worker threads over trials; 0 = hardware concurrency. Never changes
  /// the results.
  unsigned threads = 1;

  /// Throws ArgumentError unless trials >= 1, k >= 1, 0 < test_fraction < 1
  /// and metrics is non-empty.
  void validate() const;
};

struct MetricResult {
  MetricId metric = MetricId::euclidean;
  /// Accuracy of trial t at index t.
  std::vector<double> accuracies;
  double mean = 0;
  /// Sample standard deviation (n - 1); 0 for a single trial.
  double std_dev = 0;
};

struct DatasetResult {
  std::string name;
  /// One entry per report metric, in report column order.
  std::vector<MetricResult> metrics;
  /// split_hash of the partition used in each trial. Every metric of a trial
  /// is evaluated on that same partition.
  std::vector<std::uint64_t> split_hashes;
};

struct DatasetFailure {
  std::string name;
  std::string message;
};

struct BenchReport {
  /// Column order: the requested metrics in euclidean, manhattan,
  /// wave_hedges, hassanat order.
  std::vector<MetricId> metrics;
  /// Successful datasets in manifest order.
  std::vector<DatasetResult> datasets;
  /// Datasets that failed to load or run, in manifest order.
  std::vector<DatasetFailure> failures;
  /// Unweighted mean of the dataset means, aligned with `metrics`.
  std::vector<double> grand_means;
};

/// FNV-1a over the test indices followed by the train indices.
std::uint64_t split_hash(const TrainTestSplit& s) noexcept;

/**
 * Runs every manifest dataset. Trial t splits with seed base_seed + t, and
 * the same split is shared by all metrics of that trial. Datasets that fail
 * to load are recorded in `failures` and skipped. Throws ArgumentError for
 * an invalid config and LoadError when the manifest itself cannot be read.
 */
BenchReport run_experiment(const TrialConfig& cfg);

/// Same protocol over in-memory datasets; cfg.manifest is ignored.
BenchReport run_experiment(const TrialConfig& cfg,
                           std::span<const Dataset> datasets);

enum class ReportFormat {
  markdown,  ///< Table: datasets x metrics plus a Mean row, 2 decimals.
  csv,       ///< Same table as CSV, 6 decimals.
  trials,    ///< Long form `dataset,metric,trial,accuracy`, 17 significant digits.
  summary,   ///< `dataset,metric,mean,std`, 6 decimals.
};

/// Parses "markdown", "csv", "trials" or "summary"; ArgumentError otherwise.
ReportFormat parse_report_format(std::string_view name);

std::string render_report(const BenchReport& report, ReportFormat format);

}  // namespace dimsim
