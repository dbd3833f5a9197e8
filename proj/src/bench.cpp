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

#include "dimsim/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>

#include "dimsim/errors.hpp"
#include "dimsim/knn.hpp"
#include "dimsim/parallel.hpp"

namespace dimsim {
namespace {

std::vector<MetricId> report_columns(const std::vector<MetricId>& requested) {
  std::vector<MetricId> cols;
  for (MetricId m : kAllMetrics) {
    if (std::find(requested.begin(), requested.end(), m) != requested.end()) {
      cols.push_back(m);
    }
  }
  return cols;
}

void summarize(MetricResult& r) {
  const auto n = static_cast<double>(r.accuracies.size());
  double sum = 0;
  for (double a : r.accuracies) sum += a;
  r.mean = sum / n;
  if (r.accuracies.size() < 2) {
    r.std_dev = 0;
    return;
  }
  double sq = 0;
  for (double a : r.accuracies) sq += (a - r.mean) * (a - r.mean);
  r.std_dev = std::sqrt(sq / (n - 1));
}

DatasetResult run_dataset(const TrialConfig& cfg,
                          const std::vector<MetricId>& columns,
                          const Dataset& source) {
  std::optional<Dataset> scaled;
  if (cfg.normalize) scaled.emplace(minmax_normalize(source));
  const Dataset& ds = scaled ? *scaled : source;

  DatasetResult result;
  result.name = ds.name();
  result.split_hashes.resize(cfg.trials);
  result.metrics.resize(columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    result.metrics[c].metric = columns[c];
    result.metrics[c].accuracies.resize(cfg.trials);
  }

  parallel_chunks(cfg.trials, cfg.threads,
                  [&](std::size_t, std::size_t begin, std::size_t end) {
                    for (std::size_t t = begin; t < end; ++t) {
                      const TrainTestSplit s =
                          split(ds, cfg.base_seed + t, cfg.test_fraction);
                      result.split_hashes[t] = split_hash(s);
                      const DatasetView train(ds, s.train_indices);
                      const DatasetView test(ds, s.test_indices);
                      for (std::size_t c = 0; c < columns.size(); ++c) {
                        const KnnModel model = fit(train, columns[c], cfg.k);
                        result.metrics[c].accuracies[t] = evaluate(model, test);
                      }
                    }
                  });

  for (MetricResult& r : result.metrics) summarize(r);
  return result;
}

void finish(BenchReport& report) {
  report.grand_means.assign(report.metrics.size(), 0.0);
  if (report.datasets.empty()) return;
  for (std::size_t c = 0; c < report.metrics.size(); ++c) {
    double sum = 0;
    for (const DatasetResult& d : report.datasets) sum += d.metrics[c].mean;
    report.grand_means[c] = sum / static_cast<double>(report.datasets.size());
  }
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

std::string render_markdown(const BenchReport& r) {
  std::string out = "| Dataset |";
  std::string rule = "|---|";
  for (MetricId m : r.metrics) {
    out += " " + std::string(to_string(m)) + " |";
    rule += "---:|";
  }
  out += "\n" + rule + "\n";
  for (const DatasetResult& d : r.datasets) {
    out += "| " + d.name + " |";
    for (const MetricResult& m : d.metrics) out += " " + fixed(m.mean, 2) + " |";
    out += "\n";
  }
  out += "| Mean |";
  for (double g : r.grand_means) out += " " + fixed(g, 2) + " |";
  return out + "\n";
}

std::string render_wide_csv(const BenchReport& r) {
  std::string out = "dataset";
  for (MetricId m : r.metrics) out += "," + std::string(to_string(m));
  out += "\n";
  for (const DatasetResult& d : r.datasets) {
    out += csv_field(d.name);
    for (const MetricResult& m : d.metrics) out += "," + fixed(m.mean, 6);
    out += "\n";
  }
  out += "Mean";
  for (double g : r.grand_means) out += "," + fixed(g, 6);
  return out + "\n";
}

std::string render_trials_csv(const BenchReport& r) {
  std::string out = "dataset,metric,trial,accuracy\n";
  char buf[64];
  for (const DatasetResult& d : r.datasets) {
    for (const MetricResult& m : d.metrics) {
      for (std::size_t t = 0; t < m.accuracies.size(); ++t) {
        std::snprintf(buf, sizeof buf, ",%zu,%.17g\n", t, m.accuracies[t]);
        out += csv_field(d.name) + "," + std::string(to_string(m.metric)) + buf;
      }
    }
  }
  return out;
}

std::string render_summary_csv(const BenchReport& r) {
  std::string out = "dataset,metric,mean,std\n";
  for (const DatasetResult& d : r.datasets) {
    for (const MetricResult& m : d.metrics) {
      out += csv_field(d.name) + "," + std::string(to_string(m.metric)) + "," +
             fixed(m.mean, 6) + "," + fixed(m.std_dev, 6) + "\n";
    }
  }
  return out;
}

}  // namespace

void TrialConfig::validate() const {
  if (trials < 1) throw ArgumentError("trials must be >= 1");
  if (k < 1) throw ArgumentError("k must be >= 1");
  if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
    throw ArgumentError("test fraction must lie in (0, 1)");
  }
  if (metrics.empty()) throw ArgumentError("no metrics selected");
}

std::uint64_t split_hash(const TrainTestSplit& s) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&h](std::uint64_t v) {
    for (int byte = 0; byte < 8; ++byte) {
      h ^= (v >> (8 * byte)) & 0xffU;
      h *= 0x100000001b3ULL;
    }
  };
  for (std::size_t i : s.test_indices) feed(i);
  feed(~std::uint64_t{0});
  for (std::size_t i : s.train_indices) feed(i);
  return h;
}

BenchReport run_experiment(const TrialConfig& cfg,
                           std::span<const Dataset> datasets) {
  cfg.validate();
  BenchReport report;
  report.metrics = report_columns(cfg.metrics);
  for (const Dataset& ds : datasets) {
    try {
      report.datasets.push_back(run_dataset(cfg, report.metrics, ds));
    } catch (const std::exception& e) {
      report.failures.push_back({ds.name(), e.what()});
    }
  }
  finish(report);
  return report;
}

BenchReport run_experiment(const TrialConfig& cfg) {
  cfg.validate();
  const std::vector<ManifestEntry> entries = load_manifest(cfg.manifest);
  if (entries.empty()) throw ArgumentError("manifest lists no datasets");

  BenchReport report;
  report.metrics = report_columns(cfg.metrics);
  for (const ManifestEntry& entry : entries) {
    try {
      const Dataset ds = load_entry(entry);
      report.datasets.push_back(run_dataset(cfg, report.metrics, ds));
    } catch (const std::exception& e) {
      report.failures.push_back({entry.name, e.what()});
    }
  }
  finish(report);
  return report;
}

ReportFormat parse_report_format(std::string_view name) {
  if (name == "markdown") return ReportFormat::markdown;
  if (name == "csv") return ReportFormat::csv;
  if (name == "trials") return ReportFormat::trials;
  if (name == "summary") return ReportFormat::summary;
  throw ArgumentError("unknown report format '" + std::string(name) +
                      "' (expected markdown, csv, trials or summary)");
}

std::string render_report(const BenchReport& report, ReportFormat format) {
  if (report.metrics.empty()) throw ArgumentError("report has no metrics");
  switch (format) {
    case ReportFormat::markdown:
      return render_markdown(report);
    case ReportFormat::csv:
      return render_wide_csv(report);
    case ReportFormat::trials:
      return render_trials_csv(report);
    case ReportFormat::summary:
      return render_summary_csv(report);
  }
  throw ArgumentError("invalid report format");
}

}  // namespace dimsim
