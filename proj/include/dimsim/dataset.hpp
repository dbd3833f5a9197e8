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
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dimsim/metrics.hpp"

namespace dimsim {

using ClassIndex = std::size_t;

/**
 * Labelled table of feature vectors, stored row-major.
 *
 * Invariants (checked on construction, ArgumentError otherwise): at least two
 * rows, at least one feature, every value finite, every label below
 * class_names.size() and every class used by at least one row.
 */
class Dataset {
 public:
  Dataset(std::string name, std::size_t num_features,
          std::vector<double> features, std::vector<ClassIndex> labels,
          std::vector<std::string> class_names);

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return labels_.size(); }
  std::size_t num_features() const noexcept { return num_features_; }
  std::size_t num_classes() const noexcept { return class_names_.size(); }

  FeatureView row(std::size_t i) const noexcept {
    return FeatureView(features_).subspan(i * num_features_, num_features_);
  }
  ClassIndex label(std::size_t i) const noexcept { return labels_[i]; }

  std::span<const double> features() const noexcept { return features_; }
  std::span<const ClassIndex> labels() const noexcept { return labels_; }
  std::span<const std::string> class_names() const noexcept {
    return class_names_;
  }

 private:
  std::string name_;
  std::size_t num_features_;
  std::vector<double> features_;
  std::vector<ClassIndex> labels_;
  std::vector<std::string> class_names_;
};

struct DatasetStats {
  std::size_t num_examples = 0;
  std::size_t num_features = 0;
  std::size_t num_classes = 0;
  double min_value = 0;
  double max_value = 0;
};

DatasetStats compute_stats(const Dataset& ds);

// ---------------------------------------------------------------------------
// CSV ingestion

enum class LoadErrorKind {
  missing_file,
  ragged_row,
  empty_cell,
  non_numeric,
  non_finite,
  bad_label_column,
  too_few_rows,
  single_class,
  bad_manifest,
};

std::string_view to_string(LoadErrorKind kind) noexcept;

/// Ingestion failure. line is the 1-based record number in the file (0 when
/// not tied to a record); field is the 0-based column (npos when not tied to
/// a column).
class LoadError : public std::runtime_error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  LoadError(LoadErrorKind kind, std::string message, std::size_t line = 0,
            std::size_t field = npos);

  LoadErrorKind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t field() const noexcept { return field_; }

 private:
  LoadErrorKind kind_;
  std::size_t line_;
  std::size_t field_;
};

struct CsvOptions {
  /// 0-based label column; empty means the last column.
  std::optional<std::size_t> label_column;
  bool has_header = false;
  char delimiter = ',';
};

/**
 * Parses RFC-4180 style text: optional header, double-quoted fields with ""
 * escapes, LF or CRLF line ends. Blank lines are skipped and unquoted fields
 * are trimmed of spaces and tabs. Labels map to class indices in order of
 * first appearance; features keep file column order.
 */
Dataset parse_csv(std::string_view text, const CsvOptions& options,
                  std::string name);

/// Reads `path` and parses it; the dataset name defaults to the file stem.
Dataset load_csv(const std::filesystem::path& path, const CsvOptions& options,
                 std::string name = {});

/// Comma-separated, no header, label string last, values with 17 significant
/// digits. parse_csv with default options reads it back unchanged.
std::string to_csv(const Dataset& ds);

// ---------------------------------------------------------------------------
// Manifest: one dataset per line, `name<TAB>path<TAB>label_column<TAB>has_header`.
// label_column is a 0-based index or "last"; has_header is true/false (also
// 1/0, yes/no). Blank lines and lines starting with '#' are ignored. Relative
// paths resolve against the manifest's directory.

struct ManifestEntry {
  std::string name;
  std::filesystem::path path;
  CsvOptions options;
};

std::vector<ManifestEntry> parse_manifest(std::string_view text,
                                          const std::filesystem::path& base_dir);
std::vector<ManifestEntry> load_manifest(const std::filesystem::path& path);

Dataset load_entry(const ManifestEntry& entry);

// ---------------------------------------------------------------------------
// Splitting and scaling

struct TrainTestSplit {
  std::vector<std::size_t> train_indices;
  std::vector<std::size_t> test_indices;
  std::uint64_t seed = 0;
  double test_fraction = 0;
};

/// floor(n * test_fraction + 0.5).
std::size_t test_size(std::size_t n, double test_fraction) noexcept;

/**
 * Fisher-Yates shuffle of 0..n-1 driven by SplitMix64(seed): for i from n-1
 * down to 1, swap position i with SplitMix64::below(i + 1). The first
 * test_size(n, fraction) shuffled indices form the test side, in shuffled
 * order. Throws ArgumentError unless 0 < fraction < 1 and both sides are
 * non-empty.
 */
TrainTestSplit split(std::size_t n, std::uint64_t seed, double test_fraction);
TrainTestSplit split(const Dataset& ds, std::uint64_t seed,
                     double test_fraction);

/// Rescales each column to [0, 1]; constant columns become 0.
Dataset minmax_normalize(const Dataset& ds);

}  // namespace dimsim
