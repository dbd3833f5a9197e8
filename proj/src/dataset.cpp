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

#include "dimsim/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "dimsim/errors.hpp"
#include "dimsim/splitmix64.hpp"

namespace dimsim {
namespace {

struct Record {
  std::size_t line;  // 1-based
  std::vector<std::string> fields;
};

bool is_trim_char(char c, char delimiter) {
  return (c == ' ' || c == '\t') && c != delimiter;
}

std::string trimmed(std::string_view s, char delimiter) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && is_trim_char(s[b], delimiter)) ++b;
  while (e > b && is_trim_char(s[e - 1], delimiter)) --e;
  return std::string(s.substr(b, e - b));
}

// Splits text into records. Quoted fields may contain the delimiter, quotes
// ("" escapes) and line breaks.
std::vector<Record> read_records(std::string_view text, char delimiter) {
  std::vector<Record> records;
  std::size_t line = 1;
  std::size_t i = 0;
  const std::size_t n = text.size();

  while (i < n) {
    Record rec{line, {}};
    std::string field;
    bool quoted_field = false;
    bool blank = true;
    for (;;) {
      if (i >= n || text[i] == '\n' || (text[i] == '\r' && (i + 1 >= n || text[i + 1] == '\n'))) {
        rec.fields.push_back(quoted_field ? field : trimmed(field, delimiter));
        if (i < n) {
          i += text[i] == '\r' ? 2 : 1;
          ++line;
        }
        break;
      }
      const char c = text[i];
      if (c == '"' && trimmed(field, delimiter).empty() && !quoted_field) {
        // Opening quote: read until the closing quote.
        field.clear();
        quoted_field = true;
        blank = false;
        ++i;
        while (i < n) {
          if (text[i] == '"') {
            if (i + 1 < n && text[i + 1] == '"') {
              field += '"';
              i += 2;
              continue;
            }
            ++i;
            break;
          }
          if (text[i] == '\n') ++line;
          field += text[i++];
        }
        continue;
      }
      if (c == delimiter) {
        rec.fields.push_back(quoted_field ? field : trimmed(field, delimiter));
        field.clear();
        quoted_field = false;
        blank = false;
        ++i;
        continue;
      }
      if (!quoted_field) {
        if (!is_trim_char(c, delimiter)) blank = false;
        field += c;
      }
      ++i;
    }
    if (!blank) records.push_back(std::move(rec));
  }
  return records;
}

double parse_number(const std::string& cell, std::size_t line,
                    std::size_t field) {
  if (cell.empty()) {
    throw LoadError(LoadErrorKind::empty_cell,
                    "empty cell (missing values are not supported)", line,
                    field);
  }
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  if (*first == '+') ++first;
  double value = 0;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw LoadError(LoadErrorKind::non_numeric,
                    "non-numeric feature value '" + cell + "'", line, field);
  }
  if (!std::isfinite(value)) {
    throw LoadError(LoadErrorKind::non_finite,
                    "non-finite feature value '" + cell + "'", line, field);
  }
  return value;
}

std::string located(const std::string& message, std::size_t line,
                    std::size_t field) {
  std::string where;
  if (line != 0) where += "line " + std::to_string(line);
  if (field != LoadError::npos) {
    where += (where.empty() ? "" : ", ") + std::string("field ") +
             std::to_string(field);
  }
  return where.empty() ? message : where + ": " + message;
}

bool parse_bool(std::string_view s, bool& out) {
  if (s == "true" || s == "1" || s == "yes") {
    out = true;
    return true;
  }
  if (s == "false" || s == "0" || s == "no") {
    out = false;
    return true;
  }
  return false;
}

}  // namespace

Dataset::Dataset(std::string name, std::size_t num_features,
                 std::vector<double> features, std::vector<ClassIndex> labels,
                 std::vector<std::string> class_names)
    : name_(std::move(name)),
      num_features_(num_features),
      features_(std::move(features)),
      labels_(std::move(labels)),
      class_names_(std::move(class_names)) {
  if (num_features_ < 1) throw ArgumentError("dataset needs at least one feature");
  if (labels_.size() < 2) throw ArgumentError("dataset needs at least two rows");
  if (features_.size() != labels_.size() * num_features_) {
    throw ArgumentError("feature storage does not match rows x features");
  }
  for (double v : features_) {
    if (!std::isfinite(v)) throw ArgumentError("dataset values must be finite");
  }
  std::vector<bool> used(class_names_.size(), false);
  for (ClassIndex l : labels_) {
    if (l >= class_names_.size()) throw ArgumentError("label index out of range");
    used[l] = true;
  }
  if (std::find(used.begin(), used.end(), false) != used.end()) {
    throw ArgumentError("every class must label at least one row");
  }
}

DatasetStats compute_stats(const Dataset& ds) {
  const auto values = ds.features();
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  return DatasetStats{ds.size(), ds.num_features(), ds.num_classes(), *lo, *hi};
}

std::string_view to_string(LoadErrorKind kind) noexcept {
  switch (kind) {
    case LoadErrorKind::missing_file:
      return "missing_file";
    case LoadErrorKind::ragged_row:
      return "ragged_row";
    case LoadErrorKind::empty_cell:
      return "empty_cell";
    case LoadErrorKind::non_numeric:
      return "non_numeric";
    case LoadErrorKind::non_finite:
      return "non_finite";
    case LoadErrorKind::bad_label_column:
      return "bad_label_column";
    case LoadErrorKind::too_few_rows:
      return "too_few_rows";
    case LoadErrorKind::single_class:
      return "single_class";
    case LoadErrorKind::bad_manifest:
      return "bad_manifest";
  }
  return "unknown";
}

LoadError::LoadError(LoadErrorKind kind, std::string message, std::size_t line,
                     std::size_t field)
    : std::runtime_error(located(message, line, field)),
      kind_(kind),
      line_(line),
      field_(field) {}

Dataset parse_csv(std::string_view text, const CsvOptions& options,
                  std::string name) {
  std::vector<Record> records = read_records(text, options.delimiter);
  std::size_t first = 0;
  if (options.has_header && !records.empty()) first = 1;

  const std::size_t rows = records.size() - first;
  if (records.size() <= first || rows < 2) {
    throw LoadError(LoadErrorKind::too_few_rows,
                    "need at least 2 data rows, found " +
                        std::to_string(records.size() > first ? rows : 0));
  }

  const std::size_t width = records[first].fields.size();
  const std::size_t label_col = options.label_column.value_or(width - 1);
  if (label_col >= width || width < 2) {
    throw LoadError(LoadErrorKind::bad_label_column,
                    "label column " + std::to_string(label_col) +
                        " outside a row of " + std::to_string(width) +
                        " fields",
                    records[first].line);
  }

  std::vector<double> features;
  features.reserve(rows * (width - 1));
  std::vector<ClassIndex> labels;
  labels.reserve(rows);
  std::vector<std::string> class_names;
  std::unordered_map<std::string, ClassIndex> class_of;

  for (std::size_t r = first; r < records.size(); ++r) {
    const Record& rec = records[r];
    if (rec.fields.size() != width) {
      throw LoadError(LoadErrorKind::ragged_row,
                      "expected " + std::to_string(width) + " fields, found " +
                          std::to_string(rec.fields.size()),
                      rec.line);
    }
    for (std::size_t c = 0; c < width; ++c) {
      if (c == label_col) continue;
      features.push_back(parse_number(rec.fields[c], rec.line, c));
    }
    const std::string& label = rec.fields[label_col];
    if (label.empty()) {
      throw LoadError(LoadErrorKind::empty_cell, "empty label", rec.line,
                      label_col);
    }
    auto [it, inserted] = class_of.try_emplace(label, class_names.size());
    if (inserted) class_names.push_back(label);
    labels.push_back(it->second);
  }

  if (class_names.size() < 2) {
    throw LoadError(LoadErrorKind::single_class,
                    "all rows carry the single class '" + class_names.front() +
                        "'");
  }
  return Dataset(std::move(name), width - 1, std::move(features),
                 std::move(labels), std::move(class_names));
}

Dataset load_csv(const std::filesystem::path& path, const CsvOptions& options,
                 std::string name) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw LoadError(LoadErrorKind::missing_file,
                    "cannot open '" + path.string() + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  if (name.empty()) name = path.stem().string();
  try {
    return parse_csv(buf.str(), options, std::move(name));
  } catch (const LoadError& e) {
    throw LoadError(e.kind(), path.string() + ": " + e.what(), e.line(),
                    e.field());
  }
}

std::string to_csv(const Dataset& ds) {
  std::string out;
  char buf[40];
  for (std::size_t i = 0; i < ds.size(); ++i) {
    for (double v : ds.row(i)) {
      std::snprintf(buf, sizeof buf, "%.17g,", v);
      out += buf;
    }
    const std::string& label = ds.class_names()[ds.label(i)];
    const bool padded = !label.empty() && (is_trim_char(label.front(), ',') ||
                                           is_trim_char(label.back(), ','));
    if (padded || label.find_first_of(",\"\r\n") != std::string::npos) {
      std::string quoted = "\"";
      for (char c : label) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
      out += quoted + "\"";
    } else {
      out += label;
    }
    out += '\n';
  }
  return out;
}

std::vector<ManifestEntry> parse_manifest(std::string_view text,
                                          const std::filesystem::path& base_dir) {
  std::vector<ManifestEntry> entries;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
    if (line.front() == '#') continue;

    std::vector<std::string> cols;
    std::size_t p = 0;
    for (;;) {
      const std::size_t tab = line.find('\t', p);
      cols.push_back(trimmed(line.substr(p, tab == std::string_view::npos
                                                ? std::string_view::npos
                                                : tab - p),
                             '\t'));
      if (tab == std::string_view::npos) break;
      p = tab + 1;
    }
    if (cols.size() != 4) {
      throw LoadError(LoadErrorKind::bad_manifest,
                      "expected name<TAB>path<TAB>label_column<TAB>has_header",
                      line_no);
    }

    ManifestEntry entry;
    entry.name = cols[0];
    entry.path = cols[1];
    if (entry.path.is_relative()) entry.path = base_dir / entry.path;
    if (cols[2] != "last") {
      std::size_t col = 0;
      const auto [ptr, ec] =
          std::from_chars(cols[2].data(), cols[2].data() + cols[2].size(), col);
      if (ec != std::errc() || ptr != cols[2].data() + cols[2].size() ||
          cols[2].empty()) {
        throw LoadError(LoadErrorKind::bad_manifest,
                        "label_column must be an index or \"last\"", line_no, 2);
      }
      entry.options.label_column = col;
    }
    if (!parse_bool(cols[3], entry.options.has_header)) {
      throw LoadError(LoadErrorKind::bad_manifest,
                      "has_header must be true or false", line_no, 3);
    }
    if (entry.name.empty() || cols[1].empty()) {
      throw LoadError(LoadErrorKind::bad_manifest, "empty name or path",
                      line_no);
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::vector<ManifestEntry> load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw LoadError(LoadErrorKind::missing_file,
                    "cannot open manifest '" + path.string() + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_manifest(buf.str(), path.parent_path());
}

Dataset load_entry(const ManifestEntry& entry) {
  return load_csv(entry.path, entry.options, entry.name);
}

std::size_t test_size(std::size_t n, double test_fraction) noexcept {
  return static_cast<std::size_t>(
      std::floor(static_cast<double>(n) * test_fraction + 0.5));
}

TrainTestSplit split(std::size_t n, std::uint64_t seed, double test_fraction) {
  if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
    throw ArgumentError("test fraction must lie in (0, 1)");
  }
  const std::size_t n_test = test_size(n, test_fraction);
  if (n_test == 0 || n_test >= n) {
    throw ArgumentError("split of " + std::to_string(n) + " rows at fraction " +
                        std::to_string(test_fraction) + " leaves a side empty");
  }

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  SplitMix64 rng(seed);
  for (std::size_t i = n - 1; i > 0; --i) {
    std::swap(order[i], order[rng.below(i + 1)]);
  }

  TrainTestSplit out;
  out.seed = seed;
  out.test_fraction = test_fraction;
  out.test_indices.assign(order.begin(), order.begin() + n_test);
  out.train_indices.assign(order.begin() + n_test, order.end());
  return out;
}

TrainTestSplit split(const Dataset& ds, std::uint64_t seed,
                     double test_fraction) {
  return split(ds.size(), seed, test_fraction);
}

Dataset minmax_normalize(const Dataset& ds) {
  const std::size_t m = ds.num_features();
  std::vector<double> lo(m), hi(m);
  for (std::size_t j = 0; j < m; ++j) lo[j] = hi[j] = ds.row(0)[j];
  for (std::size_t i = 1; i < ds.size(); ++i) {
    const FeatureView r = ds.row(i);
    for (std::size_t j = 0; j < m; ++j) {
      lo[j] = std::min(lo[j], r[j]);
      hi[j] = std::max(hi[j], r[j]);
    }
  }

  std::vector<double> scaled(ds.features().begin(), ds.features().end());
  for (std::size_t i = 0; i < ds.size(); ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      double& v = scaled[i * m + j];
      const double width = hi[j] - lo[j];
      v = width > 0 ? (v - lo[j]) / width : 0.0;
    }
  }
  std::vector<ClassIndex> labels(ds.labels().begin(), ds.labels().end());
  std::vector<std::string> names(ds.class_names().begin(),
                                 ds.class_names().end());
  return Dataset(ds.name(), m, std::move(scaled), std::move(labels),
                 std::move(names));
}

}  // namespace dimsim
