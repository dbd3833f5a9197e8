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
#include <vector>

#include "dimsim/dataset.hpp"
#include "dimsim/metrics.hpp"

namespace dimsim {

/// Rows of a Dataset picked by index, in the given order. Holds a reference:
/// the Dataset must outlive the view and anything built from it.
class DatasetView {
 public:
  /// All rows, in dataset order.
  explicit DatasetView(const Dataset& ds);
  /// Throws ArgumentError if an index is out of range.
  DatasetView(const Dataset& ds, std::vector<std::size_t> indices);

  std::size_t size() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }
  std::size_t num_features() const noexcept { return ds_->num_features(); }

  FeatureView row(std::size_t i) const noexcept { return ds_->row(indices_[i]); }
  ClassIndex label(std::size_t i) const noexcept {
    return ds_->label(indices_[i]);
  }

  const Dataset& dataset() const noexcept { return *ds_; }
  const std::vector<std::size_t>& indices() const noexcept { return indices_; }

 private:
  const Dataset* ds_;
  std::vector<std::size_t> indices_;
};

struct Prediction {
  ClassIndex label = 0;
  /// Positions within the training view, nearest first.
  std::vector<std::size_t> neighbor_indices;
  /// Distances matching neighbor_indices, non-decreasing.
  std::vector<double> distances;
};

/**
 * Brute-force k-nearest-neighbour classifier.
 *
 * Neighbours are ordered by (distance, training position); NaN distances
 * sort after every number. The label is the majority among the k neighbours;
 * tied classes are separated by the smaller summed neighbour distance, then
 * by the lower class index.
 */
class KnnModel {
 public:
  /// Throws ArgumentError if train is empty or k is outside [1, train.size()].
  KnnModel(DatasetView train, MetricId metric, std::size_t k);

  /// Throws DimensionError if x does not match the training feature count.
  Prediction predict(FeatureView x) const;

  const DatasetView& train() const noexcept { return train_; }
  MetricId metric() const noexcept { return metric_; }
  std::size_t k() const noexcept { return k_; }

 private:
  DatasetView train_;
  MetricId metric_;
  std::size_t k_;
};

KnnModel fit(DatasetView train, MetricId metric, std::size_t k = 1);

/// Predicted labels for every test row, computed on `threads` workers
/// (0 = hardware concurrency). Output order follows the test view.
std::vector<ClassIndex> predict_all(const KnnModel& model,
                                    const DatasetView& test,
                                    unsigned threads = 1);

/**
 * Fraction of test rows whose predicted class equals their own. When the test
 * view comes from a different Dataset than the training view, classes are
 * matched by name. Throws ArgumentError on an empty test view.
 */
double evaluate(const KnnModel& model, const DatasetView& test,
                unsigned threads = 1);

}  // namespace dimsim
