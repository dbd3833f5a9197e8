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

#include "dimsim/knn.hpp"

#include <algorithm>
#include <cmath>

#include "dimsim/errors.hpp"
#include "dimsim/parallel.hpp"

namespace dimsim {
namespace {

struct Candidate {
  double distance;
  std::size_t index;
};

bool closer(const Candidate& a, const Candidate& b) noexcept {
  const bool a_nan = std::isnan(a.distance);
  const bool b_nan = std::isnan(b.distance);
  if (a_nan != b_nan) return b_nan;
  if (!a_nan && a.distance != b.distance) return a.distance < b.distance;
  return a.index < b.index;
}

}  // namespace

DatasetView::DatasetView(const Dataset& ds) : ds_(&ds), indices_(ds.size()) {
  for (std::size_t i = 0; i < indices_.size(); ++i) indices_[i] = i;
}

DatasetView::DatasetView(const Dataset& ds, std::vector<std::size_t> indices)
    : ds_(&ds), indices_(std::move(indices)) {
  for (std::size_t i : indices_) {
    if (i >= ds.size()) {
      throw ArgumentError("row index " + std::to_string(i) +
                          " outside dataset of " + std::to_string(ds.size()));
    }
  }
}

KnnModel::KnnModel(DatasetView train, MetricId metric, std::size_t k)
    : train_(std::move(train)), metric_(metric), k_(k) {
  if (train_.empty()) throw ArgumentError("training set is empty");
  if (k_ < 1 || k_ > train_.size()) {
    throw ArgumentError("k = " + std::to_string(k_) + " outside [1, " +
                        std::to_string(train_.size()) + "]");
  }
}

Prediction KnnModel::predict(FeatureView x) const {
  if (x.size() != train_.num_features()) {
    throw DimensionError(x.size(), train_.num_features());
  }

  const std::size_t n = train_.size();
  std::vector<Candidate> all(n);
  for (std::size_t i = 0; i < n; ++i) {
    all[i] = {distance(metric_, x, train_.row(i)), i};
  }

  if (k_ == 1) {
    auto best = std::min_element(all.begin(), all.end(), closer);
    all[0] = *best;
  } else {
    std::partial_sort(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k_),
                      all.end(), closer);
  }

  Prediction out;
  out.neighbor_indices.reserve(k_);
  out.distances.reserve(k_);
  for (std::size_t j = 0; j < k_; ++j) {
    out.neighbor_indices.push_back(all[j].index);
    out.distances.push_back(all[j].distance);
  }

  if (k_ == 1) {
    out.label = train_.label(all[0].index);
    return out;
  }

  const std::size_t classes = train_.dataset().num_classes();
  std::vector<std::size_t> votes(classes, 0);
  std::vector<double> summed(classes, 0.0);
  for (std::size_t j = 0; j < k_; ++j) {
    const ClassIndex c = train_.label(all[j].index);
    ++votes[c];
    summed[c] += all[j].distance;
  }
  ClassIndex winner = classes;
  for (ClassIndex c = 0; c < classes; ++c) {
    if (votes[c] == 0) continue;
    if (winner == classes || votes[c] > votes[winner] ||
        (votes[c] == votes[winner] && summed[c] < summed[winner])) {
      winner = c;
    }
  }
  out.label = winner;
  return out;
}

KnnModel fit(DatasetView train, MetricId metric, std::size_t k) {
  return KnnModel(std::move(train), metric, k);
}

std::vector<ClassIndex> predict_all(const KnnModel& model,
                                    const DatasetView& test, unsigned threads) {
  std::vector<ClassIndex> labels(test.size());
  parallel_chunks(test.size(), threads,
                  [&](std::size_t, std::size_t begin, std::size_t end) {
                    for (std::size_t i = begin; i < end; ++i) {
                      labels[i] = model.predict(test.row(i)).label;
                    }
                  });
  return labels;
}

double evaluate(const KnnModel& model, const DatasetView& test,
                unsigned threads) {
  if (test.empty()) throw ArgumentError("test set is empty");
  if (test.num_features() != model.train().num_features()) {
    throw DimensionError(test.num_features(), model.train().num_features());
  }

  const std::vector<ClassIndex> predicted = predict_all(model, test, threads);
  const bool same_source = &test.dataset() == &model.train().dataset();
  const auto train_names = model.train().dataset().class_names();
  const auto test_names = test.dataset().class_names();

  std::size_t correct = 0;
  for (std::size_t i = 0; i < test.size(); ++i) {
    const bool hit = same_source
                         ? predicted[i] == test.label(i)
                         : train_names[predicted[i]] == test_names[test.label(i)];
    if (hit) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(test.size());
}

}  // namespace dimsim
