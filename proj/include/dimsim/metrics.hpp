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

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dimsim {

/// Owned feature vector. Components are finite reals.
using FeatureVector = std::vector<double>;
/// Borrowed view of a feature vector (a dataset row or a FeatureVector).
using FeatureView = std::span<const double>;

enum class MetricId { euclidean, manhattan, wave_hedges, hassanat };

/// All metrics, in report column order.
inline constexpr std::array<MetricId, 4> kAllMetrics = {
    MetricId::euclidean, MetricId::manhattan, MetricId::wave_hedges,
    MetricId::hassanat};

std::string_view to_string(MetricId metric) noexcept;

/// Parses a metric tag ("euclidean", "manhattan", "wave_hedges", "hassanat").
/// Throws ArgumentError on anything else.
MetricId parse_metric(std::string_view tag);

/**
 * Bounded per-component dissimilarity.
 *
 * With lo = min(a, b), hi = max(a, b):
 *   lo >= 0:  1 - (1 + lo) / (1 + hi)
 *   lo <  0:  1 - (1 + lo + |lo|) / (1 + hi + |lo|)
 *
 * The value lies in [0, 1) and tends to 1 as the spread grows. In binary64 the
 * strict upper bound holds while hi - lo stays below about 2^53; beyond that
 * the result rounds to exactly 1.
 */
double hassanat_component(double a, double b) noexcept;

/// Wave-Hedges term 1 - min/max. 0/0 is defined as 0; other inputs are
/// evaluated as written, so negative pairs give negative terms and a zero
/// maximum with a negative minimum gives +inf.
double wave_hedges_component(double a, double b) noexcept;

// Vector kernels. Each throws DimensionError when the lengths differ and sums
// components left to right.
double hassanat_distance(FeatureView a, FeatureView b);
double wave_hedges_distance(FeatureView a, FeatureView b);
double euclidean_distance(FeatureView a, FeatureView b);
double manhattan_distance(FeatureView a, FeatureView b);

double distance(MetricId metric, FeatureView a, FeatureView b);

struct CurvePoint {
  double n;
  double distance;
};

/**
 * Samples distance(metric, [fixed], [n]) for n = lo + i * step, i = 0, 1, ...
 * while n <= hi (with a 1e-9 step-relative allowance for rounding).
 *
 * Requires finite arguments, lo <= hi and step > 0, otherwise throws
 * ArgumentError. Also rejects requests for more than 10^7 samples.
 */
std::vector<CurvePoint> curve_sample(MetricId metric, double fixed, double lo,
                                     double hi, double step);

/// Two-column CSV "n,distance" with 15 significant digits.
std::string curve_to_csv(std::span<const CurvePoint> points);

}  // namespace dimsim
