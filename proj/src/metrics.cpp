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

#include "dimsim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "dimsim/errors.hpp"

namespace dimsim {
namespace {

void require_same_length(FeatureView a, FeatureView b) {
  if (a.size() != b.size()) throw DimensionError(a.size(), b.size());
}

template <typename Term>
double sum_terms(FeatureView a, FeatureView b, Term term) {
  require_same_length(a, b);
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += term(a[i], b[i]);
  return sum;
}

constexpr std::size_t kMaxCurveSamples = 10'000'000;

}  // namespace

std::string_view to_string(MetricId metric) noexcept {
  switch (metric) {
    case MetricId::euclidean:
      return "euclidean";
    case MetricId::manhattan:
      return "manhattan";
    case MetricId::wave_hedges:
      return "wave_hedges";
    case MetricId::hassanat:
      return "hassanat";
  }
  return "unknown";
}

MetricId parse_metric(std::string_view tag) {
  for (MetricId m : kAllMetrics) {
    if (to_string(m) == tag) return m;
  }
  throw ArgumentError("unknown metric '" + std::string(tag) +
                      "' (expected euclidean, manhattan, wave_hedges or "
                      "hassanat)");
}

double hassanat_component(double a, double b) noexcept {
  const double lo = std::min(a, b);
  const double hi = std::max(a, b);
  if (lo < 0) {
    const double shift = std::abs(lo);
    // lo + |lo| is exactly zero, so the numerator stays at 1.
    return 1.0 - (1.0 + (lo + shift)) / (1.0 + (hi + shift));
  }
  return 1.0 - (1.0 + lo) / (1.0 + hi);
}

double wave_hedges_component(double a, double b) noexcept {
  const double lo = std::min(a, b);
  const double hi = std::max(a, b);
  if (lo == 0.0 && hi == 0.0) return 0.0;
  return 1.0 - lo / hi;
}

double hassanat_distance(FeatureView a, FeatureView b) {
  return sum_terms(a, b, hassanat_component);
}

double wave_hedges_distance(FeatureView a, FeatureView b) {
  return sum_terms(a, b, wave_hedges_component);
}

double euclidean_distance(FeatureView a, FeatureView b) {
  return std::sqrt(sum_terms(a, b, [](double x, double y) {
    const double d = x - y;
    return d * d;
  }));
}

double manhattan_distance(FeatureView a, FeatureView b) {
  return sum_terms(a, b, [](double x, double y) { return std::abs(x - y); });
}

double distance(MetricId metric, FeatureView a, FeatureView b) {
  switch (metric) {
    case MetricId::euclidean:
      return euclidean_distance(a, b);
    case MetricId::manhattan:
      return manhattan_distance(a, b);
    case MetricId::wave_hedges:
      return wave_hedges_distance(a, b);
    case MetricId::hassanat:
      return hassanat_distance(a, b);
  }
  throw ArgumentError("invalid metric id");
}

std::vector<CurvePoint> curve_sample(MetricId metric, double fixed, double lo,
                                     double hi, double step) {
  if (!std::isfinite(fixed) || !std::isfinite(lo) || !std::isfinite(hi) ||
      !std::isfinite(step)) {
    throw ArgumentError("curve arguments must be finite");
  }
  if (lo > hi) throw ArgumentError("curve range requires lo <= hi");
  if (step <= 0) throw ArgumentError("curve step must be positive");

  const double span = std::floor((hi - lo) / step + 1e-9);
  if (!(span < static_cast<double>(kMaxCurveSamples))) {
    throw ArgumentError("curve would exceed 10^7 samples");
  }
  const auto count = static_cast<std::size_t>(span) + 1;

  std::vector<CurvePoint> points;
  points.reserve(count);
  const std::array<double, 1> anchor{fixed};
  for (std::size_t i = 0; i < count; ++i) {
    const std::array<double, 1> x{lo + static_cast<double>(i) * step};
    points.push_back({x[0], distance(metric, anchor, x)});
  }
  return points;
}

std::string curve_to_csv(std::span<const CurvePoint> points) {
  std::string out = "n,distance\n";
  char buf[96];
  for (const CurvePoint& p : points) {
    std::snprintf(buf, sizeof buf, "%.15g,%.15g\n", p.n, p.distance);
    out += buf;
  }
  return out;
}

}  // namespace dimsim
