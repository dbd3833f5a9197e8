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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dimsim/metrics.hpp"
#include "dimsim/splitmix64.hpp"

namespace dimsim {

/// Absolute slack used by every axiom check.
inline constexpr double kAxiomTolerance = 1e-9;

enum class Axiom { non_negativity, equivalence, symmetry, triangle };

std::string_view to_string(Axiom axiom) noexcept;

struct DimRange {
  std::size_t lo = 1;
  std::size_t hi = 20;
};

struct ValueRange {
  double lo = -1e6;
  double hi = 1e6;
};

/// Sampling budget for an axiom check. Defaults are the standard budget.
struct SampleSpec {
  DimRange dim_range;
  ValueRange value_range;
  std::uint64_t trials = 100'000;
  std::uint64_t seed = 0;

  /// Throws ArgumentError unless dim_range.lo >= 1, dim_range.lo <= hi,
  /// value_range.lo < hi (both finite) and trials >= 1.
  void validate() const;
};

/// The vectors of the worst violating trial and the quantities compared.
struct Counterexample {
  std::uint64_t trial = 0;
  /// One vector (self-distance), two (pair checks) or three (triangle A, B, C).
  std::vector<FeatureVector> vectors;
  double lhs = 0;
  double rhs = 0;
  double magnitude = 0;
};

struct AxiomReport {
  Axiom axiom = Axiom::non_negativity;
  std::uint64_t trials_run = 0;
  std::uint64_t violations = 0;
  std::optional<Counterexample> worst;
};

/**
 * Draws one vector of length `dim`. Each component is uniform over
 * spec.value_range except that with probability 0.1 it snaps to 0 (when 0 is in
 * range) and with probability 0.1 it snaps to the nearest in-range integer.
 */
FeatureVector sample_vector(SplitMix64& rng, std::size_t dim,
                            const SampleSpec& spec);

/// Generator for trial `trial`: SplitMix64 seeded from the first output of
/// SplitMix64(seed + trial). Trials are therefore independent of scheduling.
SplitMix64 trial_rng(std::uint64_t seed, std::uint64_t trial) noexcept;

// Each check runs spec.trials independent trials, optionally spread over
// `threads` workers (0 = hardware concurrency). Reports are identical for any
// thread count.

/// Violation: D(A,B) < -tolerance.
AxiomReport check_non_negativity(MetricId metric, const SampleSpec& spec,
                                 unsigned threads = 1);
/// Violation: |D(A,A)| > tolerance, or D(A,B) <= 0 for A != B.
AxiomReport check_equivalence(MetricId metric, const SampleSpec& spec,
                              unsigned threads = 1);
/// Violation: |D(A,B) - D(B,A)| > tolerance.
AxiomReport check_symmetry(MetricId metric, const SampleSpec& spec,
                           unsigned threads = 1);
/// Violation: D(A,C) > D(A,B) + D(B,C) + tolerance.
AxiomReport check_triangle(MetricId metric, const SampleSpec& spec,
                           unsigned threads = 1);

/// The four reports in order non_negativity, equivalence, symmetry, triangle.
std::vector<AxiomReport> run_all_axioms(MetricId metric, const SampleSpec& spec,
                                        unsigned threads = 1);

/// Re-evaluates a stored counterexample and returns its violation magnitude.
double replay(MetricId metric, Axiom axiom, const Counterexample& example);

/// Human-readable, one line per report plus the counterexample when present.
std::string format_reports_text(MetricId metric,
                                std::span<const AxiomReport> reports);
/// CSV with header `axiom,trials,violations,magnitude` (magnitude 0 when clean).
std::string format_reports_csv(std::span<const AxiomReport> reports);

}  // namespace dimsim
