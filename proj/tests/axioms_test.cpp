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

#include "dimsim/axioms.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "dimsim/errors.hpp"

using namespace dimsim;

namespace {

SampleSpec small_spec(double lo, double hi, std::uint64_t trials = 20000,
                      std::uint64_t seed = 3) {
  SampleSpec s;
  s.dim_range = {1, 20};
  s.value_range = {lo, hi};
  s.trials = trials;
  s.seed = seed;
  return s;
}

bool same_report(const AxiomReport& a, const AxiomReport& b) {
  if (a.axiom != b.axiom || a.trials_run != b.trials_run ||
      a.violations != b.violations || a.worst.has_value() != b.worst.has_value()) {
    return false;
  }
  if (!a.worst) return true;
  return a.worst->trial == b.worst->trial && a.worst->vectors == b.worst->vectors &&
         a.worst->lhs == b.worst->lhs && a.worst->rhs == b.worst->rhs &&
         a.worst->magnitude == b.worst->magnitude;
}

void expect_consistent(const AxiomReport& r) {
  EXPECT_LE(r.violations, r.trials_run);
  EXPECT_EQ(r.worst.has_value(), r.violations > 0);
}

}  // namespace

TEST(SampleSpec, Validation) {
  SampleSpec s;
  EXPECT_NO_THROW(s.validate());
  s.dim_range = {0, 3};
  EXPECT_THROW(s.validate(), ArgumentError);
  s.dim_range = {4, 3};
  EXPECT_THROW(s.validate(), ArgumentError);
  s = SampleSpec{};
  s.value_range = {1, 1};
  EXPECT_THROW(s.validate(), ArgumentError);
  s.value_range = {0, INFINITY};
  EXPECT_THROW(s.validate(), ArgumentError);
  s = SampleSpec{};
  s.trials = 0;
  EXPECT_THROW(s.validate(), ArgumentError);
  EXPECT_THROW(check_symmetry(MetricId::hassanat, s), ArgumentError);
}

TEST(Sampler, RespectsRangeAndSnapsToZeroAndIntegers) {
  const SampleSpec spec = small_spec(-10.5, 10.5);
  SplitMix64 rng(1);
  std::size_t zeros = 0, integers = 0, total = 0;
  for (int i = 0; i < 2000; ++i) {
    for (double x : sample_vector(rng, 10, spec)) {
      ASSERT_GE(x, -10.5);
      ASSERT_LE(x, 10.5);
      zeros += x == 0.0;
      integers += x == std::round(x);
      ++total;
    }
  }
  const double zero_share = double(zeros) / total;
  const double int_share = double(integers) / total;
  EXPECT_NEAR(zero_share, 0.1 + 0.1 / 21, 0.02);
  EXPECT_NEAR(int_share, 0.2, 0.02);
}

TEST(Sampler, NoZeroSnapOutsideRange) {
  const SampleSpec spec = small_spec(2.25, 2.75);
  SplitMix64 rng(2);
  for (int i = 0; i < 500; ++i) {
    for (double x : sample_vector(rng, 5, spec)) {
      ASSERT_GE(x, 2.25);
      ASSERT_LE(x, 2.75);
    }
  }
}

TEST(Axioms, HassanatHasNoViolations) {
  for (const auto& r : run_all_axioms(MetricId::hassanat, small_spec(-1e6, 1e6))) {
    EXPECT_EQ(r.violations, 0u) << to_string(r.axiom);
    expect_consistent(r);
  }
  for (const auto& r : run_all_axioms(MetricId::hassanat, small_spec(-5, 5))) {
    EXPECT_EQ(r.violations, 0u) << to_string(r.axiom);
  }
}

TEST(Axioms, ClassicalMetricsHaveNoViolations) {
  for (MetricId m : {MetricId::euclidean, MetricId::manhattan}) {
    for (const auto& r : run_all_axioms(m, small_spec(-100, 100, 5000))) {
      EXPECT_EQ(r.violations, 0u) << to_string(m) << " " << to_string(r.axiom);
    }
  }
}

TEST(Axioms, WaveHedgesOnPositivesIsNonNegative) {
  const auto r = check_non_negativity(MetricId::wave_hedges, small_spec(0.5, 100));
  EXPECT_EQ(r.violations, 0u);
}

TEST(Axioms, WaveHedgesIsSymmetric) {
  const auto r = check_symmetry(MetricId::wave_hedges, small_spec(-10, 10));
  EXPECT_EQ(r.violations, 0u);
}

TEST(Axioms, WaveHedgesGoesNegativeOnNegativeData) {
  const auto r = check_non_negativity(MetricId::wave_hedges, small_spec(-10, 10));
  expect_consistent(r);
  ASSERT_GT(r.violations, 0u);
  EXPECT_LT(r.worst->lhs, -kAxiomTolerance);
  EXPECT_EQ(r.worst->vectors.size(), 2u);

  EXPECT_EQ(replay(MetricId::wave_hedges, Axiom::non_negativity,
                   Counterexample{0, {{-1.0}, {-2.0}}, -1.0, 0.0, 1.0}),
            1.0);
}

TEST(Axioms, WaveHedgesEquivalenceAndTriangleAreReported) {
  const auto eq = check_equivalence(MetricId::wave_hedges, small_spec(-5, 5));
  expect_consistent(eq);
  EXPECT_GT(eq.violations, 0u);
  for (const auto& v : eq.worst->vectors) EXPECT_FALSE(v.empty());

  const auto tri = check_triangle(MetricId::wave_hedges, small_spec(-10, 10));
  expect_consistent(tri);
  EXPECT_GT(tri.violations, 0u);
}

TEST(Axioms, CounterexamplesReplayExactly) {
  for (const auto& r : run_all_axioms(MetricId::wave_hedges, small_spec(-10, 10))) {
    if (!r.worst) continue;
    EXPECT_EQ(replay(MetricId::wave_hedges, r.axiom, *r.worst), r.worst->magnitude)
        << to_string(r.axiom);
  }
}

TEST(Axioms, ReplayRejectsWrongArity) {
  Counterexample c;
  c.vectors = {{1.0}};
  EXPECT_THROW(replay(MetricId::hassanat, Axiom::triangle, c), ArgumentError);
}

TEST(Axioms, DeterministicAcrossRunsAndThreadCounts) {
  const SampleSpec spec = small_spec(-10, 10, 6000, 77);
  const auto seq = run_all_axioms(MetricId::wave_hedges, spec, 1);
  const auto again = run_all_axioms(MetricId::wave_hedges, spec, 1);
  const auto par = run_all_axioms(MetricId::wave_hedges, spec, 4);
  const auto odd = run_all_axioms(MetricId::wave_hedges, spec, 7);
  ASSERT_EQ(seq.size(), 4u);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    EXPECT_TRUE(same_report(seq[i], again[i]));
    EXPECT_TRUE(same_report(seq[i], par[i]));
    EXPECT_TRUE(same_report(seq[i], odd[i]));
  }
}

TEST(Axioms, DifferentSeedsSampleDifferently) {
  const auto a = check_non_negativity(MetricId::wave_hedges, small_spec(-10, 10, 3000, 1));
  const auto b = check_non_negativity(MetricId::wave_hedges, small_spec(-10, 10, 3000, 2));
  EXPECT_FALSE(same_report(a, b));
}

TEST(Axioms, FixedReportOrder) {
  const auto reports = run_all_axioms(MetricId::euclidean, small_spec(-1, 1, 100));
  ASSERT_EQ(reports.size(), 4u);
  EXPECT_EQ(reports[0].axiom, Axiom::non_negativity);
  EXPECT_EQ(reports[1].axiom, Axiom::equivalence);
  EXPECT_EQ(reports[2].axiom, Axiom::symmetry);
  EXPECT_EQ(reports[3].axiom, Axiom::triangle);
  for (const auto& r : reports) EXPECT_EQ(r.trials_run, 100u);
}

TEST(Axioms, Serialization) {
  const auto clean = run_all_axioms(MetricId::hassanat, small_spec(-1, 1, 10));
  EXPECT_EQ(format_reports_csv(clean),
            "axiom,trials,violations,magnitude\n"
            "non_negativity,10,0,0\n"
            "equivalence,10,0,0\n"
            "symmetry,10,0,0\n"
            "triangle,10,0,0\n");
  const std::string text = format_reports_text(MetricId::hassanat, clean);
  EXPECT_NE(text.find("hassanat triangle: 0/10 violations"), std::string::npos);

  const auto dirty = check_non_negativity(MetricId::wave_hedges, small_spec(-10, 10, 500));
  const std::string dirty_text = format_reports_text(MetricId::wave_hedges, std::span(&dirty, 1));
  EXPECT_NE(dirty_text.find("worst: trial"), std::string::npos);
  EXPECT_NE(dirty_text.find("  B = ("), std::string::npos);
}
