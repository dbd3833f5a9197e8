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

#include <cmath>
#include <cstdio>

#include "dimsim/errors.hpp"
#include "dimsim/parallel.hpp"

namespace dimsim {
namespace {

struct Outcome {
  std::uint64_t violations = 0;
  std::optional<Counterexample> worst;

  // Larger magnitude wins; equal magnitudes keep the lower trial index.
  void offer(Counterexample&& c) {
    if (!worst || c.magnitude > worst->magnitude ||
        (c.magnitude == worst->magnitude && c.trial < worst->trial)) {
      worst = std::move(c);
    }
  }

  void merge(Outcome&& other) {
    violations += other.violations;
    if (other.worst) offer(std::move(*other.worst));
  }
};

// A trial body samples its vectors from `rng` and returns a counterexample
// when the axiom is violated.
template <typename Trial>
AxiomReport run_check(Axiom axiom, const SampleSpec& spec, unsigned threads,
                      Trial trial_body) {
  spec.validate();
  const std::size_t dims = spec.dim_range.hi - spec.dim_range.lo + 1;
  std::vector<Outcome> partial(resolve_threads(threads));

  parallel_chunks(spec.trials, threads,
                  [&](std::size_t chunk, std::size_t begin, std::size_t end) {
                    Outcome& out = partial[chunk];
                    for (std::size_t t = begin; t < end; ++t) {
                      SplitMix64 rng = trial_rng(spec.seed, t);
                      const std::size_t dim =
                          spec.dim_range.lo + rng.below(dims);
                      auto found = trial_body(rng, dim);
                      if (found) {
                        found->trial = t;
                        ++out.violations;
                        out.offer(std::move(*found));
                      }
                    }
                  });

  Outcome total;
  for (auto& p : partial) total.merge(std::move(p));
  return AxiomReport{axiom, spec.trials, total.violations,
                     std::move(total.worst)};
}

double non_negativity_magnitude(MetricId metric, const FeatureVector& a,
                                const FeatureVector& b, double& lhs) {
  lhs = distance(metric, a, b);
  return -lhs;
}

std::string describe_vector(const FeatureVector& v) {
  std::string out = "(";
  char buf[40];
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%s%.17g", i ? ", " : "", v[i]);
    out += buf;
  }
  return out + ")";
}

}  // namespace

std::string_view to_string(Axiom axiom) noexcept {
  switch (axiom) {
    case Axiom::non_negativity:
      return "non_negativity";
    case Axiom::equivalence:
      return "equivalence";
    case Axiom::symmetry:
      return "symmetry";
    case Axiom::triangle:
      return "triangle";
  }
  return "unknown";
}

void SampleSpec::validate() const {
  if (dim_range.lo < 1) throw ArgumentError("dimension lower bound must be >= 1");
  if (dim_range.lo > dim_range.hi) throw ArgumentError("empty dimension range");
  if (!std::isfinite(value_range.lo) || !std::isfinite(value_range.hi) ||
      !(value_range.lo < value_range.hi)) {
    throw ArgumentError("value range requires finite lo < hi");
  }
  if (trials < 1) throw ArgumentError("trials must be >= 1");
}

SplitMix64 trial_rng(std::uint64_t seed, std::uint64_t trial) noexcept {
  SplitMix64 seeder(seed + trial);
  return SplitMix64(seeder());
}

FeatureVector sample_vector(SplitMix64& rng, std::size_t dim,
                            const SampleSpec& spec) {
  const double lo = spec.value_range.lo;
  const double hi = spec.value_range.hi;
  const double first_int = std::ceil(lo);
  const double last_int = std::floor(hi);

  FeatureVector v(dim);
  for (double& c : v) {
    const double mode = rng.unit();
    double x = rng.uniform(lo, hi);
    if (mode < 0.1) {
      if (lo <= 0.0 && 0.0 <= hi) x = 0.0;
    } else if (mode < 0.2) {
      if (first_int <= last_int) x = std::clamp(std::round(x), first_int, last_int);
    }
    c = x;
  }
  return v;
}

AxiomReport check_non_negativity(MetricId metric, const SampleSpec& spec,
                                 unsigned threads) {
  return run_check(
      Axiom::non_negativity, spec, threads,
      [&](SplitMix64& rng, std::size_t dim) -> std::optional<Counterexample> {
        FeatureVector a = sample_vector(rng, dim, spec);
        FeatureVector b = sample_vector(rng, dim, spec);
        double lhs = 0;
        const double magnitude = non_negativity_magnitude(metric, a, b, lhs);
        if (!(lhs < -kAxiomTolerance)) return std::nullopt;
        return Counterexample{0, {std::move(a), std::move(b)}, lhs, 0.0,
                              magnitude};
      });
}

AxiomReport check_equivalence(MetricId metric, const SampleSpec& spec,
                              unsigned threads) {
  return run_check(
      Axiom::equivalence, spec, threads,
      [&](SplitMix64& rng, std::size_t dim) -> std::optional<Counterexample> {
        FeatureVector a = sample_vector(rng, dim, spec);
        FeatureVector b = sample_vector(rng, dim, spec);
        const double self = distance(metric, a, a);
        if (std::abs(self) > kAxiomTolerance) {
          return Counterexample{0, {std::move(a)}, self, 0.0, std::abs(self)};
        }
        if (a == b) return std::nullopt;
        const double apart = distance(metric, a, b);
        if (!(apart <= 0.0)) return std::nullopt;
        return Counterexample{0, {std::move(a), std::move(b)}, apart, 0.0,
                              -apart};
      });
}

AxiomReport check_symmetry(MetricId metric, const SampleSpec& spec,
                           unsigned threads) {
  return run_check(
      Axiom::symmetry, spec, threads,
      [&](SplitMix64& rng, std::size_t dim) -> std::optional<Counterexample> {
        FeatureVector a = sample_vector(rng, dim, spec);
        FeatureVector b = sample_vector(rng, dim, spec);
        const double ab = distance(metric, a, b);
        const double ba = distance(metric, b, a);
        const double gap = std::abs(ab - ba);
        if (!(gap > kAxiomTolerance)) return std::nullopt;
        return Counterexample{0, {std::move(a), std::move(b)}, ab, ba, gap};
      });
}

AxiomReport check_triangle(MetricId metric, const SampleSpec& spec,
                           unsigned threads) {
  return run_check(
      Axiom::triangle, spec, threads,
      [&](SplitMix64& rng, std::size_t dim) -> std::optional<Counterexample> {
        FeatureVector a = sample_vector(rng, dim, spec);
        FeatureVector b = sample_vector(rng, dim, spec);
        FeatureVector c = sample_vector(rng, dim, spec);
        const double direct = distance(metric, a, c);
        const double detour = distance(metric, a, b) + distance(metric, b, c);
        if (!(direct > detour + kAxiomTolerance)) return std::nullopt;
        return Counterexample{0,
                              {std::move(a), std::move(b), std::move(c)},
                              direct,
                              detour,
                              direct - detour};
      });
}

std::vector<AxiomReport> run_all_axioms(MetricId metric, const SampleSpec& spec,
                                        unsigned threads) {
  return {check_non_negativity(metric, spec, threads),
          check_equivalence(metric, spec, threads),
          check_symmetry(metric, spec, threads),
          check_triangle(metric, spec, threads)};
}

double replay(MetricId metric, Axiom axiom, const Counterexample& example) {
  const auto& v = example.vectors;
  auto need = [&](std::size_t n) {
    if (v.size() != n) {
      throw ArgumentError("counterexample for " + std::string(to_string(axiom)) +
                          " holds " + std::to_string(v.size()) + " vectors");
    }
  };
  switch (axiom) {
    case Axiom::non_negativity: {
      need(2);
      double lhs = 0;
      return non_negativity_magnitude(metric, v[0], v[1], lhs);
    }
    case Axiom::equivalence:
      if (v.size() == 1) return std::abs(distance(metric, v[0], v[0]));
      need(2);
      return -distance(metric, v[0], v[1]);
    case Axiom::symmetry:
      need(2);
      return std::abs(distance(metric, v[0], v[1]) - distance(metric, v[1], v[0]));
    case Axiom::triangle:
      need(3);
      return distance(metric, v[0], v[2]) -
             (distance(metric, v[0], v[1]) + distance(metric, v[1], v[2]));
  }
  throw ArgumentError("invalid axiom");
}

std::string format_reports_text(MetricId metric,
                                std::span<const AxiomReport> reports) {
  std::string out;
  char buf[256];
  for (const AxiomReport& r : reports) {
    std::snprintf(buf, sizeof buf, "%s %s: %llu/%llu violations\n",
                  std::string(to_string(metric)).c_str(),
                  std::string(to_string(r.axiom)).c_str(),
                  static_cast<unsigned long long>(r.violations),
                  static_cast<unsigned long long>(r.trials_run));
    out += buf;
    if (!r.worst) continue;
    const Counterexample& c = *r.worst;
    std::snprintf(buf, sizeof buf,
                  "  worst: trial %llu, lhs %.17g, rhs %.17g, magnitude %.17g\n",
                  static_cast<unsigned long long>(c.trial), c.lhs, c.rhs,
                  c.magnitude);
    out += buf;
    static constexpr const char* kNames[] = {"A", "B", "C"};
    for (std::size_t i = 0; i < c.vectors.size(); ++i) {
      out += "  ";
      out += kNames[i];
      out += " = " + describe_vector(c.vectors[i]) + "\n";
    }
  }
  return out;
}

std::string format_reports_csv(std::span<const AxiomReport> reports) {
  std::string out = "axiom,trials,violations,magnitude\n";
  char buf[160];
  for (const AxiomReport& r : reports) {
    std::snprintf(buf, sizeof buf, "%s,%llu,%llu,%.17g\n",
                  std::string(to_string(r.axiom)).c_str(),
                  static_cast<unsigned long long>(r.trials_run),
                  static_cast<unsigned long long>(r.violations),
                  r.worst ? r.worst->magnitude : 0.0);
    out += buf;
  }
  return out;
}

}  // namespace dimsim
