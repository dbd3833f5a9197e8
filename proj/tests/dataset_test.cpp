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

#include <gtest/gtest.h>

#include <cmath>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>

#include "dimsim/errors.hpp"
#include "dimsim/splitmix64.hpp"

using namespace dimsim;

namespace {

const std::filesystem::path kData = DIMSIM_DATA_DIR;

LoadErrorKind kind_of(std::string_view text, CsvOptions opts = {}) {
  try {
    parse_csv(text, opts, "t");
  } catch (const LoadError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no LoadError for: " << text;
  return LoadErrorKind::bad_manifest;
}

Dataset toy() {
  return parse_csv("0,0,a\n1,1,b\n", {}, "toy");
}

}  // namespace

TEST(ParseCsv, FirstAppearanceClassOrder) {
  const Dataset ds = parse_csv("1,2,a\n3,4,b\n5,6,a\n7,8,b\n", {}, "four");
  ASSERT_EQ(ds.class_names().size(), 2u);
  EXPECT_EQ(ds.class_names()[0], "a");
  EXPECT_EQ(ds.class_names()[1], "b");
  EXPECT_EQ(std::vector<ClassIndex>(ds.labels().begin(), ds.labels().end()),
            (std::vector<ClassIndex>{0, 1, 0, 1}));
  EXPECT_EQ(ds.num_features(), 2u);
  EXPECT_EQ(ds.row(2)[0], 5);
  EXPECT_EQ(ds.row(2)[1], 6);
}

TEST(ParseCsv, HeaderDelimiterLabelColumnAndQuoting) {
  CsvOptions opts;
  opts.has_header = true;
  opts.delimiter = ';';
  opts.label_column = 0;
  const Dataset ds = parse_csv(
      "class;x;y\r\n\"red; dark\";1.5;-2\r\n blue ; .25 ;+3e2\r\n\n", opts, "q");
  EXPECT_EQ(ds.size(), 2u);
  EXPECT_EQ(ds.class_names()[0], "red; dark");
  EXPECT_EQ(ds.class_names()[1], "blue");
  EXPECT_EQ(ds.row(0)[0], 1.5);
  EXPECT_EQ(ds.row(0)[1], -2);
  EXPECT_EQ(ds.row(1)[0], 0.25);
  EXPECT_EQ(ds.row(1)[1], 300);
}

TEST(ParseCsv, QuotedFieldWithEscapedQuoteAndNewline) {
  const Dataset ds = parse_csv("1,\"say \"\"hi\"\"\nnow\"\n2,b\n", {}, "q");
  EXPECT_EQ(ds.class_names()[0], "say \"hi\"\nnow");
}

TEST(ParseCsv, NonNumericCitesRowAndColumn) {
  try {
    parse_csv("1,2,3,no\n1,2,x,yes\n", {}, "bad");
    FAIL() << "expected LoadError";
  } catch (const LoadError& e) {
    EXPECT_EQ(e.kind(), LoadErrorKind::non_numeric);
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.field(), 2u);
    EXPECT_NE(std::string(e.what()).find("line 2, field 2"), std::string::npos);
  }
}

TEST(ParseCsv, DistinctErrorKinds) {
  EXPECT_EQ(kind_of("1,2,a\n1,b\n"), LoadErrorKind::ragged_row);
  EXPECT_EQ(kind_of("1,,a\n1,2,b\n"), LoadErrorKind::empty_cell);
  EXPECT_EQ(kind_of("1,nan,a\n1,2,b\n"), LoadErrorKind::non_finite);
  EXPECT_EQ(kind_of("1,inf,a\n1,2,b\n"), LoadErrorKind::non_finite);
  EXPECT_EQ(kind_of("1,2,a\n"), LoadErrorKind::too_few_rows);
  EXPECT_EQ(kind_of(""), LoadErrorKind::too_few_rows);
  EXPECT_EQ(kind_of("1,2,a\n3,4,a\n"), LoadErrorKind::single_class);
  CsvOptions far;
  far.label_column = 5;
  EXPECT_EQ(kind_of("1,2,a\n3,4,b\n", far), LoadErrorKind::bad_label_column);
  EXPECT_EQ(kind_of("a\nb\n"), LoadErrorKind::bad_label_column);
  EXPECT_EQ(kind_of("1,2,a\n3,4,\n"), LoadErrorKind::empty_cell);
  EXPECT_EQ(kind_of("1,0x10,a\n3,4,b\n"), LoadErrorKind::non_numeric);
}

TEST(LoadCsv, MissingFile) {
  try {
    load_csv(kData / "does_not_exist.csv", {});
    FAIL();
  } catch (const LoadError& e) {
    EXPECT_EQ(e.kind(), LoadErrorKind::missing_file);
  }
}

TEST(LoadCsv, WineMatchesPublishedDescriptors) {
  const Dataset wine = load_csv(kData / "uci" / "wine.csv", {});
  EXPECT_EQ(wine.name(), "wine");
  const DatasetStats s = compute_stats(wine);
  EXPECT_EQ(s.num_examples, 178u);
  EXPECT_EQ(s.num_features, 13u);
  EXPECT_EQ(s.num_classes, 3u);
  EXPECT_NEAR(s.min_value, 0.13, 0.01);
  EXPECT_NEAR(s.max_value, 1680, 0.01);
}

TEST(LoadCsv, IonosphereRange) {
  const DatasetStats s = compute_stats(load_csv(kData / "uci" / "ionosphere.csv", {}));
  EXPECT_EQ(s.num_features, 34u);
  EXPECT_EQ(s.min_value, -1);
  EXPECT_EQ(s.max_value, 1);
}

TEST(Stats, ToySet) {
  const DatasetStats s = compute_stats(toy());
  EXPECT_EQ(s.num_examples, 2u);
  EXPECT_EQ(s.num_features, 2u);
  EXPECT_EQ(s.num_classes, 2u);
  EXPECT_EQ(s.min_value, 0);
  EXPECT_EQ(s.max_value, 1);
}

TEST(DatasetInvariants, ConstructorRejectsBadTables) {
  EXPECT_THROW(Dataset("x", 1, {1.0}, {0}, {"a"}), ArgumentError);
  EXPECT_THROW(Dataset("x", 1, {1.0, 2.0}, {0, 2}, {"a", "b"}), ArgumentError);
  EXPECT_THROW(Dataset("x", 1, {1.0, 2.0}, {0, 0}, {"a", "b"}), ArgumentError);
  EXPECT_THROW(Dataset("x", 1, {1.0, NAN}, {0, 1}, {"a", "b"}), ArgumentError);
  EXPECT_THROW(Dataset("x", 2, {1.0, 2.0}, {0, 1}, {"a", "b"}), ArgumentError);
  EXPECT_THROW(Dataset("x", 0, {}, {0, 1}, {"a", "b"}), ArgumentError);
}

TEST(RoundTrip, SerializeAndReloadIsIdentical) {
  SplitMix64 rng(5);
  for (int round = 0; round < 50; ++round) {
    const std::size_t n = 2 + rng.below(30);
    const std::size_t m = 1 + rng.below(8);
    std::vector<double> values(n * m);
    for (double& v : values) v = rng.uniform(-1e9, 1e9) * (rng.unit() < 0.5 ? 1e-12 : 1);
    std::vector<std::string> names{"plain", "with,comma", " padded", "q\"uote"};
    names.resize(std::min(n, names.size()));
    std::vector<ClassIndex> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
      labels[i] = i < names.size() ? i : rng.below(names.size());
    }
    const Dataset ds("r", m, values, labels, names);

    const Dataset back = parse_csv(to_csv(ds), {}, "r");
    ASSERT_EQ(back.size(), ds.size());
    ASSERT_EQ(back.num_features(), ds.num_features());
    ASSERT_TRUE(std::equal(ds.features().begin(), ds.features().end(), back.features().begin()));
    for (std::size_t i = 0; i < n; ++i) {
      ASSERT_EQ(back.class_names()[back.label(i)], ds.class_names()[ds.label(i)]);
    }
  }
}

TEST(Split, SizesAndRounding) {
  EXPECT_EQ(test_size(10, 0.3), 3u);
  EXPECT_EQ(test_size(683, 0.3), 205u);
  const TrainTestSplit s = split(10, 1, 0.3);
  EXPECT_EQ(s.test_indices.size(), 3u);
  EXPECT_EQ(s.train_indices.size(), 7u);
  const TrainTestSplit cancer = split(683, 42, 0.3);
  EXPECT_EQ(cancer.test_indices.size(), 205u);
  EXPECT_EQ(cancer.train_indices.size(), 478u);
}

TEST(Split, MatchesIndependentFisherYatesOracle) {
  // Frozen from a separate Python implementation of SplitMix64 + Fisher-Yates.
  const TrainTestSplit a = split(10, 42, 0.3);
  EXPECT_EQ(a.test_indices, (std::vector<std::size_t>{0, 9, 5}));
  EXPECT_EQ(a.train_indices, (std::vector<std::size_t>{8, 6, 4, 7, 2, 1, 3}));
  const TrainTestSplit b = split(10, 7, 0.5);
  EXPECT_EQ(b.test_indices, (std::vector<std::size_t>{8, 1, 5, 9, 0}));
  EXPECT_EQ(b.train_indices, (std::vector<std::size_t>{4, 3, 2, 6, 7}));
}

TEST(Split, PartitionPropertyExhaustive) {
  for (std::size_t n = 2; n <= 100; ++n) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const double fraction = 0.1 + 0.8 * double(seed % 9) / 8.0;
      const std::size_t nt = test_size(n, fraction);
      if (nt == 0 || nt >= n) {
        EXPECT_THROW(split(n, seed, fraction), ArgumentError);
        continue;
      }
      const TrainTestSplit s = split(n, seed, fraction);
      ASSERT_EQ(s.test_indices.size(), nt);
      std::vector<std::size_t> all = s.test_indices;
      all.insert(all.end(), s.train_indices.begin(), s.train_indices.end());
      std::sort(all.begin(), all.end());
      for (std::size_t i = 0; i < n; ++i) ASSERT_EQ(all[i], i);
    }
  }
}

TEST(Split, DeterministicAndSeedSensitive) {
  const TrainTestSplit a = split(100, 5, 0.3);
  const TrainTestSplit b = split(100, 5, 0.3);
  EXPECT_EQ(a.test_indices, b.test_indices);
  EXPECT_EQ(a.train_indices, b.train_indices);
  std::set<std::vector<std::size_t>> distinct;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto t = split(30, seed, 0.3).test_indices;
    std::sort(t.begin(), t.end());
    distinct.insert(t);
  }
  EXPECT_EQ(distinct.size(), 50u);
}

TEST(Split, RejectsDegenerateFractions) {
  EXPECT_THROW(split(10, 1, 0.0), ArgumentError);
  EXPECT_THROW(split(10, 1, 1.0), ArgumentError);
  EXPECT_THROW(split(10, 1, 0.01), ArgumentError);
  EXPECT_THROW(split(10, 1, 0.99), ArgumentError);
  EXPECT_THROW(split(2, 1, NAN), ArgumentError);
}

TEST(Normalize, ColumnsScaleToUnitInterval) {
  const Dataset ds("n", 3, {0, 7, -1, 5, 7, 1, 10, 7, 0}, {0, 1, 0}, {"a", "b"});
  const Dataset out = minmax_normalize(ds);
  EXPECT_EQ(out.row(0)[0], 0);
  EXPECT_EQ(out.row(1)[0], 0.5);
  EXPECT_EQ(out.row(2)[0], 1);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(out.row(i)[1], 0);
  EXPECT_EQ(out.row(0)[2], 0);
  EXPECT_EQ(out.row(1)[2], 1);
  EXPECT_EQ(out.row(2)[2], 0.5);
  EXPECT_EQ(std::vector<ClassIndex>(out.labels().begin(), out.labels().end()),
            (std::vector<ClassIndex>{0, 1, 0}));
}

TEST(Manifest, ParsesEntriesAndResolvesRelativePaths) {
  const auto entries = parse_manifest(
      "# comment\n\nwine\tuci/wine.csv\tlast\tfalse\r\n"
      "other\t/abs/x.csv\t0\ttrue\n",
      "/base");
  ASSERT_EQ(entries.size(), 2u);
  EXPECT_EQ(entries[0].name, "wine");
  EXPECT_EQ(entries[0].path, std::filesystem::path("/base/uci/wine.csv"));
  EXPECT_FALSE(entries[0].options.label_column.has_value());
  EXPECT_FALSE(entries[0].options.has_header);
  EXPECT_EQ(entries[1].path, std::filesystem::path("/abs/x.csv"));
  EXPECT_EQ(entries[1].options.label_column, 0u);
  EXPECT_TRUE(entries[1].options.has_header);
}

TEST(Manifest, RejectsMalformedLines) {
  EXPECT_THROW(parse_manifest("wine\tuci/wine.csv\tlast\n", "."), LoadError);
  EXPECT_THROW(parse_manifest("wine\tuci/wine.csv\tfirst\tfalse\n", "."), LoadError);
  EXPECT_THROW(parse_manifest("wine\tuci/wine.csv\tlast\tmaybe\n", "."), LoadError);
}

TEST(Manifest, ReferenceManifestLoadsEveryDataset) {
  const auto entries = load_manifest(kData / "reference.tsv");
  EXPECT_EQ(entries.size(), 11u);
  for (const auto& e : entries) EXPECT_NO_THROW(load_entry(e)) << e.name;
}
