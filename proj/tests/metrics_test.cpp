// Copyright 2026 The luxnorm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "luxnorm/metrics.hpp"

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "luxnorm/errors.hpp"

namespace luxnorm {
namespace {

TripleColumn col(Cell o, Cell p, Cell g) { return {std::move(o), std::move(p), std::move(g)}; }

TEST(ClassifyColumn, TheFourOutcomes) {
  EXPECT_EQ(classify_column(col("a", "a", "b")).judgment, Judgment::kFN);
  EXPECT_FALSE(classify_column(col("a", "a", "b")).miscorrection);
  EXPECT_EQ(classify_column(col("c", "d", "c")).judgment, Judgment::kFP);
  EXPECT_EQ(classify_column(col("e", "e", "e")).judgment, Judgment::kTN);
  EXPECT_EQ(classify_column(col("a", "b", "b")).judgment, Judgment::kTP);
  const ColumnJudgment mis = classify_column(col("a", "x", "b"));
  EXPECT_EQ(mis.judgment, Judgment::kFN);
  EXPECT_TRUE(mis.miscorrection);
}

TEST(ClassifyColumn, GapsAreValues) {
  EXPECT_EQ(classify_column(col("a", std::nullopt, "a")).judgment, Judgment::kFP);
  EXPECT_EQ(classify_column(col(std::nullopt, std::nullopt, "a")).judgment, Judgment::kFN);
  EXPECT_EQ(classify_column(col(std::nullopt, "a", "a")).judgment, Judgment::kTP);
  EXPECT_EQ(classify_column(col("a", "a", std::nullopt)).judgment, Judgment::kFN);
}

TEST(ClassifyColumn, ComparesComposedForms) {
  EXPECT_EQ(classify_column(col("Me\xCC\x88llech", "Mëllech", "Mëllech")).judgment, Judgment::kTN);
}

TEST(CountJudgments, SmallExample) {
  AlignedTriple t;
  t.columns = {col("a", "a", "b"), col("c", "d", "c"), col("e", "e", "e")};
  const auto counts = count_judgments(classify_columns(t));
  EXPECT_EQ(counts.tp, 0u);
  EXPECT_EQ(counts.fp, 1u);
  EXPECT_EQ(counts.fn, 1u);
  EXPECT_EQ(counts.tn, 1u);
  const MetricsReport m = compute_metrics(counts);
  EXPECT_EQ(m.accuracy, Rational(1, 3));
  EXPECT_EQ(m.precision, Rational(0));
  EXPECT_EQ(m.recall, Rational(0));
  EXPECT_EQ(m.f1, Rational(0));
  EXPECT_EQ(m.err, Rational(-1));
}

TEST(ComputeMetrics, UndefinedValuesStayEmpty) {
  JudgmentCounts c;
  c.tn = 5;
  const MetricsReport m = compute_metrics(c);
  EXPECT_FALSE(m.precision);
  EXPECT_FALSE(m.recall);
  EXPECT_FALSE(m.f1);
  EXPECT_FALSE(m.err);
  EXPECT_FALSE(m.err_from_accuracy);
  EXPECT_EQ(m.accuracy, Rational(1));
  EXPECT_THROW(compute_metrics(JudgmentCounts{}), std::invalid_argument);
}

TEST(ComputeMetrics, ErrAnchors) {
  JudgmentCounts leave;
  leave.fn = 4;
  leave.tn = 6;
  EXPECT_EQ(compute_metrics(leave).err, Rational(0));
  JudgmentCounts perfect;
  perfect.tp = 4;
  perfect.tn = 6;
  EXPECT_EQ(compute_metrics(perfect).err, Rational(1));
  EXPECT_EQ(compute_metrics(perfect).accuracy, Rational(1));
}

TEST(ComputeMetrics, MiscorrectionPolicy) {
  JudgmentCounts c;
  c.tp = 3;
  c.fn = 2;
  c.miscorrections = 1;
  c.tn = 5;
  const MetricsReport only_fn = compute_metrics(c, MiscorrectionPolicy::kFalseNegativeOnly);
  const MetricsReport both = compute_metrics(c, MiscorrectionPolicy::kFalseNegativeAndPositive);
  EXPECT_EQ(only_fn.fp, 0u);
  EXPECT_EQ(both.fp, 1u);
  EXPECT_EQ(both.fn, 2u);
  EXPECT_EQ(only_fn.err, Rational(3, 5));
  EXPECT_EQ(both.err, Rational(2, 5));
  EXPECT_EQ(both.precision, Rational(3, 4));
  EXPECT_EQ(parse_miscorrection_policy("fn"), MiscorrectionPolicy::kFalseNegativeOnly);
  EXPECT_EQ(parse_miscorrection_policy("fn+fp"), MiscorrectionPolicy::kFalseNegativeAndPositive);
  EXPECT_THROW(parse_miscorrection_policy("fp"), ConfigError);
}

// ERR from the counts must equal ERR derived from accuracy against the
// leave-as-is baseline, on any mix of judgments.
TEST(ComputeMetrics, ErrEqualsAccuracyBasedErr) {
  std::mt19937_64 gen(1234);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<ColumnJudgment> js(1 + gen() % 60);
    for (auto& j : js) {
      j.judgment = static_cast<Judgment>(gen() % 4);
      j.miscorrection = j.judgment == Judgment::kFN && gen() % 2;
    }
    const MetricsReport m = compute_metrics(js);
    std::int64_t tp = 0, fp = 0, fn = 0, tn = 0;
    for (const auto& j : js) {
      tp += j.judgment == Judgment::kTP;
      fp += j.judgment == Judgment::kFP;
      fn += j.judgment == Judgment::kFN;
      tn += j.judgment == Judgment::kTN;
    }
    const std::int64_t n = tp + fp + fn + tn;
    if (tp + fn == 0) {
      EXPECT_FALSE(m.err);
      EXPECT_FALSE(m.err_from_accuracy);
      continue;
    }
    const Rational acc(tp + tn, n), base(fp + tn, n);
    ASSERT_TRUE(m.err && m.err_from_accuracy);
    EXPECT_EQ(*m.err, Rational(tp - fp, tp + fn));
    EXPECT_EQ(*m.err_from_accuracy, (acc - base) / (Rational(1) - base));
    EXPECT_EQ(*m.err, *m.err_from_accuracy);
    EXPECT_EQ(m.baseline_accuracy, base);
  }
}

TEST(CharacterErrorRate, PooledOverTheCorpus) {
  const std::vector<std::string> pred = {"ab", "a"};
  const std::vector<std::string> gold = {"ab", "ab"};
  EXPECT_EQ(cer(pred, gold), Rational(1, 4));
  const std::vector<std::string> p2 = {"abc"};
  const std::vector<std::string> g2 = {"abd"};
  EXPECT_EQ(cer(p2, g2), Rational(1, 3));
  const std::vector<std::string> blank = {""};
  EXPECT_FALSE(cer(blank, blank));
  EXPECT_THROW(cer(pred, g2), InputError);
}

TEST(CharacterErrorRate, CountsCodePointsAndSpaces) {
  const CharacterCounts c = character_counts("Mellech drénken", "Mëllech drénken");
  EXPECT_EQ(c.edits, 1u);
  EXPECT_EQ(c.reference_length, 15u);
}

}  // namespace
}  // namespace luxnorm
