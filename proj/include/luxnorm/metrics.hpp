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

// Word-level confusion counts and the derived scores.
//
// For each aligned column (original o, predicted p, gold g), with the gap as
// a value of its own:
//   g != o, p == g   TP
//   g != o, p != g   FN   (a miscorrection when additionally p != o)
//   g == o, p != o   FP
//   g == o, p == o   TN
//
// ERR = (TP - FP) / (TP + FN): 1 is perfect, 0 is the leave-as-is system,
// negative means the normalizer does harm.

#ifndef LUXNORM_METRICS_HPP_
#define LUXNORM_METRICS_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "luxnorm/alignment.hpp"
#include "luxnorm/variant_dictionary.hpp"

namespace luxnorm {

enum class Judgment { kTP, kFP, kFN, kTN };

std::string_view to_string(Judgment j);

struct ColumnJudgment {
  Judgment judgment = Judgment::kTN;
  // FN where the normalizer changed the word, but not into gold.
  bool miscorrection = false;
};

// How a miscorrection enters the counts. The default keeps one judgment per
// column; the alternative also counts it as a false positive, for
// sensitivity analysis.
enum class MiscorrectionPolicy { kFalseNegativeOnly, kFalseNegativeAndPositive };

std::string_view to_string(MiscorrectionPolicy policy);
MiscorrectionPolicy parse_miscorrection_policy(std::string_view text);

// Comparisons are on NFC forms.
ColumnJudgment classify_column(const TripleColumn& column);
std::vector<ColumnJudgment> classify_columns(const AlignedTriple& triple);

struct JudgmentCounts {
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t fn = 0;
  std::uint64_t tn = 0;
  std::uint64_t miscorrections = 0;  // subset of fn

  std::uint64_t columns() const { return tp + fp + fn + tn; }
  void add(const ColumnJudgment& j);
  JudgmentCounts& operator+=(const JudgmentCounts& other);
  bool operator==(const JudgmentCounts&) const = default;
};

JudgmentCounts count_judgments(std::span<const ColumnJudgment> judgments);

// Character-level edit counts; merged by summation.
struct CharacterCounts {
  std::uint64_t edits = 0;
  std::uint64_t reference_length = 0;

  // nullopt when the reference is empty.
  std::optional<Rational> rate() const;
  CharacterCounts& operator+=(const CharacterCounts& other);
};

// Levenshtein distance between NFC code points of whole sentences, spaces
// included.
CharacterCounts character_counts(std::string_view predicted, std::string_view gold);

// Throws InputError when the lists differ in length. nullopt when the gold
// side has no characters at all.
std::optional<Rational> cer(std::span<const std::string> predicted,
                            std::span<const std::string> gold);

struct MetricsReport {
  // Counts after applying the policy; under kFalseNegativeAndPositive the
  // miscorrections appear in both fp and fn.
  std::uint64_t tp = 0, fp = 0, fn = 0, tn = 0;
  std::uint64_t columns = 0;
  std::uint64_t miscorrections = 0;
  MiscorrectionPolicy policy = MiscorrectionPolicy::kFalseNegativeOnly;

  Rational accuracy;  // correct columns over columns
  std::optional<Rational> precision;
  std::optional<Rational> recall;
  std::optional<Rational> f1;
  std::optional<Rational> err;
  // Accuracy of the leave-as-is system on the same columns, and ERR derived
  // from it as (acc - base) / (1 - base). Equals err under the default policy.
  Rational baseline_accuracy;
  std::optional<Rational> err_from_accuracy;
  std::optional<Rational> cer;
};

// Throws std::invalid_argument when there are no columns.
MetricsReport compute_metrics(const JudgmentCounts& counts,
                              MiscorrectionPolicy policy = MiscorrectionPolicy::kFalseNegativeOnly);
MetricsReport compute_metrics(std::span<const ColumnJudgment> judgments,
                              MiscorrectionPolicy policy = MiscorrectionPolicy::kFalseNegativeOnly);

}  // namespace luxnorm

#endif  // LUXNORM_METRICS_HPP_
