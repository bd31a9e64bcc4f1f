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

// Corpus evaluation: tokenize, align original/predicted/gold per sentence,
// classify the columns and aggregate the metrics.

#ifndef LUXNORM_EVALUATION_HPP_
#define LUXNORM_EVALUATION_HPP_

#include <span>
#include <string>
#include <vector>

#include "luxnorm/alignment.hpp"
#include "luxnorm/json_util.hpp"
#include "luxnorm/metrics.hpp"

namespace luxnorm {

struct EvaluationOptions {
  ScoringScheme scheme;
  MiscorrectionPolicy policy = MiscorrectionPolicy::kFalseNegativeOnly;
};

struct SentenceResult {
  AlignedTriple alignment;
  std::vector<ColumnJudgment> judgments;
  JudgmentCounts counts;
  CharacterCounts characters;
};

struct EvaluationResult {
  std::vector<SentenceResult> sentences;
  JudgmentCounts counts;
  CharacterCounts characters;
  MetricsReport metrics;
};

SentenceResult evaluate_sentence(const std::string& original, const std::string& predicted,
                                 const std::string& gold, const ScoringScheme& scheme = {});

// Throws InputError when the three lists differ in length or contain no
// tokens at all.
EvaluationResult evaluate(std::span<const std::string> original,
                          std::span<const std::string> predicted,
                          std::span<const std::string> gold, const EvaluationOptions& options = {},
                          std::size_t workers = 1);

// Metrics only; undefined values are null.
Json metrics_to_json(const MetricsReport& metrics);

// Counts, metrics, scoring configuration and, when verbose, one entry per
// sentence.
Json evaluation_to_json(const EvaluationResult& result, const EvaluationOptions& options,
                        bool verbose);

// metric<TAB>value<TAB>exact lines; verbose appends a per-sentence table.
std::string evaluation_to_tsv(const EvaluationResult& result, const EvaluationOptions& options,
                              bool verbose);

// Aligned text table for people.
std::string metrics_table(const MetricsReport& metrics);

// One row per aligned column:
// sentence<TAB>column<TAB>original<TAB>predicted<TAB>gold<TAB>judgment,
// with gaps as empty fields.
std::string alignment_dump(const EvaluationResult& result);

}  // namespace luxnorm

#endif  // LUXNORM_EVALUATION_HPP_
