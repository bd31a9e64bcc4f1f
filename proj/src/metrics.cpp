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

#include <stdexcept>

#include "luxnorm/errors.hpp"
#include "luxnorm/unicode.hpp"

namespace luxnorm {
namespace {

std::optional<std::string> normalized(const Cell& cell) {
  if (!cell) return std::nullopt;
  return unicode::nfc(*cell);
}

Rational ratio(std::uint64_t num, std::uint64_t den) {
  return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

}  // namespace

std::string_view to_string(Judgment j) {
  switch (j) {
    case Judgment::kTP:
      return "TP";
    case Judgment::kFP:
      return "FP";
    case Judgment::kFN:
      return "FN";
    case Judgment::kTN:
      return "TN";
  }
  return "?";
}

std::string_view to_string(MiscorrectionPolicy policy) {
  return policy == MiscorrectionPolicy::kFalseNegativeOnly ? "fn" : "fn+fp";
}

MiscorrectionPolicy parse_miscorrection_policy(std::string_view text) {
  if (text == "fn") return MiscorrectionPolicy::kFalseNegativeOnly;
  if (text == "fn+fp") return MiscorrectionPolicy::kFalseNegativeAndPositive;
  throw ConfigError("miscorrection policy must be 'fn' or 'fn+fp', got '" + std::string(text) +
                    "'");
}

ColumnJudgment classify_column(const TripleColumn& column) {
  const auto o = normalized(column.original);
  const auto p = normalized(column.predicted);
  const auto g = normalized(column.gold);
  ColumnJudgment out;
  if (g != o) {
    if (p == g) {
      out.judgment = Judgment::kTP;
    } else {
      out.judgment = Judgment::kFN;
      out.miscorrection = p != o;
    }
  } else {
    out.judgment = p == o ? Judgment::kTN : Judgment::kFP;
  }
  return out;
}

std::vector<ColumnJudgment> classify_columns(const AlignedTriple& triple) {
  std::vector<ColumnJudgment> out;
  out.reserve(triple.columns.size());
  for (const TripleColumn& column : triple.columns) out.push_back(classify_column(column));
  return out;
}

void JudgmentCounts::add(const ColumnJudgment& j) {
  switch (j.judgment) {
    case Judgment::kTP:
      ++tp;
      break;
    case Judgment::kFP:
      ++fp;
      break;
    case Judgment::kFN:
      ++fn;
      if (j.miscorrection) ++miscorrections;
      break;
    case Judgment::kTN:
      ++tn;
      break;
  }
}

JudgmentCounts& JudgmentCounts::operator+=(const JudgmentCounts& other) {
  tp += other.tp;
  fp += other.fp;
  fn += other.fn;
  tn += other.tn;
  miscorrections += other.miscorrections;
  return *this;
}

JudgmentCounts count_judgments(std::span<const ColumnJudgment> judgments) {
  JudgmentCounts counts;
  for (const ColumnJudgment& j : judgments) counts.add(j);
  return counts;
}

std::optional<Rational> CharacterCounts::rate() const {
  if (reference_length == 0) return std::nullopt;
  return ratio(edits, reference_length);
}

CharacterCounts& CharacterCounts::operator+=(const CharacterCounts& other) {
  edits += other.edits;
  reference_length += other.reference_length;
  return *this;
}

CharacterCounts character_counts(std::string_view predicted, std::string_view gold) {
  const std::u32string p = unicode::to_utf32(unicode::nfc(predicted));
  const std::u32string g = unicode::to_utf32(unicode::nfc(gold));
  return {levenshtein(p, g), g.size()};
}

std::optional<Rational> cer(std::span<const std::string> predicted,
                            std::span<const std::string> gold) {
  if (predicted.size() != gold.size()) {
    throw InputError("cer: " + std::to_string(predicted.size()) + " predictions for " +
                     std::to_string(gold.size()) + " references");
  }
  CharacterCounts total;
  for (std::size_t i = 0; i < gold.size(); ++i) total += character_counts(predicted[i], gold[i]);
  return total.rate();
}

MetricsReport compute_metrics(const JudgmentCounts& counts, MiscorrectionPolicy policy) {
  const std::uint64_t columns = counts.columns();
  if (columns == 0) throw std::invalid_argument("compute_metrics: no aligned columns");

  MetricsReport r;
  r.policy = policy;
  r.columns = columns;
  r.miscorrections = counts.miscorrections;
  r.tp = counts.tp;
  r.fn = counts.fn;
  r.tn = counts.tn;
  r.fp = counts.fp;
  if (policy == MiscorrectionPolicy::kFalseNegativeAndPositive) r.fp += counts.miscorrections;

  r.accuracy = ratio(r.tp + r.tn, columns);
  if (r.tp + r.fp > 0) r.precision = ratio(r.tp, r.tp + r.fp);
  if (r.tp + r.fn > 0) r.recall = ratio(r.tp, r.tp + r.fn);
  // Always compare against Rational(...): Boost 1.74's rational == int
  // overload recurses without end.
  if (r.precision && r.recall) {
    const Rational sum = *r.precision + *r.recall;
    r.f1 = sum == Rational(0) ? Rational(0) : Rational(2) * *r.precision * *r.recall / sum;
  }
  if (r.tp + r.fn > 0) {
    r.err = Rational(static_cast<std::int64_t>(r.tp) - static_cast<std::int64_t>(r.fp),
                     static_cast<std::int64_t>(r.tp + r.fn));
  }

  // The leave-as-is system is right exactly on the columns where gold equals
  // the original, i.e. the FP and TN columns.
  r.baseline_accuracy = ratio(counts.fp + counts.tn, columns);
  if (r.baseline_accuracy != Rational(1)) {
    r.err_from_accuracy = (r.accuracy - r.baseline_accuracy) / (Rational(1) - r.baseline_accuracy);
  }
  return r;
}

MetricsReport compute_metrics(std::span<const ColumnJudgment> judgments,
                              MiscorrectionPolicy policy) {
  return compute_metrics(count_judgments(judgments), policy);
}

}  // namespace luxnorm
