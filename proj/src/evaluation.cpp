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

#include "luxnorm/evaluation.hpp"

#include <algorithm>
#include <cstdio>
#include <utility>

#include "luxnorm/errors.hpp"
#include "luxnorm/parallel.hpp"
#include "luxnorm/tokenizer.hpp"
#include "luxnorm/unicode.hpp"

namespace luxnorm {
namespace {

std::vector<std::string> words(const std::string& sentence) {
  return tokenize(unicode::nfc(sentence));
}

std::string fixed4(const std::optional<Rational>& r) {
  if (!r) return "n/a";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", to_double(*r));
  return buf;
}

std::string exact(const std::optional<Rational>& r) { return r ? to_string(*r) : "null"; }

Json counts_json(const JudgmentCounts& c) {
  Json j;
  j["tp"] = c.tp;
  j["fp"] = c.fp;
  j["fn"] = c.fn;
  j["tn"] = c.tn;
  j["miscorrections"] = c.miscorrections;
  return j;
}

// Named metric rows, shared by the TSV and text renderers.
std::vector<std::pair<std::string, std::optional<Rational>>> metric_rows(const MetricsReport& m) {
  return {
      {"accuracy", m.accuracy},
      {"precision", m.precision},
      {"recall", m.recall},
      {"f1", m.f1},
      {"err", m.err},
      {"cer", m.cer},
      {"baseline_accuracy", m.baseline_accuracy},
      {"err_from_accuracy", m.err_from_accuracy},
  };
}

std::string cell(const Cell& c) { return c ? *c : std::string(); }

}  // namespace

SentenceResult evaluate_sentence(const std::string& original, const std::string& predicted,
                                 const std::string& gold, const ScoringScheme& scheme) {
  SentenceResult r;
  r.alignment = align_triple(words(original), words(predicted), words(gold), scheme);
  r.judgments = classify_columns(r.alignment);
  r.counts = count_judgments(r.judgments);
  r.characters = character_counts(predicted, gold);
  return r;
}

EvaluationResult evaluate(std::span<const std::string> original,
                          std::span<const std::string> predicted,
                          std::span<const std::string> gold, const EvaluationOptions& options,
                          std::size_t workers) {
  if (original.size() != predicted.size() || original.size() != gold.size()) {
    throw InputError("line counts differ: original " + std::to_string(original.size()) +
                     ", predicted " + std::to_string(predicted.size()) + ", gold " +
                     std::to_string(gold.size()));
  }
  options.scheme.validate();
  EvaluationResult result;
  result.sentences.resize(original.size());
  parallel_for(original.size(), workers, [&](std::size_t i) {
    result.sentences[i] = evaluate_sentence(original[i], predicted[i], gold[i], options.scheme);
  });
  for (const SentenceResult& s : result.sentences) {
    result.counts += s.counts;
    result.characters += s.characters;
  }
  if (result.counts.columns() == 0) throw InputError("nothing to evaluate: no tokens");
  result.metrics = compute_metrics(result.counts, options.policy);
  result.metrics.cer = result.characters.rate();
  return result;
}

Json metrics_to_json(const MetricsReport& m) {
  Json j;
  j["tp"] = m.tp;
  j["fp"] = m.fp;
  j["fn"] = m.fn;
  j["tn"] = m.tn;
  j["columns"] = m.columns;
  j["miscorrections"] = m.miscorrections;
  j["miscorrection_policy"] = std::string(to_string(m.policy));
  Json exact_values;
  for (const auto& [name, value] : metric_rows(m)) {
    j[name] = to_json(value);
    exact_values[name] = to_exact_json(value);
  }
  j["exact"] = std::move(exact_values);
  return j;
}

Json evaluation_to_json(const EvaluationResult& result, const EvaluationOptions& options,
                        bool verbose) {
  Json j;
  j["sentences"] = result.sentences.size();
  j["scoring"] = {{"match_bonus", options.scheme.match_bonus},
                  {"gap_penalty", options.scheme.gap_penalty},
                  {"miscorrection_policy", std::string(to_string(options.policy))}};
  j["characters"] = {{"edits", result.characters.edits},
                     {"reference_length", result.characters.reference_length}};
  j["metrics"] = metrics_to_json(result.metrics);
  if (verbose) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < result.sentences.size(); ++i) {
      const SentenceResult& s = result.sentences[i];
      Json row;
      row["index"] = i;
      row.update(counts_json(s.counts));
      row["char_edits"] = s.characters.edits;
      row["reference_length"] = s.characters.reference_length;
      row["alignment_score"] = s.alignment.score;
      rows.push_back(std::move(row));
    }
    j["per_sentence"] = std::move(rows);
  }
  return j;
}

std::string evaluation_to_tsv(const EvaluationResult& result, const EvaluationOptions& options,
                              bool verbose) {
  const MetricsReport& m = result.metrics;
  std::string out = "metric\tvalue\texact\n";
  auto count_row = [&](const char* name, std::uint64_t v) {
    out += std::string(name) + '\t' + std::to_string(v) + '\t' + std::to_string(v) + '\n';
  };
  count_row("tp", m.tp);
  count_row("fp", m.fp);
  count_row("fn", m.fn);
  count_row("tn", m.tn);
  count_row("columns", m.columns);
  count_row("miscorrections", m.miscorrections);
  for (const auto& [name, value] : metric_rows(m)) {
    out += name + '\t' + (value ? fixed4(value) : "null") + '\t' + exact(value) + '\n';
  }
  out += "miscorrection_policy\t" + std::string(to_string(options.policy)) + '\t' +
         std::string(to_string(options.policy)) + '\n';
  if (verbose) {
    out += "\nsentence\ttp\tfp\tfn\ttn\tchar_edits\treference_length\n";
    for (std::size_t i = 0; i < result.sentences.size(); ++i) {
      const SentenceResult& s = result.sentences[i];
      out += std::to_string(i) + '\t' + std::to_string(s.counts.tp) + '\t' +
             std::to_string(s.counts.fp) + '\t' + std::to_string(s.counts.fn) + '\t' +
             std::to_string(s.counts.tn) + '\t' + std::to_string(s.characters.edits) + '\t' +
             std::to_string(s.characters.reference_length) + '\n';
    }
  }
  return out;
}

std::string metrics_table(const MetricsReport& m) {
  std::string out;
  auto row = [&](const std::string& name, const std::string& value) {
    std::string padded = name;
    padded.resize(std::max<std::size_t>(padded.size() + 2, 20), ' ');
    out += padded + value + '\n';
  };
  row("TP / FP / FN / TN", std::to_string(m.tp) + " / " + std::to_string(m.fp) + " / " +
                               std::to_string(m.fn) + " / " + std::to_string(m.tn));
  row("accuracy", fixed4(m.accuracy));
  row("precision", fixed4(m.precision));
  row("recall", fixed4(m.recall));
  row("F1", fixed4(m.f1));
  row("ERR", fixed4(m.err));
  row("CER", fixed4(m.cer));
  return out;
}

std::string alignment_dump(const EvaluationResult& result) {
  std::string out = "sentence\tcolumn\toriginal\tpredicted\tgold\tjudgment\n";
  for (std::size_t i = 0; i < result.sentences.size(); ++i) {
    const SentenceResult& s = result.sentences[i];
    for (std::size_t c = 0; c < s.alignment.columns.size(); ++c) {
      const TripleColumn& col = s.alignment.columns[c];
      out += std::to_string(i) + '\t' + std::to_string(c) + '\t' + cell(col.original) + '\t' +
             cell(col.predicted) + '\t' + cell(col.gold) + '\t' +
             std::string(to_string(s.judgments[c].judgment)) + '\n';
    }
  }
  return out;
}

}  // namespace luxnorm
