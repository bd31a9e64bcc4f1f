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

#include "luxnorm/normalizer.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>

#include "luxnorm/errors.hpp"
#include "luxnorm/parallel.hpp"
#include "luxnorm/tokenizer.hpp"
#include "luxnorm/unicode.hpp"

namespace luxnorm {
namespace {

using unicode::Casing;

// Carries sentence-initial or all-caps capitalization over to a candidate.
// Never lowercases: a capitalized lemma (a noun) stays capitalized.
std::string raise_casing(std::string_view token, const std::string& form) {
  const Casing casing = unicode::detect_casing(token);
  if (casing == Casing::kUpper) return unicode::to_upper(form);
  if (casing == Casing::kTitle && unicode::detect_casing(form) == Casing::kLower) {
    return unicode::apply_casing(form, Casing::kTitle);
  }
  return form;
}

struct Pool {
  std::map<std::string, ScoredCandidate> by_form;

  ScoredCandidate& propose(const std::string& form, CandidateSource source) {
    auto [it, inserted] = by_form.try_emplace(form);
    if (inserted) {
      it->second.form = form;
      it->second.source = source;
    }
    return it->second;
  }
};

}  // namespace

ScoreWeights ScoreWeights::parse(std::string_view text) {
  std::vector<double> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    const std::string field(text.substr(start, comma - start));
    try {
      std::size_t used = 0;
      values.push_back(std::stod(field, &used));
      if (used != field.size()) throw std::invalid_argument(field);
    } catch (const std::exception&) {
      throw ConfigError("weights: '" + field + "' is not a number");
    }
    start = comma + 1;
  }
  if (values.size() != 4) {
    throw ConfigError("weights: expected 4 comma-separated values v,e,n,f");
  }
  ScoreWeights w;
  w.variant = values[0];
  w.edit = values[1];
  w.ngram = values[2];
  w.frequency = values[3];
  w.validate();
  return w;
}

std::string ScoreWeights::to_string() const {
  std::ostringstream out;
  out << variant << ',' << edit << ',' << ngram << ',' << frequency;
  return out.str();
}

void ScoreWeights::validate() const {
  for (double w : {variant, edit, ngram, frequency, embedding}) {
    if (!std::isfinite(w) || w < 0.0) throw ConfigError("weights must be finite and non-negative");
  }
}

void NormalizerConfig::validate() const {
  weights.validate();
  if (max_edit_distance < 1 || max_edit_distance > 2) {
    throw ConfigError("max edit distance must be 1 or 2");
  }
  if (ngram_n < 1) throw ConfigError("n-gram size must be positive");
}

NormalizerResources::NormalizerResources(ReverseIndex reverse, Lexicon lexicon, int ngram_n)
    : reverse_(std::move(reverse)), lexicon_(std::move(lexicon)), ngrams_(lexicon_, ngram_n) {}

std::shared_ptr<const NormalizerResources> NormalizerResources::load(
    const std::filesystem::path& dictionary, const std::filesystem::path& lexicon, int ngram_n) {
  return std::make_shared<const NormalizerResources>(
      ReverseIndex(VariantDictionary::load(dictionary)), Lexicon::load(lexicon), ngram_n);
}

std::vector<ScoredCandidate> score_candidates(std::string_view raw_token,
                                              const NormalizerResources& resources,
                                              const NormalizerConfig& config) {
  const std::string token = unicode::nfc(raw_token);
  // Numbers, symbols and the like are not misspelled words.
  if (token.empty() || is_punctuation_token(token) || !unicode::has_letter(token)) return {};
  const Lexicon& lexicon = resources.lexicon();
  if (lexicon.knows(token)) return {};

  Pool pool;

  // Reverse variant lookup.
  auto lemmas = resources.reverse().lookup(token);
  if (lemmas.empty()) lemmas = resources.reverse().lookup_folded(token);
  std::uint64_t total = 0;
  for (const LemmaCount& lc : lemmas) total += lc.count;
  for (const LemmaCount& lc : lemmas) {
    ScoredCandidate& c =
        pool.propose(raise_casing(token, lc.lemma), CandidateSource::kVariantIndex);
    c.variant_probability += static_cast<double>(lc.count) / static_cast<double>(total);
  }

  // Edit and n-gram neighbours; capitalized tokens are also queried in
  // lowercase so that sentence-initial words reach lowercase lexicon entries.
  std::vector<std::string> queries{token};
  const Casing casing = unicode::detect_casing(token);
  if (casing == Casing::kTitle || casing == Casing::kUpper) {
    queries.push_back(unicode::to_lower(token));
  }
  for (const std::string& query : queries) {
    for (const Candidate& c : edit_candidates(query, lexicon, config.max_edit_distance)) {
      pool.propose(raise_casing(token, c.form), c.source);
    }
    for (const Candidate& c : ngram_candidates(query, resources.ngrams(), config.top_k)) {
      pool.propose(raise_casing(token, c.form), c.source);
    }
  }

  const std::u32string token_cps = unicode::to_utf32(token);
  const auto limit = static_cast<std::size_t>(config.max_edit_distance);
  const ScoreWeights& w = config.weights;
  std::vector<ScoredCandidate> scored;
  scored.reserve(pool.by_form.size());
  for (auto& [form, c] : pool.by_form) {
    const std::size_t d = edit_distance(token_cps, unicode::to_utf32(form), limit);
    if (d <= limit) c.edit_distance = d;
    c.ngram_cosine = resources.ngrams().cosine(token, form);
    c.frequency = lexicon.normalized_frequency(form);
    c.score = w.variant * c.variant_probability +
              w.edit * (c.edit_distance ? edit_proximity(*c.edit_distance) : 0.0) +
              w.ngram * c.ngram_cosine + w.frequency * c.frequency;
    scored.push_back(std::move(c));
  }
  std::sort(scored.begin(), scored.end(), [](const ScoredCandidate& a, const ScoredCandidate& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.frequency != b.frequency) return a.frequency > b.frequency;
    const std::size_t da = a.edit_distance.value_or(SIZE_MAX);
    const std::size_t db = b.edit_distance.value_or(SIZE_MAX);
    if (da != db) return da < db;
    return a.form < b.form;
  });
  return scored;
}

std::string normalize_token(std::string_view token, const NormalizerResources& resources,
                            const NormalizerConfig& config) {
  const auto scored = score_candidates(token, resources, config);
  if (scored.empty()) return std::string(token);
  return scored.front().form;
}

std::string normalize_sentence(std::string_view sentence, const NormalizerResources& resources,
                               const NormalizerConfig& config) {
  std::vector<std::string> tokens = tokenize(sentence);
  for (std::string& token : tokens) {
    if (is_punctuation_token(token)) continue;
    const CliticSplit split = split_clitic(token);
    std::string replaced = split.prefix + normalize_token(split.body, resources, config);
    if (replaced != token && tokenize(replaced).size() == 1) token = std::move(replaced);
  }
  return detokenize(tokens);
}

std::vector<std::string> SentenceNormalizer::normalize_batch(
    std::span<const std::string> sentences, std::size_t workers) const {
  std::vector<std::string> out(sentences.size());
  parallel_for(sentences.size(), workers, [&](std::size_t i) { out[i] = normalize(sentences[i]); });
  return out;
}

PipelineNormalizer::PipelineNormalizer(std::shared_ptr<const NormalizerResources> resources,
                                       NormalizerConfig config)
    : resources_(std::move(resources)), config_(config) {
  if (!resources_) throw std::invalid_argument("PipelineNormalizer: null resources");
  config_.validate();
  if (config_.ngram_n != resources_->ngrams().n()) {
    throw ConfigError("n-gram size differs from the one the index was built with");
  }
}

std::string PipelineNormalizer::normalize(const std::string& sentence) const {
  return normalize_sentence(sentence, *resources_, config_);
}

}  // namespace luxnorm
