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

// Token-local pipeline normalizer.
//
// A token found in the lexicon, or one without letters, is left alone. Otherwise candidates are pooled
// from three generators (reverse variant lookup, edit neighbourhood, n-gram
// neighbours) and every pooled form is scored on all four signals:
//
//   score = w_v * P(lemma | variant)        relative count in the reverse index
//         + w_e * 1 / (1 + edit distance)   0 beyond the configured distance
//         + w_n * n-gram tf-idf cosine
//         + w_f * log-scaled lexicon frequency
//
// The highest score wins; ties go to the more frequent word, then the smaller
// edit distance, then byte order. An empty pool keeps the token.

#ifndef LUXNORM_NORMALIZER_HPP_
#define LUXNORM_NORMALIZER_HPP_

#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "luxnorm/candidates.hpp"
#include "luxnorm/lexicon.hpp"
#include "luxnorm/ngram_index.hpp"
#include "luxnorm/variant_dictionary.hpp"

namespace luxnorm {

struct ScoreWeights {
  double variant = 0.4;
  double edit = 0.2;
  double ngram = 0.2;
  double frequency = 0.2;
  // Reserved for a context ranker; no generator feeds it yet.
  double embedding = 0.0;

  // "v,e,n,f" -> weights. Throws ConfigError on malformed or negative input.
  static ScoreWeights parse(std::string_view text);
  std::string to_string() const;
  void validate() const;
};

struct NormalizerConfig {
  ScoreWeights weights;
  int max_edit_distance = 2;
  int ngram_n = 3;
  std::size_t top_k = 10;

  void validate() const;
};

// Immutable after construction; the n-gram index points into the lexicon, so
// the object is pinned in memory.
class NormalizerResources {
 public:
  NormalizerResources(ReverseIndex reverse, Lexicon lexicon, int ngram_n = 3);
  NormalizerResources(const NormalizerResources&) = delete;
  NormalizerResources& operator=(const NormalizerResources&) = delete;

  static std::shared_ptr<const NormalizerResources> load(
      const std::filesystem::path& dictionary, const std::filesystem::path& lexicon,
      int ngram_n = 3);

  const ReverseIndex& reverse() const { return reverse_; }
  const Lexicon& lexicon() const { return lexicon_; }
  const NgramIndex& ngrams() const { return ngrams_; }

 private:
  ReverseIndex reverse_;
  Lexicon lexicon_;
  NgramIndex ngrams_;
};

struct ScoredCandidate {
  std::string form;
  CandidateSource source = CandidateSource::kIdentity;  // first generator to propose it
  double variant_probability = 0.0;
  std::optional<std::size_t> edit_distance;  // unset beyond max_edit_distance
  double ngram_cosine = 0.0;
  double frequency = 0.0;
  double score = 0.0;
};

// The whole scored pool, best first. Empty if the token is known.
std::vector<ScoredCandidate> score_candidates(std::string_view token,
                                              const NormalizerResources& resources,
                                              const NormalizerConfig& config);

std::string normalize_token(std::string_view token, const NormalizerResources& resources,
                            const NormalizerConfig& config);

// Tokenizes, normalizes each word (elided articles kept), and re-joins.
// Punctuation is never touched and the token count never changes.
std::string normalize_sentence(std::string_view sentence, const NormalizerResources& resources,
                               const NormalizerConfig& config);

// Anything that maps sentences to normalized sentences.
class SentenceNormalizer {
 public:
  virtual ~SentenceNormalizer() = default;
  virtual std::string name() const = 0;
  virtual std::string normalize(const std::string& sentence) const = 0;
  // Defaults to normalize() per sentence on `workers` threads.
  virtual std::vector<std::string> normalize_batch(std::span<const std::string> sentences,
                                                   std::size_t workers = 1) const;
};

class PipelineNormalizer : public SentenceNormalizer {
 public:
  PipelineNormalizer(std::shared_ptr<const NormalizerResources> resources,
                     NormalizerConfig config = {});
  std::string name() const override { return "pipeline"; }
  std::string normalize(const std::string& sentence) const override;

  const NormalizerConfig& config() const { return config_; }

 private:
  std::shared_ptr<const NormalizerResources> resources_;
  NormalizerConfig config_;
};

// Leave-as-is baseline.
class IdentityNormalizer : public SentenceNormalizer {
 public:
  std::string name() const override { return "identity"; }
  std::string normalize(const std::string& sentence) const override { return sentence; }
};

class FunctionNormalizer : public SentenceNormalizer {
 public:
  FunctionNormalizer(std::string name, std::function<std::string(const std::string&)> fn)
      : name_(std::move(name)), fn_(std::move(fn)) {}
  std::string name() const override { return name_; }
  std::string normalize(const std::string& sentence) const override { return fn_(sentence); }

 private:
  std::string name_;
  std::function<std::string(const std::string&)> fn_;
};

}  // namespace luxnorm

#endif  // LUXNORM_NORMALIZER_HPP_
