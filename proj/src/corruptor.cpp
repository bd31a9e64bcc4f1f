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

#include "luxnorm/corruptor.hpp"

#include <algorithm>

#include "luxnorm/errors.hpp"
#include "luxnorm/json_util.hpp"
#include "luxnorm/parallel.hpp"
#include "luxnorm/tokenizer.hpp"
#include "luxnorm/unicode.hpp"

namespace luxnorm {
namespace {

constexpr std::size_t kBlockSize = 4096;

bool is_blank(std::string_view line) {
  return std::all_of(line.begin(), line.end(),
                     [](char c) { return c == ' ' || c == '\t' || c == '\r'; }) ||
         tokenize(line).empty();
}

// Replacement for one token, or the token itself.
std::string corrupt_token(const std::string& token, const VariantDictionary& dict,
                          std::uint64_t draw) {
  if (is_punctuation_token(token)) return token;
  const CliticSplit split = split_clitic(token);
  const std::string body = unicode::nfc(split.body);
  const auto resolved = dict.resolve(body);
  if (!resolved) return token;

  std::string variant = pick_variant(dict.variants(resolved->lemma), draw);
  if (resolved->case_folded) {
    variant = unicode::apply_casing(variant, unicode::detect_casing(body));
  }
  std::string replaced = split.prefix + variant;
  // Multi-token variants would break the 1:1 token correspondence.
  if (tokenize(replaced).size() != 1) return token;
  return replaced;
}

struct CorruptedSentence {
  SentencePair pair;
  std::size_t words = 0;
};

CorruptedSentence corrupt_counted(std::string_view sentence, const VariantDictionary& dict,
                                  RandomStream& rng) {
  CorruptedSentence out;
  const std::vector<std::string> tokens = tokenize(sentence);
  std::vector<std::string> noisy;
  noisy.reserve(tokens.size());
  for (const std::string& token : tokens) {
    const std::uint64_t draw = rng();
    noisy.push_back(corrupt_token(token, dict, draw));
    if (!is_punctuation_token(token)) ++out.words;
    if (noisy.back() != token) ++out.pair.changed_tokens;
  }
  out.pair.source = detokenize(noisy);
  out.pair.target = std::string(sentence);
  out.pair.token_count = tokens.size();
  return out;
}

}  // namespace

Rational CorpusStats::mean_changed_tokens() const {
  if (pair_count == 0) return Rational(0);
  return Rational(static_cast<std::int64_t>(changed_tokens),
                  static_cast<std::int64_t>(pair_count));
}

Rational CorpusStats::replacement_rate() const {
  if (word_count == 0) return Rational(0);
  return Rational(static_cast<std::int64_t>(changed_tokens),
                  static_cast<std::int64_t>(word_count));
}

void CorpusStats::add(const SentencePair& pair, std::size_t words) {
  ++pair_count;
  token_count += pair.token_count;
  word_count += words;
  changed_tokens += pair.changed_tokens;
}

void CorpusStats::merge(const CorpusStats& other) {
  pair_count += other.pair_count;
  token_count += other.token_count;
  word_count += other.word_count;
  changed_tokens += other.changed_tokens;
  blank_lines += other.blank_lines;
}

SentencePair corrupt_sentence(std::string_view sentence, const VariantDictionary& dict,
                              RandomStream& rng) {
  return corrupt_counted(sentence, dict, rng).pair;
}

CorpusStats build_parallel_corpus(std::span<const std::string> lines,
                                  const VariantDictionary& dict, std::uint64_t seed,
                                  const std::function<void(const SentencePair&)>& sink,
                                  std::size_t workers) {
  CorpusStats stats;
  std::vector<std::optional<CorruptedSentence>> block;
  for (std::size_t start = 0; start < lines.size(); start += kBlockSize) {
    const std::size_t n = std::min(kBlockSize, lines.size() - start);
    block.assign(n, std::nullopt);
    parallel_for(n, workers, [&](std::size_t k) {
      const std::size_t index = start + k;
      if (is_blank(lines[index])) return;
      RandomStream rng = derive_stream(seed, index);
      block[k] = corrupt_counted(lines[index], dict, rng);
    });
    for (const auto& item : block) {
      if (!item) {
        ++stats.blank_lines;
        continue;
      }
      stats.add(item->pair, item->words);
      if (sink) sink(item->pair);
    }
  }
  if (stats.pair_count == 0) throw Error("corpus contains no sentences");
  return stats;
}

ParallelCorpus build_parallel_corpus(std::span<const std::string> lines,
                                     const VariantDictionary& dict, std::uint64_t seed,
                                     std::size_t workers) {
  ParallelCorpus corpus;
  corpus.stats = build_parallel_corpus(
      lines, dict, seed, [&](const SentencePair& p) { corpus.pairs.push_back(p); }, workers);
  return corpus;
}

std::string to_jsonl(const SentencePair& pair) {
  Json j;
  j["source"] = pair.source;
  j["target"] = pair.target;
  j["changed"] = pair.changed_tokens;
  return j.dump(-1, ' ', false, Json::error_handler_t::replace);
}

std::string stats_to_json(const CorpusStats& stats) {
  Json j;
  j["pair_count"] = stats.pair_count;
  j["mean_changed_tokens"] = to_double(stats.mean_changed_tokens());
  j["replacement_rate"] = to_double(stats.replacement_rate());
  j["mean_changed_tokens_exact"] = to_string(stats.mean_changed_tokens());
  j["replacement_rate_exact"] = to_string(stats.replacement_rate());
  j["token_count"] = stats.token_count;
  j["word_count"] = stats.word_count;
  j["changed_tokens"] = stats.changed_tokens;
  j["blank_lines"] = stats.blank_lines;
  return j.dump(2);
}

}  // namespace luxnorm
