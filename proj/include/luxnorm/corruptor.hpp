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

// Synthesis of noisy/standard sentence pairs from a standard-orthography
// corpus and a variant dictionary.
//
// Each word of a sentence is looked up in the dictionary (exact form first,
// then lowercase with the casing pattern carried over to the variant; an
// elided article such as "d'" is stripped for the lookup and put back
// afterwards) and, when found, replaced by a variant drawn in proportion to
// its observed frequency. Unknown words and punctuation are kept.

#ifndef LUXNORM_CORRUPTOR_HPP_
#define LUXNORM_CORRUPTOR_HPP_

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "luxnorm/variant_dictionary.hpp"

namespace luxnorm {

struct SentencePair {
  std::string source;  // noisy
  std::string target;  // standard (the input sentence)
  std::size_t changed_tokens = 0;
  std::size_t token_count = 0;
};

struct CorpusStats {
  std::size_t pair_count = 0;
  std::size_t token_count = 0;
  std::size_t word_count = 0;  // non-punctuation tokens
  std::size_t changed_tokens = 0;
  std::size_t blank_lines = 0;

  Rational mean_changed_tokens() const;
  // Changed tokens over word tokens.
  Rational replacement_rate() const;

  void add(const SentencePair& pair, std::size_t words);
  void merge(const CorpusStats& other);
};

// One random value is consumed per token position, whether or not the token
// is replaced, so the draw for position i never depends on earlier tokens.
SentencePair corrupt_sentence(std::string_view sentence, const VariantDictionary& dict,
                              RandomStream& rng);

struct ParallelCorpus {
  std::vector<SentencePair> pairs;
  CorpusStats stats;
};

// One pair per non-blank line. Line i (0-based, blank lines included) is
// corrupted with derive_stream(seed, i), so the output depends only on the
// corpus, the dictionary and the seed. `sink` receives pairs in input order.
// Throws Error if the corpus has no non-blank line.
CorpusStats build_parallel_corpus(std::span<const std::string> lines,
                                  const VariantDictionary& dict, std::uint64_t seed,
                                  const std::function<void(const SentencePair&)>& sink,
                                  std::size_t workers = 1);

ParallelCorpus build_parallel_corpus(std::span<const std::string> lines,
                                     const VariantDictionary& dict, std::uint64_t seed,
                                     std::size_t workers = 1);

// {"source":...,"target":...,"changed":n}
std::string to_jsonl(const SentencePair& pair);

// pair_count, mean_changed_tokens, replacement_rate plus raw counts.
std::string stats_to_json(const CorpusStats& stats);

}  // namespace luxnorm

#endif  // LUXNORM_CORRUPTOR_HPP_
