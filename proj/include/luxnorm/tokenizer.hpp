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

// Whitespace tokenizer shared by corruption, normalization and evaluation.
//
// A sentence is split on Unicode whitespace. Punctuation from the set
//   . , ! ? ; : „ “ " ( )
// at either edge of a whitespace chunk is detached, one token per character.
// Elided articles (d' l' m' t' z', either apostrophe) stay glued to the word
// they precede: "d'Bischt" is a single token, and a free-standing "d'" is
// merged with the next chunk.

#ifndef LUXNORM_TOKENIZER_HPP_
#define LUXNORM_TOKENIZER_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace luxnorm {

std::vector<std::string> tokenize(std::string_view sentence);

// Joins tokens with single spaces, re-attaching punctuation to its neighbour.
// detokenize(tokenize(s)) is the canonical form of s.
std::string detokenize(const std::vector<std::string>& tokens);

// Canonical form: NFC, single spaces, punctuation attached.
std::string canonical_form(std::string_view sentence);

bool is_punctuation_token(std::string_view token);

// "d'Bischt" -> {"d'", "Bischt"}; tokens without a clitic get an empty prefix.
struct CliticSplit {
  std::string prefix;
  std::string body;
};
CliticSplit split_clitic(std::string_view token);

}  // namespace luxnorm

#endif  // LUXNORM_TOKENIZER_HPP_
