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

#include "luxnorm/tokenizer.hpp"

#include <algorithm>

#include "luxnorm/unicode.hpp"

namespace luxnorm {
namespace {

constexpr std::u32string_view kPunctuation = U".,!?;:„“\"()";
constexpr std::u32string_view kOpening = U"„(";
constexpr std::u32string_view kClitics = U"dlmtzDLMTZ";

bool is_punct(char32_t c) {
  return kPunctuation.find(c) != std::u32string_view::npos;
}

bool is_apostrophe(char32_t c) { return c == U'\'' || c == U'’'; }

// Length in code points of a clitic prefix at the start of `word`, or 0.
std::size_t clitic_length(std::u32string_view word) {
  if (word.size() >= 2 && kClitics.find(word[0]) != std::u32string_view::npos &&
      is_apostrophe(word[1])) {
    return 2;
  }
  return 0;
}

void emit_chunk(std::u32string_view chunk, std::vector<std::string>& out) {
  std::size_t begin = 0;
  std::size_t end = chunk.size();
  while (begin < end && is_punct(chunk[begin])) {
    out.push_back(unicode::to_utf8(chunk.substr(begin, 1)));
    ++begin;
  }
  std::size_t tail = end;
  while (tail > begin && is_punct(chunk[tail - 1])) --tail;
  if (tail > begin) out.push_back(unicode::to_utf8(chunk.substr(begin, tail - begin)));
  for (std::size_t i = tail; i < end; ++i) {
    out.push_back(unicode::to_utf8(chunk.substr(i, 1)));
  }
}

}  // namespace

std::vector<std::string> tokenize(std::string_view sentence) {
  const std::u32string text = unicode::to_utf32(sentence);
  std::vector<std::u32string> chunks;
  std::u32string current;
  for (char32_t c : text) {
    if (unicode::is_whitespace(c)) {
      if (!current.empty()) chunks.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) chunks.push_back(std::move(current));

  std::vector<std::string> tokens;
  for (std::size_t i = 0; i < chunks.size(); ++i) {
    std::u32string chunk = chunks[i];
    // "d' Bischt" -> "d'Bischt"
    while (chunk.size() == 2 && clitic_length(chunk) == 2 && i + 1 < chunks.size()) {
      chunk += chunks[++i];
    }
    emit_chunk(chunk, tokens);
  }
  return tokens;
}

std::string detokenize(const std::vector<std::string>& tokens) {
  std::string out;
  bool attach_next = true;  // no leading space
  bool quote_open = false;
  for (const std::string& token : tokens) {
    const std::u32string cps = unicode::to_utf32(token);
    const bool single_punct = cps.size() == 1 && is_punct(cps[0]);
    bool opening = single_punct && kOpening.find(cps[0]) != std::u32string_view::npos;
    bool closing = single_punct && !opening;
    if (single_punct && cps[0] == U'"') {
      opening = !quote_open;
      closing = quote_open;
      quote_open = !quote_open;
    }
    if (!(attach_next || closing)) out.push_back(' ');
    out += token;
    attach_next = opening;
  }
  return out;
}

std::string canonical_form(std::string_view sentence) {
  return detokenize(tokenize(unicode::nfc(sentence)));
}

bool is_punctuation_token(std::string_view token) {
  const std::u32string cps = unicode::to_utf32(token);
  return !cps.empty() && std::all_of(cps.begin(), cps.end(), is_punct);
}

CliticSplit split_clitic(std::string_view token) {
  const std::u32string cps = unicode::to_utf32(token);
  const std::size_t n = clitic_length(cps);
  if (n == 0 || cps.size() == n) return {"", std::string(token)};
  return {unicode::to_utf8(cps.substr(0, n)), unicode::to_utf8(cps.substr(n))};
}

}  // namespace luxnorm
