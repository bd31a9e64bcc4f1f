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

#include "luxnorm/lexicon.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "luxnorm/errors.hpp"
#include "luxnorm/text_io.hpp"
#include "luxnorm/unicode.hpp"

namespace luxnorm {
namespace {

bool capitalized(std::string_view word) {
  const auto casing = unicode::detect_casing(word);
  return casing == unicode::Casing::kTitle || casing == unicode::Casing::kUpper;
}

}  // namespace

Lexicon Lexicon::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open lexicon " + path.string());
  return parse(in, path.string());
}

Lexicon Lexicon::parse(std::istream& in, const std::string& source_name) {
  Lexicon lexicon;
  std::string line;
  std::size_t line_no = 0;
  while (read_line(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    const auto fields = split_tabs(line);
    if (fields.size() != 2 || fields[0].empty()) {
      throw ParseError(source_name, line_no, "expected `word<TAB>count`");
    }
    std::uint64_t count = 0;
    const std::string_view c = fields[1];
    auto [end, ec] = std::from_chars(c.data(), c.data() + c.size(), count);
    if (ec != std::errc() || end != c.data() + c.size() || count == 0) {
      throw ParseError(source_name, line_no,
                       "count must be a positive integer, got '" + std::string(c) + "'");
    }
    lexicon.add(unicode::nfc(fields[0]), count);
  }
  if (lexicon.empty()) throw ParseError(source_name, 0, "lexicon has no entries");
  return lexicon;
}

void Lexicon::add(std::string_view word, std::uint64_t count) {
  if (word.empty()) throw std::invalid_argument("empty lexicon word");
  if (count == 0) throw std::invalid_argument("lexicon count must be positive");
  auto it = index_.find(std::string(word));
  if (it != index_.end()) {
    entries_[it->second].count += count;
    max_count_ = std::max(max_count_, entries_[it->second].count);
    return;
  }
  Entry entry{std::string(word), unicode::to_utf32(word), count};
  const std::size_t length = entry.code_points.size();
  const std::size_t id = entries_.size();
  entries_.push_back(std::move(entry));
  index_.emplace(std::string(word), id);
  if (by_length_.size() <= length) by_length_.resize(length + 1);
  by_length_[length].push_back(id);
  max_count_ = std::max(max_count_, count);
}

bool Lexicon::contains(std::string_view word) const {
  return index_.find(std::string(word)) != index_.end();
}

bool Lexicon::knows(std::string_view word) const {
  if (contains(word)) return true;
  return capitalized(word) && contains(unicode::to_lower(word));
}

std::uint64_t Lexicon::frequency(std::string_view word) const {
  if (auto it = index_.find(std::string(word)); it != index_.end()) {
    return entries_[it->second].count;
  }
  if (capitalized(word)) {
    if (auto it = index_.find(unicode::to_lower(word)); it != index_.end()) {
      return entries_[it->second].count;
    }
  }
  return 0;
}

double Lexicon::normalized_frequency(std::string_view word) const {
  const std::uint64_t count = frequency(word);
  if (count == 0 || max_count_ == 0) return 0.0;
  return std::log1p(static_cast<double>(count)) / std::log1p(static_cast<double>(max_count_));
}

const std::vector<std::size_t>& Lexicon::with_length(std::size_t length) const {
  static const std::vector<std::size_t> kNone;
  if (length >= by_length_.size()) return kNone;
  return by_length_[length];
}

}  // namespace luxnorm
