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

#ifndef LUXNORM_LEXICON_HPP_
#define LUXNORM_LEXICON_HPP_

#include <cstdint>
#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace luxnorm {

// Known-correct word forms with corpus frequencies. TSV `word<TAB>count`.
class Lexicon {
 public:
  struct Entry {
    std::string word;
    std::u32string code_points;
    std::uint64_t count = 0;
  };

  Lexicon() = default;

  static Lexicon load(const std::filesystem::path& path);
  static Lexicon parse(std::istream& in, const std::string& source_name);

  // Duplicate words accumulate their counts.
  void add(std::string_view word, std::uint64_t count);

  bool contains(std::string_view word) const;

  // contains(word), or word is capitalized (sentence-initial, all caps) and
  // its lowercase form is present.
  bool knows(std::string_view word) const;

  // 0 for unknown words; falls back to the lowercase form like knows().
  std::uint64_t frequency(std::string_view word) const;

  // log(1 + count) / log(1 + max count), in [0, 1].
  double normalized_frequency(std::string_view word) const;

  std::uint64_t max_frequency() const { return max_count_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Insertion order.
  const std::vector<Entry>& entries() const { return entries_; }

  // Indices of entries whose length in code points is `length`.
  const std::vector<std::size_t>& with_length(std::size_t length) const;

 private:
  std::vector<Entry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::vector<std::size_t>> by_length_;
  std::uint64_t max_count_ = 0;
};

}  // namespace luxnorm

#endif  // LUXNORM_LEXICON_HPP_
