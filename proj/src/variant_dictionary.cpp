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

#include "luxnorm/variant_dictionary.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <stdexcept>

#include "luxnorm/errors.hpp"
#include "luxnorm/text_io.hpp"
#include "luxnorm/unicode.hpp"

namespace luxnorm {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// High 64 bits of a 64x64-bit product.
std::uint64_t mul_high(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t a_lo = a & 0xFFFFFFFFULL, a_hi = a >> 32;
  const std::uint64_t b_lo = b & 0xFFFFFFFFULL, b_hi = b >> 32;
  const std::uint64_t lo_lo = a_lo * b_lo;
  const std::uint64_t hi_lo = a_hi * b_lo;
  const std::uint64_t lo_hi = a_lo * b_hi;
  const std::uint64_t hi_hi = a_hi * b_hi;
  const std::uint64_t cross = (lo_lo >> 32) + (hi_lo & 0xFFFFFFFFULL) + lo_hi;
  return hi_hi + (hi_lo >> 32) + (cross >> 32);
}

bool valid_field(std::string_view s) {
  return !s.empty() && s.find_first_of("\t\n\r") == std::string_view::npos;
}

void sort_lemma_counts(std::vector<LemmaCount>& v) {
  std::sort(v.begin(), v.end(), [](const LemmaCount& a, const LemmaCount& b) {
    if (a.count != b.count) return a.count > b.count;
    return a.lemma < b.lemma;
  });
}

}  // namespace

RandomStream derive_stream(std::uint64_t seed, std::uint64_t index) {
  return RandomStream(splitmix64(splitmix64(seed) ^ index));
}

VariantDictionary VariantDictionary::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open dictionary " + path.string());
  return parse(in, path.string());
}

VariantDictionary VariantDictionary::parse(std::istream& in, const std::string& source_name) {
  VariantDictionary dict;
  std::string line;
  std::size_t line_no = 0;
  while (read_line(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    const std::vector<std::string_view> fields = split_tabs(line);
    if (fields.size() != 3) {
      throw ParseError(source_name, line_no,
                       "expected 3 tab-separated fields (lemma, variant, count), got " +
                           std::to_string(fields.size()));
    }
    if (fields[0].empty() || fields[1].empty()) {
      throw ParseError(source_name, line_no, "empty lemma or variant");
    }
    std::uint64_t count = 0;
    const std::string_view c = fields[2];
    auto [end, ec] = std::from_chars(c.data(), c.data() + c.size(), count);
    if (ec != std::errc() || end != c.data() + c.size() || count == 0) {
      throw ParseError(source_name, line_no,
                       "count must be a positive integer, got '" + std::string(c) + "'");
    }
    dict.add(unicode::nfc(fields[0]), unicode::nfc(fields[1]), count);
  }
  if (dict.empty()) throw ParseError(source_name, 0, "dictionary has no entries");
  return dict;
}

void VariantDictionary::add(std::string_view lemma, std::string_view variant,
                            std::uint64_t count) {
  if (!valid_field(lemma)) throw std::invalid_argument("invalid lemma");
  if (!valid_field(variant)) throw std::invalid_argument("invalid variant");
  if (count == 0) throw std::invalid_argument("variant count must be positive");

  auto it = entries_.find(lemma);
  if (it == entries_.end()) {
    it = entries_.emplace(std::string(lemma), std::vector<VariantEntry>{}).first;
    const std::string folded = unicode::to_lower(lemma);
    auto [slot, inserted] = folded_.emplace(folded, it->first);
    if (!inserted && it->first < slot->second) slot->second = it->first;
  }
  auto& list = it->second;
  auto existing = std::find_if(list.begin(), list.end(),
                               [&](const VariantEntry& e) { return e.variant == variant; });
  if (existing != list.end()) {
    existing->count += count;
  } else {
    list.push_back({std::string(variant), count});
  }
}

bool VariantDictionary::contains(std::string_view lemma) const {
  return entries_.find(lemma) != entries_.end();
}

std::span<const VariantEntry> VariantDictionary::variants(std::string_view lemma) const {
  auto it = entries_.find(lemma);
  if (it == entries_.end()) {
    throw LookupError("lemma not in dictionary: " + std::string(lemma));
  }
  return it->second;
}

std::optional<VariantDictionary::Resolution> VariantDictionary::resolve(
    std::string_view word) const {
  if (contains(word)) return Resolution{std::string(word), false};
  auto it = folded_.find(unicode::to_lower(word));
  if (it == folded_.end()) return std::nullopt;
  return Resolution{it->second, true};
}

std::uint64_t VariantDictionary::total_count(std::string_view lemma) const {
  std::uint64_t total = 0;
  for (const VariantEntry& e : variants(lemma)) total += e.count;
  return total;
}

Rational VariantDictionary::probability(std::string_view lemma,
                                        std::string_view variant) const {
  const auto list = variants(lemma);
  std::uint64_t total = 0;
  std::uint64_t hit = 0;
  for (const VariantEntry& e : list) {
    total += e.count;
    if (e.variant == variant) hit = e.count;
  }
  return Rational(static_cast<std::int64_t>(hit), static_cast<std::int64_t>(total));
}

std::size_t VariantDictionary::variant_count() const {
  std::size_t n = 0;
  for (const auto& [lemma, list] : entries_) n += list.size();
  return n;
}

std::uint64_t VariantDictionary::observation_count() const {
  std::uint64_t n = 0;
  for (const auto& [lemma, list] : entries_) {
    for (const VariantEntry& e : list) n += e.count;
  }
  return n;
}

const std::string& pick_variant(std::span<const VariantEntry> variants, std::uint64_t draw) {
  if (variants.empty()) throw std::invalid_argument("no variants to pick from");
  std::uint64_t total = 0;
  for (const VariantEntry& e : variants) total += e.count;
  // Multiply-shift maps the draw onto [0, total); the bias is at most
  // total / 2^64.
  const std::uint64_t target = mul_high(draw, total);
  std::uint64_t cumulative = 0;
  for (const VariantEntry& e : variants) {
    cumulative += e.count;
    if (target < cumulative) return e.variant;
  }
  return variants.back().variant;
}

const std::string& sample_variant(const VariantDictionary& dict, std::string_view lemma,
                                  RandomStream& rng) {
  const auto list = dict.variants(lemma);
  return pick_variant(list, rng());
}

ReverseIndex::ReverseIndex(const VariantDictionary& dict) {
  std::unordered_map<std::string, std::map<std::string, std::uint64_t>> folded;
  for (const auto& [lemma, list] : dict.entries()) {
    for (const VariantEntry& e : list) {
      exact_[e.variant].push_back({lemma, e.count});
      folded[unicode::to_lower(e.variant)][lemma] += e.count;
    }
  }
  for (auto& [variant, list] : exact_) sort_lemma_counts(list);
  for (auto& [variant, by_lemma] : folded) {
    auto& list = folded_[variant];
    for (const auto& [lemma, count] : by_lemma) list.push_back({lemma, count});
    sort_lemma_counts(list);
  }
}

std::span<const LemmaCount> ReverseIndex::lookup(std::string_view variant) const {
  auto it = exact_.find(std::string(variant));
  if (it == exact_.end()) return {};
  return it->second;
}

std::span<const LemmaCount> ReverseIndex::lookup_folded(std::string_view variant) const {
  auto it = folded_.find(unicode::to_lower(variant));
  if (it == folded_.end()) return {};
  return it->second;
}

DictionaryStats dictionary_stats(const VariantDictionary& dict) {
  DictionaryStats stats;
  stats.lemmas = dict.lemma_count();
  stats.variants = dict.variant_count();
  stats.observations = dict.observation_count();
  for (const auto& [lemma, list] : dict.entries()) {
    for (const VariantEntry& e : list) {
      if (e.variant == lemma) ++stats.identity_variants;
    }
  }
  const ReverseIndex index(dict);
  for (const auto& [variant, lemmas] : index.entries()) {
    if (lemmas.size() > 1) ++stats.ambiguous_variants;
  }
  return stats;
}

}  // namespace luxnorm
