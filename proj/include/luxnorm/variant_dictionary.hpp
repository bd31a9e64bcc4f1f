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

// Lemma -> attested spelling variants, with observed frequencies.
//
// On disk the dictionary is UTF-8 TSV, one `lemma<TAB>variant<TAB>count` per
// line; lines starting with '#' and blank lines are skipped. Repeated
// (lemma, variant) pairs have their counts summed. A lemma may list itself as
// a variant: that entry carries the probability of the correct spelling.

#ifndef LUXNORM_VARIANT_DICTIONARY_HPP_
#define LUXNORM_VARIANT_DICTIONARY_HPP_

#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <boost/rational.hpp>

namespace luxnorm {

using Rational = boost::rational<std::int64_t>;

// The random stream used for every sampling decision. mt19937_64 output is
// fully specified by the standard, so sampling is reproducible across
// platforms as long as we never go through std::*_distribution.
using RandomStream = std::mt19937_64;

// Independent stream for item `index` of a run seeded with `seed`.
RandomStream derive_stream(std::uint64_t seed, std::uint64_t index);

struct VariantEntry {
  std::string variant;
  std::uint64_t count = 0;

  bool operator==(const VariantEntry&) const = default;
};

class VariantDictionary {
 public:
  VariantDictionary() = default;

  static VariantDictionary load(const std::filesystem::path& path);
  static VariantDictionary parse(std::istream& in, const std::string& source_name);

  // Adds `count` observations of `variant` for `lemma`. Throws
  // std::invalid_argument on an empty or tab/newline-bearing field or a zero
  // count.
  void add(std::string_view lemma, std::string_view variant, std::uint64_t count);

  bool contains(std::string_view lemma) const;

  // Throws LookupError if the lemma is absent.
  std::span<const VariantEntry> variants(std::string_view lemma) const;

  // Exact match first, then a lowercase match. Returns the stored key.
  struct Resolution {
    std::string lemma;
    bool case_folded = false;
  };
  std::optional<Resolution> resolve(std::string_view word) const;

  // count(variant) / total count of the lemma. Zero if the variant is not
  // listed. Throws LookupError for an unknown lemma.
  Rational probability(std::string_view lemma, std::string_view variant) const;

  std::uint64_t total_count(std::string_view lemma) const;

  std::size_t lemma_count() const { return entries_.size(); }
  std::size_t variant_count() const;
  std::uint64_t observation_count() const;
  bool empty() const { return entries_.empty(); }

  // Lemmas in byte order.
  const std::map<std::string, std::vector<VariantEntry>, std::less<>>& entries() const {
    return entries_;
  }

 private:
  std::map<std::string, std::vector<VariantEntry>, std::less<>> entries_;
  std::unordered_map<std::string, std::string> folded_;  // lower(lemma) -> lemma
};

// Draws one variant of `lemma` with probability proportional to its count.
// Consumes exactly one value from `rng`. Throws LookupError if the lemma is
// absent.
const std::string& sample_variant(const VariantDictionary& dict, std::string_view lemma,
                                  RandomStream& rng);

// Maps a raw 64-bit draw onto the lemma's variants. `sample_variant` is this
// applied to rng().
const std::string& pick_variant(std::span<const VariantEntry> variants, std::uint64_t draw);

struct LemmaCount {
  std::string lemma;
  std::uint64_t count = 0;

  bool operator==(const LemmaCount&) const = default;
};

// variant -> every lemma listing it, highest count first (ties: lemma order).
class ReverseIndex {
 public:
  ReverseIndex() = default;
  explicit ReverseIndex(const VariantDictionary& dict);

  // Empty span when the variant is unknown.
  std::span<const LemmaCount> lookup(std::string_view variant) const;
  // Case-insensitive lookup; counts of variants that collide after
  // lowercasing are merged per lemma.
  std::span<const LemmaCount> lookup_folded(std::string_view variant) const;

  std::size_t size() const { return exact_.size(); }
  const std::unordered_map<std::string, std::vector<LemmaCount>>& entries() const {
    return exact_;
  }

 private:
  std::unordered_map<std::string, std::vector<LemmaCount>> exact_;
  std::unordered_map<std::string, std::vector<LemmaCount>> folded_;
};

inline ReverseIndex build_reverse_index(const VariantDictionary& dict) {
  return ReverseIndex(dict);
}

struct DictionaryStats {
  std::size_t lemmas = 0;
  std::size_t variants = 0;
  std::uint64_t observations = 0;
  std::size_t identity_variants = 0;
  std::size_t ambiguous_variants = 0;  // variants listed under 2+ lemmas
};

DictionaryStats dictionary_stats(const VariantDictionary& dict);

}  // namespace luxnorm

#endif  // LUXNORM_VARIANT_DICTIONARY_HPP_
