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

// Character n-gram tf-idf index over a lexicon.
//
// A word is lowercased and padded with one space on each side, then cut into
// overlapping n-grams of code points (" bischt " -> " bi", "bis", ..., "ht ").
// Term weight is the raw n-gram count; idf is the smoothed
//   idf(g) = ln((1 + N) / (1 + df(g))) + 1
// over the N lexicon words, so n-grams never seen in the lexicon still get a
// finite weight. Similarity is the cosine of the weighted vectors.

#ifndef LUXNORM_NGRAM_INDEX_HPP_
#define LUXNORM_NGRAM_INDEX_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "luxnorm/candidates.hpp"
#include "luxnorm/lexicon.hpp"

namespace luxnorm {

using NgramProfile = std::map<std::u32string, std::size_t>;

// Raw n-gram counts of a word, as described above.
NgramProfile ngram_profile(std::string_view word, int n);

class NgramIndex {
 public:
  NgramIndex() = default;
  // Keeps a pointer to `lexicon`, which must outlive the index.
  NgramIndex(const Lexicon& lexicon, int n = 3);

  int n() const { return n_; }
  double idf(const std::u32string& ngram) const;

  // tf-idf cosine similarity in [0, 1].
  double cosine(std::string_view a, std::string_view b) const;

  struct Match {
    std::string word;
    double similarity = 0.0;
    std::uint64_t frequency = 0;
  };

  // Lexicon words with positive similarity, best first; ties by frequency
  // (descending), then byte order.
  std::vector<Match> nearest(std::string_view token, std::size_t k) const;

 private:
  using Vector = std::vector<std::pair<std::u32string, double>>;
  Vector weighted(std::string_view word) const;

  const Lexicon* lexicon_ = nullptr;
  int n_ = 3;
  double document_count_ = 0.0;
  std::unordered_map<std::u32string, std::size_t> document_frequency_;
  // n-gram -> (lexicon entry id, tf-idf weight)
  std::unordered_map<std::u32string, std::vector<std::pair<std::size_t, double>>> postings_;
  std::vector<double> norms_;
};

// Top-k lexicon words by cosine; Candidate::score is the similarity.
std::vector<Candidate> ngram_candidates(std::string_view token, const NgramIndex& index,
                                        std::size_t k);

}  // namespace luxnorm

#endif  // LUXNORM_NGRAM_INDEX_HPP_
