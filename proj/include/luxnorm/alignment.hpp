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

// Word-level global alignment.
//
// Two tokens in the same column score
//   match_bonus * (2 * similarity - 1),   similarity = 1 - lev(a, b) / max(|a|, |b|)
// so identical tokens earn +match_bonus and completely different ones
// -match_bonus. A token facing a gap scores gap_penalty.
//
// The three-way alignment maximizes the sum of the three pairwise column
// scores (original/predicted, original/gold, predicted/gold); a pair in
// which either side is a gap contributes gap_penalty.

#ifndef LUXNORM_ALIGNMENT_HPP_
#define LUXNORM_ALIGNMENT_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace luxnorm {

// nullopt is the gap; it never compares equal to a token.
using Cell = std::optional<std::string>;

struct ScoringScheme {
  double match_bonus = 1.0;
  double gap_penalty = -0.5;

  // Throws ConfigError unless both are finite and gap_penalty < match_bonus.
  void validate() const;
  double match(double similarity) const { return match_bonus * (2.0 * similarity - 1.0); }
};

// Plain Levenshtein distance over Unicode scalar values (no transpositions).
std::size_t levenshtein(std::u32string_view a, std::u32string_view b);
std::size_t levenshtein(std::string_view a, std::string_view b);

// 1 - levenshtein / max length; 1 for two empty strings.
double token_similarity(std::string_view a, std::string_view b);

struct PairColumn {
  Cell a;
  Cell b;
};

struct PairwiseAlignment {
  std::vector<PairColumn> columns;
  double score = 0.0;
};

// Ties prefer a match column, then a gap in `a`, then a gap in `b`.
PairwiseAlignment needleman_wunsch(std::span<const std::string> a,
                                   std::span<const std::string> b,
                                   const ScoringScheme& scheme = {});

struct TripleColumn {
  Cell original;
  Cell predicted;
  Cell gold;
};

struct AlignedTriple {
  std::vector<TripleColumn> columns;
  double score = 0.0;
};

// Score of one column under the sum-of-pairs rule. At least one cell must be
// a token.
double triple_column_score(const TripleColumn& column, const ScoringScheme& scheme);

// Full three-dimensional dynamic program, O(|o| |p| |g|). Ties prefer the
// all-token move, then the two-sequence moves (o+p, o+g, p+g), then the single
// moves (o, p, g).
AlignedTriple align_triple(std::span<const std::string> original,
                           std::span<const std::string> predicted,
                           std::span<const std::string> gold,
                           const ScoringScheme& scheme = {});

}  // namespace luxnorm

#endif  // LUXNORM_ALIGNMENT_HPP_
