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

// Correction candidate generators.

#ifndef LUXNORM_CANDIDATES_HPP_
#define LUXNORM_CANDIDATES_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "luxnorm/lexicon.hpp"

namespace luxnorm {

enum class CandidateSource {
  kIdentity,      // the token itself is a lexicon word
  kVariantIndex,  // reverse lookup in the variant dictionary
  kEdit1,
  kEdit2,
  kNgram,
};

const char* to_string(CandidateSource source);

struct Candidate {
  std::string form;
  CandidateSource source = CandidateSource::kIdentity;
  double score = 0.0;
};

// Letters an edit may introduce: a-z, ä ë é ö ü â ê î ô û à è ù and their
// uppercase forms.
bool in_edit_alphabet(char32_t c);
std::u32string_view edit_alphabet();

// Number of single-character edits (deletion, insertion, substitution,
// adjacent transposition) needed to turn `from` into `to`, where inserted and
// substituted characters must come from the edit alphabet. Returns
// `limit + 1` as soon as the distance is known to exceed `limit`.
std::size_t edit_distance(std::u32string_view from, std::u32string_view to,
                          std::size_t limit);

// 1 / (1 + distance).
double edit_proximity(std::size_t distance);

// Lexicon words within `max_distance` (1 or 2) edits of `token`, nearest
// first, then in byte order. Candidate::score is edit_proximity().
// Throws std::invalid_argument for an empty token or a distance outside 1..2.
std::vector<Candidate> edit_candidates(std::string_view token, const Lexicon& lexicon,
                                       int max_distance);

}  // namespace luxnorm

#endif  // LUXNORM_CANDIDATES_HPP_
