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

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "luxnorm/candidates.hpp"
#include "luxnorm/unicode.hpp"

namespace luxnorm {
namespace {

constexpr std::u32string_view kAlphabet =
    U"abcdefghijklmnopqrstuvwxyzäëéöüâêîôûàèù"
    U"ABCDEFGHIJKLMNOPQRSTUVWXYZÄËÉÖÜÂÊÎÔÛÀÈÙ";

constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max() / 4;

}  // namespace

const char* to_string(CandidateSource source) {
  switch (source) {
    case CandidateSource::kIdentity:
      return "identity";
    case CandidateSource::kVariantIndex:
      return "variant_index";
    case CandidateSource::kEdit1:
      return "edit1";
    case CandidateSource::kEdit2:
      return "edit2";
    case CandidateSource::kNgram:
      return "ngram";
  }
  return "unknown";
}

bool in_edit_alphabet(char32_t c) { return kAlphabet.find(c) != std::u32string_view::npos; }

std::u32string_view edit_alphabet() { return kAlphabet; }

double edit_proximity(std::size_t distance) {
  return 1.0 / (1.0 + static_cast<double>(distance));
}

// Unrestricted Damerau-Levenshtein (Lowrance-Wagner), with infinite cost for
// any edit that would introduce a character outside the alphabet.
std::size_t edit_distance(std::u32string_view from, std::u32string_view to,
                          std::size_t limit) {
  const std::size_t m = from.size();
  const std::size_t n = to.size();
  if ((m > n ? m - n : n - m) > limit) return limit + 1;

  auto insert_cost = [&](std::size_t j) -> std::size_t {  // 1-based into `to`
    return in_edit_alphabet(to[j - 1]) ? 1 : kInf;
  };

  const std::size_t width = n + 1;
  std::vector<std::size_t> d((m + 1) * width, kInf);
  auto at = [&](std::size_t i, std::size_t j) -> std::size_t& { return d[i * width + j]; };

  at(0, 0) = 0;
  for (std::size_t i = 1; i <= m; ++i) at(i, 0) = i;
  for (std::size_t j = 1; j <= n; ++j) {
    at(0, j) = std::min(kInf, at(0, j - 1) + insert_cost(j));
  }

  std::unordered_map<char32_t, std::size_t> last_row;  // char -> last i with from[i-1]==c
  for (std::size_t i = 1; i <= m; ++i) {
    std::size_t last_match_col = 0;
    for (std::size_t j = 1; j <= n; ++j) {
      const auto found = last_row.find(to[j - 1]);
      const std::size_t i1 = found == last_row.end() ? 0 : found->second;
      const std::size_t j1 = last_match_col;

      std::size_t substitution;
      if (from[i - 1] == to[j - 1]) {
        substitution = at(i - 1, j - 1);
        last_match_col = j;
      } else {
        substitution = at(i - 1, j - 1) + insert_cost(j);
      }
      std::size_t best = std::min({substitution, at(i, j - 1) + insert_cost(j), at(i - 1, j) + 1});

      if (i1 > 0 && j1 > 0) {
        // from[i1-1..i-1] -> to[j1-1..j-1]: delete what lies between the
        // swapped pair on the `from` side, insert what lies between on the
        // `to` side.
        std::size_t cost = at(i1 - 1, j1 - 1) + (i - i1 - 1) + 1;
        for (std::size_t k = j1 + 1; k < j && cost < kInf; ++k) cost += insert_cost(k);
        best = std::min(best, cost);
      }
      at(i, j) = std::min(best, kInf);
    }
    last_row[from[i - 1]] = i;
  }
  const std::size_t result = at(m, n);
  return result > limit ? limit + 1 : result;
}

std::vector<Candidate> edit_candidates(std::string_view token, const Lexicon& lexicon,
                                       int max_distance) {
  if (token.empty()) throw std::invalid_argument("edit_candidates: empty token");
  if (max_distance < 1 || max_distance > 2) {
    throw std::invalid_argument("edit_candidates: max_distance must be 1 or 2");
  }
  const std::u32string query = unicode::to_utf32(token);
  const auto limit = static_cast<std::size_t>(max_distance);

  struct Hit {
    std::size_t distance;
    const std::string* word;
  };
  std::vector<Hit> hits;
  const std::size_t lo = query.size() > limit ? query.size() - limit : 0;
  for (std::size_t length = lo; length <= query.size() + limit; ++length) {
    for (std::size_t id : lexicon.with_length(length)) {
      const Lexicon::Entry& entry = lexicon.entries()[id];
      const std::size_t d = edit_distance(query, entry.code_points, limit);
      if (d <= limit) hits.push_back({d, &entry.word});
    }
  }
  std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) {
    if (a.distance != b.distance) return a.distance < b.distance;
    return *a.word < *b.word;
  });

  std::vector<Candidate> out;
  out.reserve(hits.size());
  for (const Hit& hit : hits) {
    CandidateSource source = hit.distance == 0   ? CandidateSource::kIdentity
                             : hit.distance == 1 ? CandidateSource::kEdit1
                                                 : CandidateSource::kEdit2;
    out.push_back({*hit.word, source, edit_proximity(hit.distance)});
  }
  return out;
}

}  // namespace luxnorm
