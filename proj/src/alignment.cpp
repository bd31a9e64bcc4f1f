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

#include "luxnorm/alignment.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>

#include "luxnorm/errors.hpp"
#include "luxnorm/unicode.hpp"

namespace luxnorm {
namespace {

// Pairwise similarity matrix between two token sequences.
class SimilarityTable {
 public:
  SimilarityTable(const std::vector<std::u32string>& a, const std::vector<std::u32string>& b)
      : cols_(b.size()), values_(a.size() * b.size()) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        const std::size_t longest = std::max(a[i].size(), b[j].size());
        values_[i * cols_ + j] =
            longest == 0 ? 1.0
                         : 1.0 - static_cast<double>(levenshtein(a[i], b[j])) /
                                     static_cast<double>(longest);
      }
    }
  }
  double operator()(std::size_t i, std::size_t j) const { return values_[i * cols_ + j]; }

 private:
  std::size_t cols_;
  std::vector<double> values_;
};

std::vector<std::u32string> code_points(std::span<const std::string> tokens) {
  std::vector<std::u32string> out;
  out.reserve(tokens.size());
  for (const std::string& t : tokens) out.push_back(unicode::to_utf32(t));
  return out;
}

// The seven 3-D moves in tie-break order: (do, dp, dg).
constexpr std::array<std::array<int, 3>, 7> kMoves = {{
    {1, 1, 1},
    {1, 1, 0},
    {1, 0, 1},
    {0, 1, 1},
    {1, 0, 0},
    {0, 1, 0},
    {0, 0, 1},
}};

}  // namespace

void ScoringScheme::validate() const {
  if (!std::isfinite(match_bonus) || !std::isfinite(gap_penalty)) {
    throw ConfigError("alignment scores must be finite");
  }
  if (!(gap_penalty < match_bonus)) {
    throw ConfigError("gap penalty must be smaller than the match bonus");
  }
}

std::size_t levenshtein(std::u32string_view a, std::u32string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diagonal = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = std::min({up + 1, row[j - 1] + 1, diagonal + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diagonal = up;
    }
  }
  return row[b.size()];
}

std::size_t levenshtein(std::string_view a, std::string_view b) {
  return levenshtein(unicode::to_utf32(a), unicode::to_utf32(b));
}

double token_similarity(std::string_view a, std::string_view b) {
  const std::u32string ua = unicode::to_utf32(a);
  const std::u32string ub = unicode::to_utf32(b);
  const std::size_t longest = std::max(ua.size(), ub.size());
  if (longest == 0) return 1.0;
  return 1.0 - static_cast<double>(levenshtein(ua, ub)) / static_cast<double>(longest);
}

PairwiseAlignment needleman_wunsch(std::span<const std::string> a,
                                   std::span<const std::string> b,
                                   const ScoringScheme& scheme) {
  scheme.validate();
  const std::size_t m = a.size();
  const std::size_t n = b.size();
  const SimilarityTable sim(code_points(a), code_points(b));

  enum : std::uint8_t { kDiag, kGapInA, kGapInB };
  const std::size_t width = n + 1;
  std::vector<double> score((m + 1) * width, 0.0);
  std::vector<std::uint8_t> move((m + 1) * width, kDiag);
  for (std::size_t j = 1; j <= n; ++j) {
    score[j] = score[j - 1] + scheme.gap_penalty;
    move[j] = kGapInA;
  }
  for (std::size_t i = 1; i <= m; ++i) {
    score[i * width] = score[(i - 1) * width] + scheme.gap_penalty;
    move[i * width] = kGapInB;
    for (std::size_t j = 1; j <= n; ++j) {
      double best = score[(i - 1) * width + j - 1] + scheme.match(sim(i - 1, j - 1));
      std::uint8_t choice = kDiag;
      const double gap_a = score[i * width + j - 1] + scheme.gap_penalty;
      if (gap_a > best) {
        best = gap_a;
        choice = kGapInA;
      }
      const double gap_b = score[(i - 1) * width + j] + scheme.gap_penalty;
      if (gap_b > best) {
        best = gap_b;
        choice = kGapInB;
      }
      score[i * width + j] = best;
      move[i * width + j] = choice;
    }
  }

  PairwiseAlignment out;
  out.score = score[m * width + n];
  std::size_t i = m, j = n;
  while (i > 0 || j > 0) {
    switch (move[i * width + j]) {
      case kDiag:
        out.columns.push_back({a[i - 1], b[j - 1]});
        --i;
        --j;
        break;
      case kGapInA:
        out.columns.push_back({std::nullopt, b[j - 1]});
        --j;
        break;
      default:
        out.columns.push_back({a[i - 1], std::nullopt});
        --i;
        break;
    }
  }
  std::reverse(out.columns.begin(), out.columns.end());
  return out;
}

double triple_column_score(const TripleColumn& column, const ScoringScheme& scheme) {
  auto pair = [&](const Cell& x, const Cell& y) {
    if (!x || !y) return scheme.gap_penalty;
    return scheme.match(token_similarity(*x, *y));
  };
  return pair(column.original, column.predicted) + pair(column.original, column.gold) +
         pair(column.predicted, column.gold);
}

AlignedTriple align_triple(std::span<const std::string> original,
                           std::span<const std::string> predicted,
                           std::span<const std::string> gold, const ScoringScheme& scheme) {
  scheme.validate();
  const auto o_cps = code_points(original);
  const auto p_cps = code_points(predicted);
  const auto g_cps = code_points(gold);
  const SimilarityTable op(o_cps, p_cps);
  const SimilarityTable og(o_cps, g_cps);
  const SimilarityTable pg(p_cps, g_cps);

  const std::size_t no = original.size(), np = predicted.size(), ng = gold.size();
  const std::size_t sp = ng + 1;
  const std::size_t so = (np + 1) * sp;
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) { return i * so + j * sp + k; };

  const double gap = scheme.gap_penalty;
  // Score of the column reached by `move` into cell (i, j, k).
  auto column_score = [&](const std::array<int, 3>& mv, std::size_t i, std::size_t j,
                          std::size_t k) {
    const bool has_o = mv[0], has_p = mv[1], has_g = mv[2];
    const double s_op = has_o && has_p ? scheme.match(op(i - 1, j - 1)) : gap;
    const double s_og = has_o && has_g ? scheme.match(og(i - 1, k - 1)) : gap;
    const double s_pg = has_p && has_g ? scheme.match(pg(j - 1, k - 1)) : gap;
    return s_op + s_og + s_pg;
  };

  constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  std::vector<double> score((no + 1) * so, kNegInf);
  std::vector<std::uint8_t> back((no + 1) * so, 0);
  score[0] = 0.0;
  for (std::size_t i = 0; i <= no; ++i) {
    for (std::size_t j = 0; j <= np; ++j) {
      for (std::size_t k = 0; k <= ng; ++k) {
        if (i == 0 && j == 0 && k == 0) continue;
        double best = kNegInf;
        std::uint8_t choice = 0;
        for (std::uint8_t m = 0; m < kMoves.size(); ++m) {
          const auto& mv = kMoves[m];
          if (static_cast<std::size_t>(mv[0]) > i || static_cast<std::size_t>(mv[1]) > j ||
              static_cast<std::size_t>(mv[2]) > k) {
            continue;
          }
          const double candidate =
              score[at(i - mv[0], j - mv[1], k - mv[2])] + column_score(mv, i, j, k);
          if (candidate > best) {
            best = candidate;
            choice = m;
          }
        }
        score[at(i, j, k)] = best;
        back[at(i, j, k)] = choice;
      }
    }
  }

  AlignedTriple out;
  out.score = score[at(no, np, ng)];
  std::size_t i = no, j = np, k = ng;
  while (i > 0 || j > 0 || k > 0) {
    const auto& mv = kMoves[back[at(i, j, k)]];
    TripleColumn column;
    if (mv[0]) column.original = original[i - 1];
    if (mv[1]) column.predicted = predicted[j - 1];
    if (mv[2]) column.gold = gold[k - 1];
    out.columns.push_back(std::move(column));
    i -= mv[0];
    j -= mv[1];
    k -= mv[2];
  }
  std::reverse(out.columns.begin(), out.columns.end());
  return out;
}

}  // namespace luxnorm
