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
// Slow, obviously-correct reference implementations used as test oracles.
// Nothing here shares code with the library.

#ifndef LUXNORM_TESTS_ORACLES_HPP_
#define LUXNORM_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "luxnorm/unicode.hpp"

namespace luxnorm::oracle {

// Levenshtein distance straight from the recursive definition, memoized.
inline std::size_t levenshtein(const std::u32string& a, const std::u32string& b) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> memo;
  std::function<std::size_t(std::size_t, std::size_t)> d = [&](std::size_t i, std::size_t j) {
    if (i == 0) return j;
    if (j == 0) return i;
    const auto key = std::make_pair(i, j);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const std::size_t v = std::min({d(i - 1, j) + 1, d(i, j - 1) + 1,
                                    d(i - 1, j - 1) + (a[i - 1] == b[j - 1] ? 0 : 1)});
    memo[key] = v;
    return v;
  };
  return d(a.size(), b.size());
}

inline std::size_t levenshtein(const std::string& a, const std::string& b) {
  return levenshtein(unicode::to_utf32(a), unicode::to_utf32(b));
}

// Pair score as documented for the aligner; `nullptr` is a gap.
inline double pair_score(const std::string* a, const std::string* b, double bonus, double gap) {
  if (a == nullptr || b == nullptr) return gap;
  const std::u32string x = unicode::to_utf32(*a);
  const std::u32string y = unicode::to_utf32(*b);
  const std::size_t longest = std::max(x.size(), y.size());
  const double sim =
      longest == 0 ? 1.0 : 1.0 - static_cast<double>(levenshtein(x, y)) / static_cast<double>(longest);
  return bonus * (2.0 * sim - 1.0);
}

// Best pairwise alignment score by walking every alignment path.
inline double best_pair_score(const std::vector<std::string>& a, const std::vector<std::string>& b,
                              double bonus, double gap) {
  double best = -1e300;
  std::function<void(std::size_t, std::size_t, double)> walk = [&](std::size_t i, std::size_t j,
                                                                   double acc) {
    if (i == a.size() && j == b.size()) {
      best = std::max(best, acc);
      return;
    }
    if (i < a.size() && j < b.size()) walk(i + 1, j + 1, acc + pair_score(&a[i], &b[j], bonus, gap));
    if (i < a.size()) walk(i + 1, j, acc + gap);
    if (j < b.size()) walk(i, j + 1, acc + gap);
  };
  walk(0, 0, 0.0);
  return best;
}

// Three-way alignment over a small token alphabet. Sequences are indices
// into `tokens`; column scores are tabulated once (index tokens.size() is the
// gap) so that exhaustive walks stay affordable.
class TripleOracle {
 public:
  static constexpr std::size_t kMaxTokens = 7;

  TripleOracle(std::vector<std::string> tokens, double bonus, double gap)
      : tokens_(std::move(tokens)) {
    const std::size_t n = tokens_.size();
    auto cell = [&](std::size_t t) { return t == n ? nullptr : &tokens_[t]; };
    for (std::size_t a = 0; a <= n; ++a) {
      for (std::size_t b = 0; b <= n; ++b) {
        for (std::size_t c = 0; c <= n; ++c) {
          column_[a][b][c] = pair_score(cell(a), cell(b), bonus, gap) +
                             pair_score(cell(a), cell(c), bonus, gap) +
                             pair_score(cell(b), cell(c), bonus, gap);
        }
      }
    }
  }

  const std::vector<std::string>& tokens() const { return tokens_; }

  std::vector<std::string> spell(const std::vector<int>& seq) const {
    std::vector<std::string> out;
    for (int t : seq) out.push_back(tokens_[static_cast<std::size_t>(t)]);
    return out;
  }

  // Maximum over every alignment path, each one walked explicitly.
  double enumerate(const std::vector<int>& o, const std::vector<int>& p,
                   const std::vector<int>& g) const {
    const Walk w{&o, &p, &g};
    double best = -1e300;
    walk(w, 0, 0, 0, 0.0, best);
    return best;
  }

  // The same maximum by exhaustive recursion over all move sequences, with
  // the best completion of each (i, j, k) suffix remembered.
  double recurse(const std::vector<int>& o, const std::vector<int>& p,
                 const std::vector<int>& g) const {
    // Reused across calls; a fresh stamp invalidates every entry at once.
    thread_local Memo memo;
    memo.w = {&o, &p, &g};
    ++memo.stamp;
    return best_suffix(memo, 0, 0, 0);
  }

 private:
  static constexpr std::size_t kMaxLength = 8;

  struct Walk {
    const std::vector<int>* o;
    const std::vector<int>* p;
    const std::vector<int>* g;
  };
  struct Memo {
    Walk w{};
    unsigned stamp = 0;
    double value[kMaxLength][kMaxLength][kMaxLength] = {};
    unsigned seen[kMaxLength][kMaxLength][kMaxLength] = {};
  };

  // Moves available at (i, j, k) as a mask: bit 2 = o, bit 1 = p, bit 0 = g.
  static int available(const Walk& w, std::size_t i, std::size_t j, std::size_t k) {
    return (i < w.o->size() ? 4 : 0) | (j < w.p->size() ? 2 : 0) | (k < w.g->size() ? 1 : 0);
  }

  double column(const Walk& w, int mask, std::size_t i, std::size_t j, std::size_t k) const {
    const std::size_t gap = tokens_.size();
    return column_[mask & 4 ? static_cast<std::size_t>((*w.o)[i]) : gap]
                  [mask & 2 ? static_cast<std::size_t>((*w.p)[j]) : gap]
                  [mask & 1 ? static_cast<std::size_t>((*w.g)[k]) : gap];
  }

  void walk(const Walk& w, std::size_t i, std::size_t j, std::size_t k, double acc,
            double& best) const {
    const int avail = available(w, i, j, k);
    if (avail == 0) {
      if (acc > best) best = acc;
      return;
    }
    for (int mask = 1; mask < 8; ++mask) {
      if (mask & ~avail) continue;
      walk(w, i + (mask >> 2 & 1), j + (mask >> 1 & 1), k + (mask & 1),
           acc + column(w, mask, i, j, k), best);
    }
  }

  double best_suffix(Memo& m, std::size_t i, std::size_t j, std::size_t k) const {
    const int avail = available(m.w, i, j, k);
    if (avail == 0) return 0.0;
    if (m.seen[i][j][k] == m.stamp) return m.value[i][j][k];
    double v = -1e300;
    for (int mask = 1; mask < 8; ++mask) {
      if (mask & ~avail) continue;
      v = std::max(v, column(m.w, mask, i, j, k) +
                          best_suffix(m, i + (mask >> 2 & 1), j + (mask >> 1 & 1), k + (mask & 1)));
    }
    m.seen[i][j][k] = m.stamp;
    m.value[i][j][k] = v;
    return v;
  }

  std::vector<std::string> tokens_;
  double column_[kMaxTokens + 1][kMaxTokens + 1][kMaxTokens + 1] = {};
};

// Every sequence over `alphabet` symbols with length <= max_length, shortest
// first.
inline std::vector<std::vector<int>> all_sequences(int alphabet, std::size_t max_length) {
  std::vector<std::vector<int>> out{{}};
  for (std::size_t begin = 0, len = 1; len <= max_length; ++len) {
    const std::size_t end = out.size();
    for (std::size_t s = begin; s < end; ++s) {
      if (out[s].size() != len - 1) continue;
      for (int t = 0; t < alphabet; ++t) {
        auto next = out[s];
        next.push_back(t);
        out.push_back(std::move(next));
      }
    }
    begin = end;
  }
  return out;
}

}  // namespace luxnorm::oracle

#endif  // LUXNORM_TESTS_ORACLES_HPP_
