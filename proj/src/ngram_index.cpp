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

#include "luxnorm/ngram_index.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "luxnorm/unicode.hpp"

namespace luxnorm {

NgramProfile ngram_profile(std::string_view word, int n) {
  if (n < 1) throw std::invalid_argument("n-gram size must be positive");
  const std::u32string padded = U" " + unicode::to_utf32(unicode::to_lower(word)) + U" ";
  NgramProfile profile;
  const auto size = static_cast<std::size_t>(n);
  if (padded.size() < size) {
    ++profile[padded];
    return profile;
  }
  for (std::size_t i = 0; i + size <= padded.size(); ++i) ++profile[padded.substr(i, size)];
  return profile;
}

NgramIndex::NgramIndex(const Lexicon& lexicon, int n) : lexicon_(&lexicon), n_(n) {
  if (n < 1) throw std::invalid_argument("n-gram size must be positive");
  const auto& entries = lexicon.entries();
  document_count_ = static_cast<double>(entries.size());

  std::vector<NgramProfile> profiles;
  profiles.reserve(entries.size());
  for (const auto& entry : entries) {
    profiles.push_back(ngram_profile(entry.word, n));
    for (const auto& [gram, count] : profiles.back()) ++document_frequency_[gram];
  }
  norms_.assign(entries.size(), 0.0);
  for (std::size_t id = 0; id < entries.size(); ++id) {
    double norm2 = 0.0;
    for (const auto& [gram, count] : profiles[id]) {
      const double w = static_cast<double>(count) * idf(gram);
      postings_[gram].emplace_back(id, w);
      norm2 += w * w;
    }
    norms_[id] = std::sqrt(norm2);
  }
}

double NgramIndex::idf(const std::u32string& ngram) const {
  std::size_t df = 0;
  if (auto it = document_frequency_.find(ngram); it != document_frequency_.end()) df = it->second;
  return std::log((1.0 + document_count_) / (1.0 + static_cast<double>(df))) + 1.0;
}

NgramIndex::Vector NgramIndex::weighted(std::string_view word) const {
  Vector v;
  for (const auto& [gram, count] : ngram_profile(word, n_)) {
    v.emplace_back(gram, static_cast<double>(count) * idf(gram));
  }
  return v;
}

double NgramIndex::cosine(std::string_view a, std::string_view b) const {
  const Vector va = weighted(a);
  const Vector vb = weighted(b);
  // Both vectors are sorted by n-gram (they come from std::map).
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (const auto& [g, w] : va) na += w * w;
  for (const auto& [g, w] : vb) nb += w * w;
  auto ia = va.begin();
  auto ib = vb.begin();
  while (ia != va.end() && ib != vb.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      dot += ia->second * ib->second;
      ++ia;
      ++ib;
    }
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  return std::clamp(dot / (std::sqrt(na) * std::sqrt(nb)), 0.0, 1.0);
}

std::vector<NgramIndex::Match> NgramIndex::nearest(std::string_view token,
                                                   std::size_t k) const {
  if (k == 0 || lexicon_ == nullptr) return {};
  const Vector query = weighted(token);
  double query_norm2 = 0.0;
  for (const auto& [g, w] : query) query_norm2 += w * w;
  if (query_norm2 == 0.0) return {};
  const double query_norm = std::sqrt(query_norm2);

  std::unordered_map<std::size_t, double> dots;
  for (const auto& [gram, w] : query) {
    auto it = postings_.find(gram);
    if (it == postings_.end()) continue;
    for (const auto& [id, weight] : it->second) dots[id] += w * weight;
  }

  const auto& entries = lexicon_->entries();
  std::vector<Match> matches;
  matches.reserve(dots.size());
  for (const auto& [id, dot] : dots) {
    const double sim = std::clamp(dot / (query_norm * norms_[id]), 0.0, 1.0);
    if (sim > 0.0) matches.push_back({entries[id].word, sim, entries[id].count});
  }
  auto better = [](const Match& a, const Match& b) {
    if (a.similarity != b.similarity) return a.similarity > b.similarity;
    if (a.frequency != b.frequency) return a.frequency > b.frequency;
    return a.word < b.word;
  };
  if (matches.size() > k) {
    std::partial_sort(matches.begin(), matches.begin() + static_cast<std::ptrdiff_t>(k),
                      matches.end(), better);
    matches.resize(k);
  } else {
    std::sort(matches.begin(), matches.end(), better);
  }
  return matches;
}

std::vector<Candidate> ngram_candidates(std::string_view token, const NgramIndex& index,
                                        std::size_t k) {
  std::vector<Candidate> out;
  for (auto& match : index.nearest(token, k)) {
    out.push_back({std::move(match.word), CandidateSource::kNgram, match.similarity});
  }
  return out;
}

}  // namespace luxnorm
