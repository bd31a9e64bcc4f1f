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

// Experiment configuration. A JSON file supplies defaults, command-line
// flags override single keys, and validation names the offending key.
//
// Keys: seed, normalizer, dictionary, lexicon, original, gold, suite,
// output_dir, weights, max_edit_distance, ngram_n, top_k, match_bonus,
// gap_penalty, miscorrection_policy, threads.

#ifndef LUXNORM_CONFIG_HPP_
#define LUXNORM_CONFIG_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "luxnorm/alignment.hpp"
#include "luxnorm/json_util.hpp"
#include "luxnorm/metrics.hpp"
#include "luxnorm/normalizer.hpp"

namespace luxnorm {

inline constexpr std::uint64_t kDefaultSeed = 42;

struct RunConfig {
  std::uint64_t seed = kDefaultSeed;
  // pipeline | identity | gold | cmd:<shell command>
  std::string normalizer = "pipeline";
  std::optional<std::filesystem::path> dictionary;
  std::optional<std::filesystem::path> lexicon;
  // Noisy input sentences. When absent they are synthesized from gold with
  // the dictionary and seed.
  std::optional<std::filesystem::path> original;
  std::optional<std::filesystem::path> gold;
  std::optional<std::filesystem::path> suite;
  std::filesystem::path output_dir = "luxnorm-run";
  NormalizerConfig normalizer_config;
  ScoringScheme scheme;
  MiscorrectionPolicy policy = MiscorrectionPolicy::kFalseNegativeOnly;
  // Execution detail; results do not depend on it, so it stays out of the
  // snapshot.
  std::optional<std::size_t> threads;

  // Throws ConfigError on unknown keys or wrongly typed values.
  static RunConfig from_json(const Json& j);
  // Every result-relevant setting, in a fixed key order.
  Json snapshot() const;
  // Required keys for the chosen normalizer and inputs; referenced files
  // must exist.
  void validate() const;
};

// Parses a JSON object from a file. Throws IoError or ConfigError.
Json read_json_file(const std::filesystem::path& path);

// File values overlaid with `overrides` (typically built from CLI flags).
// Relative paths from the file resolve against its directory; override
// paths are taken as given.
RunConfig load_run_config(const std::optional<std::filesystem::path>& file,
                          const Json& overrides);

}  // namespace luxnorm

#endif  // LUXNORM_CONFIG_HPP_
