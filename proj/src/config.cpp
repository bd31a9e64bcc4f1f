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
#include "luxnorm/config.hpp"

#include <algorithm>
#include <array>

#include "luxnorm/errors.hpp"
#include "luxnorm/text_io.hpp"

namespace luxnorm {
namespace {

constexpr std::array<std::string_view, 16> kKeys = {
    "seed",        "normalizer", "dictionary",        "lexicon",
    "original",    "gold",       "suite",             "output_dir",
    "weights",     "max_edit_distance", "ngram_n",    "top_k",
    "match_bonus", "gap_penalty", "miscorrection_policy", "threads"};

template <typename T>
T get(const Json& j, const std::string& key) {
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    throw ConfigError("config key '" + key + "' has the wrong type");
  }
}

std::optional<std::filesystem::path> get_path(const Json& j, const std::string& key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  const auto value = get<std::string>(j, key);
  if (value.empty()) throw ConfigError("config key '" + key + "' is empty");
  return std::filesystem::path(value);
}

std::uint64_t get_count(const Json& j, const std::string& key) {
  const Json& v = j.at(key);
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer() && v.get<std::int64_t>() >= 0) {
    return static_cast<std::uint64_t>(v.get<std::int64_t>());
  }
  throw ConfigError("config key '" + key + "' must be a non-negative integer");
}

Json path_json(const std::optional<std::filesystem::path>& p) {
  return p ? Json(p->generic_string()) : Json(nullptr);
}

void require_file(const std::optional<std::filesystem::path>& p, const std::string& key) {
  if (!p) return;
  if (!std::filesystem::is_regular_file(*p)) {
    throw ConfigError("config key '" + key + "': no such file " + p->string());
  }
}

}  // namespace

RunConfig RunConfig::from_json(const Json& j) {
  if (!j.is_object()) throw ConfigError("configuration must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end()) {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  RunConfig c;
  if (j.contains("seed")) c.seed = get_count(j, "seed");
  if (j.contains("normalizer")) c.normalizer = get<std::string>(j, "normalizer");
  c.dictionary = get_path(j, "dictionary");
  c.lexicon = get_path(j, "lexicon");
  c.original = get_path(j, "original");
  c.gold = get_path(j, "gold");
  c.suite = get_path(j, "suite");
  if (auto dir = get_path(j, "output_dir")) c.output_dir = *dir;
  if (j.contains("weights")) {
    const Json& w = j.at("weights");
    if (w.is_string()) {
      c.normalizer_config.weights = ScoreWeights::parse(w.get<std::string>());
    } else {
      const auto values = get<std::vector<double>>(j, "weights");
      if (values.size() != 4) throw ConfigError("config key 'weights' needs 4 values v,e,n,f");
      c.normalizer_config.weights.variant = values[0];
      c.normalizer_config.weights.edit = values[1];
      c.normalizer_config.weights.ngram = values[2];
      c.normalizer_config.weights.frequency = values[3];
    }
  }
  if (j.contains("max_edit_distance")) {
    c.normalizer_config.max_edit_distance = static_cast<int>(get_count(j, "max_edit_distance"));
  }
  if (j.contains("ngram_n")) c.normalizer_config.ngram_n = static_cast<int>(get_count(j, "ngram_n"));
  if (j.contains("top_k")) c.normalizer_config.top_k = get_count(j, "top_k");
  if (j.contains("match_bonus")) c.scheme.match_bonus = get<double>(j, "match_bonus");
  if (j.contains("gap_penalty")) c.scheme.gap_penalty = get<double>(j, "gap_penalty");
  if (j.contains("miscorrection_policy")) {
    c.policy = parse_miscorrection_policy(get<std::string>(j, "miscorrection_policy"));
  }
  if (j.contains("threads") && !j.at("threads").is_null()) c.threads = get_count(j, "threads");
  return c;
}

Json RunConfig::snapshot() const {
  Json j;
  j["seed"] = seed;
  j["normalizer"] = normalizer;
  j["dictionary"] = path_json(dictionary);
  j["lexicon"] = path_json(lexicon);
  j["original"] = path_json(original);
  j["gold"] = path_json(gold);
  j["suite"] = path_json(suite);
  const ScoreWeights& w = normalizer_config.weights;
  j["weights"] = {w.variant, w.edit, w.ngram, w.frequency};
  j["max_edit_distance"] = normalizer_config.max_edit_distance;
  j["ngram_n"] = normalizer_config.ngram_n;
  j["top_k"] = normalizer_config.top_k;
  j["match_bonus"] = scheme.match_bonus;
  j["gap_penalty"] = scheme.gap_penalty;
  j["miscorrection_policy"] = std::string(to_string(policy));
  return j;
}

void RunConfig::validate() const {
  if (normalizer != "pipeline" && normalizer != "identity" && normalizer != "gold" &&
      !(normalizer.rfind("cmd:", 0) == 0 && normalizer.size() > 4)) {
    throw ConfigError("config key 'normalizer' must be pipeline, identity, gold or cmd:<command>");
  }
  if (!gold && !suite) throw ConfigError("missing required key 'gold' or 'suite': nothing to run");
  if (normalizer == "pipeline") {
    if (!dictionary) throw ConfigError("missing required key 'dictionary' for the pipeline normalizer");
    if (!lexicon) throw ConfigError("missing required key 'lexicon' for the pipeline normalizer");
  }
  if (gold && !original && !dictionary) {
    throw ConfigError("missing required key 'original' (or 'dictionary' to synthesize it)");
  }
  require_file(dictionary, "dictionary");
  require_file(lexicon, "lexicon");
  require_file(original, "original");
  require_file(gold, "gold");
  require_file(suite, "suite");
  normalizer_config.validate();
  scheme.validate();
  if (threads && *threads == 0) throw ConfigError("config key 'threads' must be positive");
}

Json read_json_file(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ConfigError(path.string() + ": invalid JSON: " + e.what());
  }
}

RunConfig load_run_config(const std::optional<std::filesystem::path>& file,
                          const Json& overrides) {
  Json merged = file ? read_json_file(*file) : Json::object();
  if (!merged.is_object()) throw ConfigError("configuration must be a JSON object");
  if (file) {
    // Relative paths in a config file are relative to the file itself.
    const std::filesystem::path base = file->parent_path();
    for (const char* key : {"dictionary", "lexicon", "original", "gold", "suite", "output_dir"}) {
      if (!merged.contains(key) || !merged[key].is_string()) continue;
      const std::filesystem::path value = merged[key].get<std::string>();
      if (!value.empty() && value.is_relative()) merged[key] = (base / value).generic_string();
    }
  }
  for (const auto& [key, value] : overrides.items()) merged[key] = value;
  return RunConfig::from_json(merged);
}

}  // namespace luxnorm
