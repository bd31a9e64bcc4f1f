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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <string>

#include "luxnorm/errors.hpp"

namespace luxnorm {
namespace {

namespace fs = std::filesystem;

const fs::path kEval = fs::path(LUXNORM_SOURCE_DIR) / "data/fixtures/eval";

TEST(RunConfig, Defaults) {
  const RunConfig c = RunConfig::from_json(Json::object());
  EXPECT_EQ(c.seed, 42u);
  EXPECT_EQ(c.normalizer, "pipeline");
  EXPECT_FALSE(c.threads);
  EXPECT_EQ(c.snapshot().at("seed"), 42);
  EXPECT_EQ(c.snapshot().at("miscorrection_policy"), "fn");
  EXPECT_FALSE(c.snapshot().contains("threads"));
}

TEST(RunConfig, UnknownKeyIsNamed) {
  try {
    RunConfig::from_json(Json{{"sede", 1}});
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("'sede'"), std::string::npos);
  }
}

TEST(RunConfig, WrongTypesAreRejected) {
  EXPECT_THROW(RunConfig::from_json(Json{{"seed", "x"}}), ConfigError);
  EXPECT_THROW(RunConfig::from_json(Json{{"seed", -1}}), ConfigError);
  EXPECT_THROW(RunConfig::from_json(Json{{"gold", ""}}), ConfigError);
  EXPECT_THROW(RunConfig::from_json(Json{{"weights", {1, 2}}}), ConfigError);
  EXPECT_THROW(RunConfig::from_json(Json{{"miscorrection_policy", "both"}}), ConfigError);
  EXPECT_THROW(RunConfig::from_json(Json::array()), ConfigError);
}

TEST(RunConfig, WeightsAsStringOrArray) {
  EXPECT_EQ(RunConfig::from_json(Json{{"weights", "1,0,0,0"}}).normalizer_config.weights.variant,
            1.0);
  EXPECT_EQ(RunConfig::from_json(Json{{"weights", {0, 0, 1, 0}}}).normalizer_config.weights.ngram,
            1.0);
}

TEST(RunConfig, ValidationNamesTheMissingKey) {
  auto message = [](const Json& j) {
    try {
      RunConfig::from_json(j).validate();
    } catch (const ConfigError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  EXPECT_NE(message(Json::object()).find("'gold'"), std::string::npos);
  EXPECT_NE(message(Json{{"gold", (kEval / "gold.txt").string()}}).find("'dictionary'"),
            std::string::npos);
  EXPECT_NE(message(Json{{"normalizer", "identity"}, {"gold", "/nonexistent/gold.txt"},
                         {"original", "/nonexistent/o.txt"}})
                .find("'original'"),
            std::string::npos);
  EXPECT_NE(message(Json{{"normalizer", "magic"}}).find("'normalizer'"), std::string::npos);
  EXPECT_NE(message(Json{{"normalizer", "identity"}, {"suite", "x"}, {"threads", 0}}).find("suite"),
            std::string::npos);
  EXPECT_EQ(message(Json{{"normalizer", "identity"},
                         {"gold", (kEval / "gold.txt").string()},
                         {"original", (kEval / "gold.txt").string()}}),
            "");
}

TEST(LoadRunConfig, FilePathsResolveAgainstTheFile) {
  const RunConfig c = load_run_config(kEval / "config.json", Json::object());
  EXPECT_EQ(*c.gold, (kEval / "gold.txt").generic_string());
  EXPECT_EQ(c.output_dir, (kEval / "run").generic_string());
  EXPECT_NO_THROW(c.validate());
}

TEST(LoadRunConfig, OverridesWinAndStayAsGiven) {
  const RunConfig c = load_run_config(
      kEval / "config.json", Json{{"seed", 7}, {"normalizer", "identity"}, {"output_dir", "out"}});
  EXPECT_EQ(c.seed, 7u);
  EXPECT_EQ(c.normalizer, "identity");
  EXPECT_EQ(c.output_dir, "out");
  EXPECT_EQ(*c.lexicon, (kEval / "lexicon.tsv").generic_string());
}

TEST(LoadRunConfig, BrokenFiles) {
  const fs::path bad = fs::temp_directory_path() / "luxnorm_bad_config.json";
  std::ofstream(bad) << "{ \"seed\": ";
  EXPECT_THROW(load_run_config(bad, Json::object()), ConfigError);
  fs::remove(bad);
  EXPECT_THROW(load_run_config(bad, Json::object()), IoError);
  EXPECT_NO_THROW(load_run_config(std::nullopt, Json{{"seed", 1}}));
}

}  // namespace
}  // namespace luxnorm
