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
#include "luxnorm/experiment.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <string>

#include "luxnorm/errors.hpp"
#include "luxnorm/text_io.hpp"

namespace luxnorm {
namespace {

namespace fs = std::filesystem;

const fs::path kEval = fs::path(LUXNORM_SOURCE_DIR) / "data/fixtures/eval";

class ExperimentTest : public ::testing::Test {
 protected:
  void SetUp() override {
    root_ = fs::temp_directory_path() /
            ("luxnorm_experiment_" + std::string(::testing::UnitTest::GetInstance()
                                                     ->current_test_info()
                                                     ->name()));
    fs::remove_all(root_);
  }
  void TearDown() override { fs::remove_all(root_); }

  RunConfig config(const std::string& normalizer, const std::string& out) const {
    RunConfig c = load_run_config(kEval / "config.json", Json::object());
    c.normalizer = normalizer;
    c.output_dir = root_ / out;
    return c;
  }

  fs::path root_;
};

TEST_F(ExperimentTest, IdentityScoresZero) {
  const ExperimentReport r = run_experiment(config("identity", "id"), {true});
  const Json& m = r.json.at("evaluation").at("metrics");
  EXPECT_EQ(m.at("exact").at("err"), "0");
  EXPECT_EQ(m.at("tp"), 0);
  EXPECT_EQ(m.at("fp"), 0);
  EXPECT_GT(m.at("fn").get<int>(), 0);
  EXPECT_TRUE(r.json.at("timestamp").is_null());
  EXPECT_EQ(r.json.at("config").at("seed"), 42);
  EXPECT_EQ(r.json.at("inputs").at("gold").at("sha256").get<std::string>().size(), 64u);
  for (const char* f : {"original.txt", "predictions.txt", "report.json", "report.txt"}) {
    EXPECT_TRUE(fs::exists(root_ / "id" / f)) << f;
  }
  EXPECT_EQ(read_lines(root_ / "id" / "original.txt"), read_lines(root_ / "id" / "predictions.txt"));
}

TEST_F(ExperimentTest, GoldScoresOneEverywhere) {
  const ExperimentReport r = run_experiment(config("gold", "gold"), {true});
  const Json& m = r.json.at("evaluation").at("metrics");
  EXPECT_EQ(m.at("exact").at("err"), "1");
  EXPECT_EQ(m.at("exact").at("cer"), "0");
  EXPECT_EQ(m.at("exact").at("accuracy"), "1");
  for (const Json& cell : r.json.at("checklist").at("cells")) {
    EXPECT_EQ(cell.at("successes"), cell.at("units")) << cell.dump();
  }
}

TEST_F(ExperimentTest, PipelineIsDeterministicAcrossWorkers) {
  RunConfig one = config("pipeline", "one");
  one.threads = 1;
  RunConfig eight = config("pipeline", "eight");
  eight.threads = 8;
  const ExperimentReport a = run_experiment(one, {true});
  const ExperimentReport b = run_experiment(eight, {true});
  EXPECT_EQ(canonical_report(a.json), canonical_report(b.json));
  EXPECT_EQ(a.text, b.text);
  EXPECT_EQ(read_file(root_ / "one" / "predictions.txt"),
            read_file(root_ / "eight" / "predictions.txt"));
  EXPECT_GT(a.json.at("evaluation").at("metrics").at("err").get<double>(), 0.0);
}

TEST_F(ExperimentTest, TimestampOnlyOutsideCanonicalMode) {
  const ExperimentReport r = run_experiment(config("identity", "ts"));
  EXPECT_TRUE(r.json.at("timestamp").is_string());
  Json copy = r.json;
  copy["timestamp"] = nullptr;
  EXPECT_EQ(canonical_report(r.json), copy.dump(2) + "\n");
}

TEST_F(ExperimentTest, FailingStageKeepsEarlierArtifacts) {
  RunConfig c = config("cmd:exit 4", "broken");
  try {
    run_experiment(c, {true});
    FAIL() << "expected a stage failure";
  } catch (const StageError& e) {
    EXPECT_EQ(e.stage(), "normalize");
    EXPECT_EQ(e.exit_code(), ExitCode::kExternal);
  }
  EXPECT_TRUE(fs::exists(root_ / "broken" / "original.txt"));
  EXPECT_FALSE(fs::exists(root_ / "broken" / "report.json"));
}

TEST_F(ExperimentTest, InvalidConfigFailsBeforeAnyWork) {
  RunConfig c = config("identity", "invalid");
  c.gold = kEval / "missing.txt";
  EXPECT_THROW(run_experiment(c), ConfigError);
  EXPECT_FALSE(fs::exists(root_ / "invalid"));
}

TEST(MakeNormalizer, KnownKinds) {
  RunConfig c;
  c.normalizer = "identity";
  EXPECT_EQ(make_normalizer(c)->name(), "identity");
  c.normalizer = "cmd:cat";
  EXPECT_EQ(make_normalizer(c)->normalize("Moien"), "Moien");
  c.normalizer = "gold";
  EXPECT_THROW(make_normalizer(c), ConfigError);
  c.normalizer = "pipeline";
  EXPECT_THROW(make_normalizer(c), ConfigError);
}

}  // namespace
}  // namespace luxnorm
