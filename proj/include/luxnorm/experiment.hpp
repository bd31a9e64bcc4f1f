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


// Full experiment: normalize an evaluation set, score it, run the test suite
// and write a self-describing report.
//
// Artifacts in the output directory:
//   original.txt      only when the noisy side was synthesized from gold
//   predictions.txt   normalizer output, one line per input sentence
//   report.json       config snapshot, input checksums, metrics, suite results
//   report.txt        the same results as aligned tables
// Artifacts of completed stages are kept when a later stage fails.

#ifndef LUXNORM_EXPERIMENT_HPP_
#define LUXNORM_EXPERIMENT_HPP_

#include <memory>
#include <string>

#include "luxnorm/config.hpp"
#include "luxnorm/errors.hpp"
#include "luxnorm/json_util.hpp"
#include "luxnorm/normalizer.hpp"

namespace luxnorm {

// A failure inside one stage; keeps the exit code of the underlying error.
class StageError : public Error {
 public:
  StageError(std::string stage, const std::string& what, ExitCode code)
      : Error("stage '" + stage + "' failed: " + what), stage_(std::move(stage)), code_(code) {}
  const std::string& stage() const { return stage_; }
  ExitCode exit_code() const override { return code_; }

 private:
  std::string stage_;
  ExitCode code_;
};

// pipeline, identity or cmd:<command>. "gold" has no meaning outside a run
// and is rejected here.
std::unique_ptr<SentenceNormalizer> make_normalizer(const RunConfig& config);

struct ExperimentReport {
  Json json;
  std::string text;
};

struct ExperimentOptions {
  // Leaves the timestamp null so that reports compare byte for byte.
  bool canonical = false;
};

// Validates the config, runs every stage and writes the artifacts.
ExperimentReport run_experiment(const RunConfig& config, const ExperimentOptions& options = {});

// Serialized report with the timestamp removed, for comparisons.
std::string canonical_report(const Json& report);

std::string tool_version();

}  // namespace luxnorm

#endif  // LUXNORM_EXPERIMENT_HPP_
