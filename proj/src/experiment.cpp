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

#include <chrono>
#include <ctime>
#include <filesystem>
#include <optional>
#include <vector>

#include "luxnorm/checklist.hpp"
#include "luxnorm/checksum.hpp"
#include "luxnorm/corruptor.hpp"
#include "luxnorm/evaluation.hpp"
#include "luxnorm/external_normalizer.hpp"
#include "luxnorm/parallel.hpp"
#include "luxnorm/text_io.hpp"

namespace luxnorm {
namespace {

namespace fs = std::filesystem;

// Runs `fn`, tagging any failure with the stage name.
template <typename Fn>
auto stage(const std::string& name, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const StageError&) {
    throw;
  } catch (const Error& e) {
    throw StageError(name, e.what(), e.exit_code());
  } catch (const std::exception& e) {
    throw StageError(name, e.what(), ExitCode::kInternal);
  }
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Json file_entry(const fs::path& path) {
  return {{"path", path.generic_string()}, {"sha256", sha256_file(path)}};
}

}  // namespace

std::string tool_version() { return LUXNORM_VERSION; }

std::unique_ptr<SentenceNormalizer> make_normalizer(const RunConfig& config) {
  if (config.normalizer == "identity") return std::make_unique<IdentityNormalizer>();
  if (config.normalizer.rfind("cmd:", 0) == 0 && config.normalizer.size() > 4) {
    return std::make_unique<ExternalNormalizer>(config.normalizer.substr(4));
  }
  if (config.normalizer == "pipeline") {
    if (!config.dictionary || !config.lexicon) {
      throw ConfigError("the pipeline normalizer needs a dictionary and a lexicon");
    }
    auto resources = NormalizerResources::load(*config.dictionary, *config.lexicon,
                                               config.normalizer_config.ngram_n);
    return std::make_unique<PipelineNormalizer>(std::move(resources), config.normalizer_config);
  }
  throw ConfigError("unknown normalizer '" + config.normalizer + "'");
}

ExperimentReport run_experiment(const RunConfig& config, const ExperimentOptions& options) {
  config.validate();
  const std::size_t workers = worker_count(config.threads);
  const fs::path& out_dir = config.output_dir;

  Json inputs = Json::object();
  Json artifacts = Json::object();
  std::vector<std::string> gold;
  std::vector<std::string> original;
  std::optional<TestSuite> suite;

  stage("load", [&] {
    fs::create_directories(out_dir);
    const std::pair<const char*, const std::optional<fs::path>*> files[] = {
        {"dictionary", &config.dictionary}, {"lexicon", &config.lexicon},
        {"original", &config.original},     {"gold", &config.gold},
        {"suite", &config.suite}};
    for (const auto& [key, path] : files) {
      if (*path) inputs[key] = file_entry(**path);
    }
    if (config.gold) gold = read_lines(*config.gold);
    if (config.original) original = read_lines(*config.original);
    if (config.suite) suite = load_suite(*config.suite);
  });

  if (config.gold && !config.original) {
    stage("synthesize", [&] {
      const VariantDictionary dict = VariantDictionary::load(*config.dictionary);
      ParallelCorpus corpus = build_parallel_corpus(gold, dict, config.seed, workers);
      original.clear();
      for (SentencePair& pair : corpus.pairs) original.push_back(std::move(pair.source));
      write_lines(out_dir / "original.txt", original);
      artifacts["original.txt"] = sha256_file(out_dir / "original.txt");
    });
  }

  const bool gold_oracle = config.normalizer == "gold";
  std::unique_ptr<SentenceNormalizer> normalizer;
  std::vector<std::string> predictions;
  if (config.gold) {
    stage("normalize", [&] {
      if (original.size() != gold.size()) {
        throw InputError("original has " + std::to_string(original.size()) +
                         " lines, gold has " + std::to_string(gold.size()));
      }
      if (gold_oracle) {
        predictions = gold;
      } else {
        normalizer = make_normalizer(config);
        predictions = normalizer->normalize_batch(original, workers);
      }
      write_lines(out_dir / "predictions.txt", predictions);
      artifacts["predictions.txt"] = sha256_file(out_dir / "predictions.txt");
    });
  }

  Json evaluation = nullptr;
  std::string metrics_text;
  if (config.gold) {
    stage("evaluate", [&] {
      const EvaluationOptions eval_options{config.scheme, config.policy};
      const EvaluationResult result = evaluate(original, predictions, gold, eval_options, workers);
      evaluation = evaluation_to_json(result, eval_options, false);
      metrics_text = metrics_table(result.metrics);
    });
  }

  Json checklist = nullptr;
  std::string checklist_text;
  if (suite) {
    stage("checklist", [&] {
      std::unique_ptr<SentenceNormalizer> suite_normalizer;
      if (gold_oracle) {
        suite_normalizer = make_gold_normalizer(*suite);
      } else if (!normalizer) {
        normalizer = make_normalizer(config);
      }
      const SentenceNormalizer& n = suite_normalizer ? *suite_normalizer : *normalizer;
      const SuiteReport report = run_suite(n, *suite, workers);
      checklist = suite_report_to_json(report, &*suite);
      checklist_text = render_report(report, ReportFormat::kTable);
    });
  }

  ExperimentReport report;
  report.json["tool"] = "luxnorm";
  report.json["version"] = tool_version();
  report.json["timestamp"] = options.canonical ? Json(nullptr) : Json(utc_timestamp());
  report.json["config"] = config.snapshot();
  report.json["inputs"] = std::move(inputs);
  report.json["artifacts"] = std::move(artifacts);
  report.json["evaluation"] = std::move(evaluation);
  report.json["checklist"] = std::move(checklist);

  std::string& text = report.text;
  text = "luxnorm " + tool_version() + "\nnormalizer: " + config.normalizer +
         "\nseed: " + std::to_string(config.seed) + "\n";
  if (config.gold) {
    text += "\nEvaluation (" + std::to_string(gold.size()) + " sentences)\n" + metrics_text;
  }
  if (suite) {
    text += "\nTest suite (" + std::to_string(suite->units.size()) + " units)\n" + checklist_text;
  }

  stage("report", [&] {
    write_file(out_dir / "report.json", report.json.dump(2) + "\n");
    write_file(out_dir / "report.txt", report.text);
  });
  return report;
}

std::string canonical_report(const Json& report) {
  Json copy = report;
  if (copy.contains("timestamp")) copy["timestamp"] = nullptr;
  return copy.dump(2) + "\n";
}

}  // namespace luxnorm
