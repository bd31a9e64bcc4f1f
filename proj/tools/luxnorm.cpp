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

// luxnorm: corpus synthesis, normalization and evaluation from the shell.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "luxnorm/alignment.hpp"
#include "luxnorm/checklist.hpp"
#include "luxnorm/config.hpp"
#include "luxnorm/corruptor.hpp"
#include "luxnorm/errors.hpp"
#include "luxnorm/evaluation.hpp"
#include "luxnorm/experiment.hpp"
#include "luxnorm/external_normalizer.hpp"
#include "luxnorm/parallel.hpp"
#include "luxnorm/text_io.hpp"
#include "luxnorm/variant_dictionary.hpp"

namespace {

using namespace luxnorm;

struct Common {
  std::optional<std::size_t> threads;
  std::size_t workers() const { return worker_count(threads); }
};

struct NormalizerFlags {
  std::string dict;
  std::string lexicon;
  std::string weights;
  int ngram_n = 3;
  std::size_t top_k = 10;
  int max_edit = 2;

  void add_to(CLI::App* cmd, bool required) {
    auto* d = cmd->add_option("--dict", dict, "Variant dictionary TSV (lemma, variant, count)");
    auto* l = cmd->add_option("--lexicon", lexicon, "Lexicon TSV (word, count)");
    if (required) {
      d->required();
      l->required();
    }
    d->check(CLI::ExistingFile);
    l->check(CLI::ExistingFile);
    cmd->add_option("--weights", weights, "Score weights v,e,n,f (variant, edit, n-gram, frequency)");
    cmd->add_option("--ngram-n", ngram_n, "Character n-gram size")->capture_default_str();
    cmd->add_option("--topk", top_k, "N-gram neighbours per token")->capture_default_str();
    cmd->add_option("--max-edit", max_edit, "Maximum edit distance (1 or 2)")->capture_default_str();
  }

  NormalizerConfig config() const {
    NormalizerConfig c;
    if (!weights.empty()) c.weights = ScoreWeights::parse(weights);
    c.ngram_n = ngram_n;
    c.top_k = top_k;
    c.max_edit_distance = max_edit;
    c.validate();
    return c;
  }

  std::unique_ptr<SentenceNormalizer> pipeline() const {
    if (dict.empty()) throw ConfigError("--dict is required for the pipeline normalizer");
    if (lexicon.empty()) throw ConfigError("--lexicon is required for the pipeline normalizer");
    const NormalizerConfig c = config();
    return std::make_unique<PipelineNormalizer>(NormalizerResources::load(dict, lexicon, c.ngram_n),
                                                c);
  }
};

struct ScoringFlags {
  ScoringScheme scheme;
  std::string policy = "fn";

  void add_to(CLI::App* cmd) {
    cmd->add_option("--match-bonus", scheme.match_bonus, "Alignment score of identical tokens")
        ->capture_default_str();
    cmd->add_option("--gap-penalty", scheme.gap_penalty, "Alignment score of a token against a gap")
        ->capture_default_str();
    cmd->add_option("--miscorrection", policy, "Count miscorrections as fn or fn+fp")
        ->check(CLI::IsMember({"fn", "fn+fp"}))
        ->capture_default_str();
  }

  EvaluationOptions options() const {
    return {scheme, parse_miscorrection_policy(policy)};
  }
};

// --- dict validate ---------------------------------------------------------

void dict_validate(const std::string& path) {
  const VariantDictionary dict = VariantDictionary::load(path);
  const DictionaryStats s = dictionary_stats(dict);
  std::cout << "lemmas\t" << s.lemmas << "\nvariants\t" << s.variants << "\nobservations\t"
            << s.observations << "\nidentity_variants\t" << s.identity_variants
            << "\nambiguous_variants\t" << s.ambiguous_variants << "\n";
}

// --- synth -------------------------------------------------------------------

struct SynthFlags {
  std::string dict, corpus, out, stats;
  std::uint64_t seed = kDefaultSeed;
};

void synth(const SynthFlags& f, const Common& common) {
  const VariantDictionary dict = VariantDictionary::load(f.dict);
  const std::vector<std::string> lines = read_lines(f.corpus);
  std::ofstream out(f.out, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + f.out);
  const CorpusStats stats = build_parallel_corpus(
      lines, dict, f.seed, [&](const SentencePair& pair) { out << to_jsonl(pair) << '\n'; },
      common.workers());
  out.close();
  if (!out) throw IoError("error writing " + f.out);
  if (!f.stats.empty()) write_file(f.stats, stats_to_json(stats));
  std::cerr << "synth: " << stats.pair_count << " pairs, " << stats.changed_tokens
            << " changed tokens\n";
}

// --- normalize ---------------------------------------------------------------

void normalize(const NormalizerFlags& nf, const std::string& in, const std::string& out,
               const Common& common) {
  const auto normalizer = nf.pipeline();
  write_lines(out, normalizer->normalize_batch(read_lines(in), common.workers()));
}

// --- align / eval ------------------------------------------------------------

struct EvalInputs {
  std::string orig, pred, gold;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--orig", orig, "Original (noisy) sentences, one per line")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--pred", pred, "Normalizer output, one per line")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--gold", gold, "Reference sentences, one per line")
        ->required()
        ->check(CLI::ExistingFile);
  }

  EvaluationResult evaluate(const EvaluationOptions& options, const Common& common) const {
    const auto o = read_lines(orig);
    const auto p = read_lines(pred);
    const auto g = read_lines(gold);
    return luxnorm::evaluate(o, p, g, options, common.workers());
  }
};

std::string format_from(const std::string& flag, const std::string& path,
                        const std::string& fallback) {
  if (!flag.empty()) return flag;
  const std::string ext = std::filesystem::path(path).extension().string();
  if (ext == ".tsv") return "tsv";
  if (ext == ".json") return "json";
  if (ext == ".txt") return "table";
  return fallback;
}

// --- checklist ---------------------------------------------------------------

struct ChecklistFlags {
  std::string suite, normalizer = "pipeline", report, format;
};

int checklist(const ChecklistFlags& f, const NormalizerFlags& nf, const Common& common) {
  const TestSuite suite = load_suite(f.suite);
  for (const std::string& issue : suite.completeness_issues()) {
    std::cerr << "checklist: warning: incomplete suite: " << issue << "\n";
  }
  std::unique_ptr<SentenceNormalizer> normalizer;
  if (f.normalizer == "pipeline") {
    normalizer = nf.pipeline();
  } else if (f.normalizer == "identity") {
    normalizer = std::make_unique<IdentityNormalizer>();
  } else if (f.normalizer == "gold") {
    normalizer = make_gold_normalizer(suite);
  } else if (f.normalizer.rfind("cmd:", 0) == 0 && f.normalizer.size() > 4) {
    normalizer = std::make_unique<ExternalNormalizer>(f.normalizer.substr(4));
  } else {
    throw ConfigError("--normalizer must be pipeline, identity, gold or cmd:<command>");
  }

  const SuiteReport report = run_suite(*normalizer, suite, common.workers());
  const std::string format = format_from(f.format, f.report, "tsv");
  if (format == "json") {
    write_file(f.report, suite_report_to_json(report, &suite).dump(2) + "\n");
  } else {
    write_file(f.report, render_report(report, parse_report_format(format)));
  }
  std::cout << render_report(report, ReportFormat::kTable);
  std::size_t errors = 0;
  for (const UnitOutcome& o : report.failures) errors += o.error ? 1 : 0;
  std::cerr << "checklist: " << report.unit_count << " units, " << report.failures.size()
            << " failed";
  if (errors > 0) std::cerr << " (" << errors << " normalizer errors)";
  std::cerr << "\n";
  return 0;
}

// --- run ---------------------------------------------------------------------

struct RunFlags {
  std::string config;
  bool canonical = false;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Luxembourgish spelling normalization: data synthesis, normalization, evaluation"};
  app.set_version_flag("--version", "luxnorm " + tool_version());
  app.require_subcommand(1);

  Common common;
  app.add_option("--threads", common.threads,
                 "Worker threads (default: hardware concurrency, capped by LUXNORM_THREADS)")
      ->check(CLI::PositiveNumber);

  // dict validate
  auto* dict_cmd = app.add_subcommand("dict", "Variant dictionary utilities");
  dict_cmd->require_subcommand(1);
  std::string dict_path;
  auto* validate_cmd = dict_cmd->add_subcommand("validate", "Parse a dictionary and print statistics");
  validate_cmd->add_option("path", dict_path, "Dictionary TSV")->required();

  // synth
  SynthFlags sf;
  auto* synth_cmd = app.add_subcommand("synth", "Corrupt a clean corpus into a parallel corpus");
  synth_cmd->add_option("--dict", sf.dict, "Variant dictionary TSV")->required();
  synth_cmd->add_option("--corpus", sf.corpus, "Clean sentences, one per line")->required();
  synth_cmd->add_option("--out", sf.out, "Output JSONL (source, target, changed)")->required();
  synth_cmd->add_option("--seed", sf.seed, "Random seed")->capture_default_str();
  synth_cmd->add_option("--stats", sf.stats, "Write corpus statistics JSON here");

  // normalize
  NormalizerFlags norm_flags;
  std::string norm_in, norm_out;
  auto* norm_cmd = app.add_subcommand("normalize", "Normalize sentences with the pipeline");
  norm_flags.add_to(norm_cmd, true);
  norm_cmd->add_option("--in", norm_in, "Input sentences")->required()->check(CLI::ExistingFile);
  norm_cmd->add_option("--out", norm_out, "Output sentences")->required();

  // align
  EvalInputs align_inputs;
  ScoringFlags align_scoring;
  std::string dump_path;
  auto* align_cmd = app.add_subcommand("align", "Dump the three-way word alignment");
  align_inputs.add_to(align_cmd);
  align_scoring.add_to(align_cmd);
  align_cmd->add_option("--dump", dump_path, "Output TSV, one aligned column per row")->required();

  // eval
  EvalInputs eval_inputs;
  ScoringFlags eval_scoring;
  std::string eval_report, eval_format;
  bool verbose = false;
  auto* eval_cmd = app.add_subcommand("eval", "Word- and character-level metrics");
  eval_inputs.add_to(eval_cmd);
  eval_scoring.add_to(eval_cmd);
  eval_cmd->add_option("--report", eval_report, "Report path (.json or .tsv)")->required();
  eval_cmd->add_option("--format", eval_format, "json or tsv (default: from the extension)")
      ->check(CLI::IsMember({"json", "tsv"}));
  eval_cmd->add_flag("--verbose", verbose, "Include per-sentence counts");

  // checklist
  ChecklistFlags cf;
  NormalizerFlags check_norm;
  auto* check_cmd = app.add_subcommand("checklist", "Run the orthographic test suite");
  check_cmd->add_option("--suite", cf.suite, "Suite TSV")->required()->check(CLI::ExistingFile);
  check_cmd->add_option("--normalizer", cf.normalizer, "pipeline, identity, gold or cmd:<command>")
      ->capture_default_str();
  check_cmd->add_option("--report", cf.report, "Report path")->required();
  check_cmd->add_option("--format", cf.format, "tsv, table or json (default: from the extension)")
      ->check(CLI::IsMember({"tsv", "table", "json"}));
  check_norm.add_to(check_cmd, false);

  // run
  RunFlags rf;
  auto* run_cmd = app.add_subcommand("run", "Full experiment: normalize, evaluate, test suite");
  run_cmd->add_option("--config", rf.config, "JSON config file")->check(CLI::ExistingFile);
  run_cmd->add_flag("--canonical", rf.canonical, "Omit the timestamp from the report");
  // Flags mirror the config keys; only flags given on the command line
  // override the file.
  struct Override {
    const char* flag;
    const char* key;
    const char* help;
    bool numeric;
    std::string value;
  };
  std::vector<Override> overrides = {
      {"--seed", "seed", "Random seed (default 42)", true, {}},
      {"--normalizer", "normalizer", "pipeline, identity, gold or cmd:<command>", false, {}},
      {"--dict", "dictionary", "Variant dictionary TSV", false, {}},
      {"--lexicon", "lexicon", "Lexicon TSV", false, {}},
      {"--orig", "original", "Noisy sentences (synthesized from --gold when absent)", false, {}},
      {"--gold", "gold", "Reference sentences", false, {}},
      {"--suite", "suite", "Test suite TSV", false, {}},
      {"--out-dir", "output_dir", "Directory for report and artifacts", false, {}},
      {"--weights", "weights", "Score weights v,e,n,f", false, {}},
      {"--ngram-n", "ngram_n", "Character n-gram size", true, {}},
      {"--topk", "top_k", "N-gram neighbours per token", true, {}},
      {"--max-edit", "max_edit_distance", "Maximum edit distance", true, {}},
      {"--match-bonus", "match_bonus", "Alignment match bonus", true, {}},
      {"--gap-penalty", "gap_penalty", "Alignment gap penalty", true, {}},
      {"--miscorrection", "miscorrection_policy", "fn or fn+fp", false, {}},
  };
  std::vector<CLI::Option*> override_opts;
  for (Override& o : overrides) override_opts.push_back(run_cmd->add_option(o.flag, o.value, o.help));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : static_cast<int>(ExitCode::kUsage);
  }

  try {
    if (*validate_cmd) {
      dict_validate(dict_path);
    } else if (*synth_cmd) {
      synth(sf, common);
    } else if (*norm_cmd) {
      normalize(norm_flags, norm_in, norm_out, common);
    } else if (*align_cmd) {
      const EvaluationResult result = align_inputs.evaluate(align_scoring.options(), common);
      write_file(dump_path, alignment_dump(result));
    } else if (*eval_cmd) {
      const EvaluationOptions options = eval_scoring.options();
      const EvaluationResult result = eval_inputs.evaluate(options, common);
      const std::string format = format_from(eval_format, eval_report, "json");
      if (format == "tsv") {
        write_file(eval_report, evaluation_to_tsv(result, options, verbose));
      } else {
        write_file(eval_report, evaluation_to_json(result, options, verbose).dump(2) + "\n");
      }
      std::cout << metrics_table(result.metrics);
    } else if (*check_cmd) {
      return checklist(cf, check_norm, common);
    } else if (*run_cmd) {
      Json flags = Json::object();
      for (std::size_t i = 0; i < overrides.size(); ++i) {
        if (override_opts[i]->count() == 0) continue;
        const Override& o = overrides[i];
        if (!o.numeric) {
          flags[o.key] = o.value;
          continue;
        }
        try {
          flags[o.key] = Json::parse(o.value);
        } catch (const Json::exception&) {
          throw ConfigError(std::string(o.flag) + ": '" + o.value + "' is not a number");
        }
        if (!flags[o.key].is_number()) {
          throw ConfigError(std::string(o.flag) + ": '" + o.value + "' is not a number");
        }
      }
      if (common.threads) flags["threads"] = *common.threads;
      const RunConfig config = load_run_config(
          rf.config.empty() ? std::nullopt : std::optional<std::filesystem::path>(rf.config), flags);
      ExperimentOptions options;
      options.canonical = rf.canonical;
      const ExperimentReport report = run_experiment(config, options);
      std::cout << report.text;
    }
  } catch (const Error& e) {
    std::cerr << "luxnorm: error: " << e.what() << "\n";
    return static_cast<int>(e.exit_code());
  } catch (const std::exception& e) {
    std::cerr << "luxnorm: internal error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::kInternal);
  }
  return 0;
}
