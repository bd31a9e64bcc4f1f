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
// Python bindings. Structured results (metrics, suite reports, experiment
// reports) cross the boundary as JSON text; luxnorm/__init__.py decodes them.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "luxnorm/alignment.hpp"
#include "luxnorm/checklist.hpp"
#include "luxnorm/config.hpp"
#include "luxnorm/corruptor.hpp"
#include "luxnorm/errors.hpp"
#include "luxnorm/evaluation.hpp"
#include "luxnorm/experiment.hpp"
#include "luxnorm/external_normalizer.hpp"
#include "luxnorm/normalizer.hpp"
#include "luxnorm/parallel.hpp"
#include "luxnorm/tokenizer.hpp"
#include "luxnorm/variant_dictionary.hpp"

namespace py = pybind11;
using namespace luxnorm;

namespace {

// Wraps a Python callable str -> str. Always run with workers == 1 so the
// call happens on the thread that holds the GIL.
class CallableNormalizer : public SentenceNormalizer {
 public:
  CallableNormalizer(std::string name, py::function fn) : name_(std::move(name)), fn_(std::move(fn)) {}
  std::string name() const override { return name_; }
  std::string normalize(const std::string& sentence) const override {
    py::gil_scoped_acquire gil;
    return fn_(sentence).cast<std::string>();
  }

 private:
  std::string name_;
  py::function fn_;
};

ScoringScheme scheme_of(double match_bonus, double gap_penalty) {
  ScoringScheme s;
  s.match_bonus = match_bonus;
  s.gap_penalty = gap_penalty;
  s.validate();
  return s;
}

NormalizerConfig normalizer_config(const std::optional<std::string>& weights, int max_edit_distance,
                                   int ngram_n, std::size_t top_k) {
  NormalizerConfig c;
  if (weights) c.weights = ScoreWeights::parse(*weights);
  c.max_edit_distance = max_edit_distance;
  c.ngram_n = ngram_n;
  c.top_k = top_k;
  c.validate();
  return c;
}

py::tuple column_tuple(const TripleColumn& c) {
  return py::make_tuple(c.original, c.predicted, c.gold);
}

}  // namespace

PYBIND11_MODULE(_luxnorm, m) {
  m.doc() = "Luxembourgish spelling normalization: synthesis, normalization, evaluation";
  m.attr("__version__") = tool_version();

  static py::exception<Error> base(m, "LuxnormError");
  py::register_exception<InputError>(m, "InputError", base.ptr());
  py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
  py::register_exception<ProtocolError>(m, "ProtocolError", base.ptr());

  // text
  m.def("tokenize", [](const std::string& s) { return tokenize(s); });
  m.def("detokenize", &detokenize);
  m.def("canonical_form", [](const std::string& s) { return canonical_form(s); });
  m.def("levenshtein",
        [](const std::string& a, const std::string& b) {
          return levenshtein(std::string_view(a), std::string_view(b));
        },
        "Edit distance over Unicode code points.");

  // dictionary and synthesis
  py::class_<VariantDictionary>(m, "VariantDictionary")
      .def(py::init<>())
      .def_static("load", &VariantDictionary::load, py::arg("path"))
      .def("add", &VariantDictionary::add, py::arg("lemma"), py::arg("variant"), py::arg("count"))
      .def("__contains__", [](const VariantDictionary& d, const std::string& lemma) {
        return d.contains(lemma);
      })
      .def("__len__", &VariantDictionary::lemma_count)
      .def("variants",
           [](const VariantDictionary& d, const std::string& lemma) {
             std::vector<std::pair<std::string, std::uint64_t>> out;
             for (const VariantEntry& e : d.variants(lemma)) out.emplace_back(e.variant, e.count);
             return out;
           })
      .def("probability",
           [](const VariantDictionary& d, const std::string& lemma, const std::string& variant) {
             const Rational p = d.probability(lemma, variant);
             return py::make_tuple(p.numerator(), p.denominator());
           },
           "Exact probability as (numerator, denominator).")
      .def("sample",
           [](const VariantDictionary& d, const std::string& lemma, std::uint64_t seed,
              std::size_t draws) {
             RandomStream rng(seed);
             std::vector<std::string> out;
             out.reserve(draws);
             for (std::size_t i = 0; i < draws; ++i) out.push_back(sample_variant(d, lemma, rng));
             return out;
           },
           py::arg("lemma"), py::arg("seed"), py::arg("draws") = 1);

  m.def("corrupt_sentence",
        [](const std::string& sentence, const VariantDictionary& dict, std::uint64_t seed,
           std::uint64_t index) {
          RandomStream rng = derive_stream(seed, index);
          SentencePair p = corrupt_sentence(sentence, dict, rng);
          return py::make_tuple(p.source, p.changed_tokens);
        },
        py::arg("sentence"), py::arg("dictionary"), py::arg("seed") = 42, py::arg("index") = 0,
        "Noisy version of one sentence, as (source, changed_tokens). Same draws as line "
        "`index` of synthesize().");

  m.def("synthesize",
        [](const std::vector<std::string>& lines, const VariantDictionary& dict, std::uint64_t seed,
           std::optional<std::size_t> threads) {
          ParallelCorpus corpus;
          {
            py::gil_scoped_release release;
            corpus = build_parallel_corpus(lines, dict, seed, worker_count(threads));
          }
          py::list pairs;
          for (const SentencePair& p : corpus.pairs) {
            pairs.append(py::make_tuple(p.source, p.target, p.changed_tokens));
          }
          return py::make_tuple(pairs, stats_to_json(corpus.stats));
        },
        py::arg("lines"), py::arg("dictionary"), py::arg("seed") = 42,
        py::arg("threads") = py::none());

  // normalization
  py::class_<SentenceNormalizer, std::shared_ptr<SentenceNormalizer>>(m, "Normalizer")
      .def_property_readonly("name", &SentenceNormalizer::name)
      .def("normalize", &SentenceNormalizer::normalize, py::call_guard<py::gil_scoped_release>())
      .def("normalize_batch",
           [](const SentenceNormalizer& n, const std::vector<std::string>& sentences,
              std::optional<std::size_t> threads) {
             py::gil_scoped_release release;
             return n.normalize_batch(sentences, worker_count(threads));
           },
           py::arg("sentences"), py::arg("threads") = py::none());

  m.def("pipeline_normalizer",
        [](const std::filesystem::path& dictionary, const std::filesystem::path& lexicon,
           std::optional<std::string> weights, int max_edit_distance, int ngram_n,
           std::size_t top_k) -> std::shared_ptr<SentenceNormalizer> {
          NormalizerConfig config = normalizer_config(weights, max_edit_distance, ngram_n, top_k);
          auto resources = NormalizerResources::load(dictionary, lexicon, config.ngram_n);
          return std::make_shared<PipelineNormalizer>(std::move(resources), config);
        },
        py::arg("dictionary"), py::arg("lexicon"), py::arg("weights") = py::none(),
        py::arg("max_edit_distance") = 2, py::arg("ngram_n") = 3, py::arg("top_k") = 10);
  m.def("identity_normalizer",
        []() -> std::shared_ptr<SentenceNormalizer> { return std::make_shared<IdentityNormalizer>(); });
  m.def("external_normalizer",
        [](const std::string& command) -> std::shared_ptr<SentenceNormalizer> {
          return std::make_shared<ExternalNormalizer>(command);
        },
        py::arg("command"));

  // alignment and evaluation
  m.def("needleman_wunsch",
        [](const std::vector<std::string>& a, const std::vector<std::string>& b, double match_bonus,
           double gap_penalty) {
          PairwiseAlignment al = needleman_wunsch(a, b, scheme_of(match_bonus, gap_penalty));
          py::list cols;
          for (const PairColumn& c : al.columns) cols.append(py::make_tuple(c.a, c.b));
          return py::make_tuple(cols, al.score);
        },
        py::arg("a"), py::arg("b"), py::arg("match_bonus") = 1.0, py::arg("gap_penalty") = -0.5);

  m.def("align",
        [](const std::vector<std::string>& original, const std::vector<std::string>& predicted,
           const std::vector<std::string>& gold, double match_bonus, double gap_penalty) {
          AlignedTriple al =
              align_triple(original, predicted, gold, scheme_of(match_bonus, gap_penalty));
          py::list cols;
          for (const TripleColumn& c : al.columns) cols.append(column_tuple(c));
          return py::make_tuple(cols, al.score);
        },
        py::arg("original"), py::arg("predicted"), py::arg("gold"), py::arg("match_bonus") = 1.0,
        py::arg("gap_penalty") = -0.5,
        "Three-way token alignment; gaps are None.");

  m.def("_evaluate",
        [](const std::vector<std::string>& original, const std::vector<std::string>& predicted,
           const std::vector<std::string>& gold, const std::string& policy, double match_bonus,
           double gap_penalty, bool verbose, std::optional<std::size_t> threads) {
          EvaluationOptions options;
          options.scheme = scheme_of(match_bonus, gap_penalty);
          options.policy = parse_miscorrection_policy(policy);
          py::gil_scoped_release release;
          EvaluationResult r = evaluate(original, predicted, gold, options, worker_count(threads));
          return evaluation_to_json(r, options, verbose).dump();
        });

  // checklist
  m.def("_run_checklist",
        [](const std::filesystem::path& suite_path, py::object normalizer,
           std::optional<std::size_t> threads) {
          const TestSuite suite = load_suite(suite_path);
          std::shared_ptr<SentenceNormalizer> n;
          std::size_t workers = worker_count(threads);
          if (py::isinstance<py::str>(normalizer)) {
            const auto name = normalizer.cast<std::string>();
            if (name == "gold") {
              n = make_gold_normalizer(suite);
            } else if (name == "identity") {
              n = std::make_shared<IdentityNormalizer>();
            } else if (name.rfind("cmd:", 0) == 0) {
              n = std::make_shared<ExternalNormalizer>(name.substr(4));
            } else {
              throw InputError("unknown normalizer '" + name + "'");
            }
          } else if (py::isinstance<SentenceNormalizer>(normalizer)) {
            n = normalizer.cast<std::shared_ptr<SentenceNormalizer>>();
          } else {
            n = std::make_shared<CallableNormalizer>("python", normalizer.cast<py::function>());
            return suite_report_to_json(run_suite(*n, suite, 1), &suite).dump();
          }
          py::gil_scoped_release release;
          return suite_report_to_json(run_suite(*n, suite, workers), &suite).dump();
        });

  // experiment
  m.def("_run_experiment",
        [](std::optional<std::filesystem::path> config_file, const std::string& overrides_json,
           bool canonical) {
          RunConfig config = load_run_config(config_file, Json::parse(overrides_json));
          ExperimentOptions options;
          options.canonical = canonical;
          py::gil_scoped_release release;
          return run_experiment(config, options).json.dump();
        });
}
