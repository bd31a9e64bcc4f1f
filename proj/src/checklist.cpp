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

#include "luxnorm/checklist.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <map>
#include <stdexcept>

#include "luxnorm/alignment.hpp"
#include "luxnorm/errors.hpp"
#include "luxnorm/text_io.hpp"
#include "luxnorm/tokenizer.hpp"
#include "luxnorm/unicode.hpp"

namespace luxnorm {
namespace {

const std::array<std::string, 21> kCategories = {
    "Quantity Rule",
    "Short Vowels",
    "Short Open Vowel [æ]",
    "Short Closed Vowel [e]",
    "Neutral Short Vowel [ə]",
    "Long Vowel [eː]",
    "Diphthongs",
    "r-Rule",
    "Final Devoicing",
    "Consonants <f, v, w>",
    "Consonant <g>",
    "Consonants <g, ch>",
    "Consonant <h>",
    "Consonants <j, sch>",
    "Consonants <k, x>",
    "Consonant <s>",
    "Consonant <z>",
    "n-Rule",
    "French Loanwords",
    "Silent <e>",
    "Plural French Loanwords",
};

constexpr std::array<std::string_view, 7> kHeader = {
    "category", "setup", "sentence", "target_index", "expected", "gloss", "provenance"};

std::size_t category_rank(std::string_view name) {
  const auto it = std::find(kCategories.begin(), kCategories.end(), name);
  return static_cast<std::size_t>(it - kCategories.begin());
}

bool cell_before(const CellResult& a, const CellResult& b) {
  const std::size_t ra = category_rank(a.category), rb = category_rank(b.category);
  if (ra != rb) return ra < rb;
  if (a.category != b.category) return a.category < b.category;
  return a.setup < b.setup;
}

std::vector<std::string> nfc_tokens(std::string_view sentence) {
  return tokenize(unicode::nfc(sentence));
}

std::string pad_right(const std::string& s, std::size_t width) {
  const std::size_t len = unicode::length(s);
  return len >= width ? s : s + std::string(width - len, ' ');
}

std::string pad_left(const std::string& s, std::size_t width) {
  const std::size_t len = unicode::length(s);
  return len >= width ? s : std::string(width - len, ' ') + s;
}

std::string percent_cell(const CellResult* cell) {
  if (cell == nullptr || !cell->percentage()) return "-";
  return std::to_string(*cell->percentage());
}

}  // namespace

std::string_view to_string(Setup setup) {
  return setup == Setup::kCorrect ? "CORRECT" : "PRESERVE";
}

std::optional<Setup> parse_setup(std::string_view text) {
  const std::string upper = unicode::to_upper(text);
  if (upper == "CORRECT") return Setup::kCorrect;
  if (upper == "PRESERVE") return Setup::kPreserve;
  return std::nullopt;
}

std::span<const std::string> canonical_categories() { return kCategories; }

bool is_canonical_category(std::string_view name) {
  return category_rank(name) < kCategories.size();
}

std::string TestUnit::gold_token() const {
  if (setup != Setup::kCorrect || !target_index) {
    throw std::logic_error("gold_token: not a CORRECT unit");
  }
  const std::vector<std::string> tokens = nfc_tokens(sentence);
  if (*target_index >= tokens.size()) throw std::out_of_range("gold_token: target_index");
  const std::string fixed = unicode::nfc(expected);
  if (!split_clitic(fixed).prefix.empty()) return fixed;
  return split_clitic(tokens[*target_index]).prefix + fixed;
}

std::string TestUnit::gold_sentence() const {
  if (setup == Setup::kPreserve) return sentence;
  std::vector<std::string> tokens = nfc_tokens(sentence);
  tokens.at(target_index.value()) = gold_token();
  return detokenize(tokens);
}

void validate_unit(const TestUnit& unit) {
  if (!is_canonical_category(unit.category)) {
    throw InputError("unknown category '" + unit.category + "'");
  }
  if (unit.sentence.empty()) throw InputError("empty sentence");
  if (unit.sentence.find_first_of("\t\n") != std::string::npos) {
    throw InputError("sentence contains a tab or line break");
  }
  const std::vector<std::string> tokens = nfc_tokens(unit.sentence);
  if (tokens.empty()) throw InputError("sentence has no tokens");

  if (unit.setup == Setup::kPreserve) {
    if (unit.target_index || !unit.expected.empty()) {
      throw InputError("PRESERVE units take no target_index or expected");
    }
    return;
  }
  if (!unit.target_index) throw InputError("CORRECT unit without target_index");
  if (*unit.target_index >= tokens.size()) {
    throw InputError("target_index " + std::to_string(*unit.target_index) + " is past the last of " +
                     std::to_string(tokens.size()) + " tokens");
  }
  const std::string& target = tokens[*unit.target_index];
  if (is_punctuation_token(target)) throw InputError("target token '" + target + "' is punctuation");
  if (unit.expected.empty()) throw InputError("CORRECT unit without expected");
  if (tokenize(unit.expected).size() != 1) {
    throw InputError("expected '" + unit.expected + "' is not a single token");
  }
  if (unit.gold_token() == target) {
    throw InputError("target token '" + target + "' already equals expected; the corruption is missing");
  }
}

bool TestSuite::is_complete() const { return completeness_issues().empty(); }

std::vector<std::string> TestSuite::completeness_issues() const {
  std::vector<std::string> issues;
  std::map<std::pair<std::string, Setup>, std::size_t> per_cell;
  for (const TestUnit& u : units) ++per_cell[{u.category, u.setup}];
  for (const std::string& category : kCategories) {
    for (Setup setup : {Setup::kCorrect, Setup::kPreserve}) {
      const auto it = per_cell.find({category, setup});
      const std::size_t n = it == per_cell.end() ? 0 : it->second;
      if (n != kUnitsPerCell) {
        issues.push_back(category + " / " + std::string(to_string(setup)) + ": " +
                         std::to_string(n) + " units, expected " + std::to_string(kUnitsPerCell));
      }
    }
  }
  if (units.size() != kFullSuiteSize) {
    issues.push_back(std::to_string(units.size()) + " units, expected " +
                     std::to_string(kFullSuiteSize));
  }
  return issues;
}

TestSuite parse_suite(std::istream& in, const std::string& source) {
  TestSuite suite;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (read_line(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    const std::vector<std::string_view> fields = split_tabs(line);
    if (!header_seen) {
      if (fields.size() < 6 || fields.size() > kHeader.size() ||
          !std::equal(fields.begin(), fields.end(), kHeader.begin())) {
        throw ParseError(source, line_no,
                         "expected header 'category, setup, sentence, target_index, expected, "
                         "gloss[, provenance]' (tab-separated)");
      }
      header_seen = true;
      continue;
    }
    if (fields.size() < 6 || fields.size() > 7) {
      throw ParseError(source, line_no,
                       "expected 6 or 7 tab-separated fields, got " + std::to_string(fields.size()));
    }
    TestUnit unit;
    unit.id = suite.units.size();
    unit.line = line_no;
    unit.category = unicode::nfc(fields[0]);
    const auto setup = parse_setup(fields[1]);
    if (!setup) {
      throw ParseError(source, line_no, "setup must be CORRECT or PRESERVE, got '" +
                                            std::string(fields[1]) + "'");
    }
    unit.setup = *setup;
    unit.sentence = unicode::nfc(fields[2]);
    if (!fields[3].empty()) {
      std::size_t index = 0;
      const auto [ptr, ec] =
          std::from_chars(fields[3].data(), fields[3].data() + fields[3].size(), index);
      if (ec != std::errc() || ptr != fields[3].data() + fields[3].size()) {
        throw ParseError(source, line_no,
                         "target_index '" + std::string(fields[3]) + "' is not a number");
      }
      unit.target_index = index;
    }
    unit.expected = unicode::nfc(fields[4]);
    unit.gloss = std::string(fields[5]);
    if (fields.size() == 7) unit.provenance = std::string(fields[6]);
    try {
      validate_unit(unit);
    } catch (const InputError& e) {
      throw ParseError(source, line_no, e.what());
    }
    if (std::find(suite.categories.begin(), suite.categories.end(), unit.category) ==
        suite.categories.end()) {
      suite.categories.push_back(unit.category);
    }
    suite.units.push_back(std::move(unit));
  }
  if (in.bad()) throw IoError("error reading " + source);
  if (!header_seen) throw ParseError(source, 0, "missing header line");
  return suite;
}

TestSuite load_suite(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return parse_suite(in, path.string());
}

UnitOutcome judge_unit(const TestUnit& unit, const std::string& output) {
  UnitOutcome outcome;
  outcome.unit = unit.id;
  outcome.output = output;
  if (unit.setup == Setup::kPreserve) {
    outcome.success = canonical_form(output) == canonical_form(unit.sentence);
    return outcome;
  }
  const std::vector<std::string> input = nfc_tokens(unit.sentence);
  const std::vector<std::string> produced = nfc_tokens(output);
  const PairwiseAlignment alignment = needleman_wunsch(input, produced);
  std::size_t position = 0;  // index into `input` of the next non-gap cell
  for (const PairColumn& column : alignment.columns) {
    const bool is_target = column.a && position == *unit.target_index;
    if (is_target) {
      outcome.produced_target = column.b;
    } else if (column.a != column.b) {
      ++outcome.collateral_changes;
    }
    if (column.a) ++position;
  }
  outcome.success = outcome.produced_target && *outcome.produced_target == unit.gold_token();
  return outcome;
}

std::optional<int> CellResult::percentage() const {
  if (units == 0) return std::nullopt;
  return static_cast<int>((200 * successes + units) / (2 * units));
}

const CellResult* SuiteReport::find(std::string_view category, Setup setup) const {
  for (const CellResult& c : cells) {
    if (c.category == category && c.setup == setup) return &c;
  }
  return nullptr;
}

void SuiteReport::add(const TestUnit& unit, const UnitOutcome& outcome) {
  CellResult probe;
  probe.category = unit.category;
  probe.setup = unit.setup;
  auto it = std::lower_bound(cells.begin(), cells.end(), probe, cell_before);
  if (it == cells.end() || it->category != unit.category || it->setup != unit.setup) {
    it = cells.insert(it, probe);
  }
  ++it->units;
  ++unit_count;
  if (outcome.success) ++it->successes;
  if (outcome.error) ++it->errors;
  if (outcome.collateral_changes > 0) ++it->units_with_collateral;
  if (!outcome.success) {
    auto pos = std::lower_bound(
        failures.begin(), failures.end(), outcome.unit,
        [](const UnitOutcome& f, std::size_t id) { return f.unit < id; });
    failures.insert(pos, outcome);
  }
}

void SuiteReport::merge(const SuiteReport& other) {
  if (normalizer.empty()) normalizer = other.normalizer;
  unit_count += other.unit_count;
  for (const CellResult& c : other.cells) {
    auto it = std::lower_bound(cells.begin(), cells.end(), c, cell_before);
    if (it == cells.end() || it->category != c.category || it->setup != c.setup) {
      cells.insert(it, c);
      continue;
    }
    it->units += c.units;
    it->successes += c.successes;
    it->errors += c.errors;
    it->units_with_collateral += c.units_with_collateral;
  }
  std::vector<UnitOutcome> merged;
  merged.reserve(failures.size() + other.failures.size());
  std::merge(failures.begin(), failures.end(), other.failures.begin(), other.failures.end(),
             std::back_inserter(merged),
             [](const UnitOutcome& a, const UnitOutcome& b) { return a.unit < b.unit; });
  failures = std::move(merged);
}

SuiteReport run_units(const SentenceNormalizer& normalizer, std::span<const TestUnit> units,
                      std::size_t workers) {
  std::vector<std::string> sentences;
  sentences.reserve(units.size());
  for (const TestUnit& u : units) sentences.push_back(u.sentence);

  std::vector<std::string> outputs;
  std::vector<std::optional<std::string>> errors(units.size());
  try {
    outputs = normalizer.normalize_batch(sentences, workers);
    if (outputs.size() != units.size()) throw ProtocolError("batch returned the wrong count");
  } catch (const std::exception&) {
    // Isolate the failing units.
    outputs.assign(units.size(), std::string());
    for (std::size_t i = 0; i < units.size(); ++i) {
      try {
        outputs[i] = normalizer.normalize(sentences[i]);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  }

  SuiteReport report;
  report.normalizer = normalizer.name();
  for (std::size_t i = 0; i < units.size(); ++i) {
    UnitOutcome outcome;
    if (errors[i]) {
      outcome.unit = units[i].id;
      outcome.error = errors[i];
    } else {
      outcome = judge_unit(units[i], outputs[i]);
    }
    report.add(units[i], outcome);
  }
  return report;
}

SuiteReport run_correct_setup(const SentenceNormalizer& normalizer,
                              std::span<const TestUnit> units, std::size_t workers) {
  for (const TestUnit& u : units) {
    if (u.setup != Setup::kCorrect) throw std::invalid_argument("run_correct_setup: PRESERVE unit");
  }
  return run_units(normalizer, units, workers);
}

SuiteReport run_preserve_setup(const SentenceNormalizer& normalizer,
                               std::span<const TestUnit> units, std::size_t workers) {
  for (const TestUnit& u : units) {
    if (u.setup != Setup::kPreserve) throw std::invalid_argument("run_preserve_setup: CORRECT unit");
  }
  return run_units(normalizer, units, workers);
}

SuiteReport run_suite(const SentenceNormalizer& normalizer, const TestSuite& suite,
                      std::size_t workers) {
  SuiteReport report = run_units(normalizer, suite.units, workers);
  report.complete_suite = suite.is_complete();
  return report;
}

std::unique_ptr<SentenceNormalizer> make_gold_normalizer(const TestSuite& suite) {
  auto gold = std::make_shared<std::map<std::string, std::string>>();
  for (const TestUnit& u : suite.units) gold->emplace(u.sentence, u.gold_sentence());
  return std::make_unique<FunctionNormalizer>("gold", [gold](const std::string& sentence) {
    const auto it = gold->find(sentence);
    return it == gold->end() ? sentence : it->second;
  });
}

ReportFormat parse_report_format(std::string_view text) {
  if (text == "tsv") return ReportFormat::kTsv;
  if (text == "table") return ReportFormat::kTable;
  throw ConfigError("report format must be 'tsv' or 'table', got '" + std::string(text) + "'");
}

std::string render_report(const SuiteReport& report, ReportFormat format) {
  std::vector<std::string> categories;
  for (const CellResult& c : report.cells) {
    if (categories.empty() || categories.back() != c.category) categories.push_back(c.category);
  }

  std::string out;
  if (format == ReportFormat::kTsv) {
    out = "category\tcorrect\tpreserve\n";
    for (const std::string& category : categories) {
      out += category + '\t' + percent_cell(report.find(category, Setup::kCorrect)) + '\t' +
             percent_cell(report.find(category, Setup::kPreserve)) + '\n';
    }
    return out;
  }

  std::size_t width = unicode::length("Category");
  for (const std::string& c : categories) width = std::max(width, unicode::length(c));
  const std::string correct = "correct", preserve = "preserve";
  out = pad_right("Category", width) + "  " + correct + "  " + preserve + '\n';
  for (const std::string& category : categories) {
    out += pad_right(category, width) + "  " +
           pad_left(percent_cell(report.find(category, Setup::kCorrect)), correct.size()) + "  " +
           pad_left(percent_cell(report.find(category, Setup::kPreserve)), preserve.size()) +
           '\n';
  }
  return out;
}

Json suite_report_to_json(const SuiteReport& report, const TestSuite* suite) {
  Json j;
  j["normalizer"] = report.normalizer;
  j["units"] = report.unit_count;
  j["complete_suite"] = report.complete_suite;
  Json cells = Json::array();
  for (const CellResult& c : report.cells) {
    Json cell;
    cell["category"] = c.category;
    cell["setup"] = std::string(to_string(c.setup));
    cell["units"] = c.units;
    cell["successes"] = c.successes;
    cell["success_rate"] = c.percentage() ? Json(*c.percentage()) : Json(nullptr);
    cell["errors"] = c.errors;
    cell["units_with_collateral_changes"] = c.units_with_collateral;
    cells.push_back(std::move(cell));
  }
  j["cells"] = std::move(cells);
  Json failures = Json::array();
  for (const UnitOutcome& f : report.failures) {
    Json row;
    row["unit"] = f.unit;
    if (suite != nullptr && f.unit < suite->units.size()) {
      const TestUnit& u = suite->units[f.unit];
      row["line"] = u.line;
      row["category"] = u.category;
      row["setup"] = std::string(to_string(u.setup));
      row["sentence"] = u.sentence;
      if (u.setup == Setup::kCorrect) {
        row["target_index"] = *u.target_index;
        row["expected"] = u.gold_token();
      }
    }
    row["output"] = f.output;
    row["produced_target"] = f.produced_target ? Json(*f.produced_target) : Json(nullptr);
    row["error"] = f.error ? Json(*f.error) : Json(nullptr);
    failures.push_back(std::move(row));
  }
  j["failures"] = std::move(failures);
  return j;
}

}  // namespace luxnorm
