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

// Minimum-functionality test suite for orthographic rules.
//
// Every unit belongs to one rule category and one of two setups:
//   CORRECT   the token at target_index breaks the rule; the normalizer
//             passes if the output token aligned to it equals `expected`.
//   PRESERVE  the sentence is already standard; the normalizer passes if it
//             leaves the sentence unchanged.
//
// Suite file: UTF-8 TSV with the header
//   category  setup  sentence  target_index  expected  gloss  [provenance]
// Lines starting with '#' and blank lines are ignored. PRESERVE units leave
// target_index and expected empty.

#ifndef LUXNORM_CHECKLIST_HPP_
#define LUXNORM_CHECKLIST_HPP_

#include <cstddef>
#include <filesystem>
#include <istream>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "luxnorm/json_util.hpp"
#include "luxnorm/normalizer.hpp"

namespace luxnorm {

enum class Setup { kCorrect, kPreserve };

std::string_view to_string(Setup setup);
// Accepts CORRECT / PRESERVE in any letter case.
std::optional<Setup> parse_setup(std::string_view text);

// The 21 rule categories in report order.
std::span<const std::string> canonical_categories();
bool is_canonical_category(std::string_view name);

// Units and cells per full suite.
inline constexpr std::size_t kUnitsPerCell = 10;
inline constexpr std::size_t kFullSuiteSize = 21 * 2 * kUnitsPerCell;

struct TestUnit {
  std::size_t id = 0;    // position in the suite, 0-based
  std::size_t line = 0;  // 1-based line in the suite file, 0 if built in memory
  std::string category;
  Setup setup = Setup::kCorrect;
  std::string sentence;
  std::optional<std::size_t> target_index;  // CORRECT only
  std::string expected;                     // CORRECT only
  std::string gloss;
  std::string provenance;

  // The corrected target token: `expected` behind the target's clitic
  // (d'Bischt -> d'Biischt) unless `expected` carries its own.
  std::string gold_token() const;
  // The sentence with the target corrected; the sentence itself for
  // PRESERVE units.
  std::string gold_sentence() const;
};

// Throws InputError describing the first broken invariant.
void validate_unit(const TestUnit& unit);

struct TestSuite {
  std::vector<TestUnit> units;
  std::vector<std::string> categories;  // in first-appearance order

  // 21 categories x 2 setups x 10 units.
  bool is_complete() const;
  // Human-readable reasons the suite is not complete; empty when it is.
  std::vector<std::string> completeness_issues() const;
};

TestSuite parse_suite(std::istream& in, const std::string& source);
TestSuite load_suite(const std::filesystem::path& path);

struct UnitOutcome {
  std::size_t unit = 0;  // TestUnit::id
  bool success = false;
  std::string output;
  std::optional<std::string> error;  // set when the normalizer failed
  // CORRECT: the output token aligned to the target (nullopt if deleted).
  std::optional<std::string> produced_target;
  // CORRECT: aligned columns other than the target that changed.
  std::size_t collateral_changes = 0;
};

// Judges one normalizer output.
UnitOutcome judge_unit(const TestUnit& unit, const std::string& output);

struct CellResult {
  std::string category;
  Setup setup = Setup::kCorrect;
  std::size_t units = 0;
  std::size_t successes = 0;
  std::size_t errors = 0;
  std::size_t units_with_collateral = 0;

  // Rounded half up to a whole percentage; nullopt for an empty cell.
  std::optional<int> percentage() const;
};

struct SuiteReport {
  std::string normalizer;
  std::size_t unit_count = 0;
  bool complete_suite = false;
  std::vector<CellResult> cells;  // canonical category order, CORRECT first
  std::vector<UnitOutcome> failures;

  const CellResult* find(std::string_view category, Setup setup) const;
  void add(const TestUnit& unit, const UnitOutcome& outcome);
  // Associative and independent of unit order.
  void merge(const SuiteReport& other);
};

// Runs the normalizer over the given units. A failing batch call falls back
// to one call per unit; units whose call fails count as failures and carry
// the error message.
SuiteReport run_units(const SentenceNormalizer& normalizer, std::span<const TestUnit> units,
                      std::size_t workers = 1);

// Throw std::invalid_argument if a unit has the wrong setup.
SuiteReport run_correct_setup(const SentenceNormalizer& normalizer,
                              std::span<const TestUnit> units, std::size_t workers = 1);
SuiteReport run_preserve_setup(const SentenceNormalizer& normalizer,
                               std::span<const TestUnit> units, std::size_t workers = 1);

SuiteReport run_suite(const SentenceNormalizer& normalizer, const TestSuite& suite,
                      std::size_t workers = 1);

// Outputs each unit's gold sentence; passes every unit of a valid suite.
std::unique_ptr<SentenceNormalizer> make_gold_normalizer(const TestSuite& suite);

enum class ReportFormat { kTsv, kTable };
ReportFormat parse_report_format(std::string_view text);

// category x (correct, preserve) with whole percentages.
std::string render_report(const SuiteReport& report, ReportFormat format);

Json suite_report_to_json(const SuiteReport& report, const TestSuite* suite = nullptr);

}  // namespace luxnorm

#endif  // LUXNORM_CHECKLIST_HPP_
