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

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "luxnorm/errors.hpp"
#include "luxnorm/tokenizer.hpp"
#include "luxnorm/unicode.hpp"

namespace luxnorm {
namespace {

const std::string kHeader = "category\tsetup\tsentence\ttarget_index\texpected\tgloss\tprovenance\n";

TestSuite parse(const std::string& body) {
  std::istringstream in(kHeader + body);
  return parse_suite(in, "suite");
}

TestSuite shipped() {
  return load_suite(std::string(LUXNORM_SOURCE_DIR) + "/data/suite/mft_suite.tsv");
}

TEST(ParseSuite, TableExamplesLoad) {
  const TestSuite s = parse(
      "Quantity Rule\tCORRECT\tWou ass d'Bischt fir ze kieren?\t2\tBiischt\tbroom\n"
      "Short Vowels\tCORRECT\tD'Haus ass op mech geschriwen.\t4\tgeschriwwen\twritten\n"
      "Quantity Rule\tpreserve\tWou ass d'Biischt?\t\t\tbroom\n");
  ASSERT_EQ(s.units.size(), 3u);
  EXPECT_EQ(s.units[0].gold_token(), "d'Biischt");
  EXPECT_EQ(s.units[0].gold_sentence(), "Wou ass d'Biischt fir ze kieren?");
  EXPECT_EQ(s.units[1].gold_sentence(), "D'Haus ass op mech geschriwwen.");
  EXPECT_EQ(s.units[2].setup, Setup::kPreserve);
  EXPECT_EQ(s.units[2].line, 4u);
  EXPECT_EQ(s.categories, (std::vector<std::string>{"Quantity Rule", "Short Vowels"}));
  EXPECT_FALSE(s.is_complete());
  EXPECT_FALSE(s.completeness_issues().empty());
}

void expect_parse_error_on_line(const std::string& body, std::size_t line) {
  try {
    parse(body);
    FAIL() << "no error for: " << body;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
  }
}

TEST(ParseSuite, RejectsBrokenUnits) {
  // The target already equals the expected form.
  expect_parse_error_on_line("Quantity Rule\tCORRECT\tWou ass d'Biischt?\t2\tBiischt\tx\n", 2);
  expect_parse_error_on_line("Made Up\tCORRECT\tWou ass d'Bischt?\t2\tBiischt\tx\n", 2);
  expect_parse_error_on_line("Quantity Rule\tMAYBE\tWou ass d'Bischt?\t2\tBiischt\tx\n", 2);
  expect_parse_error_on_line("Quantity Rule\tCORRECT\tWou ass d'Bischt?\t9\tBiischt\tx\n", 2);
  expect_parse_error_on_line("Quantity Rule\tCORRECT\tWou ass d'Bischt?\t3\tBiischt\tx\n", 2);
  expect_parse_error_on_line("Quantity Rule\tCORRECT\tWou ass d'Bischt?\ttwo\tBiischt\tx\n", 2);
  expect_parse_error_on_line("Quantity Rule\tCORRECT\tWou ass d'Bischt?\t2\t\tx\n", 2);
  expect_parse_error_on_line("Quantity Rule\tCORRECT\tWou ass d'Bischt?\t2\tBii scht\tx\n", 2);
  expect_parse_error_on_line("Quantity Rule\tPRESERVE\tWou ass d'Biischt?\t2\t\tx\n", 2);
  expect_parse_error_on_line("# comment\n\nQuantity Rule\tCORRECT\tonly\tfields\n", 4);
  std::istringstream no_header("Quantity Rule\tPRESERVE\tMoien.\t\t\tx\n");
  EXPECT_THROW(parse_suite(no_header, "x"), ParseError);
}

TEST(ShippedSuite, IsCompleteAndWellFormed) {
  const TestSuite s = shipped();
  EXPECT_EQ(s.units.size(), kFullSuiteSize);
  EXPECT_TRUE(s.is_complete()) << s.completeness_issues().front();
  EXPECT_EQ(s.categories.size(), 21u);
  std::set<std::string> sentences;
  for (const TestUnit& u : s.units) {
    EXPECT_TRUE(sentences.insert(canonical_form(u.sentence)).second) << u.sentence;
    if (u.setup == Setup::kCorrect) {
      EXPECT_TRUE(sentences.insert(canonical_form(u.gold_sentence())).second) << u.sentence;
    }
  }
}

TEST(ShippedSuite, ContainsTheTwoExampleUnits) {
  const TestSuite s = shipped();
  bool broom = false, written = false;
  for (const TestUnit& u : s.units) {
    if (u.sentence == "Wou ass d'Bischt fir ze kieren?") {
      broom = u.category == "Quantity Rule" && u.setup == Setup::kCorrect && u.expected == "Biischt";
    }
    if (u.sentence == "D'Haus ass op mech geschriwen.") {
      written = u.category == "Short Vowels" && u.expected == "geschriwwen";
    }
  }
  EXPECT_TRUE(broom);
  EXPECT_TRUE(written);
}

TEST(JudgeUnit, CorrectSetupLooksOnlyAtTheTarget) {
  const TestSuite s = parse("Quantity Rule\tCORRECT\tWou ass d'Bischt fir ze kieren?\t2\tBiischt\tx\n");
  const TestUnit& u = s.units[0];
  EXPECT_TRUE(judge_unit(u, "Wou ass d'Biischt fir ze kieren?").success);
  const UnitOutcome collateral = judge_unit(u, "Wou as d'Biischt fir ze kiere?");
  EXPECT_TRUE(collateral.success);
  EXPECT_EQ(collateral.collateral_changes, 2u);
  EXPECT_FALSE(judge_unit(u, "Wou ass d'Bischt fir ze kieren?").success);
  EXPECT_FALSE(judge_unit(u, "Wou ass d'Biisch fir ze kieren?").success);
  // The target word was dropped altogether.
  const UnitOutcome dropped = judge_unit(u, "Wou ass fir ze kieren?");
  EXPECT_FALSE(dropped.success);
  EXPECT_FALSE(dropped.produced_target);
  // Composed and decomposed umlauts are the same word.
  const TestSuite t = parse("Quantity Rule\tCORRECT\tDrénk Mellech.\t1\tMëllech\tx\n");
  EXPECT_TRUE(judge_unit(t.units[0], "Drénk Me\xCC\x88llech.").success);
}

TEST(JudgeUnit, PreserveSetupAllowsNoChange) {
  const TestSuite s = parse("Quantity Rule\tPRESERVE\tWou ass d'Biischt?\t\t\tx\n");
  EXPECT_TRUE(judge_unit(s.units[0], "Wou  ass d' Biischt ?").success);
  EXPECT_FALSE(judge_unit(s.units[0], "wou ass d'Biischt?").success);
}

std::string quantity_rows() {
  std::string body;
  for (int i = 0; i < 10; ++i) {
    body += "Quantity Rule\tCORRECT\tD'Kaz " + std::to_string(i) + " ass am Gart.\t4\tGaart\tx\n";
    body += "Quantity Rule\tPRESERVE\tD'Kaz " + std::to_string(i) + " ass am Gaart.\t\t\tx\n";
  }
  return body;
}

TEST(RunSuite, EightOfTenIsEightyPercent) {
  const TestSuite s = parse(quantity_rows());
  const FunctionNormalizer partial("partial", [](const std::string& sentence) {
    if (sentence.find("D'Kaz 8") == 0 || sentence.find("D'Kaz 9") == 0) return sentence;
    std::string out = sentence;
    const auto pos = out.find("Gart.");
    if (pos != std::string::npos) out.replace(pos, 4, "Gaart");
    return out;
  });
  const SuiteReport r = run_suite(partial, s);
  EXPECT_EQ(r.find("Quantity Rule", Setup::kCorrect)->percentage(), 80);
  EXPECT_EQ(r.find("Quantity Rule", Setup::kPreserve)->percentage(), 100);
  EXPECT_EQ(r.failures.size(), 2u);
  EXPECT_EQ(render_report(r, ReportFormat::kTsv),
            "category\tcorrect\tpreserve\nQuantity Rule\t80\t100\n");
  EXPECT_EQ(render_report(r, ReportFormat::kTable),
            "Category       correct  preserve\nQuantity Rule       80       100\n");
}

TEST(RunSuite, FailingNormalizerCountsUnitsAsFailed) {
  const TestSuite s = parse(quantity_rows());
  const FunctionNormalizer flaky("flaky", [](const std::string& sentence) -> std::string {
    if (sentence.find("D'Kaz 3") == 0) throw std::runtime_error("model crashed");
    return sentence;
  });
  const SuiteReport r = run_suite(flaky, s);
  const CellResult* c = r.find("Quantity Rule", Setup::kPreserve);
  EXPECT_EQ(c->successes, 9u);
  EXPECT_EQ(c->errors, 1u);
  EXPECT_EQ(r.unit_count, 20u);
}

TEST(RunSuite, SetupSpecificRunnersCheckTheirUnits) {
  const TestSuite s = parse(quantity_rows());
  const IdentityNormalizer identity;
  EXPECT_THROW(run_correct_setup(identity, s.units), std::invalid_argument);
  EXPECT_THROW(run_preserve_setup(identity, s.units), std::invalid_argument);
  std::vector<TestUnit> preserve;
  for (const auto& u : s.units) {
    if (u.setup == Setup::kPreserve) preserve.push_back(u);
  }
  EXPECT_EQ(run_preserve_setup(identity, preserve).find("Quantity Rule", Setup::kPreserve)->percentage(),
            100);
}

TEST(RunSuite, MergeIsOrderIndependent) {
  const TestSuite s = shipped();
  const IdentityNormalizer identity;
  const SuiteReport whole = run_suite(identity, s);
  const std::span<const TestUnit> units(s.units);
  SuiteReport a = run_units(identity, units.subspan(0, 150));
  const SuiteReport b = run_units(identity, units.subspan(150));
  SuiteReport b_first = b;
  b_first.merge(a);
  a.merge(b);
  EXPECT_EQ(suite_report_to_json(a), suite_report_to_json(b_first));
  EXPECT_EQ(render_report(a, ReportFormat::kTsv), render_report(whole, ReportFormat::kTsv));
}

TEST(RenderReport, EmptyReportIsHeaderOnly) {
  EXPECT_EQ(render_report(SuiteReport{}, ReportFormat::kTsv), "category\tcorrect\tpreserve\n");
  EXPECT_EQ(parse_report_format("table"), ReportFormat::kTable);
  EXPECT_THROW(parse_report_format("html"), ConfigError);
}

TEST(ShippedSuite, IdentityAndGoldSmoke) {
  const TestSuite s = shipped();
  const IdentityNormalizer identity;
  const SuiteReport id = run_suite(identity, s, 4);
  const SuiteReport gold = run_suite(*make_gold_normalizer(s), s, 4);
  ASSERT_EQ(id.cells.size(), 42u);
  for (const CellResult& c : id.cells) {
    EXPECT_EQ(c.percentage(), c.setup == Setup::kCorrect ? 0 : 100) << c.category;
  }
  for (const CellResult& c : gold.cells) EXPECT_EQ(c.percentage(), 100) << c.category;
  EXPECT_TRUE(id.complete_suite);
  const std::string table = render_report(id, ReportFormat::kTsv);
  EXPECT_EQ(std::count(table.begin(), table.end(), '\n'), 22);
}

TEST(CellResult, RoundsHalfUp) {
  CellResult c;
  EXPECT_FALSE(c.percentage());
  c.units = 8;
  c.successes = 1;  // 12.5
  EXPECT_EQ(c.percentage(), 13);
  c.units = 3;
  c.successes = 2;  // 66.7
  EXPECT_EQ(c.percentage(), 67);
}

}  // namespace
}  // namespace luxnorm
