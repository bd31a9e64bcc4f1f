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
#include "luxnorm/variant_dictionary.hpp"

#include <gtest/gtest.h>

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "luxnorm/errors.hpp"

namespace luxnorm {
namespace {

VariantDictionary parse(const std::string& text) {
  std::istringstream in(text);
  return VariantDictionary::parse(in, "dict.tsv");
}

std::size_t parse_error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no ParseError for: " << text;
  return 0;
}

TEST(VariantDictionary, LoadsCountsAndProbabilities) {
  const auto dict = parse("# milk\nMëllech\tMellech\t120\nMëllech\tMillech\t30\n");
  EXPECT_EQ(dict.lemma_count(), 1u);
  EXPECT_EQ(dict.variant_count(), 2u);
  EXPECT_EQ(dict.probability("Mëllech", "Mellech"), Rational(4, 5));
  EXPECT_EQ(dict.probability("Mëllech", "Millech"), Rational(1, 5));
  EXPECT_EQ(dict.probability("Mëllech", "Mëllech"), Rational(0));
  EXPECT_EQ(dict.total_count("Mëllech"), 150u);
}

TEST(VariantDictionary, IdentityVariant) {
  const auto dict = parse("a\ta\t5\n");
  EXPECT_EQ(dict.probability("a", "a"), Rational(1));
  EXPECT_EQ(dictionary_stats(dict).identity_variants, 1u);
}

TEST(VariantDictionary, DuplicateLinesAreSummed) {
  const auto dict = parse("x\ty\t2\nx\ty\t2\n");
  ASSERT_EQ(dict.variants("x").size(), 1u);
  EXPECT_EQ(dict.variants("x")[0].count, 4u);
}

TEST(VariantDictionary, InputIsComposed) {
  // "e" + combining diaeresis on disk, "ë" in memory.
  const auto dict = parse("Me\xCC\x88llech\tMellech\t1\n");
  EXPECT_TRUE(dict.contains("Mëllech"));
}

TEST(VariantDictionary, MalformedLinesReportTheirLineNumber) {
  EXPECT_EQ(parse_error_line("a\tb\t1\na\tb\n"), 2u);
  EXPECT_EQ(parse_error_line("# c\na\tb\t0\n"), 2u);
  EXPECT_EQ(parse_error_line("a\tb\t-3\n"), 1u);
  EXPECT_EQ(parse_error_line("a\tb\t1x\n"), 1u);
  EXPECT_EQ(parse_error_line("\tb\t1\n"), 1u);
  EXPECT_EQ(parse_error_line("a\tb\t1\textra\n"), 1u);
}

TEST(VariantDictionary, EmptyFileIsAnError) {
  EXPECT_THROW(parse(""), ParseError);
  EXPECT_THROW(parse("# only a comment\n\n"), ParseError);
}

TEST(VariantDictionary, MissingFileIsAnIoError) {
  EXPECT_THROW(VariantDictionary::load("/nonexistent/dict.tsv"), IoError);
}

TEST(VariantDictionary, AddRejectsBadFields) {
  VariantDictionary dict;
  EXPECT_THROW(dict.add("", "x", 1), std::invalid_argument);
  EXPECT_THROW(dict.add("a", "x\ty", 1), std::invalid_argument);
  EXPECT_THROW(dict.add("a", "x", 0), std::invalid_argument);
}

TEST(VariantDictionary, ResolveFallsBackToLowercase) {
  const auto dict = parse("mir\tmer\t3\nHaus\tHous\t2\n");
  ASSERT_TRUE(dict.resolve("mir"));
  EXPECT_FALSE(dict.resolve("mir")->case_folded);
  ASSERT_TRUE(dict.resolve("Mir"));
  EXPECT_EQ(dict.resolve("Mir")->lemma, "mir");
  EXPECT_TRUE(dict.resolve("Mir")->case_folded);
  EXPECT_EQ(dict.resolve("Haus")->lemma, "Haus");
  EXPECT_FALSE(dict.resolve("Bam"));
}

TEST(SampleVariant, SingleVariantIsAlwaysChosen) {
  const auto dict = parse("Mëllech\tMellech\t1\n");
  RandomStream rng(1);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(sample_variant(dict, "Mëllech", rng), "Mellech");
}

TEST(SampleVariant, AbsentLemmaIsALookupError) {
  const auto dict = parse("a\tb\t1\n");
  RandomStream rng(1);
  EXPECT_THROW(sample_variant(dict, "zzz", rng), LookupError);
}

TEST(SampleVariant, ConsumesExactlyOneDraw) {
  const auto dict = parse("a\tb\t1\na\tc\t1\n");
  RandomStream rng(9);
  RandomStream reference(9);
  sample_variant(dict, "a", rng);
  reference.discard(1);
  EXPECT_EQ(rng, reference);
}

TEST(SampleVariant, EmpiricalProportionsFollowCounts) {
  const auto dict = parse("Mëllech\tMellech\t80\nMëllech\tMillech\t20\n");
  RandomStream rng(42);
  std::map<std::string, int> seen;
  constexpr int kDraws = 10000;
  for (int i = 0; i < kDraws; ++i) ++seen[sample_variant(dict, "Mëllech", rng)];
  const double p = seen["Mellech"] / static_cast<double>(kDraws);
  EXPECT_NEAR(p, 0.8, 0.02);
  EXPECT_NEAR(1.0 - p, 0.2, 0.02);
  // Chi-square against 8000/2000 with 1 degree of freedom; 6.63 is the 1%
  // critical value.
  const double chi2 = (seen["Mellech"] - 8000.0) * (seen["Mellech"] - 8000.0) / 8000.0 +
                      (seen["Millech"] - 2000.0) * (seen["Millech"] - 2000.0) / 2000.0;
  EXPECT_LT(chi2, 6.63);
}

TEST(PickVariant, BoundaryDraws) {
  const std::vector<VariantEntry> list = {{"x", 1}, {"y", 3}};
  EXPECT_EQ(pick_variant(list, 0), "x");
  EXPECT_EQ(pick_variant(list, (std::uint64_t{1} << 62) - 1), "x");
  EXPECT_EQ(pick_variant(list, std::uint64_t{1} << 62), "y");
  EXPECT_EQ(pick_variant(list, ~std::uint64_t{0}), "y");
}

TEST(DeriveStream, DeterministicAndIndependent) {
  EXPECT_EQ(derive_stream(42, 3)(), derive_stream(42, 3)());
  EXPECT_NE(derive_stream(42, 3)(), derive_stream(42, 4)());
  EXPECT_NE(derive_stream(42, 3)(), derive_stream(43, 3)());
}

TEST(ReverseIndex, SingleEntry) {
  const ReverseIndex index(parse("A\tx\t3\n"));
  ASSERT_EQ(index.lookup("x").size(), 1u);
  EXPECT_EQ(index.lookup("x")[0], (LemmaCount{"A", 3}));
  EXPECT_TRUE(index.lookup("y").empty());
}

TEST(ReverseIndex, AmbiguousVariantsSortedByCount) {
  const ReverseIndex index(parse("den\tde\t90\ndee\tde\t10\nder\tde\t90\n"));
  const auto hits = index.lookup("de");
  ASSERT_EQ(hits.size(), 3u);
  EXPECT_EQ(hits[0], (LemmaCount{"den", 90}));
  EXPECT_EQ(hits[1], (LemmaCount{"der", 90}));
  EXPECT_EQ(hits[2], (LemmaCount{"dee", 10}));
  EXPECT_EQ(dictionary_stats(parse("den\tde\t90\ndee\tde\t10\n")).ambiguous_variants, 1u);
}

TEST(ReverseIndex, EveryPairAppearsOnce) {
  const auto dict = parse("a\tx\t1\na\ty\t2\nb\tx\t3\nb\tb\t4\n");
  const ReverseIndex index(dict);
  std::size_t pairs = 0;
  for (const auto& [variant, list] : index.entries()) {
    for (const LemmaCount& lc : list) {
      ++pairs;
      EXPECT_EQ(dict.probability(lc.lemma, variant) * Rational(static_cast<std::int64_t>(dict.total_count(lc.lemma))),
                Rational(static_cast<std::int64_t>(lc.count)));
    }
  }
  EXPECT_EQ(pairs, dict.variant_count());
}

TEST(ReverseIndex, FoldedLookupMergesCase) {
  const ReverseIndex index(parse("Haus\tHous\t2\nHaus\thous\t3\n"));
  EXPECT_TRUE(index.lookup("HOUS").empty());
  const auto hits = index.lookup_folded("HOUS");
  ASSERT_EQ(hits.size(), 1u);
  EXPECT_EQ(hits[0], (LemmaCount{"Haus", 5}));
}

}  // namespace
}  // namespace luxnorm
