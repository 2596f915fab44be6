// Copyright 2026 The kindc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kindc/kb_format.h"

#include <gtest/gtest.h>

#include "fixtures.h"
#include "kindc/errors.h"

namespace kindc {
namespace {

using testing::ReadTestdata;

AssetId K(const std::string& n) { return AssetId::Kind(n); }
AssetId I(const std::string& n) { return AssetId::Instance(n); }

TEST(KbFormatTest, EmptyContext) {
  EXPECT_EQ(SaveKb(Context()), "kindkb 1\n");
  EXPECT_EQ(LoadKb("kindkb 1\n"), Context());
}

TEST(KbFormatTest, RenameOntologyIsInSavedForm) {
  std::string text = ReadTestdata("date.kb");
  EXPECT_EQ(SaveKb(LoadKb(text)), text);
}

TEST(KbFormatTest, SaveIsIndependentOfLineOrder) {
  Context ctx = LoadKb(ReadTestdata("calendar.kb"));
  std::string saved = SaveKb(ctx);
  EXPECT_EQ(LoadKb(saved), ctx);
  EXPECT_EQ(SaveKb(LoadKb(saved)), saved);
}

TEST(KbFormatTest, KindedRenameOntologyGolden) {
  Context ctx = testing::RenameScenario().ctx;
  std::string saved = SaveKb(ctx);
  EXPECT_EQ(saved, ReadTestdata("golden/date_kinded.kb"));
  EXPECT_EQ(LoadKb(saved), ctx);
}

TEST(KbFormatTest, EveryStatementRoundTrips) {
  const std::string text =
      "kindkb 1\n"
      "inherit Day Unit\n"
      "include p w\n"
      "realize d Year + Month claim by bob\n"
      "equiv a b\n"
      "pequiv kind:A kind:B belief 1/2 by ann\n"
      "textequiv x \"a \\\"q\\\" \\\\ \\n\"\n"
      "interp A B partial agent ag context lab\n"
      "interp Year Month full agent calendar template \"Year * 12\"\n"
      "canon SetDate -> Date { readDate=getDate }\n"
      "ground Day local\n";
  Context ctx = LoadKb(text);
  EXPECT_EQ(SaveKb(ctx), text);
  EXPECT_EQ(ctx.LiteralOf(I("x")), "a \"q\" \\ \n");
  EXPECT_TRUE(Holds(ctx, PartialEquiv{K("A"), K("B")}));
  EXPECT_TRUE(Holds(ctx, FullEquiv{I("a"), I("b")}));
  EXPECT_TRUE(ctx.IsGround(K("Day")));
  ASSERT_EQ(ctx.rules().count(K("SetDate")), 1u);
  EXPECT_EQ(ctx.rules().at(K("SetDate")).feature_renames.at("readDate"),
            "getDate");
}

TEST(KbFormatTest, ProvenanceSurvives) {
  Context ctx = LoadKb("kindkb 1\ninherit A B belief 2/3 by ann\n");
  ASSERT_EQ(ctx.asserted().size(), 1u);
  const Assertion& a = *ctx.asserted().begin();
  ASSERT_TRUE(a.provenance);
  EXPECT_EQ(a.provenance->level, TruthLevel::kBelief);
  EXPECT_EQ(a.provenance->degree, Rational(2, 3));
  EXPECT_EQ(a.provenance->author, "ann");
}

TEST(KbFormatTest, CommentsAndBlankLinesIgnored) {
  Context ctx = LoadKb("# ontology\nkindkb 1\n\n# facts\ninherit A B\n");
  EXPECT_EQ(SaveKb(ctx), "kindkb 1\ninherit A B\n");
}

TEST(KbFormatTest, VersionMismatch) {
  try {
    LoadKb("kindkb 2\ninherit A B\n");
    FAIL();
  } catch (const VersionMismatch& e) {
    EXPECT_EQ(e.pos().line, 1u);
  }
}

struct BadKb {
  const char* text;
  std::size_t line;
  std::size_t column;
};

class KbErrorTest : public ::testing::TestWithParam<BadKb> {};

TEST_P(KbErrorTest, PositionedAtOffendingLine) {
  const auto& c = GetParam();
  try {
    LoadKb(c.text);
    FAIL() << c.text;
  } catch (const KbParseError& e) {
    EXPECT_EQ(e.pos().line, c.line) << e.what();
    EXPECT_EQ(e.pos().column, c.column) << e.what();
  }
}

INSTANTIATE_TEST_SUITE_P(
    Errors, KbErrorTest,
    ::testing::Values(BadKb{"", 1, 1}, BadKb{"inherit A B\n", 1, 1},
                      BadKb{"kindkb 1\nfoo a b\n", 2, 1},
                      BadKb{"kindkb 1\n\ninherit A\n", 3, 10},
                      BadKb{"kindkb 1\ninherit A B C\n", 2, 13},
                      BadKb{"kindkb 1\ntextequiv x \"abc\n", 2, 13},
                      BadKb{"kindkb 1\ntextequiv x \"a\\q\"\n", 2, 15},
                      BadKb{"kindkb 1\ninherit A B\ninherit B A\n", 3, 1},
                      BadKb{"kindkb 1\nrealize d Year belief 3/2\n", 2, 23}));

TEST(AddKbStatementTest, AppliesOneLine) {
  Context ctx = AddKbStatement(Context(), "inherit Day Unit");
  EXPECT_TRUE(Holds(ctx, Inheritance{K("Day"), K("Unit")}));
  EXPECT_THROW(AddKbStatement(ctx, "inherit Unit Day"), KbParseError);
  EXPECT_THROW(AddKbStatement(ctx, "kindkb 1"), KbParseError);
}

TEST(QuoteLiteralTest, Escapes) {
  EXPECT_EQ(QuoteLiteral("plain"), "\"plain\"");
  EXPECT_EQ(QuoteLiteral("a\"b\\c\nd"), "\"a\\\"b\\\\c\\nd\"");
}

}  // namespace
}  // namespace kindc
