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

#include "kindc/compat.h"

#include <gtest/gtest.h>

#include <random>

#include "fixtures.h"
#include "generators.h"
#include "kindc/kb_format.h"
#include "oracles.h"

namespace kindc {
namespace {

using testing::LoadScenario;
using testing::OntologyScenario;
using testing::RenameScenario;
using testing::ReorderScenario;

AssetId I(const std::string& n) { return AssetId::Instance(n); }

CompatibilityResult Check(const testing::Scenario& s,
                          const CompatOptions& opts = {}) {
  return CheckCompatibility(s.ctx, s.provider, s.consumer, opts);
}

TEST(CompatTest, ScenarioVerdicts) {
  EXPECT_EQ(Check(RenameScenario()).verdict, Verdict::kCompatible);
  EXPECT_EQ(Check(ReorderScenario()).verdict, Verdict::kCompatible);
  EXPECT_EQ(Check(ReorderScenario("isodate_guarantee")).verdict,
            Verdict::kCompatible);
  EXPECT_EQ(Check(OntologyScenario()).verdict, Verdict::kCompatible);
}

TEST(CompatTest, CompatibleCarriesWitness) {
  CompatibilityResult r = Check(ReorderScenario());
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->feature_maps.size(), 1u);
  ASSERT_EQ(r.obligations.size(), 1u);
  EXPECT_TRUE(r.obligations[0].discharged());
  EXPECT_TRUE(r.diagnostics.empty());
}

TEST(CompatTest, FailedObligationIsIncompatible) {
  CompatibilityResult r = Check(ReorderScenario("isodate_reversed"));
  EXPECT_EQ(r.verdict, Verdict::kIncompatible);
  ASSERT_EQ(r.obligations.size(), 1u);
  EXPECT_EQ(r.obligations[0].result, Implication::kFalse);
  EXPECT_FALSE(r.diagnostics.empty());
}

TEST(CompatTest, UndecidableObligationIsUnknown) {
  CompatibilityResult r =
      Check(LoadScenario("isodate_relational.sidl", "", "ISODate", "SetDate"));
  EXPECT_EQ(r.verdict, Verdict::kUnknown);
  EXPECT_TRUE(r.witness);
}

TEST(CompatTest, MissingRulesIsIncompatible) {
  CompatibilityResult r =
      Check(LoadScenario("date.sidl", "", "Date", "SetDate"));
  EXPECT_EQ(r.verdict, Verdict::kIncompatible);
  EXPECT_FALSE(r.witness);
  EXPECT_FALSE(r.diagnostics.empty());
}

TEST(CompatTest, ChainBoundMakesIncompatible) {
  EXPECT_EQ(Check(OntologyScenario(), {0}).verdict, Verdict::kIncompatible);
}

TEST(CompatTest, UnrealizableConversionIsIncompatible) {
  std::string kb = testing::ReadTestdata("calendar.kb");
  std::string with = " template \"Month * 30 + (Day - 1)\"";
  auto at = kb.find(with);
  ASSERT_NE(at, std::string::npos);
  kb.erase(at, with.size());
  Context ctx =
      testing::KindSource(LoadKb(kb), testing::ReadTestdata("offsetdate.sidl"));
  CompatibilityResult r =
      CheckCompatibility(ctx, ComponentKindFromContext(ctx, "OffsetDate"),
                         ComponentKindFromContext(ctx, "ISODateUser"));
  EXPECT_EQ(r.verdict, Verdict::kIncompatible);
  ASSERT_FALSE(r.diagnostics.empty());
  EXPECT_NE(r.diagnostics[0].find("Month->Day"), std::string::npos);
}

TEST(CompatTest, VerdictNames) {
  EXPECT_EQ(ToString(Verdict::kCompatible), "compatible");
  EXPECT_EQ(ToString(Verdict::kIncompatible), "incompatible");
  EXPECT_EQ(ToString(Verdict::kUnknown), "unknown");
}

TEST(CompatTest, AgreesWithExhaustiveSearch) {
  std::mt19937 rng(777);
  int positives = 0;
  for (int i = 0; i < 150; ++i) {
    testing::OntologyCase c = testing::RandomOntologyCase(rng);
    testing::Scenario s = testing::BuildOntologyScenario(c);
    CompatibilityResult r =
        CheckCompatibility(s.ctx, s.provider, s.consumer, {c.max_chain_len});
    bool expected = testing::ExhaustiveCompatible(c);
    ASSERT_EQ(r.verdict == Verdict::kCompatible, expected) << "case " << i;
    positives += expected;
  }
  EXPECT_GT(positives, 20);
}

TEST(SemanticEquivalenceTest, InterfacesUnderRules) {
  auto s = RenameScenario();
  Context closed = Close(s.ctx);
  EXPECT_TRUE(SemanticallyEquivalent(closed, I("Date"), I("Date")));
  EXPECT_TRUE(SemanticallyEquivalent(closed, I("SetDate.Requires"),
                                     I("Date.Provides")));
  auto bare = LoadScenario("date.sidl", "", "Date", "SetDate");
  EXPECT_FALSE(SemanticallyEquivalent(Close(bare.ctx), I("SetDate.Requires"),
                                      I("Date.Provides")));
}

}  // namespace
}  // namespace kindc
