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

#include "kindc/kinding.h"

#include <gtest/gtest.h>

#include "fixtures.h"
#include "kindc/errors.h"
#include "kindc/vocabulary.h"

namespace kindc {
namespace {

AssetId K(const std::string& n) { return AssetId::Kind(n); }
AssetId I(const std::string& n) { return AssetId::Instance(n); }

ComponentDecl Date() {
  return ParseComponents(testing::ReadTestdata("date.sidl"))[0];
}

TEST(KindingTest, GeneratesStructure) {
  KindingResult r = KindComponent(Context(), Date());
  const Context& c = r.context;
  EXPECT_TRUE(Holds(c, Inclusion{I("Date.Provides"), I("Date")}));
  EXPECT_TRUE(Holds(c, Inclusion{I("Date.setDate"), I("Date.Provides")}));
  EXPECT_TRUE(Holds(c, Inclusion{I("Date.setDate.Parameter2"),
                                 I("Date.setDate.ParameterSet")}));
  EXPECT_TRUE(Holds(c, Inclusion{I("Date.setDate.Parameter0"), I("Date")}))
      << "inclusion is transitive";
  EXPECT_TRUE(
      Holds(c, Realization{I("Date.setDate"),
                           KindExpr::Atom(std::string(vocab::kMethod))}));
  EXPECT_TRUE(Holds(
      c, Realization{I("Date"),
                     KindExpr::Atom(std::string(vocab::kSemanticComponent))}));
  EXPECT_EQ(c.LiteralOf(I("Date.setDate.Name")), "setDate");
  EXPECT_EQ(c.LiteralOf(I("Date.setDate.Parameter1Name")), "month");
  EXPECT_EQ(c.LiteralOf(I("Date.setDate.Parameter1Type")), "Integer");
  EXPECT_EQ(c.LiteralOf(I("Date.getDate.ReturnType")), "void");
}

TEST(KindingTest, ComponentKindSummary) {
  KindingResult r = KindComponent(Context(), Date());
  const ComponentKind& k = r.kind;
  EXPECT_EQ(k.component, I("Date"));
  EXPECT_EQ(k.provides_iface, I("Date.Provides"));
  EXPECT_EQ(k.requires_iface, I("Date.Requires"));
  ASSERT_EQ(k.Provided().size(), 2u);
  EXPECT_TRUE(k.Required().empty());
  const FeatureKind* set = k.Find(Direction::kProvided, "setDate");
  ASSERT_NE(set, nullptr);
  ASSERT_EQ(set->params.size(), 3u);
  EXPECT_EQ(set->params[2].name, "year");
  EXPECT_EQ(set->params[2].asset, I("Date.setDate.Parameter2"));
  EXPECT_EQ(set->return_type, "void");
  EXPECT_EQ(k.Find(Direction::kRequired, "setDate"), nullptr);
}

TEST(KindingTest, ReadBackFromContext) {
  for (const char* file : {"date.sidl", "isodate.sidl", "offsetdate.sidl",
                           "isodate_guarantee.sidl"}) {
    Context ctx;
    std::vector<ComponentKind> kinds;
    for (const auto& d : ParseComponents(testing::ReadTestdata(file))) {
      KindingResult r = KindComponent(ctx, d, {true});
      ctx = r.context;
      kinds.push_back(r.kind);
    }
    for (const auto& k : kinds) {
      EXPECT_EQ(ComponentKindFromContext(ctx, k.component.name()), k) << file;
    }
  }
  EXPECT_THROW(ComponentKindFromContext(Context(), "Date"), UnknownAssetError);
}

TEST(KindingTest, ContractsAndAnnotations) {
  ComponentDecl d = ParseComponent(
      "Class C\n"
      "  /** @concurrency guarded\n"
      "   *  @ensure (x > 5) */\n"
      "  -- requires: x > 0\n"
      "  callmethod f(x: Integer);\n"
      "  /** @ensure result is sorted */\n"
      "  method g(): List;\n"
      "end;\n");
  KindingResult r = KindComponent(Context(), d);
  const FeatureKind* f = r.kind.Find(Direction::kRequired, "f");
  ASSERT_NE(f, nullptr);
  EXPECT_EQ(f->precondition->ToString(), "x>0");
  EXPECT_EQ(f->guarantee->ToString(), "x>5");
  EXPECT_EQ(f->concurrency, "GuardedSemantics");
  EXPECT_EQ(r.context.LiteralOf(I("C.f.Precondition")), "x>0");
  const FeatureKind* g = r.kind.Find(Direction::kProvided, "g");
  ASSERT_NE(g, nullptr);
  EXPECT_EQ(g->postcondition, "result is sorted");
  EXPECT_EQ(g->return_type, "List");
}

TEST(KindingTest, OtherPropertiesKeptAsLiterals) {
  ComponentDecl d =
      ParseComponent("Class C\n  /** @author ann */\n  method f();\nend;\n");
  KindingResult r = KindComponent(Context(), d);
  EXPECT_EQ(r.context.LiteralOf(I("C.f.Property0")), "@author ann");
}

TEST(KindingTest, UnboundContractIdentifier) {
  ComponentDecl d = ParseComponent(
      "Class C\n  -- requires: y > 0\n  method f(x: Integer);\nend;\n");
  EXPECT_THROW(KindComponent(Context(), d), UnboundIdentifier);
}

TEST(KindingTest, RealizesNeedsDeclaredKind) {
  ComponentDecl d = ParseComponent(
      "Class C\n  /** @realizes Celsius */\n  method f();\nend;\n");
  EXPECT_THROW(KindComponent(Context(), d), UnknownKind);
  KindingResult r = KindComponent(Context(), d, {true});
  const FeatureKind* f = r.kind.Find(Direction::kProvided, "f");
  EXPECT_EQ(f->realizes, KindExpr::Atom("Celsius"));
  Context declared = Context().Add(Inheritance{K("Celsius"), K("Unit")});
  EXPECT_NO_THROW(KindComponent(declared, d));
}

TEST(KindingTest, DeterministicAcrossRuns) {
  Context a = KindComponent(Context(), Date()).context;
  Context b = KindComponent(Context(), Date()).context;
  EXPECT_EQ(a, b);
}

TEST(KindingTest, ConcurrencyNames) {
  EXPECT_EQ(ConcurrencySemanticsName("GUARDED"), "GuardedSemantics");
  EXPECT_EQ(ConcurrencySemanticsName("sequential"), "SequentialSemantics");
}

TEST(KindingTest, Subsumption) {
  FeatureKind parent{I("P.f"), "f", Direction::kProvided,    {},
                     "void",   {},  ParseContract("x > 10"), {},
                     {},       {}};
  FeatureKind child = parent;
  child.precondition = ParseContract("x > 0");
  EXPECT_TRUE(CheckSubsumption(child, parent));
  EXPECT_FALSE(CheckSubsumption(parent, child));
  child.precondition.reset();
  EXPECT_TRUE(CheckSubsumption(child, parent));
  child.precondition = ParseContract("x > y");
  EXPECT_THROW(CheckSubsumption(child, parent), UndecidableContract);
}

}  // namespace
}  // namespace kindc
