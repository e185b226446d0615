#include <gtest/gtest.h>

#include <set>

#include "random_domain.hpp"
#include "support.hpp"
#include "tx_catalog.hpp"
#include "tsal/legality.hpp"
#include "tsal/reader.hpp"
#include "tsal/transform.hpp"

using namespace tsal;

namespace
{
  Transformation tx(std::string_view text)
  {
    auto ts = tsal::test::must(parse_transformation_script(text), std::string(text));
    if (ts.size() != 1)
      throw std::runtime_error("expected one transformation");
    return ts.front();
  }

  // Names of the environment components that differ.
  std::set<std::string> changed(const Environment& a, const Environment& b)
  {
    std::set<std::string> out;
    auto cmp = [&](const char* n, bool eq) {
      if (!eq)
        out.insert(n);
    };
    cmp("types", a.domain.types == b.domain.types);
    cmp("supertypes", a.domain.supertypes == b.domain.supertypes);
    cmp("constants", a.domain.constants == b.domain.constants);
    cmp("functions", a.domain.functions == b.domain.functions);
    cmp("axioms", a.domain.axioms == b.domain.axioms);
    cmp("actions", a.domain.actions == b.domain.actions);
    cmp("events", a.domain.events == b.domain.events);
    cmp("processes", a.domain.processes == b.domain.processes);
    cmp("fluents", a.sg.fluents == b.sg.fluents);
    cmp("defaults", a.sg.defaults == b.sg.defaults);
    cmp("object_generators", a.sg.object_generators == b.sg.object_generators);
    cmp("value_generators", a.sg.value_generators == b.sg.value_generators);
    cmp("fluent_generators", a.sg.fluent_generators == b.sg.fluent_generators);
    cmp("performance", a.sg.performance == b.sg.performance);
    return out;
  }

  std::string component_of(TxKind k)
  {
    switch (k)
    {
    case TxKind::AddType:
    case TxKind::RemoveType:
      return "types";
    case TxKind::AddTypeParent:
    case TxKind::RemoveTypeParent:
      return "supertypes";
    case TxKind::AddConstant:
    case TxKind::RemoveConstant:
      return "constants";
    case TxKind::AddFunction:
    case TxKind::RemoveFunction:
      return "functions";
    case TxKind::AddAxiom:
    case TxKind::RemoveAxiom:
      return "axioms";
    case TxKind::AddAction:
    case TxKind::AddPrecondition:
    case TxKind::AddActionEffect:
    case TxKind::RemoveAction:
    case TxKind::RemovePrecondition:
    case TxKind::RemoveActionEffect:
      return "actions";
    case TxKind::AddEvent:
    case TxKind::ChangeFrequency:
    case TxKind::ChangeProbability:
    case TxKind::AddTrigger:
    case TxKind::AddEventEffect:
    case TxKind::RemoveEvent:
    case TxKind::RemoveTrigger:
    case TxKind::RemoveEventEffect:
      return "events";
    case TxKind::AddProcess:
    case TxKind::AddProcessCondition:
    case TxKind::AddProcessChange:
    case TxKind::RemoveProcess:
    case TxKind::RemoveProcessCondition:
    case TxKind::RemoveProcessChange:
      return "processes";
    case TxKind::AddFluentValue:
      return "fluents";
    case TxKind::AddDefaultValue:
      return "defaults";
    case TxKind::AddObjectGenerator:
      return "object_generators";
    case TxKind::AddValueGenerator:
      return "value_generators";
    case TxKind::AddFluentGenerator:
      return "fluent_generators";
    case TxKind::ReplacePerformanceCalculation:
      return "performance";
    }
    return "?";
  }
}

TEST(TxCatalog, CoversEveryHeadOnce)
{
  std::set<TxKind> kinds;
  for (const auto& s : tsal::test::tx_catalog())
    kinds.insert(s.kind);
  EXPECT_EQ(kinds.size(), tx_kind_count);
  EXPECT_EQ(tsal::test::tx_catalog().size(), tx_kind_count);
}

class TxHead : public ::testing::TestWithParam<tsal::test::TxSample>
{
};

TEST_P(TxHead, RoundTripsThroughText)
{
  Transformation t = tx(GetParam().text);
  EXPECT_EQ(t.kind, GetParam().kind);
  EXPECT_EQ(tx(to_string(t)), t);
  EXPECT_EQ(kind_from_head(head_name(t.kind)), t.kind);
}

TEST_P(TxHead, ApplyTouchesOnlyItsComponent)
{
  auto base = tsal::test::cartpole();
  Transformation t = tx(GetParam().text);
  Environment after = apply(t, base);
  EXPECT_EQ(changed(base, after), std::set<std::string>{component_of(t.kind)});
}

INSTANTIATE_TEST_SUITE_P(AllHeads, TxHead, ::testing::ValuesIn(tsal::test::tx_catalog()),
                         [](const auto& info) { return std::string(head_name(info.param.kind)); });

TEST(Apply, AddActionEffectGrowsPush)
{
  auto base = tsal::test::cartpole();
  auto after = apply(tx("(ADDACTIONEFFECT :ACTIONNAME PUSH :EFFECT (DECREASE (PUSH-BUDGET ?AG) ?FORCE))"), base);
  ASSERT_EQ(after.domain.actions.size(), base.domain.actions.size());
  const ActionModel& push = *after.domain.action(Symbol("PUSH"));
  ASSERT_EQ(push.effects.size(), 2u);
  EXPECT_EQ(push.effects.back().target, Symbol("PUSH-BUDGET"));
  EXPECT_EQ(push.preconditions, base.domain.action(Symbol("PUSH"))->preconditions);
}

TEST(Apply, RemoveAbsentActionIsIdentity)
{
  auto base = tsal::test::cartpole();
  EXPECT_EQ(apply(tx("(REMOVEACTION :ACTIONNAME NOSUCH)"), base), base);
}

TEST(Apply, ReplacePerformanceKeepsTheRest)
{
  auto base = tsal::test::cartpole();
  auto after = apply(tx("(REPLACEPERFORMANCECALCULATION :PERFORMANCE (CLOCK-TIME))"), base);
  EXPECT_EQ(after.sg.performance, Calculation{fn("CLOCK-TIME")});
  EXPECT_EQ(after.domain, base.domain);
  EXPECT_EQ(after.sg.fluents, base.sg.fluents);
  EXPECT_EQ(after.sg.defaults, base.sg.defaults);
  EXPECT_EQ(after.sg.object_generators, base.sg.object_generators);
  EXPECT_EQ(after.sg.value_generators, base.sg.value_generators);
  EXPECT_EQ(after.sg.fluent_generators, base.sg.fluent_generators);
}

TEST(Apply, AddActionStartsEmpty)
{
  auto after = apply(tx("(ADDACTION :ACTIONNAME BRAKE :PERFORMER ?AG :PARAMETERS (?C) :PARAMETERTYPES (CART))"),
                     tsal::test::cartpole());
  const ActionModel* a = after.domain.action(Symbol("BRAKE"));
  ASSERT_NE(a, nullptr);
  EXPECT_EQ(a->parameters, (TypedList{{Symbol("?C"), Symbol("CART")}}));
  EXPECT_TRUE(a->preconditions.empty() && a->effects.empty());
}

TEST(Apply, AddEventDefaults)
{
  auto after = apply(tx("(ADDEVENT :EVENTNAME TOPPLES :QUALITIES (?C) :QUALITYTYPES (CART))"), tsal::test::cartpole());
  const EventModel* ev = after.domain.event(Symbol("TOPPLES"));
  ASSERT_NE(ev, nullptr);
  EXPECT_EQ(ev->probability, 1.0);
  EXPECT_EQ(ev->frequency, 0.0);
  EXPECT_TRUE(ev->triggers.empty() && ev->effects.empty());
}

TEST(Apply, AddProcessChangeUnites)
{
  auto base = tsal::test::cartpole();
  auto after = apply(tx(tsal::test::tx_catalog()[static_cast<std::size_t>(TxKind::AddProcessChange)].text), base);
  EXPECT_EQ(after.domain.processes.front().changes.size(), 2u);
}

TEST(Apply, FluentValueReplacesSameKey)
{
  auto base = tsal::test::cartpole();
  auto after = apply(tx("(ADDFLUENTVALUE :FUNCTIONNAME CONTROLS :FLUENTARGS (AGENT1 CART1) :VALUE FALSE)"), base);
  ASSERT_EQ(after.sg.fluents.size(), 1u);
  EXPECT_EQ(after.sg.fluents[0].value, Value{false});
}

TEST(Apply, GeneratorsSupersedeByName)
{
  auto base = tsal::test::cartpole();
  auto after = apply(tx("(ADDOBJECTGENERATOR :NAME BLOCKS :TYPE BLOCK :DRAWFUNCTION (OBJECTLIST 5 \"block\"))"), base);
  EXPECT_EQ(after.sg.object_generators.size(), base.sg.object_generators.size());
  EXPECT_EQ(after.sg.object_generator(Symbol("BLOCKS"))->draw, (GeneratorExpr{ObjectList{5, "block"}}));
  auto fg = apply(tx("(ADDFLUENTGENERATOR :NAME CART-POSITION :DRAWFUNCTION (ALLPERMUTATIONS (CARTS) (CONSTANTFUNCTION 1)))"),
                  base);
  EXPECT_EQ(fg.sg.fluent_generators.size(), base.sg.fluent_generators.size());
}

TEST(Apply, MalformedArgumentsThrow)
{
  Transformation t{TxKind::AddType, {}};
  EXPECT_THROW(apply(t, tsal::test::cartpole()), Error);
  Transformation wrong{TxKind::AddType, {{Symbol("TYPE"), TxArg{3.0}}}};
  EXPECT_THROW(apply(wrong, tsal::test::cartpole()), Error);
  Transformation mismatch{TxKind::AddAction,
                          {{Symbol("ACTIONNAME"), Symbol("A")},
                           {Symbol("PERFORMER"), var("?AG")},
                           {Symbol("PARAMETERS"), std::vector<Symbol>{Symbol("?X")}},
                           {Symbol("PARAMETERTYPES"), std::vector<Symbol>{}}}};
  EXPECT_THROW(apply(mismatch, tsal::test::cartpole()), Error);
}

TEST(ApplySequence, EmptyIsExactIdentity)
{
  auto base = tsal::test::cartpole();
  EXPECT_EQ(apply_sequence({}, base.domain, base.sg), base);
  Diagnostics ws;
  EXPECT_EQ(apply_sequence({}, base.domain, base.sg, ws), base);
  EXPECT_TRUE(ws.empty());
}

TEST(ApplySequence, GhostTypeRoundTrip)
{
  auto base = tsal::test::cartpole();
  auto after = apply_sequence({tx("(ADDTYPE :TYPE GHOST)"), tx("(REMOVETYPE :NAME GHOST)")}, base.domain, base.sg);
  EXPECT_EQ(after.domain.types, base.domain.types);
}

TEST(ApplySequence, JumpScriptCounts)
{
  auto base = tsal::test::cartpole();
  auto ts = tsal::test::load_script("novelty/level6.tx");
  auto after = apply_sequence(ts, base.domain, base.sg);
  EXPECT_NE(after.domain.function(Symbol("JUMP-TIME")), nullptr);
  ASSERT_NE(after.domain.process(Symbol("JUMP-TICKS")), nullptr);
  EXPECT_EQ(after.domain.process(Symbol("JUMP-TICKS"))->changes.size(), 1u);
  const EventModel* ev = after.domain.event(Symbol("JUMP-PULLS"));
  ASSERT_NE(ev, nullptr);
  EXPECT_EQ(ev->triggers.size(), 1u);
  EXPECT_EQ(ev->effects.size(), 2u);
  EXPECT_EQ(after.sg.fluent_generators.size(), base.sg.fluent_generators.size() + 1);
}

TEST(ApplySequence, WarnsOnNoops)
{
  auto base = tsal::test::cartpole();
  Diagnostics ws;
  apply_sequence({tx("(ADDTYPE :TYPE GHOST)"), tx("(REMOVEACTION :ACTIONNAME NOSUCH)"), tx("(ADDTYPE :TYPE GHOST)")},
                 base.domain, base.sg, ws);
  ASSERT_EQ(ws.size(), 2u);
  EXPECT_EQ(ws[0].code, code::TxNoop);
  EXPECT_EQ(ws[0].severity, Severity::Warning);
  EXPECT_NE(ws[0].message.find("step 1"), std::string::npos);
  EXPECT_NE(ws[1].message.find("step 2"), std::string::npos);
}

TEST(ApplySequence, RemoveTypeDoesNotCascade)
{
  auto base = tsal::test::cartpole();
  auto after = apply(tx("(REMOVETYPE :NAME ANGLE)"), base);
  EXPECT_EQ(after.domain.functions, base.domain.functions);
  EXPECT_FALSE(check_domain(after.domain).legal());
}

// ------------------------------------------------------------- properties

TEST(Property, RandomDomainsAreLegal)
{
  tsal::test::DomainGen gen(7);
  for (int i = 0; i < 200; ++i)
  {
    Domain d = gen.domain();
    auto r = check_domain(d);
    ASSERT_TRUE(r.legal()) << print_domain(d) << (r.diagnostics.empty() ? "" : r.diagnostics.front().message);
  }
}

TEST(Property, AddRemoveInverse)
{
  tsal::test::DomainGen gen(20240917);
  for (int i = 0; i < 1000; ++i)
  {
    Environment env{gen.domain(), ScenarioGenerator{}};
    auto [add, remove] = gen.add_remove(env.domain);
    // The pair must also survive a trip through script text.
    auto text = print_transformation_script({add, remove});
    auto reparsed = tsal::test::must(parse_transformation_script(text), text);
    ASSERT_EQ(reparsed, (TransformationSequence{add, remove})) << text;
    ASSERT_EQ(apply(remove, apply(add, env)), env) << "case " << i << "\n" << text;
  }
}

TEST(Property, AddIsIdempotent)
{
  tsal::test::DomainGen gen(99);
  for (int i = 0; i < 300; ++i)
  {
    Environment env{gen.domain(), ScenarioGenerator{}};
    auto add = gen.add_remove(env.domain).first;
    auto once = apply(add, env);
    EXPECT_EQ(apply(add, once), once) << to_string(add);
  }
}
