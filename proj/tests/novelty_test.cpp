#include <gtest/gtest.h>

#include "expect.hpp"
#include "support.hpp"
#include "tsal/novelty.hpp"
#include "tsal/reader.hpp"

using namespace tsal;

namespace
{
  TransformationSequence script(std::string_view text)
  {
    return tsal::test::must(parse_transformation_script(text), std::string(text));
  }

  NoveltyVerdict run(const TransformationSequence& ts, const char* pov = "POV-AGENT")
  {
    auto env = tsal::test::cartpole();
    return classify(ts, env.domain, env.sg, Symbol(pov));
  }
}

TEST(Levels, Names)
{
  for (std::size_t i = 0; i < novelty_level_count; ++i)
  {
    NoveltyLevel l = level_at(i);
    EXPECT_EQ(static_cast<std::size_t>(l), i + 1);
    EXPECT_EQ(level_from_name(level_name(l)), l);
  }
  EXPECT_EQ(level_from_name("goals"), NoveltyLevel::Goals);
  EXPECT_FALSE(level_from_name("SIDEWAYS"));
}

class NoveltyFixture : public ::testing::TestWithParam<std::string>
{
};

TEST_P(NoveltyFixture, OwnLevelMatchesStoredVerdict)
{
  auto e = tsal::test::load_expectation(GetParam());
  ASSERT_TRUE(e.level.has_value());
  auto env = tsal::test::cartpole();
  auto ts = tsal::test::load_script(e.script);
  NoveltyVerdict v = classify(ts, env.domain, env.sg, e.pov);
  EXPECT_EQ(v[*e.level], e.verdict);
  EXPECT_FALSE(v[*e.level].elements.empty());
}

TEST_P(NoveltyFixture, WitnessesAreSound)
{
  auto e = tsal::test::load_expectation(GetParam());
  auto env = tsal::test::cartpole();
  auto ts = tsal::test::load_script(e.script);
  NoveltyClassifier c(ts, env.domain, env.sg, e.pov);
  for (std::size_t li = 0; li < novelty_level_count; ++li)
  {
    LevelVerdict lv = c.level(level_at(li));
    EXPECT_EQ(lv.holds, !lv.steps.empty());
    for (std::size_t i = 0; i < ts.size(); ++i)
    {
      bool listed = std::find(lv.steps.begin(), lv.steps.end(), i) != lv.steps.end();
      auto w = c.witness_at(level_at(li), i);
      EXPECT_EQ(listed, w.has_value()) << level_name(level_at(li)) << " step " << i;
      if (w)
        for (const auto& s : *w)
          EXPECT_NE(std::find(lv.elements.begin(), lv.elements.end(), s), lv.elements.end());
    }
  }
}

TEST_P(NoveltyFixture, NoopSuffixKeepsVerdict)
{
  auto e = tsal::test::load_expectation(GetParam());
  auto ts = tsal::test::load_script(e.script);
  auto before = run(ts);
  ts.push_back(script("(REMOVEACTION :ACTIONNAME NO-SUCH-ACTION)").front());
  auto after = run(ts);
  for (std::size_t li = 0; li < novelty_level_count; ++li)
    EXPECT_EQ(before.levels[li].holds, after.levels[li].holds) << level_name(level_at(li));
}

INSTANTIATE_TEST_SUITE_P(Fixtures, NoveltyFixture, ::testing::ValuesIn(tsal::test::novelty_fixtures()),
                         [](const auto& info) {
                           std::string n = info.param;
                           std::replace(n.begin(), n.end(), '-', '_');
                           return n;
                         });

TEST(Novelty, EmptySequenceIsAllFalse)
{
  auto e = tsal::test::load_expectation("empty");
  EXPECT_FALSE(e.level.has_value());
  EXPECT_TRUE(tsal::test::load_script(e.script).empty());
  NoveltyVerdict v = run({});
  EXPECT_EQ(v, NoveltyVerdict{});
}

TEST(Novelty, GoalsIffPerformanceIsReplaced)
{
  // Replacing the performance with an identical calculation still counts.
  auto same = run(script("(REPLACEPERFORMANCECALCULATION :PERFORMANCE "
                         "(SUM ?C (CONTROLS ?AG ?C) (- (* (POLE-ANGLE ?C) (POLE-ANGLE ?C)))))"));
  EXPECT_TRUE(same[NoveltyLevel::Goals].holds);
  for (const auto& stem : tsal::test::novelty_fixtures())
  {
    auto ts = tsal::test::load_script("novelty/" + stem + ".tx");
    bool replaces = std::any_of(ts.begin(), ts.end(), [](const Transformation& t) {
      return t.kind == TxKind::ReplacePerformanceCalculation;
    });
    EXPECT_EQ(run(ts)[NoveltyLevel::Goals].holds, replaces) << stem;
  }
}

TEST(Novelty, PreconditionBeforeItsActionIsNotNovel)
{
  // The precondition names an absent action and so changes nothing.
  auto ts = script(R"(
    (ADDPRECONDITION :ACTIONNAME BRAKE :PRECONDITION (CONTROLS ?AG ?C))
    (ADDACTION :ACTIONNAME BRAKE :PERFORMER ?AG :PARAMETERS (?C) :PARAMETERTYPES (CART)))");
  auto v = run(ts);
  EXPECT_EQ(std::find(v[NoveltyLevel::Actions].steps.begin(), v[NoveltyLevel::Actions].steps.end(), 0u),
            v[NoveltyLevel::Actions].steps.end());
  std::swap(ts[0], ts[1]);
  auto w = run(ts);
  EXPECT_NE(std::find(w[NoveltyLevel::Actions].steps.begin(), w[NoveltyLevel::Actions].steps.end(), 1u),
            w[NoveltyLevel::Actions].steps.end());
}

TEST(Novelty, PovMustDeriveFromAgent)
{
  auto env = tsal::test::cartpole();
  EXPECT_THROW(NoveltyClassifier({}, env.domain, env.sg, Symbol("CART")), Error);
  EXPECT_THROW(NoveltyClassifier({}, env.domain, env.sg, Symbol("UNDECLARED")), Error);
  EXPECT_NO_THROW(NoveltyClassifier({}, env.domain, env.sg, names::AGENT));
}

TEST(Novelty, VerdictText)
{
  auto v = run(tsal::test::load_script("novelty/level7.tx"));
  auto text = to_string(v);
  EXPECT_NE(text.find("GOALS true steps=3 elements=CLOCK-TIME"), std::string::npos) << text;
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), static_cast<long>(novelty_level_count));
}

TEST(Helpers, RelevantFunction)
{
  auto env = tsal::test::cartpole();
  EXPECT_TRUE(relevant_function(Symbol("CONTROLS"), env.domain, env.sg));
  EXPECT_TRUE(relevant_function(Symbol("POLE-ANGLE"), env.domain, env.sg));
  EXPECT_FALSE(relevant_function(Symbol("BLOCK-VELOCITY"), env.domain, env.sg));
}

TEST(Helpers, AxiomChain)
{
  auto env = tsal::test::cartpole();
  const Axiom& upright = env.domain.axioms.front();
  EXPECT_TRUE(function_affects_axiom(Symbol("POLE-ANGLE"), upright, env.domain));
  EXPECT_FALSE(function_affects_axiom(Symbol("CART-VELOCITY"), upright, env.domain));
}

TEST(Helpers, Environmental)
{
  auto env = tsal::test::cartpole();
  auto l6 = apply_sequence(tsal::test::load_script("novelty/level6.tx"), env.domain, env.sg);
  EXPECT_TRUE(is_environmental(*l6.domain.function(Symbol("JUMP-TIME")), l6.domain));
  EXPECT_FALSE(is_environmental(*l6.domain.function(Symbol("CART-VELOCITY")), l6.domain));
  // No conditions, so no environmental function among them.
  EXPECT_FALSE(is_environmental(*l6.domain.process(Symbol("JUMP-TICKS")), l6.domain));
  EXPECT_TRUE(is_environmental(*l6.domain.event(Symbol("JUMP-PULLS")), l6.domain));
  auto l8 = apply_sequence(tsal::test::load_script("novelty/level8.tx"), env.domain, env.sg);
  EXPECT_FALSE(is_environmental(*l8.domain.event(Symbol("GRAVITY-PULLS")), l8.domain));
}
