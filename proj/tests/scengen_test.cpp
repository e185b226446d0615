#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>

#include "support.hpp"
#include "tsal/legality.hpp"
#include "tsal/scengen.hpp"

using namespace tsal;

namespace
{
  std::int64_t as_int(const Value& v)
  {
    if (auto i = std::get_if<std::int64_t>(&v.v))
      return *i;
    throw std::runtime_error("not an integer: " + to_string(v));
  }

  double as_real(const Value& v)
  {
    if (auto d = std::get_if<double>(&v.v))
      return *d;
    return static_cast<double>(as_int(v));
  }

  State sample(const Environment& env, std::uint64_t seed) { return sample_state(env.domain, env.sg, seed); }

  State def13()
  {
    return tsal::test::must(parse_state(tsal::test::read_fixture("cartpole/def13.tst")), "def13");
  }

  Calculation calc(std::string_view text) { return tsal::test::must(parse_calculation(text), std::string(text)); }
}

// ------------------------------------------------------------- mudworld

TEST(Mudworld, RoversStartNearTheirDestination)
{
  auto env = tsal::test::mudworld();
  for (std::uint64_t seed = 0; seed < 100; ++seed)
  {
    State st = sample(env, seed);
    auto rovers = st.objects_of_type(Symbol("ROBOT"), env.domain);
    ASSERT_EQ(rovers.size(), 6u);
    int dests = 0;
    for (const auto& [key, v] : st.assignments)
    {
      if (key.function != Symbol("ROBOT-DEST"))
        continue;
      ASSERT_EQ(v, Value{true});
      ++dests;
      Symbol r = std::get<Symbol>(key.args.at(0).v);
      auto x1 = as_int(*st.value_of(Symbol("ROBOT-X-LOC"), {Value{r}}));
      auto y1 = as_int(*st.value_of(Symbol("ROBOT-Y-LOC"), {Value{r}}));
      auto x2 = as_int(key.args.at(1));
      auto y2 = as_int(key.args.at(2));
      EXPECT_LT(std::abs(x1 - x2) + std::abs(y1 - y2), 4) << "seed " << seed << " " << r.str();
      for (auto c : {x1, y1, x2, y2})
      {
        EXPECT_GE(c, 1);
        EXPECT_LE(c, 6);
      }
    }
    EXPECT_EQ(dests, 6) << "seed " << seed;
  }
}

TEST(Mudworld, EveryCellHasAMuddyFluent)
{
  auto env = tsal::test::mudworld();
  State st = sample(env, 3);
  std::set<std::pair<std::int64_t, std::int64_t>> cells;
  for (const auto& [key, v] : st.assignments)
    if (key.function == Symbol("MUDDY"))
    {
      ASSERT_TRUE(std::holds_alternative<bool>(v.v));
      cells.emplace(as_int(key.args.at(0)), as_int(key.args.at(1)));
    }
  EXPECT_EQ(cells.size(), 36u);
}

TEST(Mudworld, SampledFluentsAreLegal)
{
  auto env = tsal::test::mudworld();
  State st = sample(env, 11);
  auto objs = st.object_types();
  for (const auto& [key, v] : st.assignments)
    EXPECT_TRUE(legal_ground_fluent({key.function, key.args, v}, env.domain, objs)) << key.function.str();
}

TEST(Sampler, BernoulliFrequency)
{
  auto env = tsal::test::mudworld();
  GeneratorExpr g{Bernoulli{0.3}};
  RandomStream rng(2024);
  int hits = 0;
  const int n = 10000;
  for (int i = 0; i < n; ++i)
  {
    auto items = draw_values(env.domain, env.sg, g, State{}, rng);
    ASSERT_EQ(items.size(), 1u);
    if (std::get<Value>(items[0]) == Value{true})
      ++hits;
  }
  EXPECT_NEAR(hits / static_cast<double>(n), 0.30, 0.02);
}

TEST(Sampler, FixedSeedIsByteDeterministic)
{
  auto env = tsal::test::mudworld();
  EXPECT_EQ(print_state(sample(env, 42)), print_state(sample(env, 42)));
  EXPECT_NE(print_state(sample(env, 42)), print_state(sample(env, 43)));
}

TEST(Sampler, ConstantsComeFirst)
{
  auto env = tsal::test::cartpole();
  State st = sample(env, 1);
  ASSERT_FALSE(st.objects.empty());
  EXPECT_EQ(st.objects.front().first, Symbol("AGENT1"));
  EXPECT_TRUE(st.has_object(Symbol("CART1")));
  EXPECT_EQ(st.objects_of_type(Symbol("BLOCK"), env.domain).size(), 3u);
}

TEST(Sampler, UniformRealStaysInRange)
{
  auto env = tsal::test::cartpole();
  for (std::uint64_t seed = 0; seed < 50; ++seed)
  {
    State st = sample(env, seed);
    double x = as_real(*st.value_of(Symbol("CART-POSITION"), {Value{Symbol("CART1")}}));
    EXPECT_GE(x, -20.0);
    EXPECT_LT(x, 20.0);
  }
}

TEST(Sampler, UnknownGeneratorThrows)
{
  auto env = tsal::test::cartpole();
  env.sg.fluent_generators.push_back({Symbol("POLE-ANGLE"), GeneratorExpr{GenRef{Symbol("NOPE")}}});
  EXPECT_THROW(sample(env, 0), Error);
}

TEST(State, PrintParseRoundTrip)
{
  auto env = tsal::test::mudworld();
  State st = sample(env, 5);
  auto text = print_state(st);
  auto back = tsal::test::must(parse_state(text), "state");
  EXPECT_EQ(print_state(back), text);
}

// ---------------------------------------------------------- performance

TEST(Performance, Def13)
{
  auto env = tsal::test::cartpole();
  double p = evaluate_performance(*env.sg.performance, def13(), Symbol("AGENT1"), env.domain);
  EXPECT_NEAR(p, -0.01, 1e-12);
}

TEST(Performance, AgentWithoutCartsScoresZero)
{
  auto env = tsal::test::cartpole();
  State st = def13();
  st.add_object(Symbol("AGENT2"), names::AGENT);
  EXPECT_EQ(evaluate_performance(*env.sg.performance, st, Symbol("AGENT2"), env.domain), 0.0);
}

TEST(Performance, EmptyAggregates)
{
  auto env = tsal::test::cartpole();
  State st = def13();
  EXPECT_EQ(evaluate_performance(calc("(SUM ?C (WINS ?C) 5)"), st, Symbol("AGENT1"), env.domain), 0.0);
  EXPECT_EQ(evaluate_performance(calc("(PRODUCT ?C (WINS ?C) 5)"), st, Symbol("AGENT1"), env.domain), 1.0);
}
