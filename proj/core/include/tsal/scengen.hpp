#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "tsal/ast.hpp"
#include "tsal/diagnostic.hpp"
#include "tsal/legality.hpp"
#include "tsal/random.hpp"
#include "tsal/scenario.hpp"

namespace tsal
{

  struct FluentKey
  {
    Symbol function;
    std::vector<Value> args;

    friend bool operator==(const FluentKey&, const FluentKey&) = default;
    friend bool operator<(const FluentKey& a, const FluentKey& b);
  };

  struct State
  {
    // Creation order; domain constants come first.
    std::vector<std::pair<Symbol, Symbol>> objects;
    std::map<Symbol, Value> defaults;
    std::map<FluentKey, Value> assignments;

    void add_object(const Symbol& name, const Symbol& type);
    bool has_object(const Symbol& name) const;
    ObjectTypes object_types() const;
    std::vector<Symbol> objects_of_type(const Symbol& type, const Domain& d) const;

    void assign(const GroundFluent& gf);
    // Assignment, else default, else null.
    const Value* value_of(const Symbol& fn, const std::vector<Value>& args) const;

    friend bool operator==(const State&, const State&) = default;
  };

  // One element of a draw: a plain value or a named tuple.
  using Tuple = std::vector<std::pair<Symbol, Value>>;
  using DrawItem = std::variant<Value, Tuple>;

  inline constexpr int filter_retry_budget = 10000;

  // Throws tsal::Error when a generator cannot be drawn or yields an
  // illegal ground fluent.
  State sample_state(const Domain& d, const ScenarioGenerator& sg, std::uint64_t seed);

  // Draws one value generator in the context of `state` (objects drawn so far).
  std::vector<DrawItem> draw_values(const Domain& d, const ScenarioGenerator& sg, const GeneratorExpr& g,
                                    const State& state, RandomStream& rng);

  // Performance of `agent`. `rng` is needed only for :UNIFORM / :GAUSSIAN.
  double evaluate_performance(const Calculation& perf, const State& st, const Symbol& agent, const Domain& d,
                              RandomStream* rng = nullptr);

  Value evaluate(const Calculation& c, const State& st, const std::map<Symbol, Value>& env, const Domain& d,
                 RandomStream* rng = nullptr);
  bool evaluate(const Condition& c, const State& st, const std::map<Symbol, Value>& env, const Domain& d,
                RandomStream* rng = nullptr);

  // (STATE (:OBJECTS (TYPE name...)...) (:DEFAULTS (FN v)...) (:ASSIGNMENTS (= (FN args) v)...))
  std::string print_state(const State& st);
  Parsed<State> parse_state(std::string_view text, const std::string& file = {});

}  // namespace tsal
