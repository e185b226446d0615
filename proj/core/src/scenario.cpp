#include "tsal/scenario.hpp"

#include <algorithm>

namespace tsal
{

  bool operator==(const DrawTuple& a, const DrawTuple& b)
  {
    return a.subs == b.subs && a.names == b.names;
  }

  bool operator==(const AllPermutations& a, const AllPermutations& b)
  {
    return a.args == b.args && a.value == b.value;
  }

  bool operator==(const NFluentDraws& a, const NFluentDraws& b)
  {
    return a.args == b.args && a.value == b.value && a.n == b.n;
  }

  bool operator==(const CombineFunctions& a, const CombineFunctions& b)
  {
    return a.subs == b.subs;
  }

  std::vector<Symbol> gensym_names(std::string_view prefix, std::int64_t count, std::set<Symbol>& taken)
  {
    std::vector<Symbol> out;
    std::string base = to_upper(prefix);
    for (std::int64_t i = 1; static_cast<std::int64_t>(out.size()) < count; ++i)
    {
      Symbol s(base + std::to_string(i));
      if (taken.insert(s).second)
        out.push_back(s);
    }
    return out;
  }

  const Value* ScenarioGenerator::default_for(const Symbol& fn) const
  {
    for (const auto& d : defaults)
      if (d.function == fn)
        return &d.value;
    return nullptr;
  }

  const ObjectGenerator* ScenarioGenerator::object_generator(const Symbol& n) const
  {
    auto it = std::find_if(object_generators.begin(), object_generators.end(),
                           [&](const auto& g) { return g.name == n; });
    return it == object_generators.end() ? nullptr : &*it;
  }

  const ValueGenerator* ScenarioGenerator::value_generator(const Symbol& n) const
  {
    auto it = std::find_if(value_generators.begin(), value_generators.end(),
                           [&](const auto& g) { return g.name == n; });
    return it == value_generators.end() ? nullptr : &*it;
  }

  const FluentGenerator* ScenarioGenerator::fluent_generator(const Symbol& fn) const
  {
    auto it = std::find_if(fluent_generators.begin(), fluent_generators.end(),
                           [&](const auto& g) { return g.function == fn; });
    return it == fluent_generators.end() ? nullptr : &*it;
  }

}  // namespace tsal
