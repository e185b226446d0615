#include "tsal/types.hpp"

#include <algorithm>

namespace tsal
{

  std::vector<Symbol> parents_of(const Symbol& t, const Domain& d)
  {
    std::vector<Symbol> out;
    for (const auto& tp : d.supertypes)
      if (tp.child == t)
        out.push_back(tp.parent);
    return out;
  }

  std::set<Symbol> ancestors_of(const Symbol& t, const Domain& d)
  {
    std::set<Symbol> seen{t};
    std::vector<Symbol> todo{t};
    while (!todo.empty())
    {
      Symbol cur = todo.back();
      todo.pop_back();
      for (const auto& tp : d.supertypes)
        if (tp.child == cur && seen.insert(tp.parent).second)
          todo.push_back(tp.parent);
    }
    return seen;
  }

  bool derived_from(const Symbol& descendant, const Symbol& ancestor, const Domain& d)
  {
    if (descendant == ancestor)
      return true;
    auto reach = ancestors_of(descendant, d);
    if (reach.contains(ancestor))
      return true;
    if (ancestor != names::OBJECT)
      return false;
    return std::any_of(reach.begin(), reach.end(), [&](const Symbol& t) {
      return !is_basic_type(t) && parents_of(t, d).empty();
    });
  }

  bool is_numeric_type(const Symbol& t, const Domain& d)
  {
    return derived_from(t, names::REAL, d) || derived_from(t, names::INTEGER, d);
  }

  std::vector<Symbol> cyclic_types(const Domain& d)
  {
    std::set<Symbol> out;
    for (const auto& tp : d.supertypes)
      if (tp.child == tp.parent || ancestors_of(tp.parent, d).contains(tp.child))
        out.insert(tp.child);
    return {out.begin(), out.end()};
  }

}  // namespace tsal
