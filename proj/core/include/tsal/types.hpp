#pragma once

#include <set>
#include <vector>

#include "tsal/ast.hpp"

namespace tsal
{

  // Declared parents of t, in supertype declaration order.
  std::vector<Symbol> parents_of(const Symbol& t, const Domain& d);

  // t together with every type reachable from it along supertype pairs.
  std::set<Symbol> ancestors_of(const Symbol& t, const Domain& d);

  // Reflexive-transitive supertype relation. Any type whose supertype chain
  // reaches a parentless non-basic type also derives from OBJECT.
  bool derived_from(const Symbol& descendant, const Symbol& ancestor, const Domain& d);

  bool is_numeric_type(const Symbol& t, const Domain& d);

  // Types lying on a supertype cycle, sorted.
  std::vector<Symbol> cyclic_types(const Domain& d);

}  // namespace tsal
