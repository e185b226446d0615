#pragma once

#include <set>
#include <vector>

#include "tsal/ast.hpp"

namespace tsal
{

  using SymbolSet = std::set<Symbol>;

  // Variables occurring free; SUM/PRODUCT and FORALL binders are removed.
  SymbolSet free_variables(const Term& t);
  SymbolSet free_variables(const Calculation& c);
  SymbolSet free_variables(const Condition& c);

  // Least fixed point of the equality binding rule over a condition list.
  // Only (= ?v calc) / (= calc ?v) with calc fully bound binds ?v; AND
  // unions its operands; everything else binds nothing.
  SymbolSet condition_bound_variables(const std::vector<Condition>& conds,
                                      const SymbolSet& already_bound);

  // Single-condition rule, without iteration.
  SymbolSet condition_bound_variables(const Condition& cond, const SymbolSet& bound);

  bool function_in(const Symbol& fn, const Term& t);
  bool function_in(const Symbol& fn, const Calculation& c);
  bool function_in(const Symbol& fn, const Condition& c);

  // Names of every function term in the expression, first-occurrence order.
  std::vector<Symbol> functions_in(const Condition& c);
  std::vector<Symbol> functions_in(const Calculation& c);

  // Number of bare DT symbols in the calculation.
  int count_dt(const Calculation& c);

  // Argument variables of f whose type derives from OBJECT or AGENT in d.
  std::vector<Symbol> entities_in_function(const FunctionDecl& f, const Domain& d);

}  // namespace tsal
