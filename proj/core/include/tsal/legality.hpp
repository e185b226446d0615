#pragma once

#include <map>
#include <vector>

#include "tsal/ast.hpp"
#include "tsal/diagnostic.hpp"
#include "tsal/ops.hpp"
#include "tsal/scenario.hpp"

namespace tsal
{

  // Variable -> type assignment.
  using TypeEnv = std::map<Symbol, Symbol>;
  // Object name -> type, for constants and known state objects.
  using ObjectTypes = std::map<Symbol, Symbol>;

  struct LegalityReport
  {
    Diagnostics diagnostics;

    bool legal() const { return !has_errors(diagnostics); }
  };

  LegalityReport check_domain(const Domain& d);
  LegalityReport check_environment(const Domain& d, const ScenarioGenerator& sg);

  // derived_from plus INTEGER -> REAL promotion.
  bool compatible_type(const Symbol& actual, const Symbol& expected, const Domain& d);

  bool assignable_to(const Symbol& ty, const Calculation& c, const TypeEnv& theta, const Domain& d);
  bool value_assignable(const Value& v, const Symbol& ty, const Domain& d, const ObjectTypes& objects);

  bool legal_condition(const Condition& c, const TypeEnv& theta, const SymbolSet& bound, const Domain& d);
  bool legal_ground_fluent(const GroundFluent& gf, const Domain& d, const ObjectTypes& objects);

  // Equality binding closure, also binding the bare variables of positive
  // BOOLEAN function terms. The result includes `seed`.
  SymbolSet bound_variables(const std::vector<Condition>& conds, const SymbolSet& seed, const Domain& d);

  // Types for variables not in `seed`, from how they are used.
  TypeEnv infer_types(const std::vector<Condition>& conds, const std::vector<Effect>& effects,
                      const std::vector<ContinuousChange>& changes, TypeEnv seed, const Domain& d);

  TypeEnv action_type_env(const ActionModel& a, const Domain& d);
  SymbolSet action_bound_variables(const ActionModel& a, const Domain& d);

  ObjectTypes constant_types(const Domain& d);
  // Constants plus the names OBJECTLIST generators will produce.
  ObjectTypes static_objects(const Domain& d, const ScenarioGenerator& sg);

}  // namespace tsal
