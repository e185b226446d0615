#pragma once

#include <string>
#include <vector>

#include "support.hpp"
#include "tsal/legality.hpp"

namespace tsal::test
{

  // One clause of the reference environment rewritten so that exactly one
  // legality rule fails.
  struct Mutation
  {
    std::string name;
    bool in_generator;  // rewrite the .tsg instead of the .tsal
    std::string from;
    std::string to;
    std::string code;
  };

  inline const std::vector<Mutation>& mutation_catalog()
  {
    static const std::vector<Mutation> m = {
      {"type_cycle", false, "(POV-AGENT AGENT))", "(POV-AGENT AGENT) (CART CART))", code::LegTypeCycle},
      {"unknown_supertype", false, "(POV-AGENT AGENT))", "(POV-AGENT AGENTS))", code::LegUnknownSupertype},
      {"non_boolean_axiom", false, "(:- (UPRIGHT ?C - CART)", "(:- (POLE-ANGLE ?C - CART)", code::LegAxiomType},
      {"unbound_comparison_variable", false, "(< (CART-VELOCITY ?C) 0.1)", "(< (CART-VELOCITY ?C) ?D)",
       code::LegUnboundVar},
      {"effect_type_mismatch", false, "(INCREASE (CART-VELOCITY ?C) ?FORCE)", "(INCREASE (CART-VELOCITY ?C) TRUE)",
       code::LegEffectType},
      {"increase_on_boolean", false, "(SET (WINS ?AG) TRUE)", "(INCREASE (WINS ?AG) TRUE)", code::LegEffectMod},
      {"dt_missing", false, "(* DT (ANGULAR-MOTION ?C))", "(* 2 (ANGULAR-MOTION ?C))", code::LegDt},
      {"dt_duplicated", false, "(* DT (ANGULAR-MOTION ?C))", "(* DT (* DT (ANGULAR-MOTION ?C)))", code::LegDt},
      {"probability_with_frequency", false, ":QUALITIES (?C - CART)\n    :TRIGGERS",
       ":QUALITIES (?C - CART)\n    :PROBABILITY 0.5\n    :FREQUENCY 1\n    :TRIGGERS", code::LegEventRate},
      {"generator_on_undeclared_function", true, "(FLUENTGENERATOR BLOCK-POSITION", "(FLUENTGENERATOR NOPE",
       code::LegFgFunction},
      {"missing_default", true, "\n    (IS-BLOCK TRUE)", "", code::LegMissingDefault},
    };
    return m;
  }

  inline LegalityReport check_mutation(const Mutation& m)
  {
    std::string dt = read_fixture("cartpole/cartpole.tsal");
    std::string gt = read_fixture("cartpole/cartpole.tsg");
    (m.in_generator ? gt : dt) = replace_once(m.in_generator ? gt : dt, m.from, m.to);
    Domain d = must(parse_domain(dt), m.name + " domain");
    if (!m.in_generator)
      return check_domain(d);
    return check_environment(d, must(parse_scenario_generator(gt), m.name + " generator"));
  }

}  // namespace tsal::test
