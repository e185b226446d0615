#include "tsal/transform.hpp"

#include <algorithm>
#include <string>

#include "tsal/reader.hpp"

namespace tsal
{

  namespace
  {
    template <class T>
    const T& need(const Transformation& t, std::string_view name)
    {
      auto a = t.arg(name);
      if (!a)
        throw Error(std::string(head_name(t.kind)) + " is missing :" + std::string(name));
      auto v = std::get_if<T>(a);
      if (!v)
        throw Error(std::string(head_name(t.kind)) + " has a malformed :" + std::string(name));
      return *v;
    }

    const Symbol& name_arg(const Transformation& t, std::string_view name) { return need<Symbol>(t, name); }

    TypedList typed(const Transformation& t, std::string_view vars, std::string_view types)
    {
      const auto& vs = need<std::vector<Symbol>>(t, vars);
      const auto& ts = need<std::vector<Symbol>>(t, types);
      if (vs.size() != ts.size())
        throw Error(std::string(head_name(t.kind)) + ": :" + std::string(vars) + " and :" + std::string(types) +
                    " differ in length");
      TypedList out;
      for (std::size_t i = 0; i < vs.size(); ++i)
        out.push_back(TypedVar{vs[i], ts[i]});
      return out;
    }

    template <class T, class F>
    void edit_named(std::vector<T>& items, const Symbol& name, F f)
    {
      for (auto& x : items)
        if (x.name == name)
          f(x);
    }

    // Replace in place when an element with the same key exists, else append.
    template <class T, class Same>
    void supersede(std::vector<T>& items, T item, Same same)
    {
      auto it = std::find_if(items.begin(), items.end(), [&](const T& x) { return same(x, item); });
      if (it != items.end())
        *it = std::move(item);
      else
        items.push_back(std::move(item));
    }
  }

  Environment apply(const Transformation& t, const Domain& d, const ScenarioGenerator& sg)
  {
    Environment out{d, sg};
    Domain& dom = out.domain;
    ScenarioGenerator& g = out.sg;

    switch (t.kind)
    {
    case TxKind::AddType:
      insert_unique(dom.types, name_arg(t, "TYPE"));
      break;
    case TxKind::AddTypeParent:
      insert_unique(dom.supertypes, TypeParent{name_arg(t, "CHILD"), name_arg(t, "PARENT")});
      break;
    case TxKind::RemoveTypeParent:
      erase_equal(dom.supertypes, TypeParent{name_arg(t, "CHILD"), name_arg(t, "PARENT")});
      break;
    case TxKind::AddConstant:
      insert_unique(dom.constants, Constant{name_arg(t, "NAME"), name_arg(t, "TYPE")});
      break;
    case TxKind::AddFunction:
      insert_unique(dom.functions, need<FunctionDecl>(t, "FUNCTION"));
      break;
    case TxKind::AddAxiom:
      insert_unique(dom.axioms, need<Axiom>(t, "AXIOM"));
      break;
    case TxKind::RemoveType:
      erase_equal(dom.types, name_arg(t, "NAME"));
      break;
    case TxKind::RemoveConstant:
    {
      const auto& n = name_arg(t, "NAME");
      std::erase_if(dom.constants, [&](const Constant& c) { return c.name == n; });
      break;
    }
    case TxKind::RemoveFunction:
    {
      const auto& n = name_arg(t, "NAME");
      std::erase_if(dom.functions, [&](const FunctionDecl& f) { return f.name == n; });
      break;
    }
    case TxKind::RemoveAxiom:
      erase_equal(dom.axioms, need<Axiom>(t, "AXIOM"));
      break;

    case TxKind::AddAction:
      insert_unique(dom.actions, ActionModel{name_arg(t, "ACTIONNAME"), need<Term>(t, "PERFORMER"),
                                             typed(t, "PARAMETERS", "PARAMETERTYPES"), {}, {}});
      break;
    case TxKind::AddPrecondition:
      edit_named(dom.actions, name_arg(t, "ACTIONNAME"),
                 [&](ActionModel& a) { insert_unique(a.preconditions, need<Condition>(t, "PRECONDITION")); });
      break;
    case TxKind::AddActionEffect:
      edit_named(dom.actions, name_arg(t, "ACTIONNAME"),
                 [&](ActionModel& a) { insert_unique(a.effects, need<Effect>(t, "EFFECT")); });
      break;
    case TxKind::RemoveAction:
    {
      const auto& n = name_arg(t, "ACTIONNAME");
      std::erase_if(dom.actions, [&](const ActionModel& a) { return a.name == n; });
      break;
    }
    case TxKind::RemovePrecondition:
      edit_named(dom.actions, name_arg(t, "ACTIONNAME"),
                 [&](ActionModel& a) { erase_equal(a.preconditions, need<Condition>(t, "PRECONDITION")); });
      break;
    case TxKind::RemoveActionEffect:
      edit_named(dom.actions, name_arg(t, "ACTIONNAME"),
                 [&](ActionModel& a) { erase_equal(a.effects, need<Effect>(t, "EFFECT")); });
      break;

    case TxKind::AddEvent:
      insert_unique(dom.events,
                    EventModel{name_arg(t, "EVENTNAME"), typed(t, "QUALITIES", "QUALITYTYPES"), 1.0, 0.0, {}, {}});
      break;
    case TxKind::ChangeFrequency:
      edit_named(dom.events, name_arg(t, "EVENTNAME"),
                 [&](EventModel& e) { e.frequency = need<double>(t, "FREQUENCY"); });
      break;
    case TxKind::ChangeProbability:
      edit_named(dom.events, name_arg(t, "EVENTNAME"),
                 [&](EventModel& e) { e.probability = need<double>(t, "PROBABILITY"); });
      break;
    case TxKind::AddTrigger:
      edit_named(dom.events, name_arg(t, "EVENTNAME"),
                 [&](EventModel& e) { insert_unique(e.triggers, need<Condition>(t, "TRIGGER")); });
      break;
    case TxKind::AddEventEffect:
      edit_named(dom.events, name_arg(t, "EVENTNAME"),
                 [&](EventModel& e) { insert_unique(e.effects, need<Effect>(t, "EFFECT")); });
      break;
    case TxKind::RemoveEvent:
    {
      const auto& n = name_arg(t, "NAME");
      std::erase_if(dom.events, [&](const EventModel& e) { return e.name == n; });
      break;
    }
    case TxKind::RemoveTrigger:
      edit_named(dom.events, name_arg(t, "EVENTNAME"),
                 [&](EventModel& e) { erase_equal(e.triggers, need<Condition>(t, "TRIGGER")); });
      break;
    case TxKind::RemoveEventEffect:
      edit_named(dom.events, name_arg(t, "EVENTNAME"),
                 [&](EventModel& e) { erase_equal(e.effects, need<Effect>(t, "EFFECT")); });
      break;

    case TxKind::AddProcess:
      insert_unique(dom.processes,
                    ProcessModel{name_arg(t, "PROCESSNAME"), typed(t, "QUALITIES", "QUALITYTYPES"), {}, {}});
      break;
    case TxKind::AddProcessCondition:
      edit_named(dom.processes, name_arg(t, "PROCESSNAME"),
                 [&](ProcessModel& p) { insert_unique(p.conditions, need<Condition>(t, "CONDITION")); });
      break;
    case TxKind::AddProcessChange:
      edit_named(dom.processes, name_arg(t, "PROCESSNAME"),
                 [&](ProcessModel& p) { insert_unique(p.changes, need<ContinuousChange>(t, "CHANGE")); });
      break;
    case TxKind::RemoveProcess:
    {
      const auto& n = name_arg(t, "NAME");
      std::erase_if(dom.processes, [&](const ProcessModel& p) { return p.name == n; });
      break;
    }
    case TxKind::RemoveProcessCondition:
      edit_named(dom.processes, name_arg(t, "PROCESSNAME"),
                 [&](ProcessModel& p) { erase_equal(p.conditions, need<Condition>(t, "CONDITION")); });
      break;
    case TxKind::RemoveProcessChange:
      edit_named(dom.processes, name_arg(t, "PROCESSNAME"),
                 [&](ProcessModel& p) { erase_equal(p.changes, need<ContinuousChange>(t, "CHANGE")); });
      break;

    case TxKind::AddFluentValue:
    {
      GroundFluent gf{name_arg(t, "FUNCTIONNAME"), need<std::vector<Value>>(t, "FLUENTARGS"),
                      need<Value>(t, "VALUE")};
      std::erase_if(g.fluents,
                    [&](const GroundFluent& x) { return x.function == gf.function && x.args == gf.args; });
      g.fluents.push_back(std::move(gf));
      break;
    }
    case TxKind::AddDefaultValue:
      supersede(g.defaults, DefaultValue{name_arg(t, "FUNCTIONNAME"), need<Value>(t, "VALUE")},
                [](const DefaultValue& a, const DefaultValue& b) { return a.function == b.function; });
      break;
    case TxKind::AddObjectGenerator:
      supersede(g.object_generators,
                ObjectGenerator{name_arg(t, "NAME"), name_arg(t, "TYPE"), need<GeneratorExpr>(t, "DRAWFUNCTION")},
                [](const ObjectGenerator& a, const ObjectGenerator& b) { return a.name == b.name; });
      break;
    case TxKind::AddValueGenerator:
      supersede(g.value_generators, ValueGenerator{name_arg(t, "NAME"), need<GeneratorExpr>(t, "DRAWFUNCTION")},
                [](const ValueGenerator& a, const ValueGenerator& b) { return a.name == b.name; });
      break;
    case TxKind::AddFluentGenerator:
      supersede(g.fluent_generators,
                FluentGenerator{name_arg(t, "NAME"), need<GeneratorExpr>(t, "DRAWFUNCTION")},
                [](const FluentGenerator& a, const FluentGenerator& b) { return a.function == b.function; });
      break;
    case TxKind::ReplacePerformanceCalculation:
      g.performance = need<Calculation>(t, "PERFORMANCE");
      break;
    }
    return out;
  }

  Environment apply(const Transformation& t, const Environment& env) { return apply(t, env.domain, env.sg); }

  Environment apply_sequence(const TransformationSequence& ts, const Domain& d, const ScenarioGenerator& sg)
  {
    Environment env{d, sg};
    for (const auto& t : ts)
      env = apply(t, env);
    return env;
  }

  Environment apply_sequence(const TransformationSequence& ts, const Domain& d, const ScenarioGenerator& sg,
                             Diagnostics& warnings)
  {
    Environment env{d, sg};
    for (std::size_t i = 0; i < ts.size(); ++i)
    {
      Environment next = apply(ts[i], env);
      if (next == env)
        warnings.push_back(Diagnostic{Severity::Warning, code::TxNoop,
                                      "step " + std::to_string(i) + " changes nothing: " + to_string(ts[i]),
                                      {}});
      env = std::move(next);
    }
    return env;
  }

}  // namespace tsal
