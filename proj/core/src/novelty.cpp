#include "tsal/novelty.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "tsal/legality.hpp"
#include "tsal/ops.hpp"
#include "tsal/types.hpp"

namespace tsal
{

  namespace
  {
    constexpr std::array<std::string_view, novelty_level_count> level_names = {
      "OBJECTS", "AGENTS", "ACTIONS", "RELATIONS", "INTERACTIONS", "ENVIRONMENTS", "GOALS", "EVENTS",
    };

    bool affects_axiom(const Symbol& fn, const Axiom& ax, const Domain& d, std::set<Symbol>& visiting)
    {
      if (function_in(fn, ax.antecedent))
        return true;
      if (!visiting.insert(ax.name).second)
        return false;
      bool out = std::any_of(d.axioms.begin(), d.axioms.end(), [&](const Axiom& m) {
        return function_in(m.name, ax.antecedent) && affects_axiom(fn, m, d, visiting);
      });
      visiting.erase(ax.name);
      return out;
    }

    bool in_condition(const Symbol& fn, const Condition& cnd, const Domain& d)
    {
      if (function_in(fn, cnd))
        return true;
      return std::any_of(d.axioms.begin(), d.axioms.end(), [&](const Axiom& ax) {
        return function_in(ax.name, cnd) && function_affects_axiom(fn, ax, d);
      });
    }

    // Both environmental tests share one shape over trigger/condition lists.
    bool environmental_conditions(const std::vector<Condition>& conds, const Domain& d)
    {
      bool some = false;
      for (const auto& cnd : conds)
        for (const auto& f : d.functions)
        {
          if (!function_in(f.name, cnd))
            continue;
          bool env = is_environmental(f, d);
          some = some || env;
          if (!env && !derived_from(f.value_type, names::POSITION, d))
            return false;
        }
      return some;
    }

    bool action_affects(const Symbol& fn, const Domain& d)
    {
      return std::any_of(d.actions.begin(), d.actions.end(), [&](const ActionModel& a) {
        return std::any_of(a.effects.begin(), a.effects.end(), [&](const Effect& e) { return e.target == fn; });
      });
    }

    bool is_static(const Symbol& fn, const Domain& d)
    {
      auto in_effects = [&](const std::vector<Effect>& es) {
        return std::any_of(es.begin(), es.end(), [&](const Effect& e) { return e.target == fn; });
      };
      for (const auto& a : d.actions)
        if (in_effects(a.effects))
          return false;
      for (const auto& ev : d.events)
        if (in_effects(ev.effects))
          return false;
      for (const auto& p : d.processes)
        for (const auto& c : p.changes)
          if (c.target == fn)
            return false;
      return true;
    }

    const Symbol* name_arg(const Transformation& t, std::string_view key) { return t.get<Symbol>(key); }

    template <class T>
    const T* named(const std::vector<T>& items, const Symbol& n)
    {
      auto it = std::find_if(items.begin(), items.end(), [&](const T& x) { return x.name == n; });
      return it == items.end() ? nullptr : &*it;
    }

    bool is_one_of(TxKind k, std::initializer_list<TxKind> ks) { return std::find(ks.begin(), ks.end(), k) != ks.end(); }

    void add_unique(std::vector<Symbol>& out, const Symbol& s)
    {
      if (std::find(out.begin(), out.end(), s) == out.end())
        out.push_back(s);
    }

    using Witness = std::optional<std::vector<Symbol>>;

    Witness found(std::vector<Symbol> elements)
    {
      if (elements.empty())
        return std::nullopt;
      return elements;
    }

    const std::initializer_list<TxKind> event_edits = {TxKind::AddTrigger,      TxKind::RemoveTrigger,
                                                       TxKind::AddEventEffect,  TxKind::RemoveEventEffect,
                                                       TxKind::ChangeProbability, TxKind::ChangeFrequency};
  }

  std::string_view level_name(NoveltyLevel l) { return level_names[static_cast<std::size_t>(l) - 1]; }

  std::optional<NoveltyLevel> level_from_name(std::string_view name)
  {
    auto up = to_upper(name);
    for (std::size_t i = 0; i < level_names.size(); ++i)
      if (level_names[i] == up)
        return level_at(i);
    return std::nullopt;
  }

  NoveltyLevel level_at(std::size_t index) { return static_cast<NoveltyLevel>(index + 1); }

  bool function_affects_axiom(const Symbol& fn, const Axiom& ax, const Domain& d)
  {
    std::set<Symbol> visiting;
    return affects_axiom(fn, ax, d, visiting);
  }

  bool relevant_function(const Symbol& fn, const Domain& d, const ScenarioGenerator& sg)
  {
    auto any_in = [&](const std::vector<Condition>& conds) {
      return std::any_of(conds.begin(), conds.end(), [&](const Condition& c) { return in_condition(fn, c, d); });
    };
    for (const auto& a : d.actions)
      if (any_in(a.preconditions))
        return true;
    for (const auto& ev : d.events)
      if (any_in(ev.triggers))
        return true;
    for (const auto& p : d.processes)
      if (any_in(p.conditions))
        return true;
    return sg.performance && function_in(fn, *sg.performance);
  }

  bool is_environmental(const FunctionDecl& f, const Domain& d)
  {
    return named(d.functions, f.name) && !action_affects(f.name, d) && entities_in_function(f, d).empty();
  }

  bool is_environmental(const EventModel& ev, const Domain& d) { return environmental_conditions(ev.triggers, d); }

  bool is_environmental(const ProcessModel& p, const Domain& d) { return environmental_conditions(p.conditions, d); }

  // ------------------------------------------------------------ classifier

  NoveltyClassifier::NoveltyClassifier(TransformationSequence ts, Domain d, ScenarioGenerator sg, Symbol pov)
    : ts_(std::move(ts)), base_(std::move(d)), base_sg_(std::move(sg)), pov_(std::move(pov))
  {
    prefix_.reserve(ts_.size() + 1);
    prefix_.push_back(Environment{base_, base_sg_});
    for (const auto& t : ts_)
      prefix_.push_back(apply(t, prefix_.back()));
    final_ = prefix_.back();
    if (!final_.domain.has_type(pov_) && !is_basic_type(pov_))
      throw Error("point-of-view type " + pov_.str() + " is not declared in the transformed domain");
    if (!derived_from(pov_, names::AGENT, final_.domain))
      throw Error("point-of-view type " + pov_.str() + " does not derive from AGENT");
  }

  Witness NoveltyClassifier::objects_or_agents(const Symbol& base, std::size_t i) const
  {
    const Transformation& t = ts_[i];
    const Domain& dn = final_.domain;
    std::vector<Symbol> out;

    auto new_function = [&](const FunctionDecl& f) {
      bool arg = std::any_of(f.args.begin(), f.args.end(),
                             [&](const TypedVar& a) { return derived_from(a.type, base, dn); });
      if (arg && relevant_function(f.name, dn, final_.sg))
        add_unique(out, f.name);
    };

    if (is_one_of(t.kind, {TxKind::AddType, TxKind::AddTypeParent, TxKind::RemoveTypeParent}))
    {
      // ADDTYPE carries no PARENT, so only the parent edits can match.
      const Symbol* c = name_arg(t, "CHILD");
      const Symbol* p = name_arg(t, "PARENT");
      if (!c || !p || !derived_from(*c, base, dn))
        return std::nullopt;
      for (const auto& f : base_.functions)
      {
        bool slot = std::any_of(f.args.begin(), f.args.end(), [&](const TypedVar& a) {
          return derived_from(*p, a.type, base_) && !derived_from(*c, a.type, base_);
        });
        if (slot && relevant_function(f.name, base_, base_sg_))
        {
          add_unique(out, *c);
          add_unique(out, f.name);
        }
      }
    }
    else if (t.kind == TxKind::AddFunction)
    {
      if (auto f = t.get<FunctionDecl>("FUNCTION"))
        new_function(*f);
    }
    else if (t.kind == TxKind::AddFluentGenerator)
    {
      if (auto n = name_arg(t, "NAME"); n && dn.function(*n))
        new_function(*dn.function(*n));
    }
    return found(std::move(out));
  }

  Witness NoveltyClassifier::actions(std::size_t i) const
  {
    const Transformation& t = ts_[i];
    if (!is_one_of(t.kind, {TxKind::AddPrecondition, TxKind::RemovePrecondition, TxKind::AddActionEffect,
                            TxKind::RemoveActionEffect}))
      return std::nullopt;
    const Symbol* n = name_arg(t, "ACTIONNAME");
    if (!n || !prefix_[i].domain.action(*n))
      return std::nullopt;
    const Domain& dt = final_.domain;
    const ActionModel* a = dt.action(*n);
    if (!a)
      return std::nullopt;
    TypeEnv theta = action_type_env(*a, dt);
    SymbolSet bound = action_bound_variables(*a, dt);
    bool assignable = assignable_to(pov_, Calculation{a->performer}, theta, dt) &&
      std::all_of(a->preconditions.begin(), a->preconditions.end(),
                  [&](const Condition& c) { return legal_condition(c, theta, bound, dt); });
    if (assignable)
      return std::nullopt;
    return std::vector<Symbol>{*n};
  }

  Witness NoveltyClassifier::relations(std::size_t i) const
  {
    const Transformation& t = ts_[i];
    std::vector<Symbol> candidates;
    auto from_condition = [&](std::string_view key) {
      if (auto c = t.get<Condition>(key))
        candidates = functions_in(*c);
    };
    switch (t.kind)
    {
    case TxKind::AddFunction:
      if (auto f = t.get<FunctionDecl>("FUNCTION"))
        candidates.push_back(f->name);
      break;
    case TxKind::AddPrecondition:
    case TxKind::RemovePrecondition:
      from_condition("PRECONDITION");
      break;
    case TxKind::AddTrigger:
    case TxKind::RemoveTrigger:
      from_condition("TRIGGER");
      break;
    case TxKind::AddProcessCondition:
    case TxKind::RemoveProcessCondition:
      from_condition("CONDITION");
      break;
    case TxKind::AddFluentGenerator:
      if (auto n = name_arg(t, "NAME"))
        candidates.push_back(*n);
      break;
    default:
      return std::nullopt;
    }
    const Domain& dt = final_.domain;
    std::vector<Symbol> out;
    for (const auto& name : candidates)
    {
      const FunctionDecl* f = dt.function(name);
      if (f && entities_in_function(*f, dt).size() > 1 && is_static(name, dt))
        add_unique(out, name);
    }
    return found(std::move(out));
  }

  Witness NoveltyClassifier::interactions(std::size_t i) const
  {
    const Transformation& t = ts_[i];
    if (!is_one_of(t.kind, {TxKind::AddActionEffect, TxKind::RemoveActionEffect}))
      return std::nullopt;
    const Effect* e = t.get<Effect>("EFFECT");
    const Symbol* aname = name_arg(t, "ACTIONNAME");
    if (!e || !aname || !prefix_[i].domain.action(*aname))
      return std::nullopt;
    const Domain& dt = final_.domain;
    const FunctionDecl* f = dt.function(e->target);
    if (!f || entities_in_function(*f, dt).size() <= 1)
      return std::nullopt;
    const ActionModel* at = dt.action(*aname);
    if (!at || std::none_of(at->effects.begin(), at->effects.end(),
                            [&](const Effect& x) { return x.target == e->target; }))
      return std::nullopt;
    return std::vector<Symbol>{*aname, e->target};
  }

  Witness NoveltyClassifier::environments(std::size_t i) const
  {
    const Transformation& t = ts_[i];
    const Domain& dt = final_.domain;
    if (t.kind == TxKind::AddFluentGenerator)
    {
      const Symbol* n = name_arg(t, "NAME");
      if (n && dt.function(*n) && is_environmental(*dt.function(*n), dt))
        return std::vector<Symbol>{*n};
      return std::nullopt;
    }
    if (is_one_of(t.kind, event_edits))
    {
      const Symbol* n = name_arg(t, "EVENTNAME");
      if (n && dt.event(*n) && is_environmental(*dt.event(*n), dt))
        return std::vector<Symbol>{*n};
      return std::nullopt;
    }
    if (is_one_of(t.kind, {TxKind::AddProcessCondition, TxKind::RemoveProcessCondition, TxKind::AddProcessChange,
                           TxKind::RemoveProcessChange}))
    {
      const Symbol* n = name_arg(t, "PROCESSNAME");
      if (n && dt.process(*n) && is_environmental(*dt.process(*n), dt))
        return std::vector<Symbol>{*n};
    }
    return std::nullopt;
  }

  Witness NoveltyClassifier::goals(std::size_t i) const
  {
    if (ts_[i].kind != TxKind::ReplacePerformanceCalculation)
      return std::nullopt;
    std::vector<Symbol> out;
    if (auto c = ts_[i].get<Calculation>("PERFORMANCE"))
      out = functions_in(*c);
    // A constant performance still witnesses the step itself.
    if (out.empty())
      out.push_back(Symbol(head_name(ts_[i].kind)));
    return out;
  }

  Witness NoveltyClassifier::events(std::size_t i) const
  {
    const Transformation& t = ts_[i];
    const Domain& dt = final_.domain;
    std::vector<Symbol> out;
    if (is_one_of(t.kind, event_edits))
    {
      const Symbol* n = name_arg(t, "EVENTNAME");
      if (n && dt.event(*n) && !is_environmental(*dt.event(*n), dt))
        out.push_back(*n);
    }
    else if (t.kind == TxKind::AddFluentGenerator)
    {
      const Symbol* n = name_arg(t, "NAME");
      const FunctionDecl* f = n ? dt.function(*n) : nullptr;
      if (f && is_environmental(*f, dt))
        for (const auto& ev : dt.events)
          if (!is_environmental(ev, dt) &&
              std::any_of(ev.triggers.begin(), ev.triggers.end(),
                          [&](const Condition& c) { return function_in(f->name, c); }))
            add_unique(out, ev.name);
    }
    return found(std::move(out));
  }

  std::optional<std::vector<Symbol>> NoveltyClassifier::witness_at(NoveltyLevel level, std::size_t i) const
  {
    if (i >= ts_.size())
      return std::nullopt;
    switch (level)
    {
    case NoveltyLevel::Objects:
      return objects_or_agents(names::OBJECT, i);
    case NoveltyLevel::Agents:
      return objects_or_agents(names::AGENT, i);
    case NoveltyLevel::Actions:
      return actions(i);
    case NoveltyLevel::Relations:
      return relations(i);
    case NoveltyLevel::Interactions:
      return interactions(i);
    case NoveltyLevel::Environments:
      return environments(i);
    case NoveltyLevel::Goals:
      return goals(i);
    case NoveltyLevel::Events:
      return events(i);
    }
    return std::nullopt;
  }

  LevelVerdict NoveltyClassifier::level(NoveltyLevel level) const
  {
    LevelVerdict v;
    for (std::size_t i = 0; i < ts_.size(); ++i)
      if (auto w = witness_at(level, i))
      {
        v.holds = true;
        v.steps.push_back(i);
        for (const auto& s : *w)
          add_unique(v.elements, s);
      }
    return v;
  }

  NoveltyVerdict NoveltyClassifier::classify() const
  {
    NoveltyVerdict out;
    for (std::size_t k = 0; k < novelty_level_count; ++k)
      out.levels[k] = level(level_at(k));
    return out;
  }

  NoveltyVerdict classify(const TransformationSequence& ts, const Domain& d, const ScenarioGenerator& sg,
                          const Symbol& pov)
  {
    return NoveltyClassifier(ts, d, sg, pov).classify();
  }

  std::string to_string(const NoveltyVerdict& v)
  {
    std::ostringstream os;
    for (std::size_t k = 0; k < novelty_level_count; ++k)
    {
      const auto& lv = v.levels[k];
      os << level_names[k] << (lv.holds ? " true" : " false");
      if (lv.holds)
      {
        os << " steps=";
        for (std::size_t j = 0; j < lv.steps.size(); ++j)
          os << (j ? "," : "") << lv.steps[j];
        os << " elements=";
        for (std::size_t j = 0; j < lv.elements.size(); ++j)
          os << (j ? "," : "") << lv.elements[j].str();
      }
      os << "\n";
    }
    return os.str();
  }

}  // namespace tsal
