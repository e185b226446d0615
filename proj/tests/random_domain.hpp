#pragma once

#include <random>
#include <string>
#include <vector>

#include "tsal/ast.hpp"
#include "tsal/transformation.hpp"

namespace tsal::test
{

  // Small legal domains built from typed unary functions, so that every
  // generated precondition, effect and change type-checks.
  class DomainGen
  {
  public:
    explicit DomainGen(std::uint64_t seed) : rng_(seed) {}

    int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin() { return pick(0, 1) == 1; }

    Domain domain()
    {
      Domain d;
      d.name = Symbol("RANDOM");
      int nt = pick(1, 4);
      for (int i = 0; i < nt; ++i)
      {
        d.types.push_back(type(i));
        if (i > 0 && coin())
          d.supertypes.push_back({type(i), type(pick(0, i - 1))});
      }
      for (int i = 0, n = pick(0, 2); i < n; ++i)
        d.constants.push_back({Symbol("K" + std::to_string(i)), type(pick(0, nt - 1))});
      for (int i = 0; i < nt; ++i)
      {
        d.functions.push_back(flag(i));
        d.functions.push_back(level(i));
      }
      for (int i = 0, n = pick(0, 3); i < n; ++i)
      {
        int t = pick(0, nt - 1);
        ActionModel a{Symbol("ACT" + std::to_string(i)), var("?AG"), {{Symbol("?X"), type(t)}}, {}, {}};
        a.preconditions.push_back(flag_cond(t));
        a.effects.push_back(bump(t));
        d.actions.push_back(std::move(a));
      }
      for (int i = 0, n = pick(0, 2); i < n; ++i)
      {
        int t = pick(0, nt - 1);
        EventModel ev{Symbol("EV" + std::to_string(i)), {{Symbol("?X"), type(t)}}, 1.0, 0.0, {}, {}};
        ev.triggers.push_back(flag_cond(t));
        ev.effects.push_back(Effect{flag_name(t), {var("?X")}, Modification::Set, lit(false), 1.0});
        d.events.push_back(std::move(ev));
      }
      for (int i = 0, n = pick(0, 2); i < n; ++i)
      {
        int t = pick(0, nt - 1);
        ProcessModel p{Symbol("PR" + std::to_string(i)), {{Symbol("?X"), type(t)}}, {}, {}};
        p.conditions.push_back(flag_cond(t));
        p.changes.push_back(change(t, 1));
        d.processes.push_back(std::move(p));
      }
      return d;
    }

    // A transformation adding something absent from d, paired with the
    // transformation removing it again.
    std::pair<Transformation, Transformation> add_remove(const Domain& d)
    {
      int nt = static_cast<int>(d.types.size());
      int t = pick(0, nt - 1);
      auto named = [](TxKind k, std::vector<std::pair<const char*, TxArg>> args) {
        Transformation tx{k, {}};
        for (auto& [n, a] : args)
          tx.args.emplace_back(Symbol(n), std::move(a));
        return tx;
      };
      std::string fresh = "NEW" + std::to_string(counter_++);
      Symbol fs(fresh);
      switch (pick(0, 13))
      {
      case 0:
        return {named(TxKind::AddType, {{"TYPE", fs}}), named(TxKind::RemoveType, {{"NAME", fs}})};
      case 1:
        return {named(TxKind::AddTypeParent, {{"CHILD", type(t)}, {"PARENT", fs}}),
                named(TxKind::RemoveTypeParent, {{"CHILD", type(t)}, {"PARENT", fs}})};
      case 2:
        return {named(TxKind::AddConstant, {{"NAME", fs}, {"TYPE", type(t)}}),
                named(TxKind::RemoveConstant, {{"NAME", fs}})};
      case 3: {
        FunctionDecl f{fs, {{Symbol("?X"), type(t)}}, coin() ? names::BOOLEAN : names::REAL};
        return {named(TxKind::AddFunction, {{"FUNCTION", f}}), named(TxKind::RemoveFunction, {{"NAME", fs}})};
      }
      case 4: {
        Axiom ax{fs, {{Symbol("?X"), type(t)}}, flag_cond(t)};
        return {named(TxKind::AddAxiom, {{"AXIOM", ax}}), named(TxKind::RemoveAxiom, {{"AXIOM", ax}})};
      }
      case 5:
        return {named(TxKind::AddAction, {{"ACTIONNAME", fs},
                                          {"PERFORMER", var("?AG")},
                                          {"PARAMETERS", std::vector<Symbol>{Symbol("?X")}},
                                          {"PARAMETERTYPES", std::vector<Symbol>{type(t)}}}),
                named(TxKind::RemoveAction, {{"ACTIONNAME", fs}})};
      case 6:
        return {named(TxKind::AddEvent, {{"EVENTNAME", fs},
                                         {"QUALITIES", std::vector<Symbol>{Symbol("?X")}},
                                         {"QUALITYTYPES", std::vector<Symbol>{type(t)}}}),
                named(TxKind::RemoveEvent, {{"NAME", fs}})};
      case 7:
        return {named(TxKind::AddProcess, {{"PROCESSNAME", fs},
                                           {"QUALITIES", std::vector<Symbol>{}},
                                           {"QUALITYTYPES", std::vector<Symbol>{}}}),
                named(TxKind::RemoveProcess, {{"NAME", fs}})};
      default:
        break;
      }
      // Host edits. A fresh numeric literal keeps the element absent.
      Condition c = Compare{CompareOp::Lt, Calculation{fn(level_name(t).str(), {var("?X")})},
                            Calculation{lit(static_cast<std::int64_t>(1000 + counter_))}};
      Effect e{level_name(t), {var("?X")}, Modification::Increase, lit(static_cast<std::int64_t>(counter_)), 1.0};
      ContinuousChange ch = change(t, 1000 + counter_);
      Symbol host = fs;  // absent host exercises the no-op path
      auto pick_host = [&](const auto& items, const char* prefix) {
        if (!items.empty() && pick(0, 3) > 0)
          return items[pick(0, static_cast<int>(items.size()) - 1)].name;
        return Symbol(std::string(prefix) + fresh);
      };
      switch (pick(0, 5))
      {
      case 0:
        host = pick_host(d.actions, "ACT");
        return {named(TxKind::AddPrecondition, {{"ACTIONNAME", host}, {"PRECONDITION", c}}),
                named(TxKind::RemovePrecondition, {{"ACTIONNAME", host}, {"PRECONDITION", c}})};
      case 1:
        host = pick_host(d.actions, "ACT");
        return {named(TxKind::AddActionEffect, {{"ACTIONNAME", host}, {"EFFECT", e}}),
                named(TxKind::RemoveActionEffect, {{"ACTIONNAME", host}, {"EFFECT", e}})};
      case 2:
        host = pick_host(d.events, "EV");
        return {named(TxKind::AddTrigger, {{"EVENTNAME", host}, {"TRIGGER", c}}),
                named(TxKind::RemoveTrigger, {{"EVENTNAME", host}, {"TRIGGER", c}})};
      case 3:
        host = pick_host(d.events, "EV");
        return {named(TxKind::AddEventEffect, {{"EVENTNAME", host}, {"EFFECT", e}}),
                named(TxKind::RemoveEventEffect, {{"EVENTNAME", host}, {"EFFECT", e}})};
      case 4:
        host = pick_host(d.processes, "PR");
        return {named(TxKind::AddProcessCondition, {{"PROCESSNAME", host}, {"CONDITION", c}}),
                named(TxKind::RemoveProcessCondition, {{"PROCESSNAME", host}, {"CONDITION", c}})};
      default:
        host = pick_host(d.processes, "PR");
        return {named(TxKind::AddProcessChange, {{"PROCESSNAME", host}, {"CHANGE", ch}}),
                named(TxKind::RemoveProcessChange, {{"PROCESSNAME", host}, {"CHANGE", ch}})};
      }
    }

  private:
    static Symbol type(int i) { return Symbol("T" + std::to_string(i)); }
    static Symbol flag_name(int i) { return Symbol("FLAG" + std::to_string(i)); }
    static Symbol level_name(int i) { return Symbol("LEVEL" + std::to_string(i)); }
    static FunctionDecl flag(int i) { return {flag_name(i), {{Symbol("?X"), type(i)}}, names::BOOLEAN}; }
    static FunctionDecl level(int i) { return {level_name(i), {{Symbol("?X"), type(i)}}, names::REAL}; }
    static Condition flag_cond(int i) { return Condition{fn(flag_name(i).str(), {var("?X")})}; }
    static Effect bump(int i)
    {
      return Effect{level_name(i), {var("?X")}, Modification::Increase, lit(std::int64_t{1}), 1.0};
    }
    static ContinuousChange change(int i, std::int64_t k)
    {
      return ContinuousChange{level_name(i),
                              {var("?X")},
                              Direction::Increase,
                              Calculation{BinOp{ArithOp::Mul, Calculation{obj("DT")}, Calculation{lit(k)}}}};
    }

    std::mt19937_64 rng_;
    int counter_ = 0;
  };

}  // namespace tsal::test
