#include "tsal/ops.hpp"

#include <algorithm>

#include "tsal/types.hpp"

namespace tsal
{

  namespace
  {
    void erase_all(SymbolSet& s, const std::vector<Symbol>& vs)
    {
      for (const auto& v : vs)
        s.erase(v);
    }

    void merge(SymbolSet& into, const SymbolSet& from) { into.insert(from.begin(), from.end()); }

    bool subset(const SymbolSet& a, const SymbolSet& b)
    {
      return std::includes(b.begin(), b.end(), a.begin(), a.end());
    }

    template <class F>
    void each_function(const Term& t, F&& f);
    template <class F>
    void each_function(const Calculation& c, F&& f);
    template <class F>
    void each_function(const Condition& c, F&& f);

    template <class F>
    void each_function(const Term& t, F&& f)
    {
      if (auto ft = std::get_if<FunctionTerm>(&t.node))
      {
        f(ft->name);
        for (const auto& a : ft->args)
          each_function(a, f);
      }
    }

    template <class F>
    void each_function(const Calculation& c, F&& f)
    {
      std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Term>)
            each_function(n, f);
          else if constexpr (std::is_same_v<T, BinOp>)
          {
            each_function(*n.lhs, f);
            each_function(*n.rhs, f);
          }
          else if constexpr (std::is_same_v<T, Aggregate>)
          {
            each_function(*n.constraint, f);
            each_function(*n.body, f);
          }
          else
          {
            each_function(*n.cond, f);
            each_function(*n.then_calc, f);
            each_function(*n.else_calc, f);
          }
        },
        c.node);
    }

    template <class F>
    void each_function(const Condition& c, F&& f)
    {
      std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Term>)
            each_function(n, f);
          else if constexpr (std::is_same_v<T, Compare>)
          {
            each_function(n.lhs, f);
            each_function(n.rhs, f);
          }
          else if constexpr (std::is_same_v<T, BoolCond>)
          {
            for (const auto& o : n.operands)
              each_function(o, f);
          }
          else if constexpr (std::is_same_v<T, NotCond>)
            each_function(*n.operand, f);
          else
          {
            each_function(*n.constraint, f);
            each_function(*n.requirement, f);
          }
        },
        c.node);
    }

    int count_dt(const Term& t)
    {
      if (auto o = std::get_if<ObjectRef>(&t.node))
        return o->name == names::DT ? 1 : 0;
      int n = 0;
      if (auto ft = std::get_if<FunctionTerm>(&t.node))
        for (const auto& a : ft->args)
          n += count_dt(a);
      return n;
    }

    int count_dt(const Condition& c);
  }

  SymbolSet free_variables(const Term& t)
  {
    SymbolSet out;
    if (auto v = std::get_if<Variable>(&t.node))
      out.insert(v->name);
    else if (auto ft = std::get_if<FunctionTerm>(&t.node))
      for (const auto& a : ft->args)
        merge(out, free_variables(a));
    return out;
  }

  SymbolSet free_variables(const Calculation& c)
  {
    return std::visit(
      [](const auto& n) -> SymbolSet {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Term>)
          return free_variables(n);
        else if constexpr (std::is_same_v<T, BinOp>)
        {
          auto s = free_variables(*n.lhs);
          merge(s, free_variables(*n.rhs));
          return s;
        }
        else if constexpr (std::is_same_v<T, Aggregate>)
        {
          auto s = free_variables(*n.constraint);
          merge(s, free_variables(*n.body));
          s.erase(n.var);
          return s;
        }
        else
        {
          auto s = free_variables(*n.cond);
          merge(s, free_variables(*n.then_calc));
          merge(s, free_variables(*n.else_calc));
          return s;
        }
      },
      c.node);
  }

  SymbolSet free_variables(const Condition& c)
  {
    return std::visit(
      [](const auto& n) -> SymbolSet {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Term>)
          return free_variables(n);
        else if constexpr (std::is_same_v<T, Compare>)
        {
          auto s = free_variables(n.lhs);
          merge(s, free_variables(n.rhs));
          return s;
        }
        else if constexpr (std::is_same_v<T, BoolCond>)
        {
          SymbolSet s;
          for (const auto& o : n.operands)
            merge(s, free_variables(o));
          return s;
        }
        else if constexpr (std::is_same_v<T, NotCond>)
          return free_variables(*n.operand);
        else
        {
          auto s = free_variables(*n.constraint);
          merge(s, free_variables(*n.requirement));
          erase_all(s, n.vars);
          return s;
        }
      },
      c.node);
  }

  SymbolSet condition_bound_variables(const Condition& cond, const SymbolSet& bound)
  {
    if (auto cmp = std::get_if<Compare>(&cond.node))
    {
      if (cmp->op != CompareOp::Eq)
        return {};
      auto bare = [](const Calculation& c) -> const Symbol* {
        auto t = std::get_if<Term>(&c.node);
        return t ? as_variable(*t) : nullptr;
      };
      if (auto v = bare(cmp->lhs); v && subset(free_variables(cmp->rhs), bound))
        return {*v};
      if (auto v = bare(cmp->rhs); v && subset(free_variables(cmp->lhs), bound))
        return {*v};
      return {};
    }
    if (auto b = std::get_if<BoolCond>(&cond.node); b && b->op == BoolOp::And)
    {
      SymbolSet out;
      for (const auto& o : b->operands)
        merge(out, condition_bound_variables(o, bound));
      return out;
    }
    return {};
  }

  SymbolSet condition_bound_variables(const std::vector<Condition>& conds,
                                      const SymbolSet& already_bound)
  {
    SymbolSet result;
    SymbolSet current = already_bound;
    for (;;)
    {
      SymbolSet step;
      for (const auto& c : conds)
        merge(step, condition_bound_variables(c, current));
      auto before = current.size();
      merge(result, step);
      merge(current, step);
      if (current.size() == before)
        return result;
    }
  }

  bool function_in(const Symbol& fn, const Term& t)
  {
    bool found = false;
    each_function(t, [&](const Symbol& s) { found = found || s == fn; });
    return found;
  }

  bool function_in(const Symbol& fn, const Calculation& c)
  {
    bool found = false;
    each_function(c, [&](const Symbol& s) { found = found || s == fn; });
    return found;
  }

  bool function_in(const Symbol& fn, const Condition& c)
  {
    bool found = false;
    each_function(c, [&](const Symbol& s) { found = found || s == fn; });
    return found;
  }

  std::vector<Symbol> functions_in(const Condition& c)
  {
    std::vector<Symbol> out;
    each_function(c, [&](const Symbol& s) {
      if (std::find(out.begin(), out.end(), s) == out.end())
        out.push_back(s);
    });
    return out;
  }

  std::vector<Symbol> functions_in(const Calculation& c)
  {
    std::vector<Symbol> out;
    each_function(c, [&](const Symbol& s) {
      if (std::find(out.begin(), out.end(), s) == out.end())
        out.push_back(s);
    });
    return out;
  }

  namespace
  {
    int count_dt(const Condition& c)
    {
      return std::visit(
        [](const auto& n) -> int {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Term>)
            return count_dt(n);
          else if constexpr (std::is_same_v<T, Compare>)
            return tsal::count_dt(n.lhs) + tsal::count_dt(n.rhs);
          else if constexpr (std::is_same_v<T, BoolCond>)
          {
            int k = 0;
            for (const auto& o : n.operands)
              k += count_dt(o);
            return k;
          }
          else if constexpr (std::is_same_v<T, NotCond>)
            return count_dt(*n.operand);
          else
            return count_dt(*n.constraint) + count_dt(*n.requirement);
        },
        c.node);
    }
  }

  int count_dt(const Calculation& c)
  {
    return std::visit(
      [](const auto& n) -> int {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Term>)
          return count_dt(n);
        else if constexpr (std::is_same_v<T, BinOp>)
          return tsal::count_dt(*n.lhs) + tsal::count_dt(*n.rhs);
        else if constexpr (std::is_same_v<T, Aggregate>)
          return count_dt(*n.constraint) + tsal::count_dt(*n.body);
        else
          return count_dt(*n.cond) + tsal::count_dt(*n.then_calc) + tsal::count_dt(*n.else_calc);
      },
      c.node);
  }

  std::vector<Symbol> entities_in_function(const FunctionDecl& f, const Domain& d)
  {
    std::vector<Symbol> out;
    for (const auto& a : f.args)
      if (derived_from(a.type, names::OBJECT, d) || derived_from(a.type, names::AGENT, d))
        out.push_back(a.var);
    return out;
  }

}  // namespace tsal
