#include "tsal/legality.hpp"

#include <algorithm>

#include "tsal/reader.hpp"
#include "tsal/types.hpp"

namespace tsal
{

  namespace
  {
    const Variable* bare_variable(const Calculation& c)
    {
      auto t = std::get_if<Term>(&c.node);
      return t ? std::get_if<Variable>(&t->node) : nullptr;
    }

    const FunctionTerm* bare_function(const Calculation& c)
    {
      auto t = std::get_if<Term>(&c.node);
      return t ? std::get_if<FunctionTerm>(&t->node) : nullptr;
    }

    bool is_true_literal(const Calculation& c)
    {
      auto t = std::get_if<Term>(&c.node);
      if (!t)
        return false;
      auto b = std::get_if<BoolLit>(&t->node);
      return b && b->value;
    }

    void binders_in(const Condition& c, SymbolSet& out);

    void binders_in(const Calculation& c, SymbolSet& out)
    {
      if (auto b = std::get_if<BinOp>(&c.node))
      {
        binders_in(*b->lhs, out);
        binders_in(*b->rhs, out);
      }
      else if (auto a = std::get_if<Aggregate>(&c.node))
      {
        out.insert(a->var);
        binders_in(*a->constraint, out);
        binders_in(*a->body, out);
      }
      else if (auto i = std::get_if<IfCalc>(&c.node))
      {
        binders_in(*i->cond, out);
        binders_in(*i->then_calc, out);
        binders_in(*i->else_calc, out);
      }
    }

    void binders_in(const Condition& c, SymbolSet& out)
    {
      if (auto cmp = std::get_if<Compare>(&c.node))
      {
        binders_in(cmp->lhs, out);
        binders_in(cmp->rhs, out);
      }
      else if (auto b = std::get_if<BoolCond>(&c.node))
      {
        for (const auto& o : b->operands)
          binders_in(o, out);
      }
      else if (auto n = std::get_if<NotCond>(&c.node))
        binders_in(*n->operand, out);
      else if (auto f = std::get_if<Forall>(&c.node))
      {
        out.insert(f->vars.begin(), f->vars.end());
        binders_in(*f->constraint, out);
        binders_in(*f->requirement, out);
      }
    }

    // ------------------------------------------------------------ typing

    struct Typer
    {
      const Domain& d;
      const ObjectTypes& objects;

      std::optional<Symbol> term_type(const Term& t, const TypeEnv& theta) const
      {
        struct V
        {
          const Typer& self;
          const TypeEnv& theta;
          std::optional<Symbol> operator()(const Variable& v) const
          {
            auto it = theta.find(v.name);
            if (it == theta.end())
              return std::nullopt;
            return it->second;
          }
          std::optional<Symbol> operator()(const ObjectRef& o) const
          {
            if (o.name == names::DT)
              return names::REAL;
            auto it = self.objects.find(o.name);
            if (it == self.objects.end())
              return std::nullopt;
            return it->second;
          }
          std::optional<Symbol> operator()(const IntLit&) const { return names::INTEGER; }
          std::optional<Symbol> operator()(const RealLit&) const { return names::REAL; }
          std::optional<Symbol> operator()(const BoolLit&) const { return names::BOOLEAN; }
          std::optional<Symbol> operator()(const StringLit&) const { return std::nullopt; }
          std::optional<Symbol> operator()(const FunctionTerm& f) const
          {
            if (auto decl = self.d.function(f.name))
              return decl->value_type;
            return std::nullopt;
          }
        };
        return std::visit(V{*this, theta}, t.node);
      }

      std::optional<Symbol> calc_type(const Calculation& c, const TypeEnv& theta) const
      {
        if (auto t = std::get_if<Term>(&c.node))
          return term_type(*t, theta);
        if (auto b = std::get_if<BinOp>(&c.node))
        {
          auto l = calc_type(*b->lhs, theta), r = calc_type(*b->rhs, theta);
          bool ints = l && r && derived_from(*l, names::INTEGER, d) && derived_from(*r, names::INTEGER, d);
          if (ints && b->op != ArithOp::Gaussian)
            return names::INTEGER;
          return names::REAL;
        }
        if (auto a = std::get_if<Aggregate>(&c.node))
        {
          TypeEnv inner = theta;
          inner[a->var] = names::OBJECT;
          auto body = calc_type(*a->body, inner);
          if (body && derived_from(*body, names::INTEGER, d))
            return names::INTEGER;
          return names::REAL;
        }
        return calc_type(*std::get<IfCalc>(c.node).then_calc, theta);
      }

      bool compatible(const Symbol& actual, const Symbol& expected) const
      {
        return compatible_type(actual, expected, d);
      }

      bool term_assignable(const Symbol& ty, const Term& t, const TypeEnv& theta) const
      {
        if (std::holds_alternative<IntLit>(t.node))
          return derived_from(ty, names::INTEGER, d) || derived_from(ty, names::REAL, d);
        if (std::holds_alternative<RealLit>(t.node))
          return derived_from(ty, names::REAL, d);
        if (std::holds_alternative<BoolLit>(t.node))
          return derived_from(ty, names::BOOLEAN, d);
        auto actual = term_type(t, theta);
        return actual && compatible(*actual, ty);
      }

      bool assignable(const Symbol& ty, const Calculation& c, const TypeEnv& theta) const
      {
        if (auto t = std::get_if<Term>(&c.node))
          return term_assignable(ty, *t, theta);
        if (auto b = std::get_if<BinOp>(&c.node))
        {
          if (derived_from(ty, names::REAL, d))
            return assignable(names::REAL, *b->lhs, theta) && assignable(names::REAL, *b->rhs, theta);
          if (derived_from(ty, names::INTEGER, d) && b->op != ArithOp::Gaussian)
            return assignable(names::INTEGER, *b->lhs, theta) && assignable(names::INTEGER, *b->rhs, theta);
          return false;
        }
        if (auto a = std::get_if<Aggregate>(&c.node))
        {
          TypeEnv inner = theta;
          inner.emplace(a->var, names::OBJECT);
          if (derived_from(ty, names::REAL, d))
            return assignable(names::REAL, *a->body, inner);
          if (derived_from(ty, names::INTEGER, d))
            return assignable(names::INTEGER, *a->body, inner);
          return false;
        }
        const auto& i = std::get<IfCalc>(c.node);
        return assignable(ty, *i.then_calc, theta) && assignable(ty, *i.else_calc, theta);
      }
    };

    // --------------------------------------------------------- inference

    struct Constraints
    {
      std::map<Symbol, std::vector<Symbol>> uses;

      void add(const Symbol& v, const Symbol& ty)
      {
        auto& xs = uses[v];
        if (std::find(xs.begin(), xs.end(), ty) == xs.end())
          xs.push_back(ty);
      }
    };

    struct Inferrer
    {
      const Typer& typer;
      const TypeEnv& theta;
      Constraints& out;

      void term(const Term& t)
      {
        auto f = std::get_if<FunctionTerm>(&t.node);
        if (!f)
          return;
        auto decl = typer.d.function(f->name);
        for (std::size_t i = 0; i < f->args.size(); ++i)
        {
          if (auto v = std::get_if<Variable>(&f->args[i].node); v && decl && i < decl->args.size())
            out.add(v->name, decl->args[i].type);
          term(f->args[i]);
        }
      }

      void calc(const Calculation& c)
      {
        if (auto t = std::get_if<Term>(&c.node))
          term(*t);
        else if (auto b = std::get_if<BinOp>(&c.node))
        {
          for (const Calculation* side : {&*b->lhs, &*b->rhs})
          {
            if (auto v = bare_variable(*side))
              out.add(v->name, names::REAL);
            calc(*side);
          }
        }
        else if (auto a = std::get_if<Aggregate>(&c.node))
        {
          condition(*a->constraint);
          calc(*a->body);
        }
        else if (auto i = std::get_if<IfCalc>(&c.node))
        {
          condition(*i->cond);
          calc(*i->then_calc);
          calc(*i->else_calc);
        }
      }

      void condition(const Condition& c)
      {
        if (auto t = std::get_if<Term>(&c.node))
        {
          if (auto v = std::get_if<Variable>(&t->node))
            out.add(v->name, names::BOOLEAN);
          term(*t);
        }
        else if (auto cmp = std::get_if<Compare>(&c.node))
        {
          calc(cmp->lhs);
          calc(cmp->rhs);
          auto pair = [&](const Calculation& var_side, const Calculation& other) {
            if (auto v = bare_variable(var_side))
              if (auto ty = typer.calc_type(other, theta))
                out.add(v->name, *ty);
          };
          pair(cmp->lhs, cmp->rhs);
          pair(cmp->rhs, cmp->lhs);
        }
        else if (auto b = std::get_if<BoolCond>(&c.node))
        {
          for (const auto& o : b->operands)
            condition(o);
        }
        else if (auto n = std::get_if<NotCond>(&c.node))
          condition(*n->operand);
        else if (auto f = std::get_if<Forall>(&c.node))
        {
          condition(*f->constraint);
          condition(*f->requirement);
        }
      }

      void effect(const Effect& e)
      {
        if (e.modification == Modification::Create)
        {
          if (!e.args.empty())
            if (auto v = as_variable(e.args.front()))
              out.add(*v, e.target);
          return;
        }
        auto decl = typer.d.function(e.target);
        for (std::size_t i = 0; i < e.args.size(); ++i)
        {
          if (auto v = as_variable(e.args[i]); v && decl && i < decl->args.size())
            out.add(*v, decl->args[i].type);
          term(e.args[i]);
        }
        if (auto v = as_variable(e.value); v && decl)
          out.add(*v, decl->value_type);
        term(e.value);
      }

      void change(const ContinuousChange& c)
      {
        auto decl = typer.d.function(c.target);
        for (std::size_t i = 0; i < c.args.size(); ++i)
          if (auto v = as_variable(c.args[i]); v && decl && i < decl->args.size())
            out.add(*v, decl->args[i].type);
        calc(c.derivative);
      }
    };

    Symbol most_specific(const std::vector<Symbol>& candidates, const Typer& typer)
    {
      if (candidates.empty())
        return names::OBJECT;
      for (const auto& c : candidates)
        if (std::all_of(candidates.begin(), candidates.end(),
                        [&](const Symbol& o) { return typer.compatible(c, o); }))
          return c;
      return candidates.front();
    }

    template <class Visit>
    TypeEnv infer(const Typer& typer, TypeEnv seed, const SymbolSet& exclude, Visit&& visit)
    {
      TypeEnv theta = seed;
      // A few rounds so equalities between variables can propagate.
      for (int round = 0; round < 4; ++round)
      {
        Constraints cs;
        Inferrer inf{typer, theta, cs};
        visit(inf);
        TypeEnv next = seed;
        for (const auto& [v, tys] : cs.uses)
          if (!seed.contains(v) && !exclude.contains(v))
            next[v] = most_specific(tys, typer);
        if (next == theta)
          break;
        theta = std::move(next);
      }
      return theta;
    }

    // ---------------------------------------------------------- checking

    class Checker
    {
    public:
      Checker(const Domain& d, const ObjectTypes& objects, Diagnostics& ds) : d_(d), typer_{d, objects}, ds_(ds) {}

      void context(std::string c) { context_ = std::move(c); }

      bool error(const char* code, const std::string& msg)
      {
        ds_.push_back(Diagnostic{Severity::Error, code, context_.empty() ? msg : context_ + ": " + msg, {}});
        return false;
      }

      void warning(const char* code, const std::string& msg)
      {
        ds_.push_back(Diagnostic{Severity::Warning, code, context_.empty() ? msg : context_ + ": " + msg, {}});
      }

      const Typer& typer() const { return typer_; }

      bool known_type(const Symbol& t) const { return d_.has_type(t); }

      bool term(const Term& t, const TypeEnv& theta, const SymbolSet& bound)
      {
        if (auto v = std::get_if<Variable>(&t.node))
        {
          if (!bound.contains(v->name))
            return error(code::LegUnboundVar, "variable " + v->name.str() + " is not bound");
          return true;
        }
        if (auto o = std::get_if<ObjectRef>(&t.node))
        {
          if (o->name != names::DT && !typer_.objects.contains(o->name))
            return error(code::LegUnknownSymbol, "unknown object " + o->name.str());
          return true;
        }
        if (std::holds_alternative<StringLit>(t.node))
          return error(code::LegCalcType, "string literal outside a CREATE effect");
        if (auto f = std::get_if<FunctionTerm>(&t.node))
          return function_term(*f, theta, bound);
        return true;
      }

      bool function_term(const FunctionTerm& f, const TypeEnv& theta, const SymbolSet& bound)
      {
        auto decl = d_.function(f.name);
        if (!decl)
          return error(code::LegUnknownFunction, "unknown function " + f.name.str());
        if (decl->args.size() != f.args.size())
          return error(code::LegArity, f.name.str() + " takes " + std::to_string(decl->args.size()) +
                                         " argument(s), got " + std::to_string(f.args.size()));
        bool ok = true;
        for (std::size_t i = 0; i < f.args.size(); ++i)
        {
          if (!term(f.args[i], theta, bound))
          {
            ok = false;
            continue;
          }
          if (!typer_.term_assignable(decl->args[i].type, f.args[i], theta))
            ok = error(code::LegArgType, "argument " + to_string(f.args[i]) + " of " + f.name.str() +
                                           " is not a " + decl->args[i].type.str());
        }
        return ok;
      }

      // Structure only: names, arity, argument types, binding.
      bool calc(const Calculation& c, const TypeEnv& theta, const SymbolSet& bound)
      {
        if (auto t = std::get_if<Term>(&c.node))
          return term(*t, theta, bound);
        if (auto b = std::get_if<BinOp>(&c.node))
        {
          bool ok = calc(*b->lhs, theta, bound);
          ok = calc(*b->rhs, theta, bound) && ok;
          if (!ok)
            return false;
          for (const Calculation* side : {&*b->lhs, &*b->rhs})
            if (!typer_.assignable(names::REAL, *side, theta))
              return error(code::LegCalcType, "operand " + to_string(*side) + " is not numeric");
          return true;
        }
        if (auto a = std::get_if<Aggregate>(&c.node))
        {
          TypeEnv inner = binder_env(theta, {a->var}, [&](Inferrer& inf) {
            inf.condition(*a->constraint);
            inf.calc(*a->body);
          });
          SymbolSet b2 = bound;
          b2.insert(a->var);
          b2 = bound_variables({*a->constraint}, b2, d_);
          bool ok = condition(*a->constraint, inner, b2);
          ok = calc(*a->body, inner, b2) && ok;
          if (ok && !typer_.assignable(names::REAL, *a->body, inner))
            return error(code::LegCalcType, "aggregate body " + to_string(*a->body) + " is not numeric");
          return ok;
        }
        const auto& i = std::get<IfCalc>(c.node);
        bool ok = condition(*i.cond, theta, bound);
        ok = calc(*i.then_calc, theta, bound) && ok;
        return calc(*i.else_calc, theta, bound) && ok;
      }

      bool typed_calc(const Calculation& c, const Symbol& ty, const TypeEnv& theta, const SymbolSet& bound,
                      const char* mismatch)
      {
        if (!calc(c, theta, bound))
          return false;
        if (!typer_.assignable(ty, c, theta))
          return error(mismatch, to_string(c) + " is not assignable to " + ty.str());
        return true;
      }

      bool condition(const Condition& c, const TypeEnv& theta, const SymbolSet& bound)
      {
        if (auto t = std::get_if<Term>(&c.node))
        {
          if (!term(*t, theta, bound))
            return false;
          if (!typer_.term_assignable(names::BOOLEAN, *t, theta))
            return error(code::LegConditionType, to_string(*t) + " is not BOOLEAN");
          return true;
        }
        if (auto cmp = std::get_if<Compare>(&c.node))
          return compare(*cmp, theta, bound);
        if (auto b = std::get_if<BoolCond>(&c.node))
        {
          bool ok = true;
          for (const auto& o : b->operands)
            ok = condition(o, theta, bound) && ok;
          return ok;
        }
        if (auto n = std::get_if<NotCond>(&c.node))
          return condition(*n->operand, theta, bound);
        const auto& f = std::get<Forall>(c.node);
        bool ok = true;
        for (const auto& v : f.vars)
          if (theta.contains(v))
            ok = error(code::LegForallRebind, "FORALL rebinds " + v.str());
        if (!ok)
          return false;
        TypeEnv inner = binder_env(theta, f.vars, [&](Inferrer& inf) {
          inf.condition(*f.constraint);
          inf.condition(*f.requirement);
        });
        SymbolSet b2 = bound;
        b2.insert(f.vars.begin(), f.vars.end());
        b2 = bound_variables({*f.constraint}, b2, d_);
        ok = condition(*f.constraint, inner, b2);
        return condition(*f.requirement, inner, b2) && ok;
      }

      bool compare(const Compare& cmp, const TypeEnv& theta, const SymbolSet& bound)
      {
        SymbolSet vars = free_variables(cmp.lhs);
        auto rv = free_variables(cmp.rhs);
        vars.insert(rv.begin(), rv.end());
        SymbolSet local = bound;
        if (cmp.op == CompareOp::Eq)
          local.insert(vars.begin(), vars.end());
        bool ok = true;
        for (const auto& v : vars)
          if (!local.contains(v))
            ok = error(code::LegUnboundVar, "variable " + v.str() + " is not bound in " + to_string(Condition{cmp}));
        if (!ok)
          return false;
        ok = calc(cmp.lhs, theta, local);
        ok = calc(cmp.rhs, theta, local) && ok;
        if (!ok)
          return false;
        std::vector<Symbol> candidates;
        for (const Calculation* side : {&cmp.lhs, &cmp.rhs})
          if (auto ty = typer_.calc_type(*side, theta))
            candidates.push_back(*ty);
        candidates.insert(candidates.end(), {names::REAL, names::INTEGER, names::BOOLEAN});
        bool equality = cmp.op == CompareOp::Eq || cmp.op == CompareOp::Ne;
        for (const auto& ty : candidates)
        {
          if (!equality && !is_numeric_type(ty, d_))
            continue;
          if (typer_.assignable(ty, cmp.lhs, theta) && typer_.assignable(ty, cmp.rhs, theta))
            return true;
        }
        return error(code::LegCompareType, "no common type for " + to_string(Condition{cmp}));
      }

      bool effect(const Effect& e, const TypeEnv& theta, SymbolSet& bound)
      {
        if (e.probability < 0.0 || e.probability > 1.0)
          error(code::LegProbability, "effect probability outside [0, 1]");
        if (e.modification == Modification::Create)
        {
          bool ok = true;
          if (!known_type(e.target))
            ok = error(code::LegUnknownType, "CREATE of unknown type " + e.target.str());
          const Symbol* v = e.args.size() == 1 ? as_variable(e.args.front()) : nullptr;
          if (!v || !std::holds_alternative<StringLit>(e.value.node))
            return error(code::LegEffectType, "CREATE needs a variable and a name prefix");
          bound.insert(*v);
          return ok;
        }
        auto decl = d_.function(e.target);
        if (!decl)
          return error(code::LegUnknownFunction, "effect on unknown function " + e.target.str());
        if (decl->args.size() != e.args.size())
          return error(code::LegArity, e.target.str() + " takes " + std::to_string(decl->args.size()) +
                                         " argument(s), got " + std::to_string(e.args.size()));
        bool ok = true;
        for (std::size_t i = 0; i < e.args.size(); ++i)
        {
          if (!term(e.args[i], theta, bound))
          {
            ok = false;
            continue;
          }
          if (!typer_.term_assignable(decl->args[i].type, e.args[i], theta))
            ok = error(code::LegArgType, "argument " + to_string(e.args[i]) + " of " + e.target.str() +
                                           " is not a " + decl->args[i].type.str());
        }
        if (e.modification != Modification::Set && !is_numeric_type(decl->value_type, d_))
          return error(code::LegEffectMod, "INCREASE/DECREASE on non-numeric " + e.target.str());
        if (!term(e.value, theta, bound))
          return false;
        if (!typer_.term_assignable(decl->value_type, e.value, theta))
          return error(code::LegEffectType,
                       to_string(e.value) + " is not assignable to " + e.target.str() + " (" +
                         decl->value_type.str() + ")");
        return ok;
      }

      bool change(const ContinuousChange& c, const TypeEnv& theta, const SymbolSet& bound)
      {
        auto decl = d_.function(c.target);
        if (!decl)
          return error(code::LegUnknownFunction, "change on unknown function " + c.target.str());
        if (decl->args.size() != c.args.size())
          return error(code::LegArity, c.target.str() + " takes " + std::to_string(decl->args.size()) +
                                         " argument(s), got " + std::to_string(c.args.size()));
        bool ok = true;
        for (std::size_t i = 0; i < c.args.size(); ++i)
        {
          if (!term(c.args[i], theta, bound))
          {
            ok = false;
            continue;
          }
          if (!typer_.term_assignable(decl->args[i].type, c.args[i], theta))
            ok = error(code::LegArgType, "argument " + to_string(c.args[i]) + " of " + c.target.str() +
                                           " is not a " + decl->args[i].type.str());
        }
        if (!is_numeric_type(decl->value_type, d_))
          return error(code::LegChangeType, "continuous change on non-numeric " + c.target.str());
        if (int n = count_dt(c.derivative); n != 1)
          return error(code::LegDt, "derivative of " + c.target.str() + " mentions DT " + std::to_string(n) +
                                      " times");
        return typed_calc(c.derivative, decl->value_type, theta, bound, code::LegChangeType) && ok;
      }

      template <class Visit>
      TypeEnv binder_env(const TypeEnv& theta, const std::vector<Symbol>& vars, Visit&& visit) const
      {
        TypeEnv local = infer(typer_, theta, {}, visit);
        TypeEnv out = theta;
        for (const auto& v : vars)
        {
          auto it = local.find(v);
          out[v] = it == local.end() ? names::OBJECT : it->second;
        }
        return out;
      }

    private:
      const Domain& d_;
      Typer typer_;
      Diagnostics& ds_;
      std::string context_;
    };

    void check_typed_list(Checker& ck, const TypedList& vars, const Domain& d)
    {
      SymbolSet seen;
      for (const auto& tv : vars)
      {
        if (!d.has_type(tv.type))
          ck.error(code::LegUnknownType, "unknown type " + tv.type.str() + " for " + tv.var.str());
        if (!seen.insert(tv.var).second)
          ck.error(code::LegDuplicate, "variable " + tv.var.str() + " listed twice");
      }
    }

    TypeEnv env_of(const TypedList& vars)
    {
      TypeEnv out;
      for (const auto& tv : vars)
        out[tv.var] = tv.type;
      return out;
    }

    SymbolSet vars_of(const TypedList& vars)
    {
      SymbolSet out;
      for (const auto& tv : vars)
        out.insert(tv.var);
      return out;
    }

    SymbolSet binders_of(const std::vector<Condition>& conds)
    {
      SymbolSet out;
      for (const auto& c : conds)
        binders_in(c, out);
      return out;
    }

    template <class T>
    void check_unique_names(Checker& ck, const std::vector<T>& xs, const char* what)
    {
      SymbolSet seen;
      for (const auto& x : xs)
        if (!seen.insert(x.name).second)
          ck.error(code::LegDuplicate, std::string("duplicate ") + what + " " + x.name.str());
    }

    void check_domain_into(const Domain& d, const ObjectTypes& objects, Diagnostics& ds)
    {
      Checker ck(d, objects, ds);
      const Typer& ty = ck.typer();

      SymbolSet seen;
      for (const auto& t : d.types)
        if (!seen.insert(t).second)
          ck.error(code::LegDuplicate, "duplicate type " + t.str());
      for (const auto& tp : d.supertypes)
      {
        if (!d.has_type(tp.child))
          ck.error(code::LegUnknownSupertype, "supertype pair names unknown type " + tp.child.str());
        if (!d.has_type(tp.parent))
          ck.error(code::LegUnknownSupertype, "supertype pair names unknown type " + tp.parent.str());
      }
      for (const auto& t : cyclic_types(d))
        ck.error(code::LegTypeCycle, "type " + t.str() + " is its own ancestor");

      check_unique_names(ck, d.constants, "constant");
      for (const auto& c : d.constants)
        if (!d.has_type(c.type))
          ck.error(code::LegUnknownType, "constant " + c.name.str() + " has unknown type " + c.type.str());

      check_unique_names(ck, d.functions, "function");
      for (const auto& f : d.functions)
      {
        ck.context("function " + f.name.str());
        check_typed_list(ck, f.args, d);
        if (!d.has_type(f.value_type))
          ck.error(code::LegUnknownType, "unknown value type " + f.value_type.str());
      }

      for (const auto& ax : d.axioms)
      {
        ck.context("axiom " + ax.name.str());
        auto decl = d.function(ax.name);
        if (!decl)
        {
          ck.error(code::LegUnknownFunction, "axiom for undeclared function");
          continue;
        }
        if (decl->value_type != names::BOOLEAN)
        {
          ck.error(code::LegAxiomType, "axiom defines non-BOOLEAN function");
          continue;
        }
        if (decl->args.size() != ax.args.size())
        {
          ck.error(code::LegArity, "axiom arity differs from the declaration");
          continue;
        }
        check_typed_list(ck, ax.args, d);
        for (std::size_t i = 0; i < ax.args.size(); ++i)
          if (!ty.compatible(ax.args[i].type, decl->args[i].type))
            ck.error(code::LegArgType, "axiom argument " + ax.args[i].var.str() + " is not a " +
                                         decl->args[i].type.str());
        TypeEnv seed = env_of(ax.args);
        std::vector<Condition> conds{ax.antecedent};
        auto exclude = binders_of(conds);
        TypeEnv theta = infer(ty, seed, exclude, [&](Inferrer& inf) { inf.condition(ax.antecedent); });
        auto bound = bound_variables(conds, vars_of(ax.args), d);
        ck.condition(ax.antecedent, theta, bound);
      }

      check_unique_names(ck, d.actions, "action");
      for (const auto& a : d.actions)
      {
        ck.context("action " + a.name.str());
        check_typed_list(ck, a.parameters, d);
        TypeEnv theta = action_type_env(a, d);
        if (auto v = as_variable(a.performer))
        {
          if (!ty.compatible(theta[*v], names::AGENT))
            ck.error(code::LegPerformer, "performer " + v->str() + " is not an AGENT");
        }
        else if (!ty.term_assignable(names::AGENT, a.performer, theta))
          ck.error(code::LegPerformer, "performer " + to_string(a.performer) + " is not an AGENT");
        SymbolSet bound = action_bound_variables(a, d);
        for (const auto& c : a.preconditions)
          ck.condition(c, theta, bound);
        for (const auto& e : a.effects)
          ck.effect(e, theta, bound);
      }

      check_unique_names(ck, d.events, "event");
      for (const auto& ev : d.events)
      {
        ck.context("event " + ev.name.str());
        check_typed_list(ck, ev.qualities, d);
        if (ev.probability < 0.0 || ev.probability > 1.0)
          ck.error(code::LegProbability, "probability outside [0, 1]");
        if (ev.frequency < 0.0)
          ck.error(code::LegEventRate, "negative frequency");
        else if (ev.probability < 1.0 && ev.frequency > 0.0)
          ck.error(code::LegEventRate, "both a probability below 1 and a positive frequency");
        TypeEnv theta = infer(ty, env_of(ev.qualities), binders_of(ev.triggers), [&](Inferrer& inf) {
          for (const auto& c : ev.triggers)
            inf.condition(c);
          for (const auto& e : ev.effects)
            inf.effect(e);
        });
        SymbolSet bound = bound_variables(ev.triggers, vars_of(ev.qualities), d);
        for (const auto& c : ev.triggers)
          ck.condition(c, theta, bound);
        for (const auto& e : ev.effects)
          ck.effect(e, theta, bound);
      }

      check_unique_names(ck, d.processes, "process");
      for (const auto& p : d.processes)
      {
        ck.context("process " + p.name.str());
        check_typed_list(ck, p.qualities, d);
        TypeEnv theta = infer(ty, env_of(p.qualities), binders_of(p.conditions), [&](Inferrer& inf) {
          for (const auto& c : p.conditions)
            inf.condition(c);
          for (const auto& c : p.changes)
            inf.change(c);
        });
        SymbolSet bound = bound_variables(p.conditions, vars_of(p.qualities), d);
        for (const auto& c : p.conditions)
          ck.condition(c, theta, bound);
        for (const auto& c : p.changes)
          ck.change(c, theta, bound);
      }
    }

    bool names_generator(const Symbol& n, const ScenarioGenerator& sg, const Domain& d)
    {
      return sg.value_generator(n) || sg.object_generator(n) || d.has_type(n);
    }

    void check_generator_refs(const GeneratorExpr& g, const ScenarioGenerator& sg, const Domain& d, Checker& ck)
    {
      auto sub = [&](const GeneratorExpr& x) { check_generator_refs(x, sg, d, ck); };
      std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, GenRef>)
          {
            if (!names_generator(n.name, sg, d))
              ck.error(code::LegGeneratorRef, "unknown generator or type " + n.name.str());
          }
          else if constexpr (std::is_same_v<T, FieldRef>)
          {
            if (!sg.value_generator(n.gen))
              ck.error(code::LegGeneratorRef, "unknown value generator " + n.gen.str());
          }
          else if constexpr (std::is_same_v<T, DrawFromObjectSet> || std::is_same_v<T, DrawAllFromObjectSet>)
          {
            if (!names_generator(n.name, sg, d))
              ck.error(code::LegGeneratorRef, "unknown object set " + n.name.str());
          }
          else if constexpr (std::is_same_v<T, NDraws> || std::is_same_v<T, NewSet>)
            sub(*n.sub);
          else if constexpr (std::is_same_v<T, FilterGen>)
            sub(*n.sub);
          else if constexpr (std::is_same_v<T, DrawTuple> || std::is_same_v<T, CombineFunctions>)
          {
            for (const auto& x : n.subs)
              sub(x);
          }
          else if constexpr (std::is_same_v<T, AllPermutations> || std::is_same_v<T, NFluentDraws>)
          {
            for (const auto& x : n.args)
              sub(x);
            sub(*n.value);
          }
          else if constexpr (std::is_same_v<T, Difference>)
          {
            sub(*n.a);
            sub(*n.b);
          }
        },
        g.node);
    }
  }

  // ------------------------------------------------------------- public

  bool compatible_type(const Symbol& actual, const Symbol& expected, const Domain& d)
  {
    if (derived_from(actual, expected, d))
      return true;
    return derived_from(actual, names::INTEGER, d) && derived_from(expected, names::REAL, d);
  }

  bool assignable_to(const Symbol& ty, const Calculation& c, const TypeEnv& theta, const Domain& d)
  {
    auto objects = constant_types(d);
    return Typer{d, objects}.assignable(ty, c, theta);
  }

  bool value_assignable(const Value& v, const Symbol& ty, const Domain& d, const ObjectTypes& objects)
  {
    if (auto s = std::get_if<Symbol>(&v.v))
    {
      auto it = objects.find(*s);
      return it != objects.end() && compatible_type(it->second, ty, d);
    }
    return Typer{d, objects}.term_assignable(ty, to_term(v), {});
  }

  bool legal_condition(const Condition& c, const TypeEnv& theta, const SymbolSet& bound, const Domain& d)
  {
    Diagnostics scratch;
    auto objects = constant_types(d);
    Checker ck(d, objects, scratch);
    return ck.condition(c, theta, bound) && !has_errors(scratch);
  }

  bool legal_ground_fluent(const GroundFluent& gf, const Domain& d, const ObjectTypes& objects)
  {
    auto decl = d.function(gf.function);
    if (!decl || decl->args.size() != gf.args.size())
      return false;
    for (std::size_t i = 0; i < gf.args.size(); ++i)
      if (!value_assignable(gf.args[i], decl->args[i].type, d, objects))
        return false;
    return value_assignable(gf.value, decl->value_type, d, objects);
  }

  SymbolSet bound_variables(const std::vector<Condition>& conds, const SymbolSet& seed, const Domain& d)
  {
    auto positive_terms = [&](const Condition& c, SymbolSet& out, auto& self) -> void {
      const FunctionTerm* f = nullptr;
      if (auto t = std::get_if<Term>(&c.node))
        f = std::get_if<FunctionTerm>(&t->node);
      else if (auto cmp = std::get_if<Compare>(&c.node); cmp && cmp->op == CompareOp::Eq)
      {
        if (is_true_literal(cmp->rhs))
          f = bare_function(cmp->lhs);
        else if (is_true_literal(cmp->lhs))
          f = bare_function(cmp->rhs);
      }
      else if (auto b = std::get_if<BoolCond>(&c.node); b && b->op == BoolOp::And)
      {
        for (const auto& o : b->operands)
          self(o, out, self);
      }
      if (!f)
        return;
      auto decl = d.function(f->name);
      if (!decl || decl->value_type != names::BOOLEAN)
        return;
      for (const auto& a : f->args)
        if (auto v = as_variable(a))
          out.insert(*v);
    };

    SymbolSet bound = seed;
    for (;;)
    {
      auto before = bound.size();
      auto eq = condition_bound_variables(conds, bound);
      bound.insert(eq.begin(), eq.end());
      for (const auto& c : conds)
        positive_terms(c, bound, positive_terms);
      if (bound.size() == before)
        return bound;
    }
  }

  TypeEnv infer_types(const std::vector<Condition>& conds, const std::vector<Effect>& effects,
                      const std::vector<ContinuousChange>& changes, TypeEnv seed, const Domain& d)
  {
    auto objects = constant_types(d);
    Typer typer{d, objects};
    return infer(typer, std::move(seed), binders_of(conds), [&](Inferrer& inf) {
      for (const auto& c : conds)
        inf.condition(c);
      for (const auto& e : effects)
        inf.effect(e);
      for (const auto& c : changes)
        inf.change(c);
    });
  }

  TypeEnv action_type_env(const ActionModel& a, const Domain& d)
  {
    TypeEnv seed = env_of(a.parameters);
    if (auto v = as_variable(a.performer); v && !seed.contains(*v))
      seed[*v] = names::AGENT;
    return infer_types(a.preconditions, a.effects, {}, std::move(seed), d);
  }

  SymbolSet action_bound_variables(const ActionModel& a, const Domain& d)
  {
    SymbolSet seed = vars_of(a.parameters);
    if (auto v = as_variable(a.performer))
      seed.insert(*v);
    return bound_variables(a.preconditions, seed, d);
  }

  ObjectTypes constant_types(const Domain& d)
  {
    ObjectTypes out;
    for (const auto& c : d.constants)
      out.emplace(c.name, c.type);
    return out;
  }

  ObjectTypes static_objects(const Domain& d, const ScenarioGenerator& sg)
  {
    ObjectTypes out = constant_types(d);
    std::set<Symbol> taken;
    for (const auto& [n, t] : out)
      taken.insert(n);
    for (const auto& og : sg.object_generators)
      if (auto ol = std::get_if<ObjectList>(&og.draw.node))
        for (const auto& n : gensym_names(ol->prefix, ol->count, taken))
          out.emplace(n, og.type);
    return out;
  }

  LegalityReport check_domain(const Domain& d)
  {
    LegalityReport r;
    check_domain_into(d, constant_types(d), r.diagnostics);
    return r;
  }

  LegalityReport check_environment(const Domain& d, const ScenarioGenerator& sg)
  {
    LegalityReport r;
    auto objects = static_objects(d, sg);
    check_domain_into(d, constant_types(d), r.diagnostics);
    Checker ck(d, objects, r.diagnostics);

    ck.context("scenario generator");
    for (const auto& gf : sg.fluents)
      if (!legal_ground_fluent(gf, d, objects))
        ck.error(code::LegFluent, "illegal fluent " + to_string(gf));

    for (const auto& dv : sg.defaults)
    {
      auto decl = d.function(dv.function);
      if (!decl)
        ck.error(code::LegDefaultFunction, "default for undeclared function " + dv.function.str());
      else if (!value_assignable(dv.value, decl->value_type, d, objects))
        ck.error(code::LegDefaultType, "default " + to_string(dv.value) + " for " + dv.function.str() +
                                         " is not a " + decl->value_type.str());
    }
    for (const auto& f : d.functions)
      if (!sg.default_for(f.name))
        ck.error(code::LegMissingDefault, "no default for " + f.name.str());

    for (const auto& og : sg.object_generators)
    {
      ck.context("object generator " + og.name.str());
      if (!d.has_type(og.type))
        ck.error(code::LegUnknownType, "unknown type " + og.type.str());
      else if (!derived_from(og.type, names::OBJECT, d) && !derived_from(og.type, names::AGENT, d))
        ck.error(code::LegOgType, og.type.str() + " is not an OBJECT or AGENT type");
      check_generator_refs(og.draw, sg, d, ck);
    }
    for (const auto& vg : sg.value_generators)
    {
      ck.context("value generator " + vg.name.str());
      check_generator_refs(vg.draw, sg, d, ck);
    }
    for (const auto& fg : sg.fluent_generators)
    {
      ck.context("fluent generator " + fg.function.str());
      if (!d.function(fg.function))
        ck.error(code::LegFgFunction, "fluent generator for undeclared function " + fg.function.str());
      else
        ck.warning(code::LegDrawDynamic, "drawn fluents are checked when sampled");
      check_generator_refs(fg.draw, sg, d, ck);
    }

    if (sg.performance)
    {
      ck.context("performance");
      TypeEnv theta{{names::AG, names::AGENT}};
      SymbolSet bound{names::AG};
      auto free = free_variables(*sg.performance);
      bool ok = true;
      for (const auto& v : free)
        if (v != names::AG)
          ok = ck.error(code::LegPerformance, "free variable " + v.str() + " (only ?AG is allowed)");
      if (ok)
        ck.typed_calc(*sg.performance, names::REAL, theta, bound, code::LegPerformance);
    }
    return r;
  }

}  // namespace tsal
