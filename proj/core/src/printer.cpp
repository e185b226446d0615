#include <charconv>
#include <sstream>

#include "tsal/reader.hpp"

namespace tsal
{

  namespace
  {
    // Shortest round-trip form that still reads back as a real.
    std::string real_text(double d)
    {
      char buf[64];
      auto [p, ec] = std::to_chars(buf, buf + sizeof buf, d);
      std::string s(buf, p);
      if (s.find_first_of(".eEn") == std::string::npos)
        s += ".0";
      return s;
    }

    std::string quoted(const std::string& s)
    {
      std::string out = "\"";
      for (char c : s)
      {
        if (c == '"' || c == '\\')
          out.push_back('\\');
        out.push_back(c);
      }
      out.push_back('"');
      return out;
    }

    const char* arith_name(ArithOp op)
    {
      switch (op)
      {
      case ArithOp::Add:
        return "+";
      case ArithOp::Sub:
        return "-";
      case ArithOp::Mul:
        return "*";
      case ArithOp::Div:
        return "/";
      case ArithOp::Uniform:
        return ":UNIFORM";
      case ArithOp::Gaussian:
        return ":GAUSSIAN";
      }
      return "?";
    }

    const char* compare_name(CompareOp op)
    {
      switch (op)
      {
      case CompareOp::Eq:
        return "=";
      case CompareOp::Ne:
        return "!=";
      case CompareOp::Lt:
        return "<";
      case CompareOp::Gt:
        return ">";
      case CompareOp::Le:
        return "<=";
      case CompareOp::Ge:
        return ">=";
      }
      return "?";
    }

    const char* modification_name(Modification m)
    {
      switch (m)
      {
      case Modification::Set:
        return "SET";
      case Modification::Increase:
        return "INCREASE";
      case Modification::Decrease:
        return "DECREASE";
      case Modification::Create:
        return "CREATE";
      }
      return "?";
    }

    template <class T>
    std::string joined(const std::vector<T>& xs, const char* open = "(", const char* close = ")")
    {
      std::string out = open;
      for (std::size_t i = 0; i < xs.size(); ++i)
      {
        if (i)
          out += ' ';
        out += to_string(xs[i]);
      }
      return out + close;
    }

    std::string symbols(const std::vector<Symbol>& xs, const char* open = "(", const char* close = ")")
    {
      std::string out = open;
      for (std::size_t i = 0; i < xs.size(); ++i)
      {
        if (i)
          out += ' ';
        out += xs[i].str();
      }
      return out + close;
    }

    std::string numbers(const std::vector<double>& xs)
    {
      std::string out = "[";
      for (std::size_t i = 0; i < xs.size(); ++i)
      {
        if (i)
          out += ' ';
        out += real_text(xs[i]);
      }
      return out + "]";
    }

    std::string typed(const TypedList& vars)
    {
      std::string out;
      for (std::size_t i = 0; i < vars.size(); ++i)
      {
        if (i)
          out += ' ';
        out += vars[i].var.str() + " - " + vars[i].type.str();
      }
      return out;
    }

    std::string fluent_head(const Symbol& fn, const std::vector<Term>& args)
    {
      std::string out = "(" + fn.str();
      for (const auto& a : args)
        out += " " + to_string(a);
      return out + ")";
    }

    std::string tx_arg(const TxArg& a)
    {
      struct V
      {
        std::string operator()(const Symbol& s) const { return s.str(); }
        std::string operator()(double d) const { return real_text(d); }
        std::string operator()(const std::vector<Symbol>& xs) const { return symbols(xs); }
        std::string operator()(const std::vector<Value>& xs) const { return joined(xs); }
        std::string operator()(const Value& v) const { return to_string(v); }
        std::string operator()(const Term& t) const { return to_string(t); }
        std::string operator()(const FunctionDecl& f) const { return to_string(f); }
        std::string operator()(const Axiom& ax) const { return to_string(ax); }
        std::string operator()(const Condition& c) const { return to_string(c); }
        std::string operator()(const Effect& e) const { return to_string(e); }
        std::string operator()(const ContinuousChange& c) const { return to_string(c); }
        std::string operator()(const Calculation& c) const { return to_string(c); }
        std::string operator()(const GeneratorExpr& g) const { return to_string(g); }
      };
      return std::visit(V{}, a);
    }

    template <class T>
    void section_list(std::ostringstream& os, const char* key, const std::vector<T>& xs)
    {
      os << "\n    " << key << " (";
      for (std::size_t i = 0; i < xs.size(); ++i)
        os << (i ? " " : "") << to_string(xs[i]);
      os << ")";
    }
  }

  std::string to_string(const Value& v)
  {
    struct V
    {
      std::string operator()(const Symbol& s) const { return s.str(); }
      std::string operator()(std::int64_t i) const { return std::to_string(i); }
      std::string operator()(double d) const { return real_text(d); }
      std::string operator()(bool b) const { return b ? "TRUE" : "FALSE"; }
      std::string operator()(const std::string& s) const { return quoted(s); }
    };
    return std::visit(V{}, v.v);
  }

  std::string to_string(const Term& t)
  {
    struct V
    {
      std::string operator()(const Variable& v) const { return v.name.str(); }
      std::string operator()(const ObjectRef& o) const { return o.name.str(); }
      std::string operator()(const IntLit& i) const { return std::to_string(i.value); }
      std::string operator()(const RealLit& r) const { return real_text(r.value); }
      std::string operator()(const BoolLit& b) const { return b.value ? "TRUE" : "FALSE"; }
      std::string operator()(const StringLit& s) const { return quoted(s.value); }
      std::string operator()(const FunctionTerm& f) const { return fluent_head(f.name, f.args); }
    };
    return std::visit(V{}, t.node);
  }

  std::string to_string(const Calculation& c)
  {
    struct V
    {
      std::string operator()(const Term& t) const { return to_string(t); }
      std::string operator()(const BinOp& b) const
      {
        return std::string("(") + arith_name(b.op) + " " + to_string(*b.lhs) + " " + to_string(*b.rhs) + ")";
      }
      std::string operator()(const Aggregate& a) const
      {
        return std::string("(") + (a.op == AggOp::Sum ? "SUM " : "PRODUCT ") + a.var.str() + " " +
          to_string(*a.constraint) + " " + to_string(*a.body) + ")";
      }
      std::string operator()(const IfCalc& i) const
      {
        return "(IF " + to_string(*i.cond) + " " + to_string(*i.then_calc) + " " + to_string(*i.else_calc) + ")";
      }
    };
    return std::visit(V{}, c.node);
  }

  std::string to_string(const Condition& c)
  {
    struct V
    {
      std::string operator()(const Term& t) const { return to_string(t); }
      std::string operator()(const Compare& cmp) const
      {
        return std::string("(") + compare_name(cmp.op) + " " + to_string(cmp.lhs) + " " + to_string(cmp.rhs) + ")";
      }
      std::string operator()(const BoolCond& b) const
      {
        std::string out = b.op == BoolOp::And ? "(AND" : "(OR";
        for (const auto& o : b.operands)
          out += " " + to_string(o);
        return out + ")";
      }
      std::string operator()(const NotCond& n) const { return "(NOT " + to_string(*n.operand) + ")"; }
      std::string operator()(const Forall& f) const
      {
        return "(FORALL " + symbols(f.vars) + " " + to_string(*f.constraint) + " " + to_string(*f.requirement) +
          ")";
      }
    };
    return std::visit(V{}, c.node);
  }

  std::string to_string(const Effect& e)
  {
    std::string out;
    if (e.modification == Modification::Create)
    {
      out = "(CREATE " + e.target.str();
      for (const auto& a : e.args)
        out += " " + to_string(a);
      out += " " + to_string(e.value) + ")";
    }
    else
      out = std::string("(") + modification_name(e.modification) + " " + fluent_head(e.target, e.args) + " " +
        to_string(e.value) + ")";
    if (e.probability != 1.0)
      out += " [" + real_text(e.probability) + "]";
    return out;
  }

  std::string to_string(const ContinuousChange& c)
  {
    return std::string(c.direction == Direction::Increase ? "(INCREASE " : "(DECREASE ") +
      fluent_head(c.target, c.args) + " " + to_string(c.derivative) + ")";
  }

  std::string to_string(const FunctionDecl& f)
  {
    std::string out = "(" + f.name.str();
    if (!f.args.empty())
      out += " " + typed(f.args);
    return out + ") - " + f.value_type.str();
  }

  std::string to_string(const Axiom& a)
  {
    std::string head = "(" + a.name.str();
    if (!a.args.empty())
      head += " " + typed(a.args);
    return "(:- " + head + ") " + to_string(a.antecedent) + ")";
  }

  std::string to_string(const GroundFluent& gf)
  {
    std::string out = "(= (" + gf.function.str();
    for (const auto& a : gf.args)
      out += " " + to_string(a);
    return out + ") " + to_string(gf.value) + ")";
  }

  std::string to_string(const GeneratorExpr& g)
  {
    struct V
    {
      std::string operator()(const ObjectList& x) const
      {
        return "(OBJECTLIST " + std::to_string(x.count) + " " + quoted(x.prefix) + ")";
      }
      std::string operator()(const UniformDist& x) const
      {
        return "(UNIFORMDISTRIBUTION " + real_text(x.min) + " " + real_text(x.max) + ")";
      }
      std::string operator()(const UniformInt& x) const
      {
        return "(UNIFORMINTEGERDISTRIBUTION " + std::to_string(x.min) + " " + std::to_string(x.max) + ")";
      }
      std::string operator()(const GaussianDist& x) const
      {
        return "(GAUSSIANDISTRIBUTION " + real_text(x.mean) + " " + real_text(x.stdev) + ")";
      }
      std::string operator()(const NDimGaussian& x) const
      {
        return "(NDIMENSIONALGAUSSIANDISTRIBUTION " + numbers(x.means) + " " + numbers(x.stdevs) + ")";
      }
      std::string operator()(const Bernoulli& x) const { return "(BERNOULLIDISTRIBUTION " + real_text(x.p) + ")"; }
      std::string operator()(const IntegerSequence& x) const
      {
        return "(INTEGERSEQUENCE " + std::to_string(x.min) + " " + std::to_string(x.max) + ")";
      }
      std::string operator()(const DrawFromObjectSet& x) const { return "(DRAWFROMOBJECTSET " + x.name.str() + ")"; }
      std::string operator()(const DrawAllFromObjectSet& x) const
      {
        return "(DRAWALLFROMOBJECTSET " + x.name.str() + ")";
      }
      std::string operator()(const ConstantGen& x) const { return "(CONSTANTFUNCTION " + to_string(x.value) + ")"; }
      std::string operator()(const NDraws& x) const
      {
        return "(NDRAWS " + to_string(*x.sub) + " " + std::to_string(x.n) + ")";
      }
      std::string operator()(const DrawTuple& x) const
      {
        return "(DRAWTUPLE " + joined(x.subs, "[", "]") + " " + symbols(x.names, "[", "]") + ")";
      }
      std::string operator()(const FilterGen& x) const
      {
        return "(FILTER " + to_string(*x.sub) + " (LAMBDA " + symbols(x.predicate.params) + " " +
          to_string(x.predicate.body) + "))";
      }
      std::string operator()(const NewSet& x) const { return "(NEWSET " + to_string(*x.sub) + ")"; }
      std::string operator()(const AllPermutations& x) const
      {
        return "(ALLPERMUTATIONS " + joined(x.args, "[", "]") + " " + to_string(*x.value) + ")";
      }
      std::string operator()(const NFluentDraws& x) const
      {
        return "(NFLUENTDRAWS " + joined(x.args, "[", "]") + " " + to_string(*x.value) + " " +
          std::to_string(x.n) + ")";
      }
      std::string operator()(const CombineFunctions& x) const
      {
        std::string out = "(COMBINEFUNCTIONS";
        for (const auto& s : x.subs)
          out += " " + to_string(s);
        return out + ")";
      }
      std::string operator()(const FieldRef& x) const { return x.gen.str() + "." + x.field.str(); }
      std::string operator()(const GenRef& x) const { return x.name.str(); }
      std::string operator()(const Difference& x) const
      {
        return "(DIFFERENCE " + to_string(*x.a) + " " + to_string(*x.b) + ")";
      }
      std::string operator()(const ValueList& x) const
      {
        std::string out = "(LIST";
        for (const auto& v : x.values)
          out += " " + to_string(v);
        return out + ")";
      }
    };
    return std::visit(V{}, g.node);
  }

  std::string to_string(const Transformation& t)
  {
    std::string out = "(" + std::string(head_name(t.kind));
    for (const auto& [name, a] : t.args)
      out += " :" + name.str() + " " + tx_arg(a);
    return out + ")";
  }

  std::string print_domain(const Domain& d)
  {
    std::ostringstream os;
    os << "(DEFINE (DOMAIN " << d.name.str() << ")";
    if (!d.types.empty())
      os << "\n  (:TYPES " << symbols(d.types, "", "") << ")";
    if (!d.supertypes.empty())
    {
      os << "\n  (:SUPERTYPES";
      for (const auto& tp : d.supertypes)
        os << " (" << tp.child.str() << " " << tp.parent.str() << ")";
      os << ")";
    }
    if (!d.constants.empty())
    {
      os << "\n  (:CONSTANTS";
      for (const auto& c : d.constants)
        os << " " << c.name.str() << " - " << c.type.str();
      os << ")";
    }
    if (!d.functions.empty())
    {
      os << "\n  (:FUNCTIONS";
      for (const auto& f : d.functions)
        os << "\n    " << to_string(f);
      os << ")";
    }
    for (const auto& ax : d.axioms)
      os << "\n  " << to_string(ax);
    for (const auto& a : d.actions)
    {
      os << "\n  (:ACTION " << a.name.str() << "\n    :PERFORMER " << to_string(a.performer) << "\n    :PARAMETERS ("
         << typed(a.parameters) << ")";
      section_list(os, ":PRECONDITIONS", a.preconditions);
      section_list(os, ":EFFECTS", a.effects);
      os << ")";
    }
    for (const auto& ev : d.events)
    {
      os << "\n  (:EVENT " << ev.name.str();
      if (ev.probability != 1.0)
        os << "\n    :PROBABILITY " << real_text(ev.probability);
      if (ev.frequency != 0.0)
        os << "\n    :FREQUENCY " << real_text(ev.frequency);
      os << "\n    :QUALITIES (" << typed(ev.qualities) << ")";
      section_list(os, ":TRIGGERS", ev.triggers);
      section_list(os, ":EFFECTS", ev.effects);
      os << ")";
    }
    for (const auto& p : d.processes)
    {
      os << "\n  (:PROCESS " << p.name.str() << "\n    :QUALITIES (" << typed(p.qualities) << ")";
      section_list(os, ":CONDITIONS", p.conditions);
      section_list(os, ":CHANGES", p.changes);
      os << ")";
    }
    os << ")\n";
    return os.str();
  }

  std::string print_scenario_generator(const ScenarioGenerator& sg)
  {
    std::ostringstream os;
    os << "(SCENARIO-GENERATOR";
    if (!sg.fluents.empty())
    {
      os << "\n  (:FLUENTS";
      for (const auto& f : sg.fluents)
        os << "\n    " << to_string(f);
      os << ")";
    }
    if (!sg.defaults.empty())
    {
      os << "\n  (:DEFAULTS";
      for (const auto& dv : sg.defaults)
        os << "\n    (" << dv.function.str() << " " << to_string(dv.value) << ")";
      os << ")";
    }
    if (!sg.object_generators.empty())
    {
      os << "\n  (:OBJECT-GENERATORS";
      for (const auto& g : sg.object_generators)
        os << "\n    (OBJECTGENERATOR " << g.name.str() << " " << g.type.str() << " " << to_string(g.draw) << ")";
      os << ")";
    }
    if (!sg.value_generators.empty())
    {
      os << "\n  (:VALUE-GENERATORS";
      for (const auto& g : sg.value_generators)
        os << "\n    (VALUEGENERATOR " << g.name.str() << " " << to_string(g.draw) << ")";
      os << ")";
    }
    if (!sg.fluent_generators.empty())
    {
      os << "\n  (:FLUENT-GENERATORS";
      for (const auto& g : sg.fluent_generators)
        os << "\n    (FLUENTGENERATOR " << g.function.str() << " " << to_string(g.draw) << ")";
      os << ")";
    }
    if (sg.performance)
      os << "\n  (:PERFORMANCE " << to_string(*sg.performance) << ")";
    os << ")\n";
    return os.str();
  }

  std::string print_transformation_script(const TransformationSequence& ts)
  {
    std::string out;
    for (const auto& t : ts)
      out += to_string(t) + "\n";
    return out;
  }

}  // namespace tsal
