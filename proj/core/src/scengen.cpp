#include "tsal/scengen.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "tsal/reader.hpp"
#include "tsal/sexpr.hpp"
#include "tsal/types.hpp"

namespace tsal
{

  bool operator<(const FluentKey& a, const FluentKey& b)
  {
    if (a.function != b.function)
      return a.function < b.function;
    return std::lexicographical_compare(a.args.begin(), a.args.end(), b.args.begin(), b.args.end(), value_less);
  }

  void State::add_object(const Symbol& name, const Symbol& type)
  {
    if (!has_object(name))
      objects.emplace_back(name, type);
  }

  bool State::has_object(const Symbol& name) const
  {
    return std::any_of(objects.begin(), objects.end(), [&](const auto& o) { return o.first == name; });
  }

  ObjectTypes State::object_types() const
  {
    ObjectTypes out;
    for (const auto& [n, t] : objects)
      out.emplace(n, t);
    return out;
  }

  std::vector<Symbol> State::objects_of_type(const Symbol& type, const Domain& d) const
  {
    std::vector<Symbol> out;
    for (const auto& [n, t] : objects)
      if (derived_from(t, type, d))
        out.push_back(n);
    return out;
  }

  void State::assign(const GroundFluent& gf) { assignments[FluentKey{gf.function, gf.args}] = gf.value; }

  const Value* State::value_of(const Symbol& fn, const std::vector<Value>& args) const
  {
    if (auto it = assignments.find(FluentKey{fn, args}); it != assignments.end())
      return &it->second;
    if (auto it = defaults.find(fn); it != defaults.end())
      return &it->second;
    return nullptr;
  }

  namespace
  {
    std::string describe(const GeneratorExpr& g) { return to_string(g); }

    const Value& plain(const DrawItem& item, const GeneratorExpr& from)
    {
      if (auto v = std::get_if<Value>(&item))
        return *v;
      throw Error("generator " + describe(from) + " yields tuples where plain values are needed");
    }

    // ---------------------------------------------------------- evaluator

    class Evaluator
    {
    public:
      Evaluator(const State& st, const Domain& d, RandomStream* rng) : st_(st), d_(d), rng_(rng) {}

      Value term(const Term& t, const std::map<Symbol, Value>& env)
      {
        if (auto v = std::get_if<Variable>(&t.node))
        {
          auto it = env.find(v->name);
          if (it == env.end())
            throw Error("variable " + v->name.str() + " has no value");
          return it->second;
        }
        if (auto f = std::get_if<FunctionTerm>(&t.node))
        {
          std::vector<Value> args;
          for (const auto& a : f->args)
            args.push_back(term(a, env));
          return fluent(f->name, args);
        }
        if (auto o = std::get_if<ObjectRef>(&t.node); o && o->name == names::DT)
          throw Error("DT has no value outside a continuous change");
        return *to_value(t);
      }

      Value fluent(const Symbol& fn, const std::vector<Value>& args)
      {
        bool has_axiom = false;
        for (const auto& ax : d_.axioms)
        {
          if (ax.name != fn || ax.args.size() != args.size())
            continue;
          has_axiom = true;
          std::map<Symbol, Value> env;
          for (std::size_t i = 0; i < args.size(); ++i)
            env[ax.args[i].var] = args[i];
          if (condition(ax.antecedent, env))
            return Value{true};
        }
        if (has_axiom)
          return Value{false};
        if (auto v = st_.value_of(fn, args))
          return *v;
        std::string key = fn.str();
        for (const auto& a : args)
          key += " " + to_string(a);
        throw Error("no assignment or default for (" + key + ")");
      }

      Value calc(const Calculation& c, const std::map<Symbol, Value>& env)
      {
        if (auto t = std::get_if<Term>(&c.node))
          return term(*t, env);
        if (auto b = std::get_if<BinOp>(&c.node))
        {
          Value l = calc(*b->lhs, env), r = calc(*b->rhs, env);
          if (!l.is_number() || !r.is_number())
            throw Error("arithmetic on non-numeric value in " + to_string(c));
          if (l.is_integer() && r.is_integer())
          {
            auto x = std::get<std::int64_t>(l.v), y = std::get<std::int64_t>(r.v);
            switch (b->op)
            {
            case ArithOp::Add:
              return Value{x + y};
            case ArithOp::Sub:
              return Value{x - y};
            case ArithOp::Mul:
              return Value{x * y};
            default:
              break;
            }
          }
          double x = l.as_number(), y = r.as_number();
          switch (b->op)
          {
          case ArithOp::Add:
            return Value{x + y};
          case ArithOp::Sub:
            return Value{x - y};
          case ArithOp::Mul:
            return Value{x * y};
          case ArithOp::Div:
            return Value{x / y};
          case ArithOp::Uniform:
            return Value{rng().uniform(x, y)};
          case ArithOp::Gaussian:
            return Value{rng().normal(x, y)};
          }
        }
        if (auto a = std::get_if<Aggregate>(&c.node))
        {
          double acc = a->op == AggOp::Sum ? 0.0 : 1.0;
          auto inner = env;
          for (const auto& [obj, type] : st_.objects)
          {
            inner[a->var] = Value{obj};
            if (!condition(*a->constraint, inner))
              continue;
            Value v = calc(*a->body, inner);
            if (!v.is_number())
              throw Error("aggregate body is not numeric: " + to_string(*a->body));
            acc = a->op == AggOp::Sum ? acc + v.as_number() : acc * v.as_number();
          }
          return Value{acc};
        }
        const auto& i = std::get<IfCalc>(c.node);
        return condition(*i.cond, env) ? calc(*i.then_calc, env) : calc(*i.else_calc, env);
      }

      bool condition(const Condition& c, const std::map<Symbol, Value>& env)
      {
        if (auto t = std::get_if<Term>(&c.node))
        {
          Value v = term(*t, env);
          if (!v.is_bool())
            throw Error(to_string(*t) + " is not BOOLEAN");
          return std::get<bool>(v.v);
        }
        if (auto cmp = std::get_if<Compare>(&c.node))
          return compare(*cmp, env);
        if (auto b = std::get_if<BoolCond>(&c.node))
        {
          if (b->op == BoolOp::And)
            return std::all_of(b->operands.begin(), b->operands.end(),
                               [&](const Condition& o) { return condition(o, env); });
          return std::any_of(b->operands.begin(), b->operands.end(),
                             [&](const Condition& o) { return condition(o, env); });
        }
        if (auto n = std::get_if<NotCond>(&c.node))
          return !condition(*n->operand, env);
        const auto& f = std::get<Forall>(c.node);
        auto inner = env;
        return forall(f, 0, inner);
      }

    private:
      RandomStream& rng()
      {
        if (!rng_)
          throw Error("random operator used without a random stream");
        return *rng_;
      }

      bool forall(const Forall& f, std::size_t k, std::map<Symbol, Value>& env)
      {
        if (k == f.vars.size())
          return !condition(*f.constraint, env) || condition(*f.requirement, env);
        for (const auto& [obj, type] : st_.objects)
        {
          env[f.vars[k]] = Value{obj};
          if (!forall(f, k + 1, env))
            return false;
        }
        return true;
      }

      bool compare(const Compare& cmp, const std::map<Symbol, Value>& env)
      {
        Value l = calc(cmp.lhs, env), r = calc(cmp.rhs, env);
        if (l.is_number() && r.is_number())
        {
          std::partial_ordering o = l.is_integer() && r.is_integer()
            ? std::get<std::int64_t>(l.v) <=> std::get<std::int64_t>(r.v)
            : l.as_number() <=> r.as_number();
          switch (cmp.op)
          {
          case CompareOp::Eq:
            return o == 0;
          case CompareOp::Ne:
            return o != 0;
          case CompareOp::Lt:
            return o < 0;
          case CompareOp::Gt:
            return o > 0;
          case CompareOp::Le:
            return o <= 0;
          case CompareOp::Ge:
            return o >= 0;
          }
        }
        if (cmp.op == CompareOp::Eq)
          return l == r;
        if (cmp.op == CompareOp::Ne)
          return l != r;
        throw Error("ordering comparison on non-numeric values in " + to_string(Condition{cmp}));
      }

      const State& st_;
      const Domain& d_;
      RandomStream* rng_;
    };

    // ------------------------------------------------------------ sampler

    class Sampler
    {
    public:
      Sampler(const Domain& d, const ScenarioGenerator& sg, State& st, RandomStream& rng)
        : d_(d), sg_(sg), st_(st), rng_(rng)
      {
        for (const auto& [n, t] : st_.objects)
          taken_.insert(n);
      }

      void objects(const ObjectGenerator& og)
      {
        std::vector<Symbol> made;
        if (auto ol = std::get_if<ObjectList>(&og.draw.node))
          made = gensym_names(ol->prefix, ol->count, taken_);
        else
          for (const auto& item : draw(og.draw))
          {
            const Value& v = plain(item, og.draw);
            auto s = std::get_if<Symbol>(&v.v);
            if (!s)
              throw Error("object generator " + og.name.str() + " drew a non-object " + to_string(v));
            taken_.insert(*s);
            made.push_back(*s);
          }
        for (const auto& n : made)
          st_.add_object(n, og.type);
        auto& group = groups_[og.name];
        group.insert(group.end(), made.begin(), made.end());
      }

      std::vector<GroundFluent> fluents(const FluentGenerator& fg)
      {
        field_cache_.clear();
        std::vector<GroundFluent> out;
        fluent_draw(fg.function, fg.draw, out);
        return out;
      }

      std::vector<DrawItem> draw(const GeneratorExpr& g)
      {
        if (++depth_ > 64)
          throw Error("generator references nest too deeply (cycle?) at " + describe(g));
        struct Guard
        {
          int& d;
          ~Guard() { --d; }
        } guard{depth_};
        return std::visit([&](const auto& n) { return draw_node(n, g); }, g.node);
      }

    private:
      using Items = std::vector<DrawItem>;

      Items one(Value v) { return Items{DrawItem{std::move(v)}}; }

      Items draw_node(const ObjectList&, const GeneratorExpr& g)
      {
        throw Error("OBJECTLIST is only valid in an object generator: " + describe(g));
      }
      Items draw_node(const UniformDist& x, const GeneratorExpr&) { return one(Value{rng_.uniform(x.min, x.max)}); }
      Items draw_node(const UniformInt& x, const GeneratorExpr&) { return one(Value{rng_.uniform_int(x.min, x.max)}); }
      Items draw_node(const GaussianDist& x, const GeneratorExpr&) { return one(Value{rng_.normal(x.mean, x.stdev)}); }
      Items draw_node(const NDimGaussian& x, const GeneratorExpr&)
      {
        Tuple t;
        for (std::size_t i = 0; i < x.means.size(); ++i)
          t.emplace_back(Symbol("X" + std::to_string(i + 1)), Value{rng_.normal(x.means[i], x.stdevs[i])});
        return Items{DrawItem{std::move(t)}};
      }
      Items draw_node(const Bernoulli& x, const GeneratorExpr&) { return one(Value{rng_.bernoulli(x.p)}); }
      Items draw_node(const IntegerSequence& x, const GeneratorExpr&)
      {
        Items out;
        for (auto i = x.min; i <= x.max; ++i)
          out.emplace_back(Value{i});
        return out;
      }
      Items draw_node(const DrawFromObjectSet& x, const GeneratorExpr&)
      {
        auto set = named_set(x.name);
        if (set.empty())
          throw Error("DRAWFROMOBJECTSET over empty set " + x.name.str());
        auto i = rng_.uniform_int(0, static_cast<std::int64_t>(set.size()) - 1);
        return Items{set[static_cast<std::size_t>(i)]};
      }
      Items draw_node(const DrawAllFromObjectSet& x, const GeneratorExpr&)
      {
        auto set = named_set(x.name);
        rng_.shuffle(set);
        return set;
      }
      Items draw_node(const ConstantGen& x, const GeneratorExpr&) { return one(x.value); }
      Items draw_node(const NDraws& x, const GeneratorExpr&)
      {
        Items out;
        for (std::int64_t i = 0; i < x.n; ++i)
        {
          auto part = draw(*x.sub);
          out.insert(out.end(), part.begin(), part.end());
        }
        return out;
      }
      Items draw_node(const DrawTuple& x, const GeneratorExpr& g)
      {
        Tuple t;
        for (std::size_t i = 0; i < x.subs.size(); ++i)
        {
          auto part = draw(x.subs[i]);
          if (part.empty())
            throw Error("DRAWTUPLE component drew nothing: " + describe(g));
          t.emplace_back(x.names[i], plain(part.front(), x.subs[i]));
        }
        return Items{DrawItem{std::move(t)}};
      }
      Items draw_node(const FilterGen& x, const GeneratorExpr& g)
      {
        Evaluator ev(st_, d_, &rng_);
        for (int attempt = 0; attempt < filter_retry_budget; ++attempt)
        {
          Items kept;
          for (auto& item : draw(*x.sub))
            if (ev.condition(x.predicate.body, bind(x.predicate, item)))
              kept.push_back(std::move(item));
          if (!kept.empty())
            return kept;
        }
        throw Error("FILTER found no accepted draw within " + std::to_string(filter_retry_budget) +
                    " attempts: " + describe(g));
      }
      Items draw_node(const NewSet& x, const GeneratorExpr& g)
      {
        auto key = static_cast<const void*>(&g);
        if (auto it = newsets_.find(key); it != newsets_.end())
          return it->second;
        auto items = draw(*x.sub);
        newsets_.emplace(key, items);
        return items;
      }
      Items draw_node(const AllPermutations&, const GeneratorExpr& g) { return fluent_only(g); }
      Items draw_node(const NFluentDraws&, const GeneratorExpr& g) { return fluent_only(g); }
      Items draw_node(const CombineFunctions&, const GeneratorExpr& g) { return fluent_only(g); }
      Items draw_node(const FieldRef& x, const GeneratorExpr&)
      {
        auto it = field_cache_.find(x.gen);
        if (it == field_cache_.end())
        {
          auto vg = sg_.value_generator(x.gen);
          if (!vg)
            throw Error("unknown value generator " + x.gen.str());
          it = field_cache_.emplace(x.gen, draw(vg->draw)).first;
        }
        Items out;
        for (const auto& item : it->second)
        {
          auto t = std::get_if<Tuple>(&item);
          if (!t)
            throw Error(x.gen.str() + " does not yield tuples, so it has no field " + x.field.str());
          auto f = std::find_if(t->begin(), t->end(), [&](const auto& p) { return p.first == x.field; });
          if (f == t->end())
            throw Error(x.gen.str() + " has no field " + x.field.str());
          out.emplace_back(f->second);
        }
        return out;
      }
      Items draw_node(const GenRef& x, const GeneratorExpr&)
      {
        if (auto vg = sg_.value_generator(x.name))
          return draw(vg->draw);
        return named_set(x.name);
      }
      Items draw_node(const Difference& x, const GeneratorExpr& g)
      {
        auto a = draw(*x.a);
        auto b = draw(*x.b);
        Items out;
        for (auto& item : a)
        {
          const Value& v = plain(item, g);
          bool present = std::any_of(b.begin(), b.end(), [&](const DrawItem& o) {
            auto ov = std::get_if<Value>(&o);
            return ov && *ov == v;
          });
          if (!present)
            out.push_back(std::move(item));
        }
        return out;
      }
      Items draw_node(const ValueList& x, const GeneratorExpr&)
      {
        Items out;
        for (const auto& v : x.values)
          out.emplace_back(v);
        return out;
      }

      Items fluent_only(const GeneratorExpr& g)
      {
        throw Error("fluent draw function used where values are expected: " + describe(g));
      }

      // Object generator group, else value generator, else every object of a type.
      Items named_set(const Symbol& name)
      {
        Items out;
        if (auto it = groups_.find(name); it != groups_.end())
        {
          for (const auto& n : it->second)
            out.emplace_back(Value{n});
          return out;
        }
        if (auto vg = sg_.value_generator(name))
          return draw(vg->draw);
        if (d_.has_type(name))
        {
          for (const auto& n : st_.objects_of_type(name, d_))
            out.emplace_back(Value{n});
          return out;
        }
        throw Error("unknown object set, value generator or type " + name.str());
      }

      std::map<Symbol, Value> bind(const Lambda& l, const DrawItem& item)
      {
        std::map<Symbol, Value> env;
        if (auto t = std::get_if<Tuple>(&item))
        {
          if (t->size() < l.params.size())
            throw Error("LAMBDA takes more parameters than the tuple has fields");
          for (std::size_t i = 0; i < l.params.size(); ++i)
            env[l.params[i]] = (*t)[i].second;
        }
        else if (!l.params.empty())
          env[l.params.front()] = std::get<Value>(item);
        return env;
      }

      // Buffered consumption of a value generator, redrawing when exhausted.
      class Buffer
      {
      public:
        Buffer(Sampler& s, const GeneratorExpr& g) : s_(s), g_(g) {}

        Value next()
        {
          if (pos_ == items_.size())
          {
            items_ = s_.draw(g_);
            pos_ = 0;
            if (items_.empty())
              throw Error("generator drew nothing: " + describe(g_));
          }
          return plain(items_[pos_++], g_);
        }

      private:
        Sampler& s_;
        const GeneratorExpr& g_;
        Items items_;
        std::size_t pos_ = 0;
      };

      void fluent_draw(const Symbol& fn, const GeneratorExpr& g, std::vector<GroundFluent>& out)
      {
        if (auto ap = std::get_if<AllPermutations>(&g.node))
        {
          std::vector<std::vector<Value>> axes;
          for (const auto& a : ap->args)
          {
            std::vector<Value> axis;
            for (const auto& item : draw(a))
              axis.push_back(plain(item, a));
            axes.push_back(std::move(axis));
          }
          Buffer values(*this, *ap->value);
          std::vector<Value> combo(axes.size());
          auto rec = [&](std::size_t k, auto& self) -> void {
            if (k == axes.size())
            {
              out.push_back(GroundFluent{fn, combo, values.next()});
              return;
            }
            for (const auto& v : axes[k])
            {
              combo[k] = v;
              self(k + 1, self);
            }
          };
          rec(0, rec);
          return;
        }
        if (auto nf = std::get_if<NFluentDraws>(&g.node))
        {
          std::vector<Buffer> args;
          args.reserve(nf->args.size());
          for (const auto& a : nf->args)
            args.emplace_back(*this, a);
          Buffer values(*this, *nf->value);
          for (std::int64_t i = 0; i < nf->n; ++i)
          {
            GroundFluent gf{fn, {}, Value{}};
            for (auto& b : args)
              gf.args.push_back(b.next());
            gf.value = values.next();
            out.push_back(std::move(gf));
          }
          return;
        }
        if (auto cf = std::get_if<CombineFunctions>(&g.node))
        {
          for (const auto& s : cf->subs)
            fluent_draw(fn, s, out);
          return;
        }
        throw Error("fluent generator for " + fn.str() + " needs ALLPERMUTATIONS, NFLUENTDRAWS or COMBINEFUNCTIONS");
      }

      const Domain& d_;
      const ScenarioGenerator& sg_;
      State& st_;
      RandomStream& rng_;
      std::set<Symbol> taken_;
      std::map<Symbol, std::vector<Symbol>> groups_;
      std::map<const void*, Items> newsets_;
      std::map<Symbol, Items> field_cache_;
      int depth_ = 0;
    };

    std::vector<std::pair<Symbol, std::vector<Symbol>>> objects_by_type(const State& st)
    {
      std::map<Symbol, std::vector<Symbol>> m;
      for (const auto& [n, t] : st.objects)
        m[t].push_back(n);
      std::vector<std::pair<Symbol, std::vector<Symbol>>> out(m.begin(), m.end());
      for (auto& [t, ns] : out)
        std::sort(ns.begin(), ns.end());
      return out;
    }
  }

  State sample_state(const Domain& d, const ScenarioGenerator& sg, std::uint64_t seed)
  {
    RandomStream rng(seed);
    State st;
    for (const auto& c : d.constants)
      st.add_object(c.name, c.type);
    for (const auto& dv : sg.defaults)
      st.defaults[dv.function] = dv.value;

    Sampler s(d, sg, st, rng);
    for (const auto& og : sg.object_generators)
      s.objects(og);
    for (const auto& fg : sg.fluent_generators)
    {
      auto objects = st.object_types();
      for (const auto& gf : s.fluents(fg))
      {
        if (!legal_ground_fluent(gf, d, objects))
          throw Error("fluent generator for " + fg.function.str() + " drew illegal fluent " + to_string(gf));
        st.assign(gf);
      }
    }
    for (const auto& gf : sg.fluents)
      st.assign(gf);
    return st;
  }

  std::vector<DrawItem> draw_values(const Domain& d, const ScenarioGenerator& sg, const GeneratorExpr& g,
                                    const State& state, RandomStream& rng)
  {
    State scratch = state;
    Sampler s(d, sg, scratch, rng);
    return s.draw(g);
  }

  double evaluate_performance(const Calculation& perf, const State& st, const Symbol& agent, const Domain& d,
                              RandomStream* rng)
  {
    Value v = evaluate(perf, st, {{names::AG, Value{agent}}}, d, rng);
    if (!v.is_number())
      throw Error("performance is not numeric: " + to_string(v));
    return v.as_number();
  }

  Value evaluate(const Calculation& c, const State& st, const std::map<Symbol, Value>& env, const Domain& d,
                 RandomStream* rng)
  {
    return Evaluator(st, d, rng).calc(c, env);
  }

  bool evaluate(const Condition& c, const State& st, const std::map<Symbol, Value>& env, const Domain& d,
                RandomStream* rng)
  {
    return Evaluator(st, d, rng).condition(c, env);
  }

  std::string print_state(const State& st)
  {
    std::ostringstream os;
    os << "(STATE\n  (:OBJECTS";
    for (const auto& [type, names] : objects_by_type(st))
    {
      os << "\n    (" << type.str();
      for (const auto& n : names)
        os << " " << n.str();
      os << ")";
    }
    os << ")\n  (:DEFAULTS";
    for (const auto& [fn, v] : st.defaults)
      os << "\n    (" << fn.str() << " " << to_string(v) << ")";
    os << ")\n  (:ASSIGNMENTS";
    for (const auto& [key, v] : st.assignments)
      os << "\n    " << to_string(GroundFluent{key.function, key.args, v});
    os << "))\n";
    return os.str();
  }

  Parsed<State> parse_state(std::string_view text, const std::string& file)
  {
    Parsed<State> out;
    auto forms = read_sexprs(text, file);
    out.diagnostics = std::move(forms.diagnostics);
    if (has_errors(out.diagnostics))
      return out;
    auto fail = [&](const SExpr& at, const std::string& msg) {
      out.diagnostics.push_back(Diagnostic{Severity::Error, code::SynMalformed, msg, at.span});
    };
    if (forms.value->size() != 1 || !forms.value->front().is_list() || forms.value->front().items.empty() ||
        !forms.value->front().items[0].is_symbol("STATE"))
    {
      fail(forms.value->empty() ? SExpr{} : forms.value->front(), "expected (STATE ...)");
      return out;
    }
    State st;
    const auto& top = forms.value->front();
    for (std::size_t i = 1; i < top.items.size(); ++i)
    {
      const SExpr& sec = top.items[i];
      if (!sec.is_list() || sec.items.empty() || !sec.items[0].is_keyword())
      {
        fail(sec, "expected a state section");
        continue;
      }
      const std::string& head = sec.items[0].text;
      for (std::size_t k = 1; k < sec.items.size(); ++k)
      {
        const SExpr& e = sec.items[k];
        if (head == ":OBJECTS")
        {
          if (!e.is_list() || e.items.empty() || !e.items[0].is_symbol())
          {
            fail(e, "object group must be (TYPE name...)");
            continue;
          }
          for (std::size_t j = 1; j < e.items.size(); ++j)
            st.add_object(Symbol(e.items[j].text), Symbol(e.items[0].text));
        }
        else if (head == ":DEFAULTS")
        {
          if (!e.is_list() || e.items.size() != 2)
          {
            fail(e, "default must be (FN value)");
            continue;
          }
          if (auto v = sx::value(e.items[1], out.diagnostics))
            st.defaults[Symbol(e.items[0].text)] = *v;
        }
        else if (head == ":ASSIGNMENTS")
        {
          if (!e.is_list() || e.items.size() != 3 || !e.items[0].is_symbol("=") || !e.items[1].is_list() ||
              e.items[1].items.empty())
          {
            fail(e, "assignment must be (= (FN args) value)");
            continue;
          }
          GroundFluent gf;
          gf.function = Symbol(e.items[1].items[0].text);
          bool ok = true;
          for (std::size_t j = 1; j < e.items[1].items.size(); ++j)
          {
            auto v = sx::value(e.items[1].items[j], out.diagnostics);
            ok = ok && v.has_value();
            if (v)
              gf.args.push_back(*v);
          }
          auto v = sx::value(e.items[2], out.diagnostics);
          if (ok && v)
          {
            gf.value = *v;
            st.assign(gf);
          }
        }
        else
        {
          out.diagnostics.push_back(
            Diagnostic{Severity::Error, code::SynUnknownKeyword, "unknown state section " + head, sec.span});
          break;
        }
      }
    }
    out.value = std::move(st);
    return out;
  }

}  // namespace tsal
