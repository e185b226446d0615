#include "tsal/ast.hpp"

#include <algorithm>

namespace tsal
{

  double Value::as_number() const
  {
    if (auto i = std::get_if<std::int64_t>(&v))
      return static_cast<double>(*i);
    if (auto d = std::get_if<double>(&v))
      return *d;
    return 0.0;
  }

  bool value_less(const Value& a, const Value& b)
  {
    if (a.v.index() != b.v.index())
      return a.v.index() < b.v.index();
    return std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        return x < std::get<T>(b.v);
      },
      a.v);
  }

  bool operator==(const FunctionTerm& a, const FunctionTerm& b)
  {
    return a.name == b.name && a.args == b.args;
  }

  bool operator==(const BoolCond& a, const BoolCond& b)
  {
    return a.op == b.op && a.operands == b.operands;
  }

  Term var(std::string_view name) { return Term{Variable{Symbol(name)}}; }
  Term obj(std::string_view name) { return Term{ObjectRef{Symbol(name)}}; }
  Term lit(std::int64_t v) { return Term{IntLit{v}}; }
  Term lit(double v) { return Term{RealLit{v}}; }
  Term lit(bool v) { return Term{BoolLit{v}}; }

  Term fn(std::string_view name, std::vector<Term> args)
  {
    return Term{FunctionTerm{Symbol(name), std::move(args)}};
  }

  const Symbol* as_variable(const Term& t)
  {
    if (auto v = std::get_if<Variable>(&t.node))
      return &v->name;
    return nullptr;
  }

  std::optional<Value> to_value(const Term& t)
  {
    struct V
    {
      std::optional<Value> operator()(const Variable&) const { return std::nullopt; }
      std::optional<Value> operator()(const FunctionTerm&) const { return std::nullopt; }
      std::optional<Value> operator()(const ObjectRef& o) const { return Value{o.name}; }
      std::optional<Value> operator()(const IntLit& i) const { return Value{i.value}; }
      std::optional<Value> operator()(const RealLit& r) const { return Value{r.value}; }
      std::optional<Value> operator()(const BoolLit& b) const { return Value{b.value}; }
      std::optional<Value> operator()(const StringLit& s) const { return Value{s.value}; }
    };
    return std::visit(V{}, t.node);
  }

  Term to_term(const Value& v)
  {
    struct V
    {
      Term operator()(const Symbol& s) const { return Term{ObjectRef{s}}; }
      Term operator()(std::int64_t i) const { return Term{IntLit{i}}; }
      Term operator()(double d) const { return Term{RealLit{d}}; }
      Term operator()(bool b) const { return Term{BoolLit{b}}; }
      Term operator()(const std::string& s) const { return Term{StringLit{s}}; }
    };
    return std::visit(V{}, v.v);
  }

  const Symbol* type_of_var(const TypedList& list, const Symbol& v)
  {
    for (const auto& tv : list)
      if (tv.var == v)
        return &tv.type;
    return nullptr;
  }

  namespace
  {
    template <class T>
    const T* find_named(const std::vector<T>& items, const Symbol& n)
    {
      auto it = std::find_if(items.begin(), items.end(), [&](const T& x) { return x.name == n; });
      return it == items.end() ? nullptr : &*it;
    }
  }

  const FunctionDecl* Domain::function(const Symbol& n) const { return find_named(functions, n); }
  const ActionModel* Domain::action(const Symbol& n) const { return find_named(actions, n); }
  const EventModel* Domain::event(const Symbol& n) const { return find_named(events, n); }
  const ProcessModel* Domain::process(const Symbol& n) const { return find_named(processes, n); }
  const Constant* Domain::constant(const Symbol& n) const { return find_named(constants, n); }

  bool Domain::has_type(const Symbol& t) const
  {
    return is_reserved_type(t) || std::find(types.begin(), types.end(), t) != types.end();
  }

  const Term* effect_argument(const Effect& e, const FunctionDecl& f, const Symbol& v)
  {
    for (std::size_t i = 0; i < f.args.size() && i < e.args.size(); ++i)
      if (f.args[i].var == v)
        return &e.args[i];
    return nullptr;
  }

}  // namespace tsal
