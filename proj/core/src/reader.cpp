#include "tsal/reader.hpp"

#include <charconv>
#include <set>

namespace tsal
{

  namespace
  {
    void error(Diagnostics& ds, const char* c, std::string msg, const SExpr& at)
    {
      ds.push_back(Diagnostic{Severity::Error, c, std::move(msg), at.span});
    }

    void warn(Diagnostics& ds, const char* c, std::string msg, const SExpr& at)
    {
      ds.push_back(Diagnostic{Severity::Warning, c, std::move(msg), at.span});
    }

    bool is_comparator(std::string_view s)
    {
      return s == "=" || s == "!=" || s == "<" || s == ">" || s == "<=" || s == ">=";
    }

    CompareOp comparator(std::string_view s)
    {
      if (s == "=")
        return CompareOp::Eq;
      if (s == "!=")
        return CompareOp::Ne;
      if (s == "<")
        return CompareOp::Lt;
      if (s == ">")
        return CompareOp::Gt;
      if (s == "<=")
        return CompareOp::Le;
      return CompareOp::Ge;
    }

    std::optional<ArithOp> arith_op(std::string_view s)
    {
      if (s == "+")
        return ArithOp::Add;
      if (s == "-")
        return ArithOp::Sub;
      if (s == "*")
        return ArithOp::Mul;
      if (s == "/")
        return ArithOp::Div;
      if (s == ":UNIFORM")
        return ArithOp::Uniform;
      if (s == ":GAUSSIAN")
        return ArithOp::Gaussian;
      return std::nullopt;
    }

    bool is_literal_symbol(const SExpr& e) { return e.is_symbol("TRUE") || e.is_symbol("FALSE"); }

    bool is_variable(const SExpr& e) { return e.is_symbol() && !e.text.empty() && e.text.front() == '?'; }

    // Both integer and real spellings; integers keep their exact value.
    std::optional<Value> number(const SExpr& e, Diagnostics& ds)
    {
      std::string_view s = e.text;
      if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
      bool real = s.find_first_of(".eE") != std::string_view::npos;
      if (!real)
      {
        std::int64_t i = 0;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), i);
        if (ec == std::errc() && p == s.data() + s.size())
          return Value{i};
      }
      double d = 0;
      auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), d);
      if (ec != std::errc() || p != s.data() + s.size())
      {
        error(ds, code::SynBadNumber, "number out of range '" + e.text + "'", e);
        return std::nullopt;
      }
      return Value{d};
    }

    std::optional<double> real_number(const SExpr& e, Diagnostics& ds)
    {
      if (e.kind != SExpr::Kind::Number)
      {
        error(ds, code::SynMalformed, "expected a number", e);
        return std::nullopt;
      }
      auto v = number(e, ds);
      if (!v)
        return std::nullopt;
      return v->as_number();
    }

    std::optional<std::int64_t> integer(const SExpr& e, Diagnostics& ds)
    {
      if (e.kind != SExpr::Kind::Number)
      {
        error(ds, code::SynMalformed, "expected an integer", e);
        return std::nullopt;
      }
      auto v = number(e, ds);
      if (!v)
        return std::nullopt;
      if (!v->is_integer())
      {
        error(ds, code::SynMalformed, "expected an integer, got '" + e.text + "'", e);
        return std::nullopt;
      }
      return std::get<std::int64_t>(v->v);
    }

    std::optional<Symbol> name(const SExpr& e, Diagnostics& ds)
    {
      if ((e.is_symbol() && !e.is_keyword()) || e.kind == SExpr::Kind::String)
        return Symbol(e.text);
      error(ds, code::SynExpectedSymbol, "expected a name", e);
      return std::nullopt;
    }

    std::optional<Symbol> variable(const SExpr& e, Diagnostics& ds)
    {
      if (is_variable(e))
        return Symbol(e.text);
      error(ds, code::SynExpectedSymbol, "expected a variable", e);
      return std::nullopt;
    }

    const SExpr* expect_list(const SExpr& e, Diagnostics& ds, const char* what)
    {
      if (e.is_list())
        return &e;
      error(ds, code::SynExpectedList, std::string("expected a list for ") + what, e);
      return nullptr;
    }

    bool arity(const SExpr& e, std::size_t n, Diagnostics& ds)
    {
      if (e.items.size() == n)
        return true;
      error(ds, code::SynMalformed,
            "'" + e.items.front().text + "' expects " + std::to_string(n - 1) + " operand(s)", e);
      return false;
    }

    // x+ - TYPE ... ; names without a type get `fallback` (empty: none).
    struct TypedName
    {
      Symbol name;
      std::optional<Symbol> type;
    };

    std::optional<std::vector<TypedName>> typed_names(const std::vector<SExpr>& items, std::size_t from,
                                                      Diagnostics& ds, bool variables)
    {
      std::vector<TypedName> out;
      std::size_t pending = 0;
      for (std::size_t i = from; i < items.size(); ++i)
      {
        const SExpr& it = items[i];
        if (it.is_symbol("-"))
        {
          if (pending == 0 || i + 1 >= items.size() || !items[i + 1].is_symbol() || is_variable(items[i + 1]))
          {
            error(ds, code::SynTypedList, "malformed typed list", it);
            return std::nullopt;
          }
          Symbol ty(items[i + 1].text);
          for (std::size_t k = out.size() - pending; k < out.size(); ++k)
            out[k].type = ty;
          pending = 0;
          ++i;
          continue;
        }
        if (!it.is_symbol() || it.is_keyword() || is_variable(it) != variables)
        {
          error(ds, code::SynTypedList, variables ? "expected a variable in typed list" : "expected a name in typed list",
                it);
          return std::nullopt;
        }
        out.push_back({Symbol(it.text), std::nullopt});
        ++pending;
      }
      return out;
    }

    std::optional<TypedList> typed_vars(const std::vector<SExpr>& items, std::size_t from, Diagnostics& ds)
    {
      auto names = typed_names(items, from, ds, true);
      if (!names)
        return std::nullopt;
      TypedList out;
      std::set<Symbol> seen;
      for (auto& n : *names)
      {
        if (!seen.insert(n.name).second)
        {
          error(ds, code::SynDuplicate, "variable " + n.name.str() + " listed twice", items[from]);
          return std::nullopt;
        }
        out.push_back({n.name, n.type.value_or(names::OBJECT)});
      }
      return out;
    }

    std::optional<FunctionDecl> function_head(const SExpr& e, Diagnostics& ds)
    {
      if (!expect_list(e, ds, "function declaration") || e.items.empty())
      {
        if (e.is_list())
          error(ds, code::SynMalformed, "empty function declaration", e);
        return std::nullopt;
      }
      auto n = name(e.items.front(), ds);
      auto args = typed_vars(e.items, 1, ds);
      if (!n || !args)
        return std::nullopt;
      return FunctionDecl{*n, std::move(*args), names::OBJECT};
    }

    // (FN args) - TYPE, starting at items[i]; advances i past the type.
    std::optional<FunctionDecl> function_decl(const std::vector<SExpr>& items, std::size_t& i, Diagnostics& ds)
    {
      auto f = function_head(items[i], ds);
      if (!f)
        return std::nullopt;
      if (i + 2 < items.size() + 0 && items[i + 1].is_symbol("-") && items[i + 2].is_symbol() &&
          !is_variable(items[i + 2]))
      {
        f->value_type = Symbol(items[i + 2].text);
        i += 3;
        return f;
      }
      error(ds, code::SynTypedList, "function " + f->name.str() + " needs '- TYPE'", items[i]);
      return std::nullopt;
    }

    std::optional<Axiom> axiom(const SExpr& e, Diagnostics& ds)
    {
      if (!expect_list(e, ds, "axiom"))
        return std::nullopt;
      if (e.items.size() != 3 || !e.items[0].is_symbol(":-"))
      {
        error(ds, code::SynMalformed, "axiom must be (:- (NAME args) condition)", e);
        return std::nullopt;
      }
      auto head = function_head(e.items[1], ds);
      auto cond = sx::condition(e.items[2], ds);
      if (!head || !cond)
        return std::nullopt;
      return Axiom{head->name, std::move(head->args), std::move(*cond)};
    }

    std::optional<std::vector<Term>> term_args(const SExpr& e, std::size_t from, Diagnostics& ds)
    {
      std::vector<Term> out;
      bool ok = true;
      for (std::size_t i = from; i < e.items.size(); ++i)
      {
        auto t = sx::term(e.items[i], ds);
        ok = ok && t.has_value();
        if (t)
          out.push_back(std::move(*t));
      }
      if (!ok)
        return std::nullopt;
      return out;
    }

    std::optional<std::pair<Symbol, std::vector<Term>>> fluent_ref(const SExpr& e, Diagnostics& ds)
    {
      if (!expect_list(e, ds, "fluent reference"))
        return std::nullopt;
      if (e.items.empty())
      {
        error(ds, code::SynMalformed, "empty fluent reference", e);
        return std::nullopt;
      }
      auto n = name(e.items.front(), ds);
      auto args = term_args(e, 1, ds);
      if (!n || !args)
        return std::nullopt;
      return std::pair{*n, std::move(*args)};
    }

    std::optional<Effect> effect(const SExpr& e, Diagnostics& ds)
    {
      if (!expect_list(e, ds, "effect"))
        return std::nullopt;
      if (e.items.empty() || !e.items.front().is_symbol())
      {
        error(ds, code::SynMalformed, "malformed effect", e);
        return std::nullopt;
      }
      const std::string& head = e.items.front().text;
      Effect out;
      if (head == "CREATE")
      {
        if (e.items.size() != 4 || e.items[3].kind != SExpr::Kind::String)
        {
          error(ds, code::SynMalformed, "CREATE effect must be (CREATE TYPE ?VAR \"prefix\")", e);
          return std::nullopt;
        }
        auto ty = name(e.items[1], ds);
        auto v = sx::term(e.items[2], ds);
        if (!ty || !v)
          return std::nullopt;
        out.target = *ty;
        out.args.push_back(std::move(*v));
        out.modification = Modification::Create;
        out.value = Term{StringLit{e.items[3].text}};
        return out;
      }
      if (head == "SET" || head == "INCREASE" || head == "DECREASE")
      {
        if (!arity(e, 3, ds))
          return std::nullopt;
        auto ref = fluent_ref(e.items[1], ds);
        auto v = sx::term(e.items[2], ds);
        if (!ref || !v)
          return std::nullopt;
        out.target = ref->first;
        out.args = std::move(ref->second);
        out.modification = head == "SET" ? Modification::Set
          : head == "INCREASE"           ? Modification::Increase
                                         : Modification::Decrease;
        out.value = std::move(*v);
        return out;
      }
      // A bare function term asserts the fluent true.
      auto ref = fluent_ref(e, ds);
      if (!ref)
        return std::nullopt;
      out.target = ref->first;
      out.args = std::move(ref->second);
      out.value = lit(true);
      return out;
    }

    std::optional<ContinuousChange> change(const SExpr& e, Diagnostics& ds)
    {
      if (!expect_list(e, ds, "continuous change"))
        return std::nullopt;
      if (e.items.size() != 3 || !(e.items[0].is_symbol("INCREASE") || e.items[0].is_symbol("DECREASE")))
      {
        error(ds, code::SynMalformed, "change must be (INCREASE|DECREASE (FN args) calculation)", e);
        return std::nullopt;
      }
      auto ref = fluent_ref(e.items[1], ds);
      auto d = sx::calculation(e.items[2], ds);
      if (!ref || !d)
        return std::nullopt;
      return ContinuousChange{ref->first, std::move(ref->second),
                              e.items[0].is_symbol("INCREASE") ? Direction::Increase : Direction::Decrease,
                              std::move(*d)};
    }

    std::optional<double> probability_suffix(const SExpr& e, Diagnostics& ds)
    {
      if (e.items.size() != 1)
      {
        error(ds, code::SynMalformed, "probability must be [p]", e);
        return std::nullopt;
      }
      return real_number(e.items[0], ds);
    }

    // A list holds one item when it starts with a head symbol; otherwise
    // each element is an item. (AND x...) wraps several.
    bool single_form(const SExpr& list)
    {
      if (list.items.empty())
        return false;
      const SExpr& first = list.items.front();
      return first.is_symbol() && !is_variable(first) && !is_literal_symbol(first) && !first.is_symbol("AND");
    }

    const std::vector<SExpr>* unwrap_and(const SExpr& list, std::size_t& from)
    {
      from = 0;
      if (!list.items.empty() && list.items.front().is_symbol("AND"))
        from = 1;
      return &list.items;
    }

    std::optional<std::vector<Effect>> effect_list(const SExpr& e, Diagnostics& ds)
    {
      if (!expect_list(e, ds, "effects"))
        return std::nullopt;
      std::vector<Effect> out;
      if (single_form(e))
      {
        auto one = effect(e, ds);
        if (!one)
          return std::nullopt;
        out.push_back(std::move(*one));
        return out;
      }
      std::size_t from = 0;
      const auto& items = *unwrap_and(e, from);
      bool ok = true;
      for (std::size_t i = from; i < items.size(); ++i)
      {
        if (items[i].is_list() && items[i].bracket)
        {
          if (out.empty())
          {
            error(ds, code::SynMalformed, "probability without an effect", items[i]);
            ok = false;
            continue;
          }
          auto p = probability_suffix(items[i], ds);
          if (p)
            out.back().probability = *p;
          ok = ok && p.has_value();
          continue;
        }
        auto one = effect(items[i], ds);
        ok = ok && one.has_value();
        if (one)
          out.push_back(std::move(*one));
      }
      if (!ok)
        return std::nullopt;
      return out;
    }

    std::optional<std::vector<ContinuousChange>> change_list(const SExpr& e, Diagnostics& ds)
    {
      if (!expect_list(e, ds, "changes"))
        return std::nullopt;
      std::vector<ContinuousChange> out;
      if (single_form(e))
      {
        auto one = change(e, ds);
        if (!one)
          return std::nullopt;
        out.push_back(std::move(*one));
        return out;
      }
      std::size_t from = 0;
      const auto& items = *unwrap_and(e, from);
      bool ok = true;
      for (std::size_t i = from; i < items.size(); ++i)
      {
        auto one = change(items[i], ds);
        ok = ok && one.has_value();
        if (one)
          out.push_back(std::move(*one));
      }
      if (!ok)
        return std::nullopt;
      return out;
    }

    std::optional<std::vector<Condition>> condition_list(const SExpr& e, Diagnostics& ds)
    {
      if (!expect_list(e, ds, "conditions"))
        return std::nullopt;
      std::vector<Condition> out;
      if (single_form(e))
      {
        auto one = sx::condition(e, ds);
        if (!one)
          return std::nullopt;
        out.push_back(std::move(*one));
        return out;
      }
      bool ok = true;
      for (const auto& it : e.items)
      {
        auto one = sx::condition(it, ds);
        ok = ok && one.has_value();
        if (one)
          out.push_back(std::move(*one));
      }
      if (!ok)
        return std::nullopt;
      return out;
    }

    std::optional<std::vector<Symbol>> symbol_list(const SExpr& e, Diagnostics& ds)
    {
      if (!expect_list(e, ds, "names"))
        return std::nullopt;
      std::vector<Symbol> out;
      for (const auto& it : e.items)
      {
        auto n = name(it, ds);
        if (!n)
          return std::nullopt;
        out.push_back(*n);
      }
      return out;
    }

    std::optional<std::vector<Value>> value_list(const SExpr& e, Diagnostics& ds)
    {
      if (!expect_list(e, ds, "values"))
        return std::nullopt;
      std::vector<Value> out;
      for (const auto& it : e.items)
      {
        auto v = sx::value(it, ds);
        if (!v)
          return std::nullopt;
        out.push_back(std::move(*v));
      }
      return out;
    }

    // :KEY value pairs following position `from`.
    struct KeywordArgs
    {
      std::vector<std::pair<std::string, std::vector<const SExpr*>>> entries;

      const std::vector<const SExpr*>* find(std::string_view k) const
      {
        for (const auto& [key, vals] : entries)
          if (key == k)
            return &vals;
        return nullptr;
      }
    };

    std::optional<KeywordArgs> keyword_args(const SExpr& e, std::size_t from, Diagnostics& ds)
    {
      KeywordArgs out;
      for (std::size_t i = from; i < e.items.size(); ++i)
      {
        const SExpr& it = e.items[i];
        if (it.is_keyword())
        {
          if (out.find(it.text))
          {
            error(ds, code::SynDuplicate, "argument " + it.text + " given twice", it);
            return std::nullopt;
          }
          out.entries.push_back({it.text, {}});
          continue;
        }
        if (out.entries.empty())
        {
          error(ds, code::SynMalformed, "expected a :KEYWORD", it);
          return std::nullopt;
        }
        out.entries.back().second.push_back(&it);
      }
      return out;
    }

    const SExpr* single_value(const KeywordArgs& kw, std::string_view key, const SExpr& owner, Diagnostics& ds,
                              bool required)
    {
      auto vals = kw.find(key);
      if (!vals)
      {
        if (required)
          error(ds, code::SynMissingArg, "missing " + std::string(key), owner);
        return nullptr;
      }
      if (vals->size() != 1)
      {
        error(ds, code::SynMalformed, std::string(key) + " takes exactly one value", owner);
        return nullptr;
      }
      return vals->front();
    }

    bool check_keys(const KeywordArgs& kw, std::initializer_list<std::string_view> allowed, Diagnostics& ds,
                    const SExpr& owner)
    {
      bool ok = true;
      for (const auto& [k, v] : kw.entries)
        if (std::find(allowed.begin(), allowed.end(), k) == allowed.end())
        {
          error(ds, code::SynUnknownKeyword, "unknown keyword " + k, owner);
          ok = false;
        }
      return ok;
    }

    std::optional<TypedList> typed_var_section(const SExpr* e, Diagnostics& ds)
    {
      if (!e)
        return TypedList{};
      if (!expect_list(*e, ds, "typed variables"))
        return std::nullopt;
      return typed_vars(e->items, 0, ds);
    }

    std::optional<ActionModel> action(const SExpr& e, Diagnostics& ds)
    {
      auto n = e.items.size() > 1 ? name(e.items[1], ds) : std::nullopt;
      if (!n)
      {
        if (e.items.size() <= 1)
          error(ds, code::SynMalformed, "action needs a name", e);
        return std::nullopt;
      }
      auto kw = keyword_args(e, 2, ds);
      if (!kw || !check_keys(*kw, {":PERFORMER", ":PARAMETERS", ":PRECONDITIONS", ":EFFECTS"}, ds, e))
        return std::nullopt;
      ActionModel a;
      a.name = *n;
      auto perf = single_value(*kw, ":PERFORMER", e, ds, true);
      if (!perf)
        return std::nullopt;
      auto pt = sx::term(*perf, ds);
      auto params = typed_var_section(single_value(*kw, ":PARAMETERS", e, ds, false), ds);
      if (!pt || !params)
        return std::nullopt;
      a.performer = std::move(*pt);
      a.parameters = std::move(*params);
      if (auto p = single_value(*kw, ":PRECONDITIONS", e, ds, false))
      {
        auto cs = condition_list(*p, ds);
        if (!cs)
          return std::nullopt;
        a.preconditions = std::move(*cs);
      }
      if (auto p = single_value(*kw, ":EFFECTS", e, ds, false))
      {
        auto es = effect_list(*p, ds);
        if (!es)
          return std::nullopt;
        a.effects = std::move(*es);
      }
      return a;
    }

    std::optional<EventModel> event(const SExpr& e, Diagnostics& ds)
    {
      auto n = e.items.size() > 1 ? name(e.items[1], ds) : std::nullopt;
      if (!n)
      {
        if (e.items.size() <= 1)
          error(ds, code::SynMalformed, "event needs a name", e);
        return std::nullopt;
      }
      auto kw = keyword_args(e, 2, ds);
      if (!kw || !check_keys(*kw, {":PROBABILITY", ":FREQUENCY", ":QUALITIES", ":TRIGGERS", ":EFFECTS"}, ds, e))
        return std::nullopt;
      EventModel ev;
      ev.name = *n;
      if (auto p = single_value(*kw, ":PROBABILITY", e, ds, false))
      {
        auto v = real_number(*p, ds);
        if (!v)
          return std::nullopt;
        ev.probability = *v;
      }
      if (auto p = single_value(*kw, ":FREQUENCY", e, ds, false))
      {
        auto v = real_number(*p, ds);
        if (!v)
          return std::nullopt;
        ev.frequency = *v;
      }
      auto quals = typed_var_section(single_value(*kw, ":QUALITIES", e, ds, false), ds);
      if (!quals)
        return std::nullopt;
      ev.qualities = std::move(*quals);
      if (auto p = single_value(*kw, ":TRIGGERS", e, ds, false))
      {
        auto cs = condition_list(*p, ds);
        if (!cs)
          return std::nullopt;
        ev.triggers = std::move(*cs);
      }
      if (auto p = single_value(*kw, ":EFFECTS", e, ds, false))
      {
        auto es = effect_list(*p, ds);
        if (!es)
          return std::nullopt;
        ev.effects = std::move(*es);
      }
      return ev;
    }

    std::optional<ProcessModel> process(const SExpr& e, Diagnostics& ds)
    {
      auto n = e.items.size() > 1 ? name(e.items[1], ds) : std::nullopt;
      if (!n)
      {
        if (e.items.size() <= 1)
          error(ds, code::SynMalformed, "process needs a name", e);
        return std::nullopt;
      }
      auto kw = keyword_args(e, 2, ds);
      if (!kw || !check_keys(*kw, {":QUALITIES", ":CONDITIONS", ":CHANGES", ":EFFECTS"}, ds, e))
        return std::nullopt;
      if (kw->find(":CHANGES") && kw->find(":EFFECTS"))
      {
        error(ds, code::SynDuplicate, "process gives both :CHANGES and :EFFECTS", e);
        return std::nullopt;
      }
      ProcessModel p;
      p.name = *n;
      auto quals = typed_var_section(single_value(*kw, ":QUALITIES", e, ds, false), ds);
      if (!quals)
        return std::nullopt;
      p.qualities = std::move(*quals);
      if (auto c = single_value(*kw, ":CONDITIONS", e, ds, false))
      {
        auto cs = condition_list(*c, ds);
        if (!cs)
          return std::nullopt;
        p.conditions = std::move(*cs);
      }
      const SExpr* ch = kw->find(":CHANGES") ? single_value(*kw, ":CHANGES", e, ds, false)
                                               : single_value(*kw, ":EFFECTS", e, ds, false);
      if (ch)
      {
        auto cs = change_list(*ch, ds);
        if (!cs)
          return std::nullopt;
        p.changes = std::move(*cs);
      }
      return p;
    }

    template <class T>
    bool add_named(std::vector<T>& items, T item, Diagnostics& ds, const SExpr& at, const char* what)
    {
      for (const auto& x : items)
        if (x.name == item.name)
        {
          error(ds, code::SynDuplicate, std::string("duplicate ") + what + " " + item.name.str(), at);
          return false;
        }
      items.push_back(std::move(item));
      return true;
    }

    void domain_section(const SExpr& s, Domain& d, Diagnostics& ds)
    {
      if (!s.is_list() || s.items.empty() || !s.items.front().is_symbol())
      {
        error(ds, code::SynMalformed, "expected a domain section", s);
        return;
      }
      const std::string& head = s.items.front().text;
      if (head == ":TYPES")
      {
        auto names = typed_names(s.items, 1, ds, false);
        if (!names)
          return;
        for (const auto& n : *names)
        {
          if (!insert_unique(d.types, n.name))
            error(ds, code::SynDuplicate, "duplicate type " + n.name.str(), s);
          if (n.type)
            insert_unique(d.supertypes, TypeParent{n.name, *n.type});
        }
      }
      else if (head == ":SUPERTYPES")
      {
        for (std::size_t i = 1; i < s.items.size(); ++i)
        {
          const SExpr& p = s.items[i];
          if (!p.is_list() || p.items.size() != 2)
          {
            error(ds, code::SynMalformed, "supertype entry must be (CHILD PARENT)", p);
            continue;
          }
          auto c = name(p.items[0], ds);
          auto par = name(p.items[1], ds);
          if (c && par && !insert_unique(d.supertypes, TypeParent{*c, *par}))
            error(ds, code::SynDuplicate, "duplicate supertype pair", p);
        }
      }
      else if (head == ":CONSTANTS")
      {
        auto names = typed_names(s.items, 1, ds, false);
        if (!names)
          return;
        for (const auto& n : *names)
          add_named(d.constants, Constant{n.name, n.type.value_or(names::OBJECT)}, ds, s, "constant");
      }
      else if (head == ":FUNCTIONS")
      {
        for (std::size_t i = 1; i < s.items.size();)
        {
          auto f = function_decl(s.items, i, ds);
          if (!f)
            return;
          add_named(d.functions, std::move(*f), ds, s, "function");
        }
      }
      else if (head == ":-")
      {
        if (auto ax = axiom(s, ds); ax && !insert_unique(d.axioms, std::move(*ax)))
          error(ds, code::SynDuplicate, "duplicate axiom", s);
      }
      else if (head == ":ACTION")
      {
        if (auto a = action(s, ds))
          add_named(d.actions, std::move(*a), ds, s, "action");
      }
      else if (head == ":EVENT")
      {
        if (auto ev = event(s, ds))
          add_named(d.events, std::move(*ev), ds, s, "event");
      }
      else if (head == ":PROCESS")
      {
        if (auto p = process(s, ds))
          add_named(d.processes, std::move(*p), ds, s, "process");
      }
      else
        error(ds, code::SynUnknownKeyword, "unknown domain section " + head, s);
    }

    // --------------------------------------------------------- generators

    std::optional<std::vector<GeneratorExpr>> generator_list(const SExpr& e, Diagnostics& ds)
    {
      if (!expect_list(e, ds, "generator list"))
        return std::nullopt;
      std::vector<GeneratorExpr> out;
      for (const auto& it : e.items)
      {
        auto g = sx::generator(it, ds);
        if (!g)
          return std::nullopt;
        out.push_back(std::move(*g));
      }
      return out;
    }

    std::optional<std::vector<double>> number_list(const SExpr& e, Diagnostics& ds)
    {
      if (!expect_list(e, ds, "numbers"))
        return std::nullopt;
      std::vector<double> out;
      for (const auto& it : e.items)
      {
        auto v = real_number(it, ds);
        if (!v)
          return std::nullopt;
        out.push_back(*v);
      }
      return out;
    }

    std::optional<Lambda> lambda(const SExpr& e, Diagnostics& ds)
    {
      if (!e.is_list() || e.items.size() != 3 || !e.items[0].is_symbol("LAMBDA") || !e.items[1].is_list())
      {
        error(ds, code::SynMalformed, "filter predicate must be (LAMBDA (?v...) condition)", e);
        return std::nullopt;
      }
      Lambda l;
      for (const auto& p : e.items[1].items)
      {
        auto v = variable(p, ds);
        if (!v)
          return std::nullopt;
        l.params.push_back(*v);
      }
      auto body = sx::condition(e.items[2], ds);
      if (!body)
        return std::nullopt;
      l.body = std::move(*body);
      return l;
    }

    std::optional<GeneratorExpr> generator_call(const SExpr& e, Diagnostics& ds)
    {
      const std::string& h = e.items.front().text;
      auto argc = [&](std::size_t n) { return arity(e, n + 1, ds); };
      auto sub = [&](std::size_t i) { return sx::generator(e.items[i], ds); };

      if (h == "OBJECTLIST")
      {
        if (!argc(2))
          return std::nullopt;
        auto n = integer(e.items[1], ds);
        if (!n)
          return std::nullopt;
        if (e.items[2].kind != SExpr::Kind::String && !e.items[2].is_symbol())
        {
          error(ds, code::SynMalformed, "OBJECTLIST prefix must be a string", e.items[2]);
          return std::nullopt;
        }
        return GeneratorExpr{ObjectList{*n, e.items[2].text}};
      }
      if (h == "UNIFORMDISTRIBUTION" || h == "UNIFORMREALDISTRIBUTION" || h == "UNIFORMRANDOM")
      {
        if (!argc(2))
          return std::nullopt;
        auto a = real_number(e.items[1], ds), b = real_number(e.items[2], ds);
        if (!a || !b)
          return std::nullopt;
        return GeneratorExpr{UniformDist{*a, *b}};
      }
      if (h == "UNIFORMINTEGERDISTRIBUTION" || h == "INTEGERSEQUENCE")
      {
        if (!argc(2))
          return std::nullopt;
        auto a = integer(e.items[1], ds), b = integer(e.items[2], ds);
        if (!a || !b)
          return std::nullopt;
        if (h == "INTEGERSEQUENCE")
          return GeneratorExpr{IntegerSequence{*a, *b}};
        return GeneratorExpr{UniformInt{*a, *b}};
      }
      if (h == "GAUSSIANDISTRIBUTION")
      {
        if (!argc(2))
          return std::nullopt;
        auto a = real_number(e.items[1], ds), b = real_number(e.items[2], ds);
        if (!a || !b)
          return std::nullopt;
        return GeneratorExpr{GaussianDist{*a, *b}};
      }
      if (h == "NDIMENSIONALGAUSSIANDISTRIBUTION")
      {
        if (!argc(2))
          return std::nullopt;
        auto m = number_list(e.items[1], ds), s = number_list(e.items[2], ds);
        if (!m || !s)
          return std::nullopt;
        if (m->size() != s->size())
        {
          error(ds, code::SynMalformed, "means and stdevs differ in length", e);
          return std::nullopt;
        }
        return GeneratorExpr{NDimGaussian{std::move(*m), std::move(*s)}};
      }
      if (h == "BERNOULLIDISTRIBUTION")
      {
        if (!argc(1))
          return std::nullopt;
        auto p = real_number(e.items[1], ds);
        if (!p)
          return std::nullopt;
        return GeneratorExpr{Bernoulli{*p}};
      }
      if (h == "DRAWFROMOBJECTSET" || h == "DRAWALLFROMOBJECTSET")
      {
        if (!argc(1))
          return std::nullopt;
        auto n = name(e.items[1], ds);
        if (!n)
          return std::nullopt;
        if (h == "DRAWFROMOBJECTSET")
          return GeneratorExpr{DrawFromObjectSet{*n}};
        return GeneratorExpr{DrawAllFromObjectSet{*n}};
      }
      if (h == "CONSTANTFUNCTION" || h == "CONSTANT")
      {
        if (!argc(1))
          return std::nullopt;
        auto v = sx::value(e.items[1], ds);
        if (!v)
          return std::nullopt;
        return GeneratorExpr{ConstantGen{std::move(*v)}};
      }
      if (h == "NDRAWS")
      {
        if (!argc(2))
          return std::nullopt;
        auto g = sub(1);
        auto n = integer(e.items[2], ds);
        if (!g || !n)
          return std::nullopt;
        return GeneratorExpr{NDraws{std::move(*g), *n}};
      }
      if (h == "DRAWTUPLE")
      {
        if (!argc(2))
          return std::nullopt;
        auto gs = generator_list(e.items[1], ds);
        auto ns = symbol_list(e.items[2], ds);
        if (!gs || !ns)
          return std::nullopt;
        if (gs->size() != ns->size())
        {
          error(ds, code::SynMalformed, "DRAWTUPLE needs one name per generator", e);
          return std::nullopt;
        }
        return GeneratorExpr{DrawTuple{std::move(*gs), std::move(*ns)}};
      }
      if (h == "FILTER")
      {
        if (!argc(2))
          return std::nullopt;
        auto g = sub(1);
        auto l = lambda(e.items[2], ds);
        if (!g || !l)
          return std::nullopt;
        return GeneratorExpr{FilterGen{std::move(*g), std::move(*l)}};
      }
      if (h == "NEWSET")
      {
        if (!argc(1))
          return std::nullopt;
        auto g = sub(1);
        if (!g)
          return std::nullopt;
        return GeneratorExpr{NewSet{std::move(*g)}};
      }
      if (h == "ALLPERMUTATIONS")
      {
        if (!argc(2))
          return std::nullopt;
        auto as = generator_list(e.items[1], ds);
        auto v = sub(2);
        if (!as || !v)
          return std::nullopt;
        return GeneratorExpr{AllPermutations{std::move(*as), std::move(*v)}};
      }
      if (h == "NFLUENTDRAWS")
      {
        if (!argc(3))
          return std::nullopt;
        auto as = generator_list(e.items[1], ds);
        auto v = sub(2);
        auto n = integer(e.items[3], ds);
        if (!as || !v || !n)
          return std::nullopt;
        return GeneratorExpr{NFluentDraws{std::move(*as), std::move(*v), *n}};
      }
      if (h == "COMBINEFUNCTIONS")
      {
        std::vector<GeneratorExpr> subs;
        for (std::size_t i = 1; i < e.items.size(); ++i)
        {
          auto g = sub(i);
          if (!g)
            return std::nullopt;
          subs.push_back(std::move(*g));
        }
        return GeneratorExpr{CombineFunctions{std::move(subs)}};
      }
      if (h == "FIELD")
      {
        if (!argc(2))
          return std::nullopt;
        auto g = name(e.items[1], ds), f = name(e.items[2], ds);
        if (!g || !f)
          return std::nullopt;
        return GeneratorExpr{FieldRef{*g, *f}};
      }
      if (h == "DIFFERENCE")
      {
        if (!argc(2))
          return std::nullopt;
        auto a = sub(1), b = sub(2);
        if (!a || !b)
          return std::nullopt;
        return GeneratorExpr{Difference{std::move(*a), std::move(*b)}};
      }
      if (h == "LIST")
      {
        std::vector<Value> vals;
        for (std::size_t i = 1; i < e.items.size(); ++i)
        {
          auto v = sx::value(e.items[i], ds);
          if (!v)
            return std::nullopt;
          vals.push_back(std::move(*v));
        }
        return GeneratorExpr{ValueList{std::move(vals)}};
      }
      error(ds, code::SynUnknownHead, "unknown draw function " + h, e);
      return std::nullopt;
    }

    std::optional<GroundFluent> ground_fluent(const SExpr& e, Diagnostics& ds)
    {
      if (!e.is_list() || e.items.size() != 3 || !e.items[0].is_symbol("=") || !e.items[1].is_list() ||
          e.items[1].items.empty())
      {
        error(ds, code::SynMalformed, "fluent must be (= (FN args...) value)", e);
        return std::nullopt;
      }
      const SExpr& ref = e.items[1];
      auto fn = name(ref.items[0], ds);
      if (!fn)
        return std::nullopt;
      GroundFluent gf;
      gf.function = *fn;
      for (std::size_t i = 1; i < ref.items.size(); ++i)
      {
        auto v = sx::value(ref.items[i], ds);
        if (!v)
          return std::nullopt;
        gf.args.push_back(std::move(*v));
      }
      auto v = sx::value(e.items[2], ds);
      if (!v)
        return std::nullopt;
      gf.value = std::move(*v);
      return gf;
    }

    void generator_form(const SExpr& s, ScenarioGenerator& sg, Diagnostics& ds)
    {
      const std::string& head = s.items.front().text;
      if (head == "OBJECTGENERATOR")
      {
        if (!arity(s, 4, ds))
          return;
        auto n = name(s.items[1], ds);
        auto ty = name(s.items[2], ds);
        auto g = sx::generator(s.items[3], ds);
        if (n && ty && g)
          add_named(sg.object_generators, ObjectGenerator{*n, *ty, std::move(*g)}, ds, s, "object generator");
      }
      else if (head == "VALUEGENERATOR")
      {
        if (!arity(s, 3, ds))
          return;
        auto n = name(s.items[1], ds);
        auto g = sx::generator(s.items[2], ds);
        if (n && g)
          add_named(sg.value_generators, ValueGenerator{*n, std::move(*g)}, ds, s, "value generator");
      }
      else if (head == "FLUENTGENERATOR")
      {
        if (!arity(s, 3, ds))
          return;
        auto n = name(s.items[1], ds);
        auto g = sx::generator(s.items[2], ds);
        if (!n || !g)
          return;
        if (sg.fluent_generator(*n))
          error(ds, code::SynDuplicate, "duplicate fluent generator " + n->str(), s);
        else
          sg.fluent_generators.push_back(FluentGenerator{*n, std::move(*g)});
      }
      else
        error(ds, code::SynUnknownHead, "unknown generator form " + head, s);
    }

    void generator_section(const SExpr& s, ScenarioGenerator& sg, bool& has_performance, Diagnostics& ds)
    {
      if (!s.is_list() || s.items.empty() || !s.items.front().is_symbol())
      {
        error(ds, code::SynMalformed, "expected a scenario generator section", s);
        return;
      }
      const std::string& head = s.items.front().text;
      if (head == ":FLUENTS")
      {
        for (std::size_t i = 1; i < s.items.size(); ++i)
          if (auto gf = ground_fluent(s.items[i], ds))
            sg.fluents.push_back(std::move(*gf));
      }
      else if (head == ":DEFAULTS")
      {
        for (std::size_t i = 1; i < s.items.size(); ++i)
        {
          const SExpr& it = s.items[i];
          if (!it.is_list() || it.items.size() != 2)
          {
            error(ds, code::SynMalformed, "default must be (FN value)", it);
            continue;
          }
          auto fn = name(it.items[0], ds);
          auto v = sx::value(it.items[1], ds);
          if (!fn || !v)
            continue;
          if (sg.default_for(*fn))
            error(ds, code::SynDuplicate, "duplicate default for " + fn->str(), it);
          else
            sg.defaults.push_back(DefaultValue{*fn, std::move(*v)});
        }
      }
      else if (head == ":OBJECT-GENERATORS" || head == ":VALUE-GENERATORS" || head == ":FLUENT-GENERATORS")
      {
        const char* want = head == ":OBJECT-GENERATORS" ? "OBJECTGENERATOR"
          : head == ":VALUE-GENERATORS"                  ? "VALUEGENERATOR"
                                                         : "FLUENTGENERATOR";
        for (std::size_t i = 1; i < s.items.size(); ++i)
        {
          const SExpr& it = s.items[i];
          if (!it.is_list() || it.items.empty() || !it.items.front().is_symbol(want))
          {
            error(ds, code::SynMalformed, std::string("expected (") + want + " ...)", it);
            continue;
          }
          generator_form(it, sg, ds);
        }
      }
      else if (head == ":PERFORMANCE")
      {
        if (!arity(s, 2, ds))
          return;
        if (has_performance)
        {
          error(ds, code::SynDuplicate, "performance given twice", s);
          return;
        }
        if (auto c = sx::calculation(s.items[1], ds))
        {
          sg.performance = std::move(*c);
          has_performance = true;
        }
      }
      else if (head == "OBJECTGENERATOR" || head == "VALUEGENERATOR" || head == "FLUENTGENERATOR")
        generator_form(s, sg, ds);
      else
        error(ds, code::SynUnknownKeyword, "unknown scenario generator section " + head, s);
    }

    // ----------------------------------------------------- transformations

    std::optional<TxArg> tx_arg(ArgShape shape, const std::vector<const SExpr*>& vals, const SExpr& owner,
                                Diagnostics& ds)
    {
      auto one = [&]() -> const SExpr* {
        if (vals.size() == 1)
          return vals.front();
        error(ds, vals.empty() ? code::SynMissingArg : code::SynExtraArg, "expected exactly one value", owner);
        return nullptr;
      };
      switch (shape)
      {
      case ArgShape::Function: {
        if (vals.size() == 1 && vals.front()->is_list() && vals.front()->items.size() == 3 &&
            vals.front()->items[0].is_list())
        {
          std::size_t i = 0;
          auto f = function_decl(vals.front()->items, i, ds);
          if (f)
            return TxArg{std::move(*f)};
          return std::nullopt;
        }
        std::vector<SExpr> items;
        for (auto v : vals)
          items.push_back(*v);
        std::size_t i = 0;
        if (items.empty())
        {
          error(ds, code::SynMissingArg, "missing function declaration", owner);
          return std::nullopt;
        }
        auto f = function_decl(items, i, ds);
        if (!f)
          return std::nullopt;
        if (i != items.size())
        {
          error(ds, code::SynExtraArg, "unexpected values after function declaration", owner);
          return std::nullopt;
        }
        return TxArg{std::move(*f)};
      }
      case ArgShape::Effect: {
        if (vals.empty() || vals.size() > 2)
        {
          error(ds, vals.empty() ? code::SynMissingArg : code::SynExtraArg, "expected an effect", owner);
          return std::nullopt;
        }
        auto e = effect(*vals[0], ds);
        if (!e)
          return std::nullopt;
        if (vals.size() == 2)
        {
          if (!vals[1]->is_list() || !vals[1]->bracket)
          {
            error(ds, code::SynExtraArg, "expected [probability] after effect", *vals[1]);
            return std::nullopt;
          }
          auto p = probability_suffix(*vals[1], ds);
          if (!p)
            return std::nullopt;
          e->probability = *p;
        }
        return TxArg{std::move(*e)};
      }
      default:
        break;
      }

      const SExpr* v = one();
      if (!v)
        return std::nullopt;
      auto wrap = [](auto opt) -> std::optional<TxArg> {
        if (!opt)
          return std::nullopt;
        return TxArg{std::move(*opt)};
      };
      switch (shape)
      {
      case ArgShape::Name:
        return wrap(name(*v, ds));
      case ArgShape::Number:
        return wrap(real_number(*v, ds));
      case ArgShape::SymbolList:
        return wrap(symbol_list(*v, ds));
      case ArgShape::ValueList:
        return wrap(value_list(*v, ds));
      case ArgShape::Value:
        return wrap(sx::value(*v, ds));
      case ArgShape::Term:
        return wrap(sx::term(*v, ds));
      case ArgShape::Axiom:
        return wrap(axiom(*v, ds));
      case ArgShape::Condition:
        return wrap(sx::condition(*v, ds));
      case ArgShape::Change:
        return wrap(change(*v, ds));
      case ArgShape::Calculation:
        return wrap(sx::calculation(*v, ds));
      case ArgShape::Generator:
        return wrap(sx::generator(*v, ds));
      default:
        return std::nullopt;
      }
    }

    template <class T>
    Parsed<T> single(std::string_view text, std::optional<T> (*conv)(const SExpr&, Diagnostics&))
    {
      Parsed<T> out;
      auto forms = read_sexprs(text);
      out.diagnostics = std::move(forms.diagnostics);
      if (has_errors(out.diagnostics))
        return out;
      if (forms.value->size() != 1)
      {
        SExpr whole;
        whole.span.end = text.size();
        error(out.diagnostics, code::SynMalformed, "expected exactly one expression", whole);
        return out;
      }
      out.value = conv(forms.value->front(), out.diagnostics);
      return out;
    }
  }

  // ------------------------------------------------------------- sx::

  namespace sx
  {
    std::optional<Value> value(const SExpr& e, Diagnostics& ds)
    {
      switch (e.kind)
      {
      case SExpr::Kind::Number:
        return number(e, ds);
      case SExpr::Kind::String:
        return Value{e.text};
      case SExpr::Kind::Symbol:
        if (e.text == "TRUE")
          return Value{true};
        if (e.text == "FALSE")
          return Value{false};
        if (is_variable(e) || e.is_keyword())
        {
          error(ds, code::SynMalformed, "expected a value, got " + e.text, e);
          return std::nullopt;
        }
        return Value{Symbol(e.text)};
      default:
        error(ds, code::SynMalformed, "expected a value", e);
        return std::nullopt;
      }
    }

    std::optional<Term> term(const SExpr& e, Diagnostics& ds)
    {
      switch (e.kind)
      {
      case SExpr::Kind::Number: {
        auto v = number(e, ds);
        if (!v)
          return std::nullopt;
        return to_term(*v);
      }
      case SExpr::Kind::String:
        return Term{StringLit{e.text}};
      case SExpr::Kind::Symbol:
        if (e.is_keyword())
        {
          error(ds, code::SynMalformed, "unexpected keyword " + e.text, e);
          return std::nullopt;
        }
        if (e.text == "TRUE" || e.text == "FALSE")
          return lit(e.text == "TRUE");
        if (is_variable(e))
          return Term{Variable{Symbol(e.text)}};
        return Term{ObjectRef{Symbol(e.text)}};
      case SExpr::Kind::List:
        break;
      }
      if (e.items.empty() || !e.items.front().is_symbol() || is_variable(e.items.front()) ||
          e.items.front().is_keyword() || is_literal_symbol(e.items.front()))
      {
        error(ds, code::SynMalformed, "expected a function term", e);
        return std::nullopt;
      }
      if (const auto& h = e.items.front().text; arith_op(h) || is_comparator(h) || h == "SUM" || h == "PRODUCT" ||
          h == "IF" || h == "AND" || h == "OR" || h == "NOT" || h == "FORALL")
      {
        error(ds, code::SynMalformed, "'" + h + "' is not allowed where a term is expected", e);
        return std::nullopt;
      }
      auto args = term_args(e, 1, ds);
      if (!args)
        return std::nullopt;
      return Term{FunctionTerm{Symbol(e.items.front().text), std::move(*args)}};
    }

    std::optional<Calculation> calculation(const SExpr& e, Diagnostics& ds)
    {
      if (!e.is_list() || e.items.empty() || !e.items.front().is_symbol())
      {
        auto t = term(e, ds);
        if (!t)
          return std::nullopt;
        return Calculation{std::move(*t)};
      }
      const std::string& h = e.items.front().text;
      if (auto op = arith_op(h))
      {
        if (*op == ArithOp::Sub && e.items.size() == 2)
        {
          auto x = calculation(e.items[1], ds);
          if (!x)
            return std::nullopt;
          return Calculation{BinOp{ArithOp::Sub, Calculation{lit(std::int64_t{0})}, std::move(*x)}};
        }
        bool variadic = *op == ArithOp::Add || *op == ArithOp::Mul;
        if (e.items.size() < 3 || (!variadic && e.items.size() != 3))
        {
          error(ds, code::SynMalformed, "'" + h + "' expects two operands", e);
          return std::nullopt;
        }
        auto acc = calculation(e.items[1], ds);
        for (std::size_t i = 2; acc && i < e.items.size(); ++i)
        {
          auto rhs = calculation(e.items[i], ds);
          if (!rhs)
            return std::nullopt;
          acc = Calculation{BinOp{*op, std::move(*acc), std::move(*rhs)}};
        }
        return acc;
      }
      if (h == "SUM" || h == "PRODUCT")
      {
        if (!arity(e, 4, ds))
          return std::nullopt;
        const SExpr* vexpr = &e.items[1];
        if (vexpr->is_list() && vexpr->items.size() == 1)
          vexpr = &vexpr->items[0];
        auto v = variable(*vexpr, ds);
        auto con = condition(e.items[2], ds);
        auto body = calculation(e.items[3], ds);
        if (!v || !con || !body)
          return std::nullopt;
        return Calculation{
          Aggregate{h == "SUM" ? AggOp::Sum : AggOp::Product, *v, std::move(*con), std::move(*body)}};
      }
      if (h == "IF")
      {
        if (!arity(e, 4, ds))
          return std::nullopt;
        auto c = condition(e.items[1], ds);
        auto a = calculation(e.items[2], ds);
        auto b = calculation(e.items[3], ds);
        if (!c || !a || !b)
          return std::nullopt;
        return Calculation{IfCalc{std::move(*c), std::move(*a), std::move(*b)}};
      }
      auto t = term(e, ds);
      if (!t)
        return std::nullopt;
      return Calculation{std::move(*t)};
    }

    std::optional<Condition> condition(const SExpr& e, Diagnostics& ds)
    {
      if (!e.is_list() || e.items.empty() || !e.items.front().is_symbol())
      {
        auto t = term(e, ds);
        if (!t)
          return std::nullopt;
        return Condition{std::move(*t)};
      }
      const std::string& h = e.items.front().text;
      if (h == "AND" || h == "OR")
      {
        BoolOp op = h == "AND" ? BoolOp::And : BoolOp::Or;
        if (e.items.size() < 2)
        {
          error(ds, code::SynMalformed, h + " needs at least one operand", e);
          return std::nullopt;
        }
        std::vector<Condition> ops;
        for (std::size_t i = 1; i < e.items.size(); ++i)
        {
          auto c = condition(e.items[i], ds);
          if (!c)
            return std::nullopt;
          // Nested same-operator conditions flatten into one n-ary node.
          if (auto b = std::get_if<BoolCond>(&c->node); b && b->op == op)
            ops.insert(ops.end(), b->operands.begin(), b->operands.end());
          else
            ops.push_back(std::move(*c));
        }
        if (ops.size() == 1)
          return std::move(ops.front());
        return Condition{BoolCond{op, std::move(ops)}};
      }
      if (h == "NOT")
      {
        if (!arity(e, 2, ds))
          return std::nullopt;
        auto c = condition(e.items[1], ds);
        if (!c)
          return std::nullopt;
        return Condition{NotCond{std::move(*c)}};
      }
      if (h == "FORALL")
      {
        if (!arity(e, 4, ds))
          return std::nullopt;
        std::vector<Symbol> vars;
        if (e.items[1].is_list())
        {
          for (const auto& v : e.items[1].items)
          {
            auto s = variable(v, ds);
            if (!s)
              return std::nullopt;
            vars.push_back(*s);
          }
        }
        else if (auto s = variable(e.items[1], ds))
          vars.push_back(*s);
        else
          return std::nullopt;
        if (vars.empty())
        {
          error(ds, code::SynMalformed, "FORALL needs at least one variable", e);
          return std::nullopt;
        }
        auto c1 = condition(e.items[2], ds);
        auto c2 = condition(e.items[3], ds);
        if (!c1 || !c2)
          return std::nullopt;
        return Condition{Forall{std::move(vars), std::move(*c1), std::move(*c2)}};
      }
      if (is_comparator(h))
      {
        if (!arity(e, 3, ds))
          return std::nullopt;
        auto a = calculation(e.items[1], ds);
        auto b = calculation(e.items[2], ds);
        if (!a || !b)
          return std::nullopt;
        return Condition{Compare{comparator(h), std::move(*a), std::move(*b)}};
      }
      auto t = term(e, ds);
      if (!t)
        return std::nullopt;
      return Condition{std::move(*t)};
    }

    std::optional<GeneratorExpr> generator(const SExpr& e, Diagnostics& ds)
    {
      switch (e.kind)
      {
      case SExpr::Kind::Number:
      case SExpr::Kind::String: {
        auto v = value(e, ds);
        if (!v)
          return std::nullopt;
        return GeneratorExpr{ConstantGen{std::move(*v)}};
      }
      case SExpr::Kind::Symbol: {
        if (is_literal_symbol(e))
          return GeneratorExpr{ConstantGen{Value{e.text == "TRUE"}}};
        if (e.is_keyword() || is_variable(e))
        {
          error(ds, code::SynMalformed, "expected a generator, got " + e.text, e);
          return std::nullopt;
        }
        auto dot = e.text.rfind('.');
        if (dot != std::string::npos && dot > 0 && dot + 1 < e.text.size())
          return GeneratorExpr{FieldRef{Symbol(e.text.substr(0, dot)), Symbol(e.text.substr(dot + 1))}};
        return GeneratorExpr{GenRef{Symbol(e.text)}};
      }
      case SExpr::Kind::List:
        break;
      }
      if (e.bracket || e.items.empty() || !e.items.front().is_symbol())
      {
        auto vs = value_list(e, ds);
        if (!vs)
          return std::nullopt;
        return GeneratorExpr{ValueList{std::move(*vs)}};
      }
      return generator_call(e, ds);
    }

    std::optional<Transformation> transformation(const SExpr& e, Diagnostics& ds,
                                                 std::vector<Transformation>* expansion)
    {
      if (!e.is_list() || e.items.empty() || !e.items.front().is_symbol())
      {
        error(ds, code::SynMalformed, "transformation must be (HEAD :ARG value ...)", e);
        return std::nullopt;
      }
      auto kind = kind_from_head(e.items.front().text);
      if (!kind)
      {
        error(ds, code::SynUnknownHead, "unknown transformation " + e.items.front().text, e);
        return std::nullopt;
      }
      auto kw = keyword_args(e, 1, ds);
      if (!kw)
        return std::nullopt;

      bool trigger_kind = *kind == TxKind::AddTrigger || *kind == TxKind::RemoveTrigger;
      bool add_action = *kind == TxKind::AddAction;
      Transformation t{*kind, {}};
      bool ok = true;
      std::set<std::string> used;
      for (const auto& spec : arg_specs(*kind))
      {
        std::string key = ":" + std::string(spec.name);
        auto vals = kw->find(key);
        if (!vals && trigger_kind && spec.name == "TRIGGER")
        {
          key = ":PRECONDITION";
          vals = kw->find(key);
        }
        if (!vals)
        {
          error(ds, code::SynMissingArg, "missing :" + std::string(spec.name), e);
          ok = false;
          continue;
        }
        used.insert(key);
        auto a = tx_arg(spec.shape, *vals, e, ds);
        if (!a)
        {
          ok = false;
          continue;
        }
        t.args.emplace_back(Symbol(spec.name), std::move(*a));
      }
      std::vector<Transformation> extra;
      for (const auto& [k, vals] : kw->entries)
      {
        if (used.contains(k))
          continue;
        if (add_action && (k == ":PRECONDITIONS" || k == ":EFFECTS") && vals.size() == 1)
        {
          const auto* aname = t.get<Symbol>("ACTIONNAME");
          if (k == ":PRECONDITIONS")
          {
            auto cs = condition_list(*vals.front(), ds);
            ok = ok && cs.has_value();
            if (cs && aname)
              for (auto& c : *cs)
                extra.push_back(Transformation{
                  TxKind::AddPrecondition, {{Symbol("ACTIONNAME"), *aname}, {Symbol("PRECONDITION"), std::move(c)}}});
          }
          else
          {
            auto es = effect_list(*vals.front(), ds);
            ok = ok && es.has_value();
            if (es && aname)
              for (auto& ef : *es)
                extra.push_back(Transformation{
                  TxKind::AddActionEffect, {{Symbol("ACTIONNAME"), *aname}, {Symbol("EFFECT"), std::move(ef)}}});
          }
          continue;
        }
        error(ds, code::SynExtraArg, "unexpected argument " + k + " for " + std::string(head_name(*kind)), e);
        ok = false;
      }
      if (add_action)
      {
        const auto* params = t.get<std::vector<Symbol>>("PARAMETERS");
        const auto* types = t.get<std::vector<Symbol>>("PARAMETERTYPES");
        if (params && types && params->size() != types->size())
        {
          error(ds, code::SynMalformed, "PARAMETERS and PARAMETERTYPES differ in length", e);
          ok = false;
        }
      }
      if (*kind == TxKind::AddEvent || *kind == TxKind::AddProcess)
      {
        const auto* q = t.get<std::vector<Symbol>>("QUALITIES");
        const auto* qt = t.get<std::vector<Symbol>>("QUALITYTYPES");
        if (q && qt && q->size() != qt->size())
        {
          error(ds, code::SynMalformed, "QUALITIES and QUALITYTYPES differ in length", e);
          ok = false;
        }
      }
      if (!ok)
        return std::nullopt;
      if (expansion)
        *expansion = std::move(extra);
      return t;
    }
  }

  // ------------------------------------------------------------ entry points

  Parsed<Domain> parse_domain(std::string_view text, const std::string& file)
  {
    Parsed<Domain> out;
    auto forms = read_sexprs(text, file);
    out.diagnostics = std::move(forms.diagnostics);
    if (has_errors(out.diagnostics))
      return out;
    auto& fs = *forms.value;
    if (fs.empty())
    {
      SExpr whole;
      whole.span.file = file;
      error(out.diagnostics, code::SynMalformed, "expected (DEFINE (DOMAIN name) ...)", whole);
      return out;
    }
    Domain d;
    for (std::size_t k = 1; k < fs.size(); ++k)
      error(out.diagnostics, code::SynUnknownHead, "unexpected form after domain definition", fs[k]);
    const SExpr& def = fs.front();
    if (!def.is_list() || def.items.size() < 2 || !def.items[0].is_symbol("DEFINE") || !def.items[1].is_list() ||
        def.items[1].items.size() != 2 || !def.items[1].items[0].is_symbol("DOMAIN"))
    {
      error(out.diagnostics, code::SynMalformed, "expected (DEFINE (DOMAIN name) ...)", def);
      return out;
    }
    if (auto n = name(def.items[1].items[1], out.diagnostics))
      d.name = *n;
    for (std::size_t i = 2; i < def.items.size(); ++i)
      domain_section(def.items[i], d, out.diagnostics);
    out.value = std::move(d);
    return out;
  }

  Parsed<ScenarioGenerator> parse_scenario_generator(std::string_view text, const std::string& file)
  {
    Parsed<ScenarioGenerator> out;
    auto forms = read_sexprs(text, file);
    out.diagnostics = std::move(forms.diagnostics);
    if (has_errors(out.diagnostics))
      return out;
    std::vector<const SExpr*> sections;
    for (const auto& f : *forms.value)
    {
      if (f.is_list() && !f.items.empty() && f.items.front().is_symbol("SCENARIO-GENERATOR"))
      {
        std::size_t i = 1;
        if (i < f.items.size() && f.items[i].is_symbol())
          ++i;  // optional name
        for (; i < f.items.size(); ++i)
          sections.push_back(&f.items[i]);
      }
      else
        sections.push_back(&f);
    }
    ScenarioGenerator sg;
    bool has_performance = false;
    for (const auto* s : sections)
      generator_section(*s, sg, has_performance, out.diagnostics);
    if (!has_performance)
    {
      SExpr whole;
      whole.span.file = file;
      warn(out.diagnostics, code::SynMissingArg, "scenario generator has no :PERFORMANCE", whole);
    }
    out.value = std::move(sg);
    return out;
  }

  Parsed<TransformationSequence> parse_transformation_script(std::string_view text, const std::string& file)
  {
    Parsed<TransformationSequence> out;
    auto forms = read_sexprs(text, file);
    out.diagnostics = std::move(forms.diagnostics);
    if (has_errors(out.diagnostics))
      return out;
    TransformationSequence ts;
    for (const auto& f : *forms.value)
    {
      std::vector<Transformation> extra;
      if (auto t = sx::transformation(f, out.diagnostics, &extra))
      {
        ts.push_back(std::move(*t));
        for (auto& x : extra)
          ts.push_back(std::move(x));
      }
    }
    out.value = std::move(ts);
    return out;
  }

  Parsed<Term> parse_term(std::string_view text) { return single<Term>(text, &sx::term); }
  Parsed<Calculation> parse_calculation(std::string_view text) { return single<Calculation>(text, &sx::calculation); }
  Parsed<Condition> parse_condition(std::string_view text) { return single<Condition>(text, &sx::condition); }
  Parsed<Effect> parse_effect(std::string_view text) { return single<Effect>(text, &effect); }
  Parsed<ContinuousChange> parse_change(std::string_view text) { return single<ContinuousChange>(text, &change); }
  Parsed<GeneratorExpr> parse_generator(std::string_view text) { return single<GeneratorExpr>(text, &sx::generator); }

  Parsed<FunctionDecl> parse_function_decl(std::string_view text)
  {
    Parsed<FunctionDecl> out;
    auto forms = read_sexprs(text);
    out.diagnostics = std::move(forms.diagnostics);
    if (has_errors(out.diagnostics))
      return out;
    auto& fs = *forms.value;
    std::size_t i = 0;
    if (fs.empty())
    {
      error(out.diagnostics, code::SynMalformed, "expected a function declaration", SExpr{});
      return out;
    }
    out.value = function_decl(fs, i, out.diagnostics);
    if (out.value && i != fs.size())
    {
      error(out.diagnostics, code::SynExtraArg, "trailing input after function declaration", fs[i]);
      out.value.reset();
    }
    return out;
  }

}  // namespace tsal
