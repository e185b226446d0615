#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tsal/symbol.hpp"

namespace tsal
{

  // Immutable heap node with value equality. Copies share the pointee.
  template <class T>
  class Box
  {
  public:
    Box(T value) : ptr_(std::make_shared<const T>(std::move(value))) {}

    const T& operator*() const noexcept { return *ptr_; }
    const T* operator->() const noexcept { return ptr_.get(); }

    friend bool operator==(const Box& a, const Box& b)
    {
      return a.ptr_ == b.ptr_ || *a.ptr_ == *b.ptr_;
    }

  private:
    std::shared_ptr<const T> ptr_;
  };

  // ---------------------------------------------------------------- values

  struct Value
  {
    std::variant<Symbol, std::int64_t, double, bool, std::string> v;

    bool is_object() const { return std::holds_alternative<Symbol>(v); }
    bool is_integer() const { return std::holds_alternative<std::int64_t>(v); }
    bool is_real() const { return std::holds_alternative<double>(v); }
    bool is_number() const { return is_integer() || is_real(); }
    bool is_bool() const { return std::holds_alternative<bool>(v); }
    bool is_string() const { return std::holds_alternative<std::string>(v); }
    double as_number() const;

    friend bool operator==(const Value&, const Value&) = default;
  };

  // Total order used for canonical output: kind first, then value.
  bool value_less(const Value& a, const Value& b);

  // ----------------------------------------------------------------- terms

  struct Term;

  struct Variable
  {
    Symbol name;
    friend bool operator==(const Variable&, const Variable&) = default;
  };

  struct ObjectRef
  {
    Symbol name;
    friend bool operator==(const ObjectRef&, const ObjectRef&) = default;
  };

  struct IntLit
  {
    std::int64_t value = 0;
    friend bool operator==(const IntLit&, const IntLit&) = default;
  };

  struct RealLit
  {
    double value = 0.0;
    friend bool operator==(const RealLit&, const RealLit&) = default;
  };

  struct BoolLit
  {
    bool value = false;
    friend bool operator==(const BoolLit&, const BoolLit&) = default;
  };

  // Name prefix of a CREATE effect.
  struct StringLit
  {
    std::string value;
    friend bool operator==(const StringLit&, const StringLit&) = default;
  };

  struct FunctionTerm
  {
    Symbol name;
    std::vector<Term> args;
    friend bool operator==(const FunctionTerm&, const FunctionTerm&);
  };

  struct Term
  {
    std::variant<Variable, ObjectRef, IntLit, RealLit, BoolLit, StringLit, FunctionTerm> node;

    friend bool operator==(const Term&, const Term&) = default;
  };

  Term var(std::string_view name);
  Term obj(std::string_view name);
  Term lit(std::int64_t v);
  Term lit(double v);
  Term lit(bool v);
  Term fn(std::string_view name, std::vector<Term> args = {});

  const Symbol* as_variable(const Term& t);
  std::optional<Value> to_value(const Term& t);
  Term to_term(const Value& v);

  // ---------------------------------------------------------- calculations

  struct Condition;
  struct Calculation;

  enum class ArithOp { Add, Sub, Mul, Div, Uniform, Gaussian };
  enum class AggOp { Sum, Product };

  struct BinOp
  {
    ArithOp op;
    Box<Calculation> lhs;
    Box<Calculation> rhs;
    friend bool operator==(const BinOp&, const BinOp&) = default;
  };

  struct Aggregate
  {
    AggOp op;
    Symbol var;
    Box<Condition> constraint;
    Box<Calculation> body;
    friend bool operator==(const Aggregate&, const Aggregate&) = default;
  };

  struct IfCalc
  {
    Box<Condition> cond;
    Box<Calculation> then_calc;
    Box<Calculation> else_calc;
    friend bool operator==(const IfCalc&, const IfCalc&) = default;
  };

  struct Calculation
  {
    std::variant<Term, BinOp, Aggregate, IfCalc> node;

    Calculation() : node(Term{}) {}
    Calculation(Term t) : node(std::move(t)) {}
    Calculation(BinOp b) : node(std::move(b)) {}
    Calculation(Aggregate a) : node(std::move(a)) {}
    Calculation(IfCalc i) : node(std::move(i)) {}

    friend bool operator==(const Calculation&, const Calculation&) = default;
  };

  // ------------------------------------------------------------ conditions

  enum class CompareOp { Eq, Ne, Lt, Gt, Le, Ge };
  enum class BoolOp { And, Or };

  struct Compare
  {
    CompareOp op;
    Calculation lhs;
    Calculation rhs;
    friend bool operator==(const Compare&, const Compare&) = default;
  };

  struct BoolCond
  {
    BoolOp op;
    std::vector<Condition> operands;
    friend bool operator==(const BoolCond&, const BoolCond&);
  };

  struct NotCond
  {
    Box<Condition> operand;
    friend bool operator==(const NotCond&, const NotCond&) = default;
  };

  struct Forall
  {
    std::vector<Symbol> vars;
    Box<Condition> constraint;
    Box<Condition> requirement;
    friend bool operator==(const Forall&, const Forall&) = default;
  };

  struct Condition
  {
    std::variant<Term, Compare, BoolCond, NotCond, Forall> node;

    Condition() : node(Term{}) {}
    Condition(Term t) : node(std::move(t)) {}
    Condition(Compare c) : node(std::move(c)) {}
    Condition(BoolCond b) : node(std::move(b)) {}
    Condition(NotCond n) : node(std::move(n)) {}
    Condition(Forall f) : node(std::move(f)) {}

    friend bool operator==(const Condition&, const Condition&) = default;
  };

  // ------------------------------------------------------ domain elements

  struct TypedVar
  {
    Symbol var;
    Symbol type;
    friend bool operator==(const TypedVar&, const TypedVar&) = default;
  };

  using TypedList = std::vector<TypedVar>;

  const Symbol* type_of_var(const TypedList& list, const Symbol& v);

  struct FunctionDecl
  {
    Symbol name;
    TypedList args;
    Symbol value_type;
    friend bool operator==(const FunctionDecl&, const FunctionDecl&) = default;
  };

  enum class Modification { Set, Increase, Decrease, Create };
  enum class Direction { Increase, Decrease };

  // Arguments are positional; effect_argument() maps them onto the
  // declared function's argument variables.
  struct Effect
  {
    Symbol target;
    std::vector<Term> args;
    Modification modification = Modification::Set;
    Term value;
    double probability = 1.0;
    friend bool operator==(const Effect&, const Effect&) = default;
  };

  struct ContinuousChange
  {
    Symbol target;
    std::vector<Term> args;
    Direction direction = Direction::Increase;
    Calculation derivative;
    friend bool operator==(const ContinuousChange&, const ContinuousChange&) = default;
  };

  struct Axiom
  {
    Symbol name;
    TypedList args;
    Condition antecedent;
    friend bool operator==(const Axiom&, const Axiom&) = default;
  };

  struct ActionModel
  {
    Symbol name;
    Term performer;
    TypedList parameters;
    std::vector<Condition> preconditions;
    std::vector<Effect> effects;
    friend bool operator==(const ActionModel&, const ActionModel&) = default;
  };

  struct EventModel
  {
    Symbol name;
    TypedList qualities;
    double probability = 1.0;
    double frequency = 0.0;
    std::vector<Condition> triggers;
    std::vector<Effect> effects;
    friend bool operator==(const EventModel&, const EventModel&) = default;
  };

  struct ProcessModel
  {
    Symbol name;
    TypedList qualities;
    std::vector<Condition> conditions;
    std::vector<ContinuousChange> changes;
    friend bool operator==(const ProcessModel&, const ProcessModel&) = default;
  };

  struct TypeParent
  {
    Symbol child;
    Symbol parent;
    friend bool operator==(const TypeParent&, const TypeParent&) = default;
  };

  struct Constant
  {
    Symbol name;
    Symbol type;
    friend bool operator==(const Constant&, const Constant&) = default;
  };

  // Collections keep insertion order and hold no duplicates.
  struct Domain
  {
    Symbol name{"UNNAMED"};
    std::vector<Symbol> types;
    std::vector<TypeParent> supertypes;
    std::vector<Constant> constants;
    std::vector<FunctionDecl> functions;
    std::vector<Axiom> axioms;
    std::vector<ActionModel> actions;
    std::vector<EventModel> events;
    std::vector<ProcessModel> processes;

    const FunctionDecl* function(const Symbol& n) const;
    const ActionModel* action(const Symbol& n) const;
    const EventModel* event(const Symbol& n) const;
    const ProcessModel* process(const Symbol& n) const;
    const Constant* constant(const Symbol& n) const;
    bool has_type(const Symbol& t) const;

    friend bool operator==(const Domain&, const Domain&) = default;
  };

  struct GroundFluent
  {
    Symbol function;
    std::vector<Value> args;
    Value value;
    friend bool operator==(const GroundFluent&, const GroundFluent&) = default;
  };

  // Term bound to declared argument v of the effect's function, if any.
  const Term* effect_argument(const Effect& e, const FunctionDecl& f, const Symbol& v);

  template <class T>
  bool insert_unique(std::vector<T>& items, T item)
  {
    for (const auto& x : items)
      if (x == item)
        return false;
    items.push_back(std::move(item));
    return true;
  }

  template <class T>
  bool erase_equal(std::vector<T>& items, const T& item)
  {
    auto before = items.size();
    std::erase(items, item);
    return items.size() != before;
  }

}  // namespace tsal
