#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "tsal/ast.hpp"
#include "tsal/scenario.hpp"

namespace tsal
{

  enum class TxKind
  {
    // R-transformations
    AddType,
    AddTypeParent,
    RemoveTypeParent,
    AddConstant,
    AddFunction,
    AddAxiom,
    RemoveType,
    RemoveConstant,
    RemoveFunction,
    RemoveAxiom,
    AddAction,
    AddPrecondition,
    AddActionEffect,
    RemoveAction,
    RemovePrecondition,
    RemoveActionEffect,
    AddEvent,
    ChangeFrequency,
    ChangeProbability,
    AddTrigger,
    AddEventEffect,
    RemoveEvent,
    RemoveTrigger,
    RemoveEventEffect,
    AddProcess,
    AddProcessCondition,
    AddProcessChange,
    RemoveProcess,
    RemoveProcessCondition,
    RemoveProcessChange,
    // T-transformations
    AddFluentValue,
    AddDefaultValue,
    AddObjectGenerator,
    AddValueGenerator,
    AddFluentGenerator,
    ReplacePerformanceCalculation,
  };

  inline constexpr std::size_t tx_kind_count = 36;

  std::string_view head_name(TxKind k);
  std::optional<TxKind> kind_from_head(std::string_view head);  // accepts aliases
  bool is_t_transformation(TxKind k);

  enum class ArgShape
  {
    Name,         // Symbol
    Number,       // double
    SymbolList,   // std::vector<Symbol>
    ValueList,    // std::vector<Value>
    Value,        // Value
    Term,         // Term
    Function,     // FunctionDecl
    Axiom,        // Axiom
    Condition,    // Condition
    Effect,       // Effect
    Change,       // ContinuousChange
    Calculation,  // Calculation
    Generator,    // GeneratorExpr
  };

  struct ArgSpec
  {
    std::string_view name;
    ArgShape shape;
  };

  // Required arguments of a kind, in canonical print order.
  const std::vector<ArgSpec>& arg_specs(TxKind k);

  using TxArg = std::variant<Symbol, double, std::vector<Symbol>, std::vector<Value>, Value, Term,
                             FunctionDecl, Axiom, Condition, Effect, ContinuousChange, Calculation,
                             GeneratorExpr>;

  struct Transformation
  {
    TxKind kind;
    std::vector<std::pair<Symbol, TxArg>> args;

    const TxArg* arg(std::string_view name) const;

    template <class T>
    const T* get(std::string_view name) const
    {
      auto a = arg(name);
      return a ? std::get_if<T>(a) : nullptr;
    }

    friend bool operator==(const Transformation&, const Transformation&) = default;
  };

  using TransformationSequence = std::vector<Transformation>;

}  // namespace tsal
