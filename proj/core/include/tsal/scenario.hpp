#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "tsal/ast.hpp"

namespace tsal
{

  struct GeneratorExpr;
  using GenBox = Box<GeneratorExpr>;

  struct ObjectList
  {
    std::int64_t count = 0;
    std::string prefix;
    friend bool operator==(const ObjectList&, const ObjectList&) = default;
  };

  // Real draw from [min, max).
  struct UniformDist
  {
    double min = 0, max = 1;
    friend bool operator==(const UniformDist&, const UniformDist&) = default;
  };

  // Integer draw from [min, max].
  struct UniformInt
  {
    std::int64_t min = 0, max = 0;
    friend bool operator==(const UniformInt&, const UniformInt&) = default;
  };

  struct GaussianDist
  {
    double mean = 0, stdev = 1;
    friend bool operator==(const GaussianDist&, const GaussianDist&) = default;
  };

  // One tuple with fields X1..Xn.
  struct NDimGaussian
  {
    std::vector<double> means, stdevs;
    friend bool operator==(const NDimGaussian&, const NDimGaussian&) = default;
  };

  struct Bernoulli
  {
    double p = 0.5;
    friend bool operator==(const Bernoulli&, const Bernoulli&) = default;
  };

  struct IntegerSequence
  {
    std::int64_t min = 0, max = 0;
    friend bool operator==(const IntegerSequence&, const IntegerSequence&) = default;
  };

  struct DrawFromObjectSet
  {
    Symbol name;
    friend bool operator==(const DrawFromObjectSet&, const DrawFromObjectSet&) = default;
  };

  struct DrawAllFromObjectSet
  {
    Symbol name;
    friend bool operator==(const DrawAllFromObjectSet&, const DrawAllFromObjectSet&) = default;
  };

  struct ConstantGen
  {
    Value value;
    friend bool operator==(const ConstantGen&, const ConstantGen&) = default;
  };

  struct NDraws
  {
    GenBox sub;
    std::int64_t n = 0;
    friend bool operator==(const NDraws&, const NDraws&) = default;
  };

  struct DrawTuple
  {
    std::vector<GeneratorExpr> subs;
    std::vector<Symbol> names;
    friend bool operator==(const DrawTuple&, const DrawTuple&);
  };

  struct Lambda
  {
    std::vector<Symbol> params;
    Condition body;
    friend bool operator==(const Lambda&, const Lambda&) = default;
  };

  struct FilterGen
  {
    GenBox sub;
    Lambda predicate;
    friend bool operator==(const FilterGen&, const FilterGen&) = default;
  };

  struct NewSet
  {
    GenBox sub;
    friend bool operator==(const NewSet&, const NewSet&) = default;
  };

  struct AllPermutations
  {
    std::vector<GeneratorExpr> args;
    GenBox value;
    friend bool operator==(const AllPermutations&, const AllPermutations&);
  };

  struct NFluentDraws
  {
    std::vector<GeneratorExpr> args;
    GenBox value;
    std::int64_t n = 0;
    friend bool operator==(const NFluentDraws&, const NFluentDraws&);
  };

  struct CombineFunctions
  {
    std::vector<GeneratorExpr> subs;
    friend bool operator==(const CombineFunctions&, const CombineFunctions&);
  };

  // GEN.FIELD: the named field of every tuple the generator yields.
  struct FieldRef
  {
    Symbol gen;
    Symbol field;
    friend bool operator==(const FieldRef&, const FieldRef&) = default;
  };

  // A value generator, object generator or type, resolved in that order.
  struct GenRef
  {
    Symbol name;
    friend bool operator==(const GenRef&, const GenRef&) = default;
  };

  // Elements of a not present in b, order kept.
  struct Difference
  {
    GenBox a;
    GenBox b;
    friend bool operator==(const Difference&, const Difference&) = default;
  };

  struct ValueList
  {
    std::vector<Value> values;
    friend bool operator==(const ValueList&, const ValueList&) = default;
  };

  struct GeneratorExpr
  {
    std::variant<ObjectList, UniformDist, UniformInt, GaussianDist, NDimGaussian, Bernoulli,
                 IntegerSequence, DrawFromObjectSet, DrawAllFromObjectSet, ConstantGen, NDraws,
                 DrawTuple, FilterGen, NewSet, AllPermutations, NFluentDraws, CombineFunctions,
                 FieldRef, GenRef, Difference, ValueList>
      node;

    friend bool operator==(const GeneratorExpr&, const GeneratorExpr&) = default;
  };

  struct ObjectGenerator
  {
    Symbol name;
    Symbol type;
    GeneratorExpr draw;
    friend bool operator==(const ObjectGenerator&, const ObjectGenerator&) = default;
  };

  struct ValueGenerator
  {
    Symbol name;
    GeneratorExpr draw;
    friend bool operator==(const ValueGenerator&, const ValueGenerator&) = default;
  };

  struct FluentGenerator
  {
    Symbol function;
    GeneratorExpr draw;
    friend bool operator==(const FluentGenerator&, const FluentGenerator&) = default;
  };

  struct DefaultValue
  {
    Symbol function;
    Value value;
    friend bool operator==(const DefaultValue&, const DefaultValue&) = default;
  };

  struct ScenarioGenerator
  {
    std::vector<GroundFluent> fluents;
    std::vector<DefaultValue> defaults;
    std::vector<ObjectGenerator> object_generators;
    std::vector<ValueGenerator> value_generators;
    std::vector<FluentGenerator> fluent_generators;
    std::optional<Calculation> performance;

    const Value* default_for(const Symbol& fn) const;
    const ObjectGenerator* object_generator(const Symbol& n) const;
    const ValueGenerator* value_generator(const Symbol& n) const;
    const FluentGenerator* fluent_generator(const Symbol& fn) const;

    friend bool operator==(const ScenarioGenerator&, const ScenarioGenerator&) = default;
  };

  // PREFIX1, PREFIX2, ... (prefix upper-cased), skipping names in `taken`.
  // Produced names are added to `taken`.
  std::vector<Symbol> gensym_names(std::string_view prefix, std::int64_t count, std::set<Symbol>& taken);

}  // namespace tsal
