#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tsal/ast.hpp"
#include "tsal/diagnostic.hpp"
#include "tsal/scenario.hpp"
#include "tsal/sexpr.hpp"
#include "tsal/transformation.hpp"

namespace tsal
{

  // ------------------------------------------------------------- parsing

  Parsed<Domain> parse_domain(std::string_view text, const std::string& file = {});
  Parsed<ScenarioGenerator> parse_scenario_generator(std::string_view text, const std::string& file = {});
  Parsed<TransformationSequence> parse_transformation_script(std::string_view text,
                                                             const std::string& file = {});

  // Single-expression entry points, mostly for tests and tools.
  Parsed<Term> parse_term(std::string_view text);
  Parsed<Calculation> parse_calculation(std::string_view text);
  Parsed<Condition> parse_condition(std::string_view text);
  Parsed<Effect> parse_effect(std::string_view text);
  Parsed<ContinuousChange> parse_change(std::string_view text);
  Parsed<FunctionDecl> parse_function_decl(std::string_view text);
  Parsed<GeneratorExpr> parse_generator(std::string_view text);

  // Converters over already-read s-expressions. Diagnostics are appended.
  namespace sx
  {
    std::optional<Term> term(const SExpr& e, Diagnostics& ds);
    std::optional<Calculation> calculation(const SExpr& e, Diagnostics& ds);
    std::optional<Condition> condition(const SExpr& e, Diagnostics& ds);
    std::optional<Value> value(const SExpr& e, Diagnostics& ds);
    std::optional<GeneratorExpr> generator(const SExpr& e, Diagnostics& ds);
    std::optional<Transformation> transformation(const SExpr& e, Diagnostics& ds,
                                                 std::vector<Transformation>* expansion = nullptr);
  }

  // ------------------------------------------------------------ printing

  std::string to_string(const Value& v);
  std::string to_string(const Term& t);
  std::string to_string(const Calculation& c);
  std::string to_string(const Condition& c);
  std::string to_string(const Effect& e);
  std::string to_string(const ContinuousChange& c);
  std::string to_string(const FunctionDecl& f);
  std::string to_string(const Axiom& a);
  std::string to_string(const GroundFluent& gf);
  std::string to_string(const GeneratorExpr& g);
  std::string to_string(const Transformation& t);

  std::string print_domain(const Domain& d);
  std::string print_scenario_generator(const ScenarioGenerator& sg);
  std::string print_transformation_script(const TransformationSequence& ts);

}  // namespace tsal
