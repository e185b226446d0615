#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace tsal
{

  struct SourceSpan
  {
    std::string file;
    std::size_t start = 0;
    std::size_t end = 0;
    std::size_t line = 0;  // 0 means "no source position"
    std::size_t column = 0;
  };

  enum class Severity { Error, Warning };

  struct Diagnostic
  {
    Severity severity = Severity::Error;
    std::string code;
    std::string message;
    SourceSpan span;
  };

  using Diagnostics = std::vector<Diagnostic>;

  bool has_errors(const Diagnostics& ds);
  std::vector<std::string> error_codes(const Diagnostics& ds);

  // file:line:col: error[CODE]: message
  std::ostream& operator<<(std::ostream& os, const Diagnostic& d);

  // Runtime failure outside the diagnostic model: sampling, evaluation, I/O.
  class Error : public std::runtime_error
  {
  public:
    using std::runtime_error::runtime_error;
  };

  template <class T>
  struct Parsed
  {
    std::optional<T> value;
    Diagnostics diagnostics;

    bool ok() const { return value.has_value() && !has_errors(diagnostics); }
  };

  // Stable diagnostic codes.
  namespace code
  {
    // reader
    inline constexpr const char* SynUnbalanced = "SYN-UNBALANCED";
    inline constexpr const char* SynUnexpectedClose = "SYN-UNEXPECTED-CLOSE";
    inline constexpr const char* SynUnterminatedString = "SYN-UNTERMINATED-STRING";
    inline constexpr const char* SynDepth = "SYN-DEPTH";
    inline constexpr const char* SynBadNumber = "SYN-BAD-NUMBER";
    inline constexpr const char* SynExpectedList = "SYN-EXPECTED-LIST";
    inline constexpr const char* SynExpectedSymbol = "SYN-EXPECTED-SYMBOL";
    inline constexpr const char* SynUnknownKeyword = "SYN-UNKNOWN-KEYWORD";
    inline constexpr const char* SynUnknownHead = "SYN-UNKNOWN-HEAD";
    inline constexpr const char* SynMalformed = "SYN-MALFORMED";
    inline constexpr const char* SynTypedList = "SYN-TYPED-LIST";
    inline constexpr const char* SynDuplicate = "SYN-DUPLICATE";
    inline constexpr const char* SynMissingArg = "SYN-MISSING-ARG";
    inline constexpr const char* SynExtraArg = "SYN-EXTRA-ARG";

    // legality
    inline constexpr const char* LegTypeCycle = "LEG-TYPE-CYCLE";
    inline constexpr const char* LegUnknownSupertype = "LEG-UNKNOWN-SUPERTYPE";
    inline constexpr const char* LegUnknownType = "LEG-UNKNOWN-TYPE";
    inline constexpr const char* LegDuplicate = "LEG-DUPLICATE";
    inline constexpr const char* LegUnknownFunction = "LEG-UNKNOWN-FUNCTION";
    inline constexpr const char* LegUnknownSymbol = "LEG-UNKNOWN-SYMBOL";
    inline constexpr const char* LegArity = "LEG-ARITY";
    inline constexpr const char* LegArgType = "LEG-ARG-TYPE";
    inline constexpr const char* LegConditionType = "LEG-CONDITION-TYPE";
    inline constexpr const char* LegCompareType = "LEG-COMPARE-TYPE";
    inline constexpr const char* LegCalcType = "LEG-CALC-TYPE";
    inline constexpr const char* LegUnboundVar = "LEG-UNBOUND-VAR";
    inline constexpr const char* LegForallRebind = "LEG-FORALL-REBIND";
    inline constexpr const char* LegAxiomType = "LEG-AXIOM-TYPE";
    inline constexpr const char* LegEffectType = "LEG-EFFECT-TYPE";
    inline constexpr const char* LegEffectMod = "LEG-EFFECT-MOD";
    inline constexpr const char* LegChangeType = "LEG-CHANGE-TYPE";
    inline constexpr const char* LegDt = "LEG-DT";
    inline constexpr const char* LegProbability = "LEG-PROBABILITY";
    inline constexpr const char* LegEventRate = "LEG-EVENT-RATE";
    inline constexpr const char* LegPerformer = "LEG-PERFORMER";
    inline constexpr const char* LegFluent = "LEG-FLUENT";
    inline constexpr const char* LegDefaultFunction = "LEG-DEFAULT-FUNCTION";
    inline constexpr const char* LegDefaultType = "LEG-DEFAULT-TYPE";
    inline constexpr const char* LegMissingDefault = "LEG-MISSING-DEFAULT";
    inline constexpr const char* LegOgType = "LEG-OG-TYPE";
    inline constexpr const char* LegFgFunction = "LEG-FG-FUNCTION";
    inline constexpr const char* LegGeneratorRef = "LEG-GENERATOR-REF";
    inline constexpr const char* LegPerformance = "LEG-PERFORMANCE";
    inline constexpr const char* LegDrawDynamic = "LEG-DRAW-DYNAMIC";

    // apply
    inline constexpr const char* TxNoop = "TX-NOOP";
    inline constexpr const char* TxIllegalStep = "TX-ILLEGAL-STEP";

    // cli
    inline constexpr const char* Usage = "USAGE";
    inline constexpr const char* IoRead = "IO-READ";
    inline constexpr const char* IoWrite = "IO-WRITE";
    inline constexpr const char* Runtime = "RUNTIME";
  }

}  // namespace tsal
