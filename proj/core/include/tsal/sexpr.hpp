#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tsal/diagnostic.hpp"

namespace tsal
{

  inline constexpr std::size_t max_nesting_depth = 256;

  struct SExpr
  {
    enum class Kind { Symbol, Number, String, List };

    Kind kind = Kind::Symbol;
    std::string text;       // canonical text for atoms; upper case for symbols
    bool bracket = false;   // list written with [ ]
    std::vector<SExpr> items;
    SourceSpan span;

    bool is_symbol() const { return kind == Kind::Symbol; }
    bool is_symbol(std::string_view s) const { return kind == Kind::Symbol && text == s; }
    bool is_list() const { return kind == Kind::List; }
    bool is_keyword() const { return is_symbol() && !text.empty() && text.front() == ':'; }
  };

  // Reads every top-level form. On error the diagnostics are populated and
  // whatever forms were completed are still returned.
  Parsed<std::vector<SExpr>> read_sexprs(std::string_view text, const std::string& file = {});

}  // namespace tsal
