#pragma once

#include <compare>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace tsal
{

  // Case-insensitive identifier. The stored text is always upper case.
  class Symbol
  {
  public:
    Symbol() = default;
    explicit Symbol(std::string_view text);

    const std::string& str() const noexcept { return text_; }
    bool empty() const noexcept { return text_.empty(); }
    bool is_variable() const noexcept { return !text_.empty() && text_.front() == '?'; }

    friend bool operator==(const Symbol&, const Symbol&) = default;
    friend auto operator<=>(const Symbol&, const Symbol&) = default;

  private:
    std::string text_;
  };

  std::ostream& operator<<(std::ostream& os, const Symbol& s);

  std::string to_upper(std::string_view text);

  namespace names
  {
    extern const Symbol REAL;
    extern const Symbol INTEGER;
    extern const Symbol BOOLEAN;
    extern const Symbol AGENT;
    extern const Symbol OBJECT;
    extern const Symbol POSITION;
    extern const Symbol DT;
    extern const Symbol AG;  // ?AG
  }

  // REAL, INTEGER, BOOLEAN, AGENT, OBJECT (POSITION is reserved but not basic).
  bool is_basic_type(const Symbol& t);
  bool is_reserved_type(const Symbol& t);

}  // namespace tsal

template <>
struct std::hash<tsal::Symbol>
{
  std::size_t operator()(const tsal::Symbol& s) const noexcept
  {
    return std::hash<std::string>{}(s.str());
  }
};
