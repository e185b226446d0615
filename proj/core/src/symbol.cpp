#include "tsal/symbol.hpp"

#include <cctype>

namespace tsal
{

  std::string to_upper(std::string_view text)
  {
    std::string out(text);
    for (auto& c : out)
      c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return out;
  }

  Symbol::Symbol(std::string_view text) : text_(to_upper(text)) {}

  std::ostream& operator<<(std::ostream& os, const Symbol& s)
  {
    return os << s.str();
  }

  namespace names
  {
    const Symbol REAL{"REAL"};
    const Symbol INTEGER{"INTEGER"};
    const Symbol BOOLEAN{"BOOLEAN"};
    const Symbol AGENT{"AGENT"};
    const Symbol OBJECT{"OBJECT"};
    const Symbol POSITION{"POSITION"};
    const Symbol DT{"DT"};
    const Symbol AG{"?AG"};
  }

  bool is_basic_type(const Symbol& t)
  {
    return t == names::REAL || t == names::INTEGER || t == names::BOOLEAN ||
      t == names::AGENT || t == names::OBJECT;
  }

  bool is_reserved_type(const Symbol& t)
  {
    return is_basic_type(t) || t == names::POSITION;
  }

}  // namespace tsal
