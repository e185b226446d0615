#include "tsal/diagnostic.hpp"

#include <algorithm>

namespace tsal
{

  bool has_errors(const Diagnostics& ds)
  {
    return std::any_of(ds.begin(), ds.end(),
                       [](const Diagnostic& d) { return d.severity == Severity::Error; });
  }

  std::vector<std::string> error_codes(const Diagnostics& ds)
  {
    std::vector<std::string> out;
    for (const auto& d : ds)
      if (d.severity == Severity::Error)
        out.push_back(d.code);
    return out;
  }

  std::ostream& operator<<(std::ostream& os, const Diagnostic& d)
  {
    if (!d.span.file.empty())
      os << d.span.file << ':';
    if (d.span.line > 0)
      os << d.span.line << ':' << d.span.column << ':';
    if (!d.span.file.empty() || d.span.line > 0)
      os << ' ';
    os << (d.severity == Severity::Error ? "error" : "warning") << '[' << d.code << "]: " << d.message;
    return os;
  }

}  // namespace tsal
