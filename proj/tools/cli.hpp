#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tsal::cli
{

  namespace exit_code
  {
    inline constexpr int ok = 0;
    inline constexpr int io = 1;
    inline constexpr int diagnostics = 2;
    inline constexpr int illegal = 3;
    inline constexpr int usage = 64;
  }

  // Schema version stamped on every json-lines record.
  inline constexpr int jsonl_schema = 1;

  // args excludes the program name.
  int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tsal::cli
