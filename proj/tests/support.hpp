#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "tsal/reader.hpp"
#include "tsal/transform.hpp"

namespace tsal::test
{

  inline std::string fixture_path(const std::string& rel) { return std::string(TSAL_FIXTURE_DIR) + "/" + rel; }

  inline std::string read_fixture(const std::string& rel)
  {
    std::ifstream in(fixture_path(rel), std::ios::binary);
    if (!in)
      throw std::runtime_error("missing fixture " + rel);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  template <class T>
  T must(Parsed<T> p, const std::string& what)
  {
    if (!p.ok())
    {
      std::ostringstream msg;
      msg << what << " failed to parse:";
      for (const auto& d : p.diagnostics)
        msg << "\n  " << d;
      throw std::runtime_error(msg.str());
    }
    return std::move(*p.value);
  }

  inline Domain load_domain(const std::string& rel) { return must(parse_domain(read_fixture(rel), rel), rel); }

  inline ScenarioGenerator load_generator(const std::string& rel)
  {
    return must(parse_scenario_generator(read_fixture(rel), rel), rel);
  }

  inline TransformationSequence load_script(const std::string& rel)
  {
    return must(parse_transformation_script(read_fixture(rel), rel), rel);
  }

  inline Environment cartpole()
  {
    return {load_domain("cartpole/cartpole.tsal"), load_generator("cartpole/cartpole.tsg")};
  }

  inline Environment mudworld()
  {
    return {load_domain("mudworld/mudworld.tsal"), load_generator("mudworld/mudworld.tsg")};
  }

  // Replaces the single occurrence of `from`; throws unless there is exactly one.
  inline std::string replace_once(std::string text, const std::string& from, const std::string& to)
  {
    auto at = text.find(from);
    if (at == std::string::npos || text.find(from, at + 1) != std::string::npos)
      throw std::runtime_error("mutation anchor not unique: " + from);
    return text.replace(at, from.size(), to);
  }

}  // namespace tsal::test
