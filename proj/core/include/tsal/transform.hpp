#pragma once

#include "tsal/ast.hpp"
#include "tsal/diagnostic.hpp"
#include "tsal/scenario.hpp"
#include "tsal/transformation.hpp"

namespace tsal
{

  // A domain together with its scenario generator.
  struct Environment
  {
    Domain domain;
    ScenarioGenerator sg;

    friend bool operator==(const Environment&, const Environment&) = default;
  };

  // Edits naming an absent host are no-ops. Throws tsal::Error when a
  // required argument is missing or has the wrong shape.
  Environment apply(const Transformation& t, const Domain& d, const ScenarioGenerator& sg);
  Environment apply(const Transformation& t, const Environment& env);

  // Left fold of apply.
  Environment apply_sequence(const TransformationSequence& ts, const Domain& d, const ScenarioGenerator& sg);

  // Applies ts step by step and reports a TX-NOOP warning for each step
  // that leaves the environment unchanged.
  Environment apply_sequence(const TransformationSequence& ts, const Domain& d, const ScenarioGenerator& sg,
                             Diagnostics& warnings);

}  // namespace tsal
