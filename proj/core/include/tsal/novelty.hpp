#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tsal/ast.hpp"
#include "tsal/scenario.hpp"
#include "tsal/transform.hpp"
#include "tsal/transformation.hpp"

namespace tsal
{

  enum class NoveltyLevel
  {
    Objects = 1,
    Agents,
    Actions,
    Relations,
    Interactions,
    Environments,
    Goals,
    Events,
  };

  inline constexpr std::size_t novelty_level_count = 8;

  std::string_view level_name(NoveltyLevel l);
  std::optional<NoveltyLevel> level_from_name(std::string_view name);  // case-insensitive
  NoveltyLevel level_at(std::size_t index);                            // 0-based

  struct LevelVerdict
  {
    bool holds = false;
    // Step indices satisfying the predicate, ascending.
    std::vector<std::size_t> steps;
    // Functions, actions, events, processes or types named by those steps.
    std::vector<Symbol> elements;

    friend bool operator==(const LevelVerdict&, const LevelVerdict&) = default;
  };

  struct NoveltyVerdict
  {
    std::array<LevelVerdict, novelty_level_count> levels;

    const LevelVerdict& operator[](NoveltyLevel l) const { return levels[static_cast<std::size_t>(l) - 1]; }
    LevelVerdict& operator[](NoveltyLevel l) { return levels[static_cast<std::size_t>(l) - 1]; }

    friend bool operator==(const NoveltyVerdict&, const NoveltyVerdict&) = default;
  };

  // ------------------------------------------------------------ helpers

  // fn occurs in an action precondition, event trigger or process condition
  // (directly or through axioms), or in the performance calculation.
  bool relevant_function(const Symbol& fn, const Domain& d, const ScenarioGenerator& sg);
  bool function_affects_axiom(const Symbol& fn, const Axiom& ax, const Domain& d);

  bool is_environmental(const FunctionDecl& f, const Domain& d);
  bool is_environmental(const EventModel& ev, const Domain& d);
  bool is_environmental(const ProcessModel& p, const Domain& d);

  // --------------------------------------------------------- classifier

  class NoveltyClassifier
  {
  public:
    // Throws tsal::Error when pov does not derive from AGENT in the
    // transformed domain.
    NoveltyClassifier(TransformationSequence ts, Domain d, ScenarioGenerator sg, Symbol pov);

    // Elements witnessing the level at step i, or nullopt when step i does
    // not satisfy it.
    std::optional<std::vector<Symbol>> witness_at(NoveltyLevel level, std::size_t i) const;

    LevelVerdict level(NoveltyLevel level) const;
    NoveltyVerdict classify() const;

    const Environment& transformed() const { return final_; }

  private:
    std::optional<std::vector<Symbol>> objects_or_agents(const Symbol& base, std::size_t i) const;
    std::optional<std::vector<Symbol>> actions(std::size_t i) const;
    std::optional<std::vector<Symbol>> relations(std::size_t i) const;
    std::optional<std::vector<Symbol>> interactions(std::size_t i) const;
    std::optional<std::vector<Symbol>> environments(std::size_t i) const;
    std::optional<std::vector<Symbol>> goals(std::size_t i) const;
    std::optional<std::vector<Symbol>> events(std::size_t i) const;

    TransformationSequence ts_;
    Domain base_;
    ScenarioGenerator base_sg_;
    Symbol pov_;
    // prefix_[i] is the environment before step i; prefix_.back() == final_.
    std::vector<Environment> prefix_;
    Environment final_;
  };

  NoveltyVerdict classify(const TransformationSequence& ts, const Domain& d, const ScenarioGenerator& sg,
                          const Symbol& pov);

  // One line per level: "OBJECTS true steps=0,3 elements=CART-POSITION".
  std::string to_string(const NoveltyVerdict& v);

}  // namespace tsal
