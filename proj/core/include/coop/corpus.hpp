#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "coop/axioms.hpp"

namespace coop {

/// Where a fact's value comes from: stated alongside the worth tables, or
/// computed here and cross-checked by an independent route.
enum class Source { stated, derived };
std::string_view to_string(Source s);

struct PlayerSetFact {
  enum class Kind { null, null_by_dividends, nullifying };
  std::string game;
  Kind kind;
  /// Each listed player must be in the set.
  std::vector<PlayerId> members;
};

/// Every listed game has grand worth `value`.
struct GrandWorthFact {
  std::vector<std::string> games;
  Rat value;
};

/// Harsanyi dividend of coalition `t`.
struct DividendFact {
  std::string game;
  Coalition t;
  Rat value;
};

/// φ_player of the sum of the named games.
struct PayoffFact {
  SolutionSpec solution;
  std::vector<std::string> sum_of;
  PlayerId player;
  Rat value;
};

/// Outcome of one axiom instance; for scalar axioms optionally the exact sides.
struct AxiomFact {
  SolutionSpec solution;
  AxiomInstance instance;
  bool holds;
  std::optional<std::pair<Rat, Rat>> sides;
};

using FactBody = std::variant<PlayerSetFact, GrandWorthFact, DividendFact, PayoffFact, AxiomFact>;

struct Fact {
  std::string claim;
  Source source;
  /// For derived values, how they were obtained.
  std::string note;
  FactBody body;
};

struct NamedGame {
  std::string name;
  Game game;
};

struct WitnessBundle {
  std::string id;
  std::string title;
  std::vector<NamedGame> games;
  std::vector<Fact> facts;

  /// Throws std::invalid_argument for an unknown name.
  const Game& game(std::string_view name) const;
};

/// "W1" … "W5".
std::vector<std::string> bundle_ids();
/// Throws std::invalid_argument for an unknown id.
const WitnessBundle& witness(std::string_view id);

struct FactOutcome {
  std::string bundle;
  std::size_t index = 0;
  std::string claim;
  bool passed = false;
  std::string detail;
};

struct RegressionReport {
  std::vector<FactOutcome> outcomes;

  bool all_passed() const;
  std::size_t failures() const;
};

FactOutcome check_fact(const WitnessBundle& bundle, std::size_t index);
RegressionReport run_all_witnesses();

/// Instances recorded for `axiom` in the named bundles (all when empty), in
/// bundle then fact order. Throws std::invalid_argument for an unknown id.
std::vector<AxiomInstance> witness_instances(AxiomId axiom, const std::vector<std::string>& bundle_ids);

}  // namespace coop
