#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coop/game.hpp"
#include "coop/solutions.hpp"

namespace coop {

enum class AxiomId {
  efficiency,
  additivity,
  linearity,
  symmetry,
  anonymity,
  null_player_property,
  coalitional_strategic_equivalence,
  null_player_neutrality,
  null_player_productive_environment,
  weak_monotonicity,
  nullifying_player_property,
  coalitional_standard_equivalence,
  nullifying_player_neutrality,
};

std::string_view to_string(AxiomId axiom);
/// Throws std::invalid_argument for an unknown tag.
AxiomId parse_axiom(std::string_view tag);
std::vector<AxiomId> all_axioms();

/// How many games, players and scalars an instance of the axiom carries, and
/// whether it carries a permutation.
struct AxiomShape {
  int games;
  int players;
  int scalars;
  bool permutation;
};
AxiomShape shape_of(AxiomId axiom);

/// The quantified variables of one axiom check, validated against the axiom's
/// preconditions on construction.
///
/// Game order follows the axiom statement: (v), (v, w), (v, w, u). For weak
/// monotonicity the dominating game comes first. Symmetry carries (i, j);
/// every other player-bearing shape carries (i).
class AxiomInstance {
 public:
  /// Throws std::invalid_argument on a shape mismatch or a violated
  /// precondition (e.g. i not null in w for null player neutrality).
  static AxiomInstance make(AxiomId axiom, std::vector<Game> games, std::vector<PlayerId> players = {},
                            std::vector<Rat> scalars = {}, std::optional<Permutation> permutation = {});

  AxiomId axiom() const { return axiom_; }
  int n() const { return games_.front().n(); }
  const std::vector<Game>& games() const { return games_; }
  const std::vector<PlayerId>& players() const { return players_; }
  const std::vector<Rat>& scalars() const { return scalars_; }
  const std::optional<Permutation>& permutation() const { return permutation_; }

  friend bool operator==(const AxiomInstance&, const AxiomInstance&) = default;

 private:
  AxiomInstance() = default;

  AxiomId axiom_{};
  std::vector<Game> games_;
  std::vector<PlayerId> players_;
  std::vector<Rat> scalars_;
  std::optional<Permutation> permutation_;
};

enum class Relation { equal, greater_equal };

/// Both sides of an axiom's defining (in)equality. Scalar axioms use
/// one-element sides; additivity and linearity compare whole payoff vectors.
struct Sides {
  std::vector<Rat> lhs;
  std::vector<Rat> rhs;
  Relation relation = Relation::equal;

  bool holds() const;
};

Sides evaluate_sides(AxiomId axiom, const SolutionSpec& solution, const AxiomInstance& instance);

/// Exact evaluation of the axiom's predicate on one instance. Throws
/// std::invalid_argument when the instance belongs to another axiom.
bool instance_holds(AxiomId axiom, const SolutionSpec& solution, const AxiomInstance& instance);

/// Deterministic in (axiom, n, seed); the result always satisfies the
/// axiom's preconditions. Requires n ≥ 2.
AxiomInstance generate_instance(AxiomId axiom, int n, std::uint64_t seed);

}  // namespace coop
