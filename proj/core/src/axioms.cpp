#include "coop/axioms.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "coop/players.hpp"

namespace coop {

namespace {

constexpr std::array<std::string_view, 13> kNames = {
    "efficiency",
    "additivity",
    "linearity",
    "symmetry",
    "anonymity",
    "null_player_property",
    "coalitional_strategic_equivalence",
    "null_player_neutrality",
    "null_player_productive_environment",
    "weak_monotonicity",
    "nullifying_player_property",
    "coalitional_standard_equivalence",
    "nullifying_player_neutrality",
};

[[noreturn]] void reject(AxiomId axiom, const std::string& why) {
  throw std::invalid_argument(std::string(to_string(axiom)) + " instance: " + why);
}

// Marginal dominance of v over w for player i.
bool dominates_marginally(const Game& v, const Game& w, PlayerId i) {
  const std::uint32_t bit = i.bit();
  const auto a = v.worths();
  const auto b = w.worths();
  for (std::uint32_t m = 0; m < a.size(); ++m) {
    if (m & bit) continue;
    if (a[m | bit] - a[m] < b[m | bit] - b[m]) return false;
  }
  return true;
}

std::vector<Rat> one(Rat x) { return {std::move(x)}; }

}  // namespace

std::string_view to_string(AxiomId axiom) { return kNames[static_cast<std::size_t>(axiom)]; }

AxiomId parse_axiom(std::string_view tag) {
  const auto it = std::find(kNames.begin(), kNames.end(), tag);
  if (it == kNames.end()) throw std::invalid_argument("unknown axiom '" + std::string(tag) + "'");
  return static_cast<AxiomId>(it - kNames.begin());
}

std::vector<AxiomId> all_axioms() {
  std::vector<AxiomId> out;
  for (std::size_t k = 0; k < kNames.size(); ++k) out.push_back(static_cast<AxiomId>(k));
  return out;
}

AxiomShape shape_of(AxiomId axiom) {
  switch (axiom) {
    case AxiomId::efficiency:
      return {1, 0, 0, false};
    case AxiomId::additivity:
      return {2, 0, 0, false};
    case AxiomId::linearity:
      return {2, 0, 2, false};
    case AxiomId::symmetry:
      return {1, 2, 0, false};
    case AxiomId::anonymity:
      return {1, 1, 0, true};
    case AxiomId::null_player_property:
    case AxiomId::null_player_productive_environment:
    case AxiomId::nullifying_player_property:
      return {1, 1, 0, false};
    case AxiomId::coalitional_strategic_equivalence:
    case AxiomId::weak_monotonicity:
    case AxiomId::coalitional_standard_equivalence:
      return {2, 1, 0, false};
    case AxiomId::null_player_neutrality:
    case AxiomId::nullifying_player_neutrality:
      return {3, 1, 0, false};
  }
  throw std::invalid_argument("unknown axiom");
}

AxiomInstance AxiomInstance::make(AxiomId axiom, std::vector<Game> games, std::vector<PlayerId> players,
                                  std::vector<Rat> scalars, std::optional<Permutation> permutation) {
  const AxiomShape shape = shape_of(axiom);
  if (static_cast<int>(games.size()) != shape.games) reject(axiom, "expected " + std::to_string(shape.games) + " games");
  if (static_cast<int>(players.size()) != shape.players) {
    reject(axiom, "expected " + std::to_string(shape.players) + " players");
  }
  if (static_cast<int>(scalars.size()) != shape.scalars) {
    reject(axiom, "expected " + std::to_string(shape.scalars) + " scalars");
  }
  if (permutation.has_value() != shape.permutation) {
    reject(axiom, shape.permutation ? "missing permutation" : "unexpected permutation");
  }
  const int n = games.front().n();
  for (const Game& g : games) {
    if (g.n() != n) reject(axiom, "games have different player counts");
  }
  for (PlayerId p : players) {
    if (p.index() < 1 || p.index() > n) reject(axiom, "player " + std::to_string(p.index()) + " out of range");
  }
  if (permutation && permutation->size() != n) reject(axiom, "permutation size differs from player count");

  const auto grand = [&](int k) -> const Rat& { return games[k].grand_worth(); };
  switch (axiom) {
    case AxiomId::symmetry:
      if (players[0] == players[1]) reject(axiom, "players must differ");
      if (!symmetric_pair(games[0], players[0], players[1])) reject(axiom, "players are not symmetric");
      break;
    case AxiomId::null_player_property:
      if (!is_null(games[0], players[0])) reject(axiom, "player is not null");
      break;
    case AxiomId::null_player_productive_environment:
      if (!is_null(games[0], players[0])) reject(axiom, "player is not null");
      if (grand(0).sign() < 0) reject(axiom, "v(N) must be nonnegative");
      break;
    case AxiomId::coalitional_strategic_equivalence:
      if (!is_null(games[1], players[0])) reject(axiom, "player is not null in w");
      break;
    case AxiomId::null_player_neutrality:
      if (!is_null(games[1], players[0]) || !is_null(games[2], players[0])) {
        reject(axiom, "player must be null in w and u");
      }
      if (grand(1) != grand(2)) reject(axiom, "w(N) must equal u(N)");
      break;
    case AxiomId::weak_monotonicity:
      if (grand(0) < grand(1)) reject(axiom, "v(N) must be at least w(N)");
      if (!dominates_marginally(games[0], games[1], players[0])) {
        reject(axiom, "v must dominate w in the player's marginal contributions");
      }
      break;
    case AxiomId::nullifying_player_property:
      if (!is_nullifying(games[0], players[0])) reject(axiom, "player is not nullifying");
      break;
    case AxiomId::coalitional_standard_equivalence:
      if (!is_nullifying(games[1], players[0])) reject(axiom, "player is not nullifying in w");
      break;
    case AxiomId::nullifying_player_neutrality:
      if (!is_nullifying(games[1], players[0]) || !is_nullifying(games[2], players[0])) {
        reject(axiom, "player must be nullifying in w and u");
      }
      if (grand(1) != grand(2)) reject(axiom, "w(N) must equal u(N)");
      break;
    default:
      break;
  }

  AxiomInstance inst;
  inst.axiom_ = axiom;
  inst.games_ = std::move(games);
  inst.players_ = std::move(players);
  inst.scalars_ = std::move(scalars);
  inst.permutation_ = std::move(permutation);
  return inst;
}

bool Sides::holds() const {
  if (relation == Relation::equal) return lhs == rhs;
  if (lhs.size() != rhs.size()) return false;
  for (std::size_t k = 0; k < lhs.size(); ++k) {
    if (lhs[k] < rhs[k]) return false;
  }
  return true;
}

Sides evaluate_sides(AxiomId axiom, const SolutionSpec& solution, const AxiomInstance& instance) {
  if (instance.axiom() != axiom) {
    throw std::invalid_argument("instance was built for " + std::string(to_string(instance.axiom())) + ", not " +
                                std::string(to_string(axiom)));
  }
  const auto& g = instance.games();
  const auto phi = [&](const Game& v) { return evaluate(solution, v); };
  const auto values = [](const PayoffVector& p) { return std::vector<Rat>(p.values().begin(), p.values().end()); };

  switch (axiom) {
    case AxiomId::efficiency:
      return {one(phi(g[0]).sum()), one(g[0].grand_worth())};
    case AxiomId::additivity:
      return {values(phi(g[0] + g[1])), values(phi(g[0]) + phi(g[1]))};
    case AxiomId::linearity: {
      const Rat& a = instance.scalars()[0];
      const Rat& b = instance.scalars()[1];
      return {values(phi(linear_combine(a, g[0], b, g[1]))), values(a * phi(g[0]) + b * phi(g[1]))};
    }
    case AxiomId::symmetry: {
      const PayoffVector p = phi(g[0]);
      return {one(p[instance.players()[0]]), one(p[instance.players()[1]])};
    }
    case AxiomId::anonymity: {
      const Permutation& pi = *instance.permutation();
      const PlayerId i = instance.players()[0];
      return {one(phi(g[0])[i]), one(phi(permute_game(g[0], pi))[pi(i)])};
    }
    case AxiomId::null_player_property:
    case AxiomId::nullifying_player_property:
      return {one(phi(g[0])[instance.players()[0]]), one(Rat(0))};
    case AxiomId::null_player_productive_environment:
      return {one(phi(g[0])[instance.players()[0]]), one(Rat(0)), Relation::greater_equal};
    case AxiomId::coalitional_strategic_equivalence:
    case AxiomId::coalitional_standard_equivalence: {
      const PlayerId i = instance.players()[0];
      return {one(phi(g[0] + g[1])[i]), one(phi(g[0])[i])};
    }
    case AxiomId::null_player_neutrality:
    case AxiomId::nullifying_player_neutrality: {
      const PlayerId i = instance.players()[0];
      return {one(phi(g[0] + g[1])[i]), one(phi(g[0] + g[2])[i])};
    }
    case AxiomId::weak_monotonicity: {
      const PlayerId i = instance.players()[0];
      return {one(phi(g[0])[i]), one(phi(g[1])[i]), Relation::greater_equal};
    }
  }
  throw std::invalid_argument("unknown axiom");
}

bool instance_holds(AxiomId axiom, const SolutionSpec& solution, const AxiomInstance& instance) {
  return evaluate_sides(axiom, solution, instance).holds();
}

}  // namespace coop
