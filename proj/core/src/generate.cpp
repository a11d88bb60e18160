#include <stdexcept>

#include "coop/axioms.hpp"
#include "coop/random.hpp"

namespace coop {

namespace {

// Overwrites the worth of N∖{i} and N with c; keeps i null in a null extension.
Game with_common_top(const Game& g, PlayerId i, const Rat& c) {
  std::vector<Rat> w(g.worths().begin(), g.worths().end());
  const std::uint32_t grand = g.grand().mask();
  w[grand] = c;
  w[grand & ~i.bit()] = c;
  return Game::from_worths(g.n(), std::move(w));
}

// v(S) := v'(S) + v'(τS) with τ the transposition of i and j.
Game symmetrize(const Game& g, PlayerId i, PlayerId j) {
  const Permutation tau = Permutation::transposition(g.n(), i, j);
  return g + permute_game(g, tau);
}

// g with g(S) ≥ 0 off i and g(S ∪ i) = g(S) + δ_S, δ_S ≥ 0.
Game nonnegative_increment(GameSampler& rng, int n, PlayerId i) {
  std::vector<Rat> w(std::size_t{1} << n);
  const std::uint32_t bit = i.bit();
  for (std::uint32_t m = 0; m < w.size(); ++m) {
    if (m & bit) continue;
    if (m != 0) w[m] = rng.nonnegative_worth();
    w[m | bit] = w[m] + rng.nonnegative_worth();
  }
  return Game::from_worths(n, std::move(w));
}

}  // namespace

AxiomInstance generate_instance(AxiomId axiom, int n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("instance generation needs at least two players");
  GameSampler rng(mix_seed(seed, static_cast<std::uint64_t>(axiom)));
  switch (axiom) {
    case AxiomId::efficiency:
      return AxiomInstance::make(axiom, {rng.game(n)});
    case AxiomId::additivity: {
      Game v = rng.game(n);
      return AxiomInstance::make(axiom, {std::move(v), rng.game(n)});
    }
    case AxiomId::linearity: {
      Game v = rng.game(n);
      Game w = rng.game(n);
      Rat a = rng.scalar();
      return AxiomInstance::make(axiom, {std::move(v), std::move(w)}, {}, {std::move(a), rng.scalar()});
    }
    case AxiomId::symmetry: {
      const PlayerId i = rng.player(n);
      const PlayerId j = rng.player_other_than(n, i);
      return AxiomInstance::make(axiom, {symmetrize(rng.game(n), i, j)}, {std::min(i, j), std::max(i, j)});
    }
    case AxiomId::anonymity: {
      Game v = rng.game(n);
      Permutation pi = rng.permutation(n);
      return AxiomInstance::make(axiom, {std::move(v)}, {rng.player(n)}, {}, std::move(pi));
    }
    case AxiomId::null_player_property: {
      const PlayerId i = rng.player(n);
      return AxiomInstance::make(axiom, {rng.null_extension(n, i)}, {i});
    }
    case AxiomId::null_player_productive_environment: {
      const PlayerId i = rng.player(n);
      Game v = rng.null_extension(n, i);
      if (v.grand_worth().sign() < 0) v = Rat(-1) * v;
      return AxiomInstance::make(axiom, {std::move(v)}, {i});
    }
    case AxiomId::coalitional_strategic_equivalence: {
      const PlayerId i = rng.player(n);
      Game v = rng.game(n);
      return AxiomInstance::make(axiom, {std::move(v), rng.null_extension(n, i)}, {i});
    }
    case AxiomId::null_player_neutrality: {
      const PlayerId i = rng.player(n);
      Game v = rng.game(n);
      Game w = rng.null_extension(n, i);
      Game u = rng.null_extension(n, i);
      const Rat c = rng.worth();
      return AxiomInstance::make(axiom, {std::move(v), with_common_top(w, i, c), with_common_top(u, i, c)}, {i});
    }
    case AxiomId::weak_monotonicity: {
      const PlayerId i = rng.player(n);
      Game w = rng.game(n);
      Game v = w + nonnegative_increment(rng, n, i);
      return AxiomInstance::make(axiom, {std::move(v), std::move(w)}, {i});
    }
    case AxiomId::nullifying_player_property: {
      const PlayerId i = rng.player(n);
      return AxiomInstance::make(axiom, {rng.nullifying_game(n, i)}, {i});
    }
    case AxiomId::coalitional_standard_equivalence: {
      const PlayerId i = rng.player(n);
      Game v = rng.game(n);
      return AxiomInstance::make(axiom, {std::move(v), rng.nullifying_game(n, i)}, {i});
    }
    case AxiomId::nullifying_player_neutrality: {
      const PlayerId i = rng.player(n);
      Game v = rng.game(n);
      Game w = rng.nullifying_game(n, i);
      return AxiomInstance::make(axiom, {std::move(v), std::move(w), rng.nullifying_game(n, i)}, {i});
    }
  }
  throw std::invalid_argument("unknown axiom");
}

}  // namespace coop
