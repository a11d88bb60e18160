#pragma once

#include <cstdint>
#include <random>
#include <span>

#include "coop/game.hpp"

namespace coop {

/// splitmix64 finalizer; derives independent per-trial seeds from one seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

/// Scalars used for linearity instances: ±1, ±2, ±1/2, ±3/2.
std::span<const Rat> linearity_scalar_pool();

/// Seeded source of small exact rationals, players, permutations and games.
/// Sequences depend only on the seed (mt19937_64 output is fixed by the
/// standard; bounded draws are done here rather than through
/// implementation-defined distributions).
class GameSampler {
 public:
  explicit GameSampler(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t bound);
  /// Numerator in [−6, 6]; denominator 1 with probability 3/5, else 2 or 3.
  Rat worth();
  /// |worth()|
  Rat nonnegative_worth();
  Rat scalar();
  PlayerId player(int n);
  /// A player other than `other`; n ≥ 2.
  PlayerId player_other_than(int n, PlayerId other);
  Permutation permutation(int n);

  /// Independent worths on every nonempty coalition.
  Game game(int n);
  /// Worths on coalitions without i, copied onto S ∪ i so that i is null.
  Game null_extension(int n, PlayerId i);
  /// Zero on every coalition containing i, random elsewhere.
  Game nullifying_game(int n, PlayerId i);
  /// A mixture of generic, null-extended, nullifying, constant and sparse
  /// unanimity-combination games, so that branchy solutions are exercised.
  Game structured_game(int n);

 private:
  std::mt19937_64 engine_;
};

}  // namespace coop
