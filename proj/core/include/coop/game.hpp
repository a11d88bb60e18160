#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "coop/coalition.hpp"
#include "coop/rational.hpp"

namespace coop {

namespace detail {
struct GameAccess;
}

/// TU-game: a worth for every one of the 2^n coalitions, with v(∅) = 0.
/// Immutable once built.
class Game {
 public:
  static Game zero(int n);

  /// `worths[mask]` is the worth of the coalition with that bitmask. Throws
  /// std::invalid_argument on a wrong length or a nonzero worth for ∅.
  static Game from_worths(int n, std::vector<Rat> worths);

  int n() const { return n_; }
  Coalition grand() const { return Coalition::grand(n_); }
  std::size_t coalition_count() const { return worth_.size(); }

  const Rat& worth(Coalition s) const { return worth_[s.mask()]; }
  const Rat& operator()(Coalition s) const { return worth_[s.mask()]; }
  const Rat& grand_worth() const { return worth_.back(); }
  const Rat& singleton_worth(PlayerId i) const { return worth_[i.bit()]; }
  std::span<const Rat> worths() const { return worth_; }

  bool is_zero() const;

  friend bool operator==(const Game&, const Game&) = default;

 private:
  Game(int n, std::vector<Rat> worths) : n_(n), worth_(std::move(worths)) {}

  int n_ = 0;
  std::vector<Rat> worth_;

  friend struct detail::GameAccess;
};

/// One exact payoff per player.
class PayoffVector {
 public:
  PayoffVector() = default;
  explicit PayoffVector(std::vector<Rat> values) : values_(std::move(values)) {}
  static PayoffVector zeros(int n) { return PayoffVector(std::vector<Rat>(n)); }

  int size() const { return static_cast<int>(values_.size()); }
  const Rat& operator[](PlayerId i) const { return values_[i.index() - 1]; }
  Rat& operator[](PlayerId i) { return values_[i.index() - 1]; }
  std::span<const Rat> values() const { return values_; }
  Rat sum() const;

  /// "(1/2, 1/2, 0)"
  std::string str() const;

  friend bool operator==(const PayoffVector&, const PayoffVector&) = default;
  friend PayoffVector operator+(const PayoffVector& a, const PayoffVector& b);
  friend PayoffVector operator-(const PayoffVector& a, const PayoffVector& b);
  friend PayoffVector operator*(const Rat& k, const PayoffVector& a);

 private:
  std::vector<Rat> values_;
};

/// Builds a game from sparse (coalition, worth) pairs; unlisted coalitions are 0.
/// Throws std::invalid_argument on a duplicate coalition, a coalition outside
/// 2^n, or a nonzero worth for ∅.
Game make_game(int n, std::span<const std::pair<Coalition, Rat>> assignments);
Game make_game(int n, std::initializer_list<std::pair<Coalition, Rat>> assignments);

/// a·v + b·w, coalition by coalition.
Game linear_combine(const Rat& a, const Game& v, const Rat& b, const Game& w);

Game operator+(const Game& v, const Game& w);
Game operator-(const Game& v, const Game& w);
Game operator*(const Rat& a, const Game& v);

/// u_T(S) = 1 iff T ⊆ S. T must be nonempty.
Game unanimity_game(int n, Coalition t);

/// e_T(S) = 1 iff S = T. T must be nonempty.
Game canonical_game(int n, Coalition t);

/// (πv)(π(S)) = v(S).
Game permute_game(const Game& v, const Permutation& pi);

void check_player(const Game& v, PlayerId i);

namespace detail {

// Write access for hot loops that reuse a scratch game buffer.
struct GameAccess {
  static std::vector<Rat>& worths(Game& g) { return g.worth_; }
  static Game make(int n, std::vector<Rat> worths) { return Game(n, std::move(worths)); }
};

// out := a + b; out must already have the same shape.
void add_into(Game& out, const Game& a, const Game& b);

}  // namespace detail

}  // namespace coop
