#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coop/game.hpp"

namespace coop {

enum class SolutionKind {
  shapley,
  equal_division,
  egalitarian,
  equal_surplus_division,
  phi1,
  phi2,
  zero,
  asym_first_player,
  max_v1,
  vi_plus_a,
};

/// A catalog entry together with its parameter (α for egalitarian, a for
/// vi_plus_a; unused otherwise).
class SolutionSpec {
 public:
  static SolutionSpec shapley() { return SolutionSpec(SolutionKind::shapley); }
  static SolutionSpec equal_division() { return SolutionSpec(SolutionKind::equal_division); }
  static SolutionSpec egalitarian(Rat alpha) { return SolutionSpec(SolutionKind::egalitarian, std::move(alpha)); }
  static SolutionSpec equal_surplus_division() { return SolutionSpec(SolutionKind::equal_surplus_division); }
  static SolutionSpec phi1() { return SolutionSpec(SolutionKind::phi1); }
  static SolutionSpec phi2() { return SolutionSpec(SolutionKind::phi2); }
  static SolutionSpec zero() { return SolutionSpec(SolutionKind::zero); }
  static SolutionSpec asym_first_player() { return SolutionSpec(SolutionKind::asym_first_player); }
  static SolutionSpec max_v1() { return SolutionSpec(SolutionKind::max_v1); }
  /// Throws std::invalid_argument when a = 0.
  static SolutionSpec vi_plus_a(Rat a = 1);

  /// Looks up a catalog id. egalitarian requires `alpha`; `a` defaults to 1.
  /// Supplying a parameter the id does not take is an error.
  static SolutionSpec parse(std::string_view id, std::optional<Rat> alpha = {}, std::optional<Rat> a = {});

  SolutionKind kind() const { return kind_; }
  const Rat& parameter() const { return param_; }
  std::string_view id() const;
  /// id plus parameter, e.g. "egalitarian(1/2)".
  std::string name() const;

  friend bool operator==(const SolutionSpec&, const SolutionSpec&) = default;

 private:
  explicit SolutionSpec(SolutionKind kind, Rat param = 0) : kind_(kind), param_(std::move(param)) {}

  SolutionKind kind_;
  Rat param_;
};

std::vector<std::string_view> solution_ids();

/// Every catalog member, with egalitarian at α = 1/2 and α = −1 and vi_plus_a at a = 1.
std::vector<SolutionSpec> solution_catalog();

/// Weighted marginal contributions, weights (s−1)!(n−s)!/n!.
PayoffVector shapley(const Game& v);
/// Σ_{T∋i} λ_T / |T| over the Harsanyi dividends.
PayoffVector shapley_by_dividends(const Game& v);
/// Averages marginal contributions over all n! arrival orders. n ≤ 8.
PayoffVector shapley_oracle(const Game& v);
inline constexpr int kShapleyOracleMaxPlayers = 8;

PayoffVector equal_division(const Game& v);
/// α·ED + (1−α)·Sh, for any rational α.
PayoffVector egalitarian_shapley(const Rat& alpha, const Game& v);
/// v(i) + (v(N) − Σ_j v(j)) / n
PayoffVector equal_surplus_division(const Game& v);
/// Proportional to singleton worths when they do not sum to zero; otherwise
/// null players get 0 and the rest split v(N) equally.
PayoffVector phi1(const Game& v);
/// Nullifying players get 0 and the rest split v(N) when any exist; equal
/// division on games constant over nonempty coalitions; Shapley otherwise.
PayoffVector phi2(const Game& v);
PayoffVector zero_solution(const Game& v);
/// (0, v(N)/(n−1), …, v(N)/(n−1)). n ≥ 2.
PayoffVector asym_first_player(const Game& v);
/// max{v(1), 0} for every player.
PayoffVector max_v1(const Game& v);
PayoffVector vi_plus_a(const Rat& a, const Game& v);

PayoffVector evaluate(const SolutionSpec& spec, const Game& v);

}  // namespace coop
