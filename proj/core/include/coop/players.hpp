#pragma once

#include <utility>
#include <vector>

#include "coop/game.hpp"

namespace coop {

/// v(S ∪ i) = v(S) for every S ⊆ N∖{i}.
bool is_null(const Game& v, PlayerId i);
/// v(S ∪ i) = 0 for every S ⊆ N∖{i}.
bool is_nullifying(const Game& v, PlayerId i);

/// Null players by the marginal-contribution definition, increasing order.
std::vector<PlayerId> null_players(const Game& v);
/// Null players read off the dividends: λ_T = 0 for every T ∋ i.
std::vector<PlayerId> null_players_by_dividends(const Game& v);
std::vector<PlayerId> nullifying_players(const Game& v);

/// v(S ∪ i) = v(S ∪ j) for every S ⊆ N∖{i,j}. Throws if i == j.
bool symmetric_pair(const Game& v, PlayerId i, PlayerId j);
/// Every symmetric pair (i, j) with i < j.
std::vector<std::pair<PlayerId, PlayerId>> symmetric_pairs(const Game& v);

}  // namespace coop
