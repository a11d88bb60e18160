#pragma once

// Reference computations used only by tests. They share no arithmetic with the
// library: values go through GMP's mpq_class and are compared as strings.

#include <cstdint>
#include <string>
#include <vector>

#include "coop/game.hpp"

namespace coop::testing {

/// λ_T = Σ_{S⊆T} (−1)^{|T|−|S|} v(S), by direct summation.
std::string dividend_by_inclusion_exclusion(const Game& v, Coalition t);

/// Average marginal contribution over every arrival order (std::next_permutation).
std::vector<std::string> shapley_by_orders(const Game& v);

/// α·v(N)/n + (1−α)·Sh_i(v) with Sh from shapley_by_orders.
std::vector<std::string> egalitarian_by_orders(const std::string& alpha, const Game& v);

/// v(S ∪ i) == v(S) checked over all S by explicit subset enumeration.
std::vector<int> null_players_naive(const Game& v);

/// The index-th game of the exhaustive grid domain: coalition masks 1..2^n−1
/// are the base-|grid| digits of `index`, least significant first.
Game grid_game(const std::vector<Rat>& grid, int n, std::uint64_t index);

std::vector<std::string> strings(const PayoffVector& x);

}  // namespace coop::testing
