#include <gtest/gtest.h>

#include "coop/players.hpp"
#include "coop/random.hpp"
#include "oracles.hpp"

namespace coop {
namespace {

Coalition C(std::initializer_list<int> ps) { return Coalition::of(ps); }

std::vector<int> ids(const std::vector<PlayerId>& ps) {
  std::vector<int> out;
  for (PlayerId p : ps) out.push_back(p.index());
  return out;
}

TEST(Players, NullPlayersOfTableGame) {
  const Game w = make_game(3, {{C({2}), 2}, {C({1, 2}), 2}, {C({2, 3}), 2}, {C({1, 2, 3}), 2}});
  EXPECT_EQ(ids(null_players(w)), (std::vector<int>{1, 3}));
  EXPECT_EQ(ids(null_players_by_dividends(w)), (std::vector<int>{1, 3}));
  EXPECT_TRUE(is_null(w, PlayerId(3)));
  EXPECT_FALSE(is_null(w, PlayerId(2)));
}

TEST(Players, Nullifying) {
  const Game u = make_game(3, {{C({2}), 1}, {C({3}), 1}, {C({2, 3}), 1}});
  EXPECT_EQ(ids(nullifying_players(u)), (std::vector<int>{1}));
  EXPECT_EQ(ids(nullifying_players(Game::zero(3))), (std::vector<int>{1, 2, 3}));
  EXPECT_TRUE(null_players(unanimity_game(3, C({1, 2, 3}))).empty());
}

TEST(Players, SymmetricPairs) {
  const Game u = unanimity_game(3, C({2, 3}));
  const auto pairs = symmetric_pairs(u);
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(pairs[0], std::make_pair(PlayerId(2), PlayerId(3)));
  EXPECT_THROW(symmetric_pair(u, PlayerId(1), PlayerId(1)), std::invalid_argument);
  EXPECT_EQ(symmetric_pairs(Game::zero(4)).size(), 6u);
}

TEST(Players, DividendDetectionAgreesWithDefinition) {
  GameSampler rng(5);
  for (int n = 2; n <= 6; ++n) {
    for (int k = 0; k < 60; ++k) {
      const Game v = rng.structured_game(n);
      const auto def = ids(null_players(v));
      EXPECT_EQ(def, ids(null_players_by_dividends(v)));
      EXPECT_EQ(def, testing::null_players_naive(v));
    }
  }
}

TEST(Players, PlayerRangeChecked) {
  EXPECT_THROW(is_null(Game::zero(3), PlayerId(4)), std::invalid_argument);
}

}  // namespace
}  // namespace coop
