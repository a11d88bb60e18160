#include <gtest/gtest.h>

#include "coop/game.hpp"

namespace coop {
namespace {

Coalition C(std::initializer_list<int> ps) { return Coalition::of(ps); }

TEST(Game, SparseConstruction) {
  const Game v = make_game(3, {{C({1}), 1}, {C({1, 2, 3}), Rat(5, 2)}});
  EXPECT_EQ(v(C({1})), Rat(1));
  EXPECT_EQ(v(C({2, 3})), Rat(0));
  EXPECT_EQ(v.grand_worth(), Rat(5, 2));
  EXPECT_EQ(v.singleton_worth(PlayerId(1)), Rat(1));
  EXPECT_EQ(v.coalition_count(), 8u);
}

TEST(Game, ConstructionErrors) {
  EXPECT_THROW(make_game(3, {{C({1}), 1}, {C({1}), 2}}), std::invalid_argument);
  EXPECT_THROW(make_game(2, {{C({3}), 1}}), std::invalid_argument);
  EXPECT_THROW(make_game(3, {{Coalition(), 1}}), std::invalid_argument);
  EXPECT_THROW(Game::from_worths(2, {0, 1, 2}), std::invalid_argument);
  EXPECT_THROW(Game::from_worths(1, {1, 2}), std::invalid_argument);
}

TEST(Game, UnanimityAndCanonical) {
  const Game u = unanimity_game(3, C({1, 2}));
  EXPECT_EQ(u(C({1, 2})), Rat(1));
  EXPECT_EQ(u(C({1, 2, 3})), Rat(1));
  EXPECT_EQ(u(C({1, 3})), Rat(0));
  const Game e = canonical_game(3, C({1, 2}));
  EXPECT_EQ(e(C({1, 2})), Rat(1));
  EXPECT_EQ(e(C({1, 2, 3})), Rat(0));
  EXPECT_THROW(unanimity_game(3, Coalition()), std::invalid_argument);
  EXPECT_THROW(canonical_game(3, Coalition()), std::invalid_argument);
}

TEST(Game, LinearOperations) {
  const Game a = unanimity_game(3, C({1}));
  const Game b = canonical_game(3, C({2}));
  const Game c = linear_combine(Rat(2), a, Rat(-3), b);
  EXPECT_EQ(c(C({1})), Rat(2));
  EXPECT_EQ(c(C({2})), Rat(-3));
  EXPECT_EQ(c(C({1, 2})), Rat(2));
  EXPECT_EQ(a + b - b, a);
  EXPECT_EQ(Rat(0) * a, Game::zero(3));
  EXPECT_TRUE(Game::zero(4).is_zero());
  EXPECT_THROW(a + Game::zero(4), std::invalid_argument);
}

// (πv)(πS) = v(S); with π = (1 2 3)→(2 3 1), worth on {1} moves to {2}.
TEST(Game, Permute) {
  const Game v = make_game(3, {{C({1}), 4}, {C({1, 3}), 7}});
  const Permutation pi = Permutation::from_images({2, 3, 1});
  const Game pv = permute_game(v, pi);
  EXPECT_EQ(pv(C({2})), Rat(4));
  EXPECT_EQ(pv(C({1, 2})), Rat(7));
  EXPECT_EQ(permute_game(pv, pi.inverse()), v);
}

TEST(PayoffVector, ArithmeticAndFormat) {
  PayoffVector x({Rat(1, 2), Rat(1, 2), Rat(0)});
  EXPECT_EQ(x.sum(), Rat(1));
  EXPECT_EQ(x.str(), "(1/2, 1/2, 0)");
  EXPECT_EQ((x + x)[PlayerId(1)], Rat(1));
  EXPECT_EQ((Rat(-2) * x - x)[PlayerId(2)], Rat(-3, 2));
  x[PlayerId(3)] = Rat(5);
  EXPECT_EQ(x.sum(), Rat(6));
}

}  // namespace
}  // namespace coop
