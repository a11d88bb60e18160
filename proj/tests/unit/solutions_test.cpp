#include <gtest/gtest.h>

#include "coop/random.hpp"
#include "coop/solutions.hpp"
#include "oracles.hpp"

namespace coop {
namespace {

using testing::strings;

Coalition C(std::initializer_list<int> ps) { return Coalition::of(ps); }

std::vector<std::string> S(std::initializer_list<const char*> xs) { return {xs.begin(), xs.end()}; }

TEST(Shapley, ThreeRoutesAgreeWithOrderOracle) {
  GameSampler rng(11);
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k < 25; ++k) {
      const Game v = rng.structured_game(n);
      const auto expected = testing::shapley_by_orders(v);
      ASSERT_EQ(strings(shapley(v)), expected);
      ASSERT_EQ(strings(shapley_by_dividends(v)), expected);
      ASSERT_EQ(strings(shapley_oracle(v)), expected);
    }
  }
}

TEST(Shapley, KnownValues) {
  // Glove game: 1 owns a left glove, 2 and 3 right gloves.
  const Game glove = make_game(3, {{C({1, 2}), 1}, {C({1, 3}), 1}, {C({1, 2, 3}), 1}});
  EXPECT_EQ(shapley(glove).str(), "(2/3, 1/6, 1/6)");
  EXPECT_EQ(shapley(canonical_game(3, C({2})))[PlayerId(1)], Rat(-1, 6));
  EXPECT_EQ(shapley(unanimity_game(4, C({1, 3}))).str(), "(1/2, 0, 1/2, 0)");
  EXPECT_THROW(shapley_oracle(Game::zero(9)), std::invalid_argument);
}

TEST(Shapley, Efficient) {
  GameSampler rng(12);
  for (int k = 0; k < 50; ++k) {
    const Game v = rng.game(5);
    EXPECT_EQ(shapley(v).sum(), v.grand_worth());
  }
}

TEST(EqualDivision, SplitsGrandWorth) {
  const Game v = make_game(3, {{C({1}), 9}, {C({1, 2, 3}), 2}});
  EXPECT_EQ(equal_division(v).str(), "(2/3, 2/3, 2/3)");
}

TEST(Egalitarian, MatchesOracleForRealAlpha) {
  GameSampler rng(13);
  for (const char* alpha : {"-2", "-1", "0", "1/2", "1", "3", "7/3"}) {
    for (int k = 0; k < 10; ++k) {
      const Game v = rng.game(4);
      EXPECT_EQ(strings(egalitarian_shapley(Rat::parse(alpha), v)), testing::egalitarian_by_orders(alpha, v));
    }
  }
  const Game u1 = unanimity_game(3, C({1}));
  EXPECT_EQ(egalitarian_shapley(Rat(-1), u1).str(), "(5/3, -1/3, -1/3)");
}

TEST(EqualSurplusDivision, Formula) {
  EXPECT_EQ(equal_surplus_division(unanimity_game(3, C({1}))).str(), "(1, 0, 0)");
  EXPECT_EQ(equal_surplus_division(unanimity_game(3, C({1, 2}))).str(), "(1/3, 1/3, 1/3)");
  EXPECT_EQ(equal_surplus_division(unanimity_game(3, C({2, 3}))).str(), "(1/3, 1/3, 1/3)");
}

TEST(Phi1, Branches) {
  // Proportional: singletons (1, 3, 1), grand worth 4.
  const Game prop = make_game(3, {{C({1}), 1}, {C({2}), 3}, {C({3}), 1}, {C({1, 2}), 2}, {C({2, 3}), 2}, {C({1, 2, 3}), 4}});
  EXPECT_EQ(strings(phi1(prop)), S({"4/5", "12/5", "4/5"}));
  // Singletons sum to zero: null players get 0, the rest split v(N).
  EXPECT_EQ(strings(phi1(unanimity_game(3, C({2, 3})))), S({"0", "1/2", "1/2"}));
  EXPECT_EQ(strings(phi1(Game::zero(3))), S({"0", "0", "0"}));
}

TEST(Phi2, Branches) {
  const Game nullifying = make_game(3, {{C({2}), 1}, {C({3}), 1}, {C({2, 3}), 1}});
  EXPECT_EQ(strings(phi2(nullifying)), S({"0", "0", "0"}));
  const Game constant = make_game(3, {{C({1}), 1}, {C({2}), 1}, {C({3}), 1}, {C({1, 2}), 1}, {C({1, 3}), 1}, {C({2, 3}), 1}, {C({1, 2, 3}), 1}});
  EXPECT_EQ(strings(phi2(constant)), S({"1/3", "1/3", "1/3"}));
  const Game generic = constant + nullifying;
  EXPECT_EQ(strings(phi2(generic)), testing::shapley_by_orders(generic));
  EXPECT_EQ(phi2(generic)[PlayerId(1)], Rat(-1, 3));
}

TEST(SimpleSolutions, Values) {
  const Game uN = unanimity_game(3, C({1, 2, 3}));
  EXPECT_EQ(zero_solution(uN).str(), "(0, 0, 0)");
  EXPECT_EQ(asym_first_player(uN).str(), "(0, 1/2, 1/2)");
  EXPECT_EQ(max_v1(make_game(3, {{C({1}), -2}})).str(), "(0, 0, 0)");
  EXPECT_EQ(max_v1(make_game(3, {{C({1}), Rat(3, 2)}})).str(), "(3/2, 3/2, 3/2)");
  EXPECT_EQ(vi_plus_a(Rat(1), uN).str(), "(1, 1, 1)");
  EXPECT_THROW(asym_first_player(Game::zero(1)), std::invalid_argument);
  EXPECT_THROW(vi_plus_a(Rat(0), uN), std::invalid_argument);
}

TEST(SolutionSpec, ParseAndName) {
  EXPECT_EQ(SolutionSpec::parse("egalitarian", Rat(1, 2)).name(), "egalitarian(1/2)");
  EXPECT_THROW(SolutionSpec::parse("egalitarian"), std::invalid_argument);
  EXPECT_EQ(SolutionSpec::parse("vi_plus_a"), SolutionSpec::vi_plus_a(1));
  EXPECT_EQ(SolutionSpec::parse("shapley").name(), "shapley");
  EXPECT_THROW(SolutionSpec::parse("banzhaf"), std::invalid_argument);
  EXPECT_THROW(SolutionSpec::parse("shapley", Rat(1)), std::invalid_argument);
  EXPECT_THROW(SolutionSpec::parse("egalitarian", std::nullopt, Rat(1)), std::invalid_argument);
  EXPECT_THROW(SolutionSpec::vi_plus_a(0), std::invalid_argument);
}

TEST(SolutionSpec, CatalogCoversEveryId) {
  const auto catalog = solution_catalog();
  for (std::string_view id : solution_ids()) {
    EXPECT_TRUE(std::any_of(catalog.begin(), catalog.end(), [&](const SolutionSpec& s) { return s.id() == id; })) << id;
  }
  const Game v = unanimity_game(3, C({1, 2}));
  for (const SolutionSpec& s : catalog) EXPECT_EQ(evaluate(s, v).size(), 3) << s.name();
}

}  // namespace
}  // namespace coop
