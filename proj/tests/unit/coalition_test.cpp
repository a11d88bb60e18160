#include <gtest/gtest.h>

#include <set>

#include "coop/coalition.hpp"

namespace coop {
namespace {

TEST(Coalition, MembersAndMask) {
  const Coalition s = Coalition::of({1, 3});
  EXPECT_EQ(s.mask(), 0b101u);
  EXPECT_EQ(s.size(), 2);
  EXPECT_TRUE(s.contains(PlayerId(3)));
  EXPECT_FALSE(s.contains(PlayerId(2)));
  EXPECT_EQ(s.str(), "{1,3}");
  EXPECT_EQ(Coalition().str(), "{}");
  EXPECT_EQ(s.with(PlayerId(2)), Coalition::grand(3));
  EXPECT_EQ(s.without(PlayerId(1)), Coalition::singleton(PlayerId(3)));
  EXPECT_TRUE(s.subset_of(Coalition::grand(3)));
  EXPECT_FALSE(Coalition::grand(3).subset_of(s));
}

TEST(Coalition, RejectsBadPlayers) {
  EXPECT_THROW(Coalition::of({0}), std::out_of_range);
  EXPECT_THROW(Coalition::of({kMaxPlayers + 1}), std::out_of_range);
}

TEST(Permutation, Validation) {
  EXPECT_THROW(Permutation::from_images({1, 1, 2}), std::invalid_argument);
  EXPECT_THROW(Permutation::from_images({0, 1}), std::invalid_argument);
  EXPECT_NO_THROW(Permutation::from_images({3, 1, 2}));
}

TEST(Permutation, ApplyComposeInverse) {
  const Permutation pi = Permutation::from_images({2, 3, 1});
  EXPECT_EQ(pi(PlayerId(1)), PlayerId(2));
  EXPECT_EQ(pi.apply(Coalition::of({1, 2})), Coalition::of({2, 3}));
  EXPECT_EQ(compose(pi, pi.inverse()), Permutation::identity(3));
  const Permutation tau = Permutation::transposition(3, PlayerId(1), PlayerId(3));
  EXPECT_EQ(tau.images(), (std::vector<int>{3, 2, 1}));
  EXPECT_EQ(compose(pi, tau)(PlayerId(1)), pi(tau(PlayerId(1))));
}

TEST(Permutation, AllPermutationsLexicographic) {
  const auto all = all_permutations(4);
  ASSERT_EQ(all.size(), 24u);
  EXPECT_EQ(all.front(), Permutation::identity(4));
  EXPECT_EQ(all.back().images(), (std::vector<int>{4, 3, 2, 1}));
  std::set<std::vector<int>> distinct;
  for (const auto& p : all) distinct.insert(p.images());
  EXPECT_EQ(distinct.size(), 24u);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end(),
                             [](const Permutation& a, const Permutation& b) { return a.images() < b.images(); }));
}

}  // namespace
}  // namespace coop
