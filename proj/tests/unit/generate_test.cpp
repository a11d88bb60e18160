#include <gtest/gtest.h>

#include "coop/axioms.hpp"
#include "coop/players.hpp"

namespace coop {
namespace {

// Every generated instance passed AxiomInstance::make, so preconditions hold;
// the checks here are on determinism and on the structure the generators
// promise beyond the preconditions.
TEST(GenerateInstance, DeterministicPerSeed) {
  for (AxiomId a : all_axioms()) {
    for (int n : {2, 3, 5}) {
      EXPECT_EQ(generate_instance(a, n, 77), generate_instance(a, n, 77)) << to_string(a);
      EXPECT_EQ(generate_instance(a, n, 77).n(), n);
    }
  }
}

TEST(GenerateInstance, SeedsVary) {
  int distinct = 0;
  for (std::uint64_t s = 0; s < 20; ++s) {
    distinct += generate_instance(AxiomId::additivity, 3, s) != generate_instance(AxiomId::additivity, 3, s + 1);
  }
  EXPECT_GE(distinct, 19);
}

TEST(GenerateInstance, ShapesAndPreconditions) {
  for (AxiomId a : all_axioms()) {
    for (std::uint64_t s = 0; s < 200; ++s) {
      const AxiomInstance x = generate_instance(a, 4, s);
      const AxiomShape shape = shape_of(a);
      ASSERT_EQ(static_cast<int>(x.games().size()), shape.games);
      ASSERT_EQ(static_cast<int>(x.players().size()), shape.players);
      ASSERT_EQ(static_cast<int>(x.scalars().size()), shape.scalars);
      if (a == AxiomId::null_player_neutrality) {
        ASSERT_TRUE(is_null(x.games()[1], x.players()[0]));
        ASSERT_EQ(x.games()[1].grand_worth(), x.games()[2].grand_worth());
      }
      if (a == AxiomId::symmetry) ASSERT_LT(x.players()[0], x.players()[1]);
    }
  }
}

TEST(GenerateInstance, NeedsTwoPlayers) {
  EXPECT_THROW(generate_instance(AxiomId::efficiency, 1, 0), std::invalid_argument);
}

}  // namespace
}  // namespace coop
