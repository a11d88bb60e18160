#include <gtest/gtest.h>

#include "coop/cli/io.hpp"
#include "coop/random.hpp"

namespace coop::cli {
namespace {

TEST(GameFile, ParsesListedWorths) {
  const Game v = parse_game_file(R"({"n": 3, "worth": [
      {"coalition": [], "value": 0},
      {"coalition": [1], "value": "1/2"},
      {"coalition": [1, 2, 3], "value": 2}]})");
  EXPECT_EQ(v.n(), 3);
  EXPECT_EQ(v(Coalition::of({1})), Rat(1, 2));
  EXPECT_EQ(v(Coalition::of({2, 3})), Rat(0));
  EXPECT_EQ(v.grand_worth(), Rat(2));
}

TEST(GameFile, EmptyWorthListIsZeroGame) {
  EXPECT_EQ(parse_game_file(R"({"n": 3, "worth": []})"), Game::zero(3));
}

TEST(GameFile, RoundTripIsStable) {
  GameSampler sampler(7);
  for (int k = 0; k < 50; ++k) {
    const Game v = sampler.structured_game(2 + k % 4);
    const std::string text = serialize_game(v);
    const Game back = parse_game_file(text);
    EXPECT_EQ(back, v);
    EXPECT_EQ(serialize_game(back), text);
  }
}

TEST(GameFile, RejectsBadInput) {
  const char* bad[] = {
      R"({"n": 3, "worth": [{"coalition": [1], "value": "1/0"}]})",
      R"({"n": 3, "worth": [{"coalition": [4], "value": 1}]})",
      R"({"n": 3, "worth": [{"coalition": [0], "value": 1}]})",
      R"({"n": 3, "worth": [{"coalition": [1], "value": 1}, {"coalition": [1], "value": 2}]})",
      R"({"n": 3, "worth": [{"coalition": [], "value": 1}]})",
      R"({"n": 3, "worth": [{"coalition": [2, 1], "value": 1}]})",
      R"({"n": 3, "worth": [{"coalition": [1, 1], "value": 1}]})",
      R"({"n": 3, "worth": [{"coalition": [1], "value": 0.5}]})",
      R"({"n": 0, "worth": []})",
      R"({"n": 21, "worth": []})",
      R"({"worth": []})",
      R"({"n": 3})",
      R"({"n": 3, "worth": [{"value": 1}]})",
      R"({"n": 3, "worth": )",
  };
  for (const char* text : bad) EXPECT_THROW(parse_game_file(text), InputError) << text;
}

TEST(GameFile, ErrorNamesTheProblem) {
  try {
    parse_game_file(R"({"n": 3, "worth": [{"coalition": [4], "value": 1}]})");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("player 4 out of range"), std::string::npos);
  }
}

TEST(InstanceJson, RoundTripForEveryAxiom) {
  for (AxiomId axiom : all_axioms()) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const AxiomInstance x = generate_instance(axiom, 3 + static_cast<int>(seed % 2), seed);
      EXPECT_EQ(instance_from_json(json::parse(instance_to_json(x).dump())), x) << to_string(axiom);
    }
  }
}

TEST(InstanceJson, ShapeIsValidated) {
  json doc = instance_to_json(witness_instances(AxiomId::null_player_property, {"W1"}).front());
  doc["players"] = json::array({1, 2});
  EXPECT_THROW(instance_from_json(doc), std::invalid_argument);
  doc["axiom"] = "no_such_axiom";
  EXPECT_THROW(instance_from_json(doc), std::invalid_argument);
}

TEST(SolutionJson, RoundTrip) {
  for (const SolutionSpec& s : solution_catalog()) EXPECT_EQ(solution_from_json(solution_to_json(s)), s);
  EXPECT_EQ(solution_from_json(json("shapley")), SolutionSpec::shapley());
  EXPECT_EQ(solution_from_json(json{{"id", "egalitarian"}, {"alpha", "-2/3"}}), SolutionSpec::egalitarian(Rat(-2, 3)));
}

TEST(Display, OrderBySizeThenMembers) {
  std::vector<std::string> got;
  for (Coalition s : display_order(3)) got.push_back(s.str());
  EXPECT_EQ(got, (std::vector<std::string>{"{1}", "{2}", "{3}", "{1,2}", "{1,3}", "{2,3}", "{1,2,3}"}));
  EXPECT_EQ(game_str(Game::zero(2)), "0");
  EXPECT_EQ(game_str(unanimity_game(3, Coalition::of({2, 3}))), "{2,3}: 1, {1,2,3}: 1");
}

}  // namespace
}  // namespace coop::cli
