#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "coop/axioms.hpp"
#include "coop/basis.hpp"
#include "coop/characterize.hpp"
#include "coop/corpus.hpp"
#include "coop/search.hpp"

namespace coop::cli {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Malformed or inconsistent input document.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// {"n": 3, "worth": [{"coalition": [1, 2], "value": "1/2"}, ...]}
/// Unlisted coalitions are 0; [] may appear only with value 0.
Game parse_game_file(std::string_view text);
Game game_from_json(const json& doc);
/// Nonzero worths in (size, lexicographic) coalition order.
json game_to_json(const Game& v);
std::string serialize_game(const Game& v);

Rat rat_from_json(const json& value);
json rat_to_json(const Rat& x);
json payoff_to_json(const PayoffVector& x);
json players_to_json(const std::vector<PlayerId>& ps);

json solution_to_json(const SolutionSpec& s);
SolutionSpec solution_from_json(const json& doc);

json instance_to_json(const AxiomInstance& instance);
AxiomInstance instance_from_json(const json& doc);

json verdict_to_json(const Verdict& v);
json fit_to_json(const FitResult& r);
json membership_to_json(const MembershipVerdict& m);
json crosscheck_to_json(const CrosscheckReport& r);
json coefficients_to_json(const CoefficientMap& c);
json bundle_to_json(const WitnessBundle& b);
json regression_to_json(const RegressionReport& r);

/// "{1}: 1, {1,2}: -1/2"; "0" for the zero game.
std::string game_str(const Game& v);
std::string instance_str(const AxiomInstance& instance);

/// Coalitions ordered by size, then lexicographically by members.
std::vector<Coalition> display_order(int n);

}  // namespace coop::cli
