#include "coop/corpus.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "coop/basis.hpp"
#include "coop/players.hpp"

namespace coop {

namespace {

Coalition C(std::initializer_list<int> players) { return Coalition::of(players); }

Fact stated(std::string claim, FactBody body) { return {std::move(claim), Source::stated, {}, std::move(body)}; }

Fact derived(std::string claim, std::string note, FactBody body) {
  return {std::move(claim), Source::derived, std::move(note), std::move(body)};
}

AxiomFact outcome(SolutionSpec solution, AxiomId axiom, std::vector<Game> games, std::vector<PlayerId> players,
                  bool holds, std::optional<std::pair<Rat, Rat>> sides = {}, std::vector<Rat> scalars = {}) {
  return {std::move(solution), AxiomInstance::make(axiom, std::move(games), std::move(players), std::move(scalars)),
          holds, std::move(sides)};
}

// Null player property vs. null player neutrality for the proportional solution.
WitnessBundle bundle_w1() {
  const Game v = make_game(3, {{C({1}), 1}, {C({2}), 1}, {C({3}), 1}, {C({1, 2, 3}), 2}});
  const Game w = make_game(3, {{C({2}), 2}, {C({1, 2}), 2}, {C({2, 3}), 2}, {C({1, 2, 3}), 2}});
  const Game u = make_game(3, {{C({2, 3}), 2}, {C({1, 2, 3}), 2}});
  const Game u1 = unanimity_game(3, C({1}));
  const PlayerId p1(1), p3(3);
  const auto phi1 = SolutionSpec::phi1();

  WitnessBundle b{"W1", "null player property without null player neutrality", {{"v", v}, {"w", w}, {"u", u}, {"u_{1}", u1}}, {}};
  auto& f = b.facts;
  f.push_back(stated("player 1 is null in w", PlayerSetFact{"w", PlayerSetFact::Kind::null, {p1}}));
  f.push_back(stated("player 1 is null in u", PlayerSetFact{"u", PlayerSetFact::Kind::null, {p1}}));
  f.push_back(derived("the dividends of w vanish on every coalition containing 1", "Möbius inversion of the w column",
                      PlayerSetFact{"w", PlayerSetFact::Kind::null_by_dividends, {p1}}));
  f.push_back(stated("w(N) = u(N) = 2", GrandWorthFact{{"w", "u"}, 2}));
  f.push_back(derived("dividend of v on {1} is 1", "Möbius inversion by hand", DividendFact{"v", C({1}), 1}));
  f.push_back(derived("dividend of v on {1,2} is -2", "Möbius inversion by hand", DividendFact{"v", C({1, 2}), -2}));
  f.push_back(derived("dividend of v on N is 5", "Möbius inversion by hand", DividendFact{"v", C({1, 2, 3}), 5}));
  f.push_back(derived("phi1 gives player 1 4/5 in v+w", "proportional branch: singletons (1,3,1), grand worth 4",
                      PayoffFact{phi1, {"v", "w"}, p1, Rat(4, 5)}));
  f.push_back(derived("phi1 gives player 1 4/3 in v+u", "proportional branch: singletons (1,1,1), grand worth 4",
                      PayoffFact{phi1, {"v", "u"}, p1, Rat(4, 3)}));
  f.push_back(derived("Shapley gives player 1 2/3 in v+w", "weighted marginal contributions; permutation average agrees",
                      PayoffFact{SolutionSpec::shapley(), {"v", "w"}, p1, Rat(2, 3)}));
  f.push_back(stated("equal division violates the null player property (u_{1}, player 3)",
                     outcome(SolutionSpec::equal_division(), AxiomId::null_player_property, {u1}, {p3}, false,
                             std::pair<Rat, Rat>{Rat(1, 3), 0})));
  f.push_back(stated("phi1 pays the null player 1 of w nothing",
                     outcome(phi1, AxiomId::null_player_property, {w}, {p1}, true)));
  f.push_back(stated("phi1 pays the null player 1 of u nothing",
                     outcome(phi1, AxiomId::null_player_property, {u}, {p1}, true)));
  f.push_back(stated("phi1 violates null player neutrality on (v, w, u, player 1)",
                     outcome(phi1, AxiomId::null_player_neutrality, {v, w, u}, {p1}, false,
                             std::pair<Rat, Rat>{Rat(4, 5), Rat(4, 3)})));
  f.push_back(derived("phi1 is not linear: phi1(v+w) differs from phi1(v)+phi1(w)",
                      "phi1(v) = (2/3,2/3,2/3), phi1(w) = (0,2,0), phi1(v+w) = (4/5,12/5,4/5)",
                      outcome(phi1, AxiomId::linearity, {v, w}, {}, false, {}, {1, 1})));
  f.push_back(derived("Shapley satisfies null player neutrality on (v, w, u, player 1)", "both sides equal 2/3",
                      outcome(SolutionSpec::shapley(), AxiomId::null_player_neutrality, {v, w, u}, {p1}, true,
                              std::pair<Rat, Rat>{Rat(2, 3), Rat(2, 3)})));
  return b;
}

// Null player in a productive environment vs. null player neutrality.
WitnessBundle bundle_w2() {
  const Game zero = Game::zero(3);
  const Game u = make_game(3, {{C({1}), 1}, {C({1, 2}), 1}});
  const Game u1 = unanimity_game(3, C({1}));
  const PlayerId p2(2);
  const auto mx = SolutionSpec::max_v1();
  const auto egal = SolutionSpec::egalitarian(-1);

  WitnessBundle b{"W2", "productive-environment null players without neutrality", {{"v", zero}, {"w", zero}, {"u", u}, {"u_{1}", u1}}, {}};
  auto& f = b.facts;
  f.push_back(stated("player 2 is null in w", PlayerSetFact{"w", PlayerSetFact::Kind::null, {p2}}));
  f.push_back(stated("player 2 is null in u", PlayerSetFact{"u", PlayerSetFact::Kind::null, {p2}}));
  f.push_back(stated("w(N) = u(N) = 0", GrandWorthFact{{"w", "u"}, 0}));
  f.push_back(stated("max{v(1),0} gives player 2 0 in v+w", PayoffFact{mx, {"v", "w"}, p2, 0}));
  f.push_back(stated("max{v(1),0} gives player 2 1 in v+u", PayoffFact{mx, {"v", "u"}, p2, 1}));
  f.push_back(stated("max{v(1),0} violates null player neutrality on (v, w, u, player 2)",
                     outcome(mx, AxiomId::null_player_neutrality, {zero, zero, u}, {p2}, false,
                             std::pair<Rat, Rat>{0, 1})));
  f.push_back(stated("max{v(1),0} pays the null player 2 of u a nonnegative amount",
                     outcome(mx, AxiomId::null_player_productive_environment, {u}, {p2}, true)));
  f.push_back(derived("max{v(1),0} is not linear", "phi(-u) = 0 while -phi(u) = -1",
                      outcome(mx, AxiomId::linearity, {u, u}, {}, false, {}, {-1, 0})));
  f.push_back(derived("egalitarian(-1) pays the null player 2 of u_{1} -1/3", "-ED + 2 Sh on u_{1} is (5/3,-1/3,-1/3)",
                      outcome(egal, AxiomId::null_player_productive_environment, {u1}, {p2}, false,
                              std::pair<Rat, Rat>{Rat(-1, 3), 0})));
  f.push_back(stated("egalitarian(-1) satisfies null player neutrality on (v, w, u, player 2)",
                     outcome(egal, AxiomId::null_player_neutrality, {zero, zero, u}, {p2}, true)));
  return b;
}

// Nullifying player property vs. nullifying player neutrality.
WitnessBundle bundle_w3() {
  const Game v = make_game(3, {{C({1}), 1},
                               {C({2}), 1},
                               {C({3}), 1},
                               {C({1, 2}), 1},
                               {C({1, 3}), 1},
                               {C({2, 3}), 1},
                               {C({1, 2, 3}), 1}});
  const Game zero = Game::zero(3);
  const Game u = make_game(3, {{C({2}), 1}, {C({3}), 1}, {C({2, 3}), 1}});
  const Game uN = unanimity_game(3, C({1, 2, 3}));
  const PlayerId p1(1);
  const auto phi2 = SolutionSpec::phi2();
  const auto shift = SolutionSpec::vi_plus_a(1);

  WitnessBundle b{"W3", "nullifying player property without nullifying player neutrality",
                  {{"v", v}, {"w", zero}, {"u", u}, {"zero", zero}, {"u_N", uN}}, {}};
  auto& f = b.facts;
  f.push_back(stated("player 1 is nullifying in w", PlayerSetFact{"w", PlayerSetFact::Kind::nullifying, {p1}}));
  f.push_back(stated("player 1 is nullifying in u", PlayerSetFact{"u", PlayerSetFact::Kind::nullifying, {p1}}));
  f.push_back(stated("w(N) = u(N) = 0", GrandWorthFact{{"w", "u"}, 0}));
  f.push_back(derived("phi2 gives player 1 1/3 in v+w", "v+w is constant on nonempty coalitions: equal division branch",
                      PayoffFact{phi2, {"v", "w"}, p1, Rat(1, 3)}));
  f.push_back(derived("phi2 gives player 1 -1/3 in v+u", "no nullifying player, not constant: Shapley branch",
                      PayoffFact{phi2, {"v", "u"}, p1, Rat(-1, 3)}));
  f.push_back(derived("Shapley gives player 1 -1/3 in v+u", "weighted marginal contributions; permutation average agrees",
                      PayoffFact{SolutionSpec::shapley(), {"v", "u"}, p1, Rat(-1, 3)}));
  f.push_back(stated("phi2 violates nullifying player neutrality on (v, w, u, player 1)",
                     outcome(phi2, AxiomId::nullifying_player_neutrality, {v, zero, u}, {p1}, false,
                             std::pair<Rat, Rat>{Rat(1, 3), Rat(-1, 3)})));
  f.push_back(stated("phi2 pays the nullifying player 1 of u nothing",
                     outcome(phi2, AxiomId::nullifying_player_property, {u}, {p1}, true)));
  f.push_back(derived("phi2 is not linear", "phi2(v) + phi2(u) gives player 1 1/3, phi2(v+u) gives -1/3",
                      outcome(phi2, AxiomId::linearity, {v, u}, {}, false, {}, {1, 1})));
  f.push_back(stated("v(i)+1 violates the nullifying player property on the zero game",
                     outcome(shift, AxiomId::nullifying_player_property, {zero}, {p1}, false,
                             std::pair<Rat, Rat>{1, 0})));
  f.push_back(stated("v(i)+1 satisfies nullifying player neutrality on (v, w, u, player 1)",
                     outcome(shift, AxiomId::nullifying_player_neutrality, {v, zero, u}, {p1}, true,
                             std::pair<Rat, Rat>{2, 2})));
  f.push_back(derived("v(i)+1 is not linear", "phi(2 u_N) = (1,1,1) while 2 phi(u_N) = (2,2,2)",
                      outcome(shift, AxiomId::linearity, {uN, zero}, {}, false, {}, {2, 0})));
  return b;
}

// Each axiom of the null player neutrality characterization is needed.
WitnessBundle bundle_w4() {
  const Game zero = Game::zero(3);
  const Game uN = unanimity_game(3, C({1, 2, 3}));
  const Game u23 = unanimity_game(3, C({2, 3}));
  const Game u2 = unanimity_game(3, C({2}));
  const PlayerId p1(1), p2(2);
  const auto none = SolutionSpec::zero();
  const auto asym = SolutionSpec::asym_first_player();
  const auto esd = SolutionSpec::equal_surplus_division();

  WitnessBundle b{"W4", "independence of efficiency, symmetry and null player neutrality",
                  {{"zero", zero}, {"u_N", uN}, {"u_{2,3}", u23}, {"u_{2}", u2}}, {}};
  auto& f = b.facts;
  f.push_back(stated("the zero solution violates efficiency on u_N",
                     outcome(none, AxiomId::efficiency, {uN}, {}, false, std::pair<Rat, Rat>{0, 1})));
  f.push_back(stated("the zero solution satisfies null player neutrality",
                     outcome(none, AxiomId::null_player_neutrality, {zero, u23, u2}, {p1}, true)));
  f.push_back(stated("the asymmetric solution violates symmetry on u_N (players 1, 2)",
                     outcome(asym, AxiomId::symmetry, {uN}, {p1, p2}, false, std::pair<Rat, Rat>{0, Rat(1, 2)})));
  f.push_back(stated("the asymmetric solution satisfies null player neutrality",
                     outcome(asym, AxiomId::null_player_neutrality, {zero, u23, u2}, {p1}, true)));
  f.push_back(stated("the asymmetric solution is efficient on u_N", outcome(asym, AxiomId::efficiency, {uN}, {}, true)));
  f.push_back(stated("equal surplus division violates null player neutrality on (0, u_{2,3}, u_{2}, player 1)",
                     outcome(esd, AxiomId::null_player_neutrality, {zero, u23, u2}, {p1}, false,
                             std::pair<Rat, Rat>{Rat(1, 3), 0})));
  f.push_back(stated("equal surplus division is efficient on u_{2,3}", outcome(esd, AxiomId::efficiency, {u23}, {}, true)));
  f.push_back(stated("equal surplus division treats players 2 and 3 of u_{2,3} alike",
                     outcome(esd, AxiomId::symmetry, {u23}, {p2, PlayerId(3)}, true)));
  return b;
}

// Each axiom of the nullifying player neutrality characterization is needed.
WitnessBundle bundle_w5() {
  const Game zero = Game::zero(3);
  const Game uN = unanimity_game(3, C({1, 2, 3}));
  const Game e2 = canonical_game(3, C({2}));
  const PlayerId p1(1), p2(2);
  const auto none = SolutionSpec::zero();
  const auto asym = SolutionSpec::asym_first_player();
  const auto sh = SolutionSpec::shapley();
  const auto ed = SolutionSpec::equal_division();

  WitnessBundle b{"W5", "independence of efficiency, symmetry and nullifying player neutrality",
                  {{"zero", zero}, {"u_N", uN}, {"e_{2}", e2}}, {}};
  auto& f = b.facts;
  f.push_back(stated("the zero solution violates efficiency on u_N",
                     outcome(none, AxiomId::efficiency, {uN}, {}, false, std::pair<Rat, Rat>{0, 1})));
  f.push_back(stated("the zero solution satisfies nullifying player neutrality",
                     outcome(none, AxiomId::nullifying_player_neutrality, {zero, zero, e2}, {p1}, true)));
  f.push_back(stated("the asymmetric solution violates symmetry on u_N (players 1, 2)",
                     outcome(asym, AxiomId::symmetry, {uN}, {p1, p2}, false, std::pair<Rat, Rat>{0, Rat(1, 2)})));
  f.push_back(stated("the asymmetric solution satisfies nullifying player neutrality",
                     outcome(asym, AxiomId::nullifying_player_neutrality, {zero, zero, e2}, {p1}, true)));
  f.push_back(derived("Shapley gives player 1 -1/6 in e_{2}", "only S = {2} contributes: -1 with weight 1/6",
                      PayoffFact{sh, {"e_{2}"}, p1, Rat(-1, 6)}));
  f.push_back(stated("Shapley violates nullifying player neutrality on (0, 0, e_{2}, player 1)",
                     outcome(sh, AxiomId::nullifying_player_neutrality, {zero, zero, e2}, {p1}, false,
                             std::pair<Rat, Rat>{0, Rat(-1, 6)})));
  f.push_back(derived("Shapley violates coalitional standard equivalence on (0, e_{2}, player 1)",
                      "same payoff as the neutrality witness",
                      outcome(sh, AxiomId::coalitional_standard_equivalence, {zero, e2}, {p1}, false,
                              std::pair<Rat, Rat>{Rat(-1, 6), 0})));
  f.push_back(stated("equal division satisfies nullifying player neutrality on (0, 0, e_{2}, player 1)",
                     outcome(ed, AxiomId::nullifying_player_neutrality, {zero, zero, e2}, {p1}, true)));
  f.push_back(stated("equal division satisfies coalitional standard equivalence on (0, e_{2}, player 1)",
                     outcome(ed, AxiomId::coalitional_standard_equivalence, {zero, e2}, {p1}, true)));
  return b;
}

const std::vector<WitnessBundle>& all_bundles() {
  static const std::vector<WitnessBundle> bundles = {bundle_w1(), bundle_w2(), bundle_w3(), bundle_w4(), bundle_w5()};
  return bundles;
}

std::string players_str(const std::vector<PlayerId>& ps) { return Coalition::of(ps).str(); }

struct FactCheck {
  bool passed;
  std::string detail;
};

FactCheck check(const WitnessBundle& b, const PlayerSetFact& fact) {
  const Game& g = b.game(fact.game);
  std::vector<PlayerId> set;
  switch (fact.kind) {
    case PlayerSetFact::Kind::null:
      set = null_players(g);
      break;
    case PlayerSetFact::Kind::null_by_dividends:
      set = null_players_by_dividends(g);
      break;
    case PlayerSetFact::Kind::nullifying:
      set = nullifying_players(g);
      break;
  }
  const bool ok = std::all_of(fact.members.begin(), fact.members.end(),
                              [&](PlayerId i) { return std::find(set.begin(), set.end(), i) != set.end(); });
  return {ok, "expected " + players_str(fact.members) + " within " + players_str(set)};
}

FactCheck check(const WitnessBundle& b, const GrandWorthFact& fact) {
  std::ostringstream out;
  bool ok = true;
  for (const std::string& name : fact.games) {
    const Rat& x = b.game(name).grand_worth();
    ok = ok && x == fact.value;
    out << name << "(N) = " << x << "; ";
  }
  out << "expected " << fact.value;
  return {ok, out.str()};
}

FactCheck check(const WitnessBundle& b, const DividendFact& fact) {
  const Rat x = to_coefficients(b.game(fact.game), Basis::unanimity).at(fact.t);
  return {x == fact.value, "expected " + fact.value.str() + ", got " + x.str()};
}

FactCheck check(const WitnessBundle& b, const PayoffFact& fact) {
  Game sum = b.game(fact.sum_of.front());
  for (std::size_t k = 1; k < fact.sum_of.size(); ++k) sum = sum + b.game(fact.sum_of[k]);
  const Rat x = evaluate(fact.solution, sum)[fact.player];
  return {x == fact.value, fact.solution.name() + ": expected " + fact.value.str() + ", got " + x.str()};
}

FactCheck check(const WitnessBundle&, const AxiomFact& fact) {
  const AxiomId axiom = fact.instance.axiom();
  const Sides s = evaluate_sides(axiom, fact.solution, fact.instance);
  bool ok = s.holds() == fact.holds;
  std::ostringstream out;
  out << fact.solution.name() << " on " << to_string(axiom) << ": " << (s.holds() ? "holds" : "fails");
  if (fact.sides) {
    ok = ok && s.lhs.size() == 1 && s.lhs[0] == fact.sides->first && s.rhs[0] == fact.sides->second;
    out << " with sides " << s.lhs[0] << " vs " << s.rhs[0] << " (expected " << fact.sides->first << " vs "
        << fact.sides->second << ")";
  }
  return {ok, out.str()};
}

}  // namespace

std::string_view to_string(Source s) { return s == Source::stated ? "stated" : "derived"; }

const Game& WitnessBundle::game(std::string_view name) const {
  for (const NamedGame& g : games) {
    if (g.name == name) return g.game;
  }
  throw std::invalid_argument("bundle " + id + " has no game named " + std::string(name));
}

std::vector<std::string> bundle_ids() {
  std::vector<std::string> ids;
  for (const WitnessBundle& b : all_bundles()) ids.push_back(b.id);
  return ids;
}

const WitnessBundle& witness(std::string_view id) {
  for (const WitnessBundle& b : all_bundles()) {
    if (b.id == id) return b;
  }
  throw std::invalid_argument("unknown witness bundle: " + std::string(id));
}

bool RegressionReport::all_passed() const { return failures() == 0; }

std::size_t RegressionReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(outcomes.begin(), outcomes.end(), [](const FactOutcome& o) { return !o.passed; }));
}

FactOutcome check_fact(const WitnessBundle& bundle, std::size_t index) {
  const Fact& fact = bundle.facts.at(index);
  const FactCheck v = std::visit([&](const auto& body) { return check(bundle, body); }, fact.body);
  return {bundle.id, index, fact.claim, v.passed, v.detail};
}

RegressionReport run_all_witnesses() {
  RegressionReport report;
  for (const WitnessBundle& b : all_bundles()) {
    for (std::size_t k = 0; k < b.facts.size(); ++k) report.outcomes.push_back(check_fact(b, k));
  }
  return report;
}

std::vector<AxiomInstance> witness_instances(AxiomId axiom, const std::vector<std::string>& bundle_ids) {
  std::vector<const WitnessBundle*> chosen;
  if (bundle_ids.empty()) {
    for (const WitnessBundle& b : all_bundles()) chosen.push_back(&b);
  } else {
    for (const std::string& id : bundle_ids) chosen.push_back(&witness(id));
  }
  std::vector<AxiomInstance> out;
  for (const WitnessBundle* b : chosen) {
    for (const Fact& f : b->facts) {
      const auto* a = std::get_if<AxiomFact>(&f.body);
      if (!a || a->instance.axiom() != axiom) continue;
      if (std::find(out.begin(), out.end(), a->instance) == out.end()) out.push_back(a->instance);
    }
  }
  return out;
}

}  // namespace coop
