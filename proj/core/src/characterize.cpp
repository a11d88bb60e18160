#include "coop/characterize.hpp"

#include <stdexcept>

#include "coop/corpus.hpp"
#include "coop/random.hpp"

namespace coop {

namespace {

void require_three_players(int n) {
  if (n < 3) throw std::invalid_argument("characterization checks need n ≥ 3");
  if (n > kMaxPlayers) throw std::invalid_argument("too many players");
}

bool found(const Verdict& v) { return is_counterexample(v); }

const std::vector<AxiomId>& crosscheck_axioms() {
  static const std::vector<AxiomId> axioms = {
      AxiomId::linearity,
      AxiomId::null_player_productive_environment,
      AxiomId::null_player_neutrality,
      AxiomId::nullifying_player_property,
      AxiomId::nullifying_player_neutrality,
      AxiomId::coalitional_standard_equivalence,
  };
  return axioms;
}

using InstanceLists = std::vector<std::pair<AxiomId, std::vector<AxiomInstance>>>;

std::vector<AxiomInstance>& list_for(InstanceLists& lists, AxiomId axiom) {
  for (auto& [a, list] : lists) {
    if (a == axiom) return list;
  }
  throw std::logic_error("axiom missing from crosscheck lists");
}

void append_unique(std::vector<AxiomInstance>& list, AxiomInstance instance) {
  for (const AxiomInstance& have : list) {
    if (have == instance) return;
  }
  list.push_back(std::move(instance));
}

// Corpus instances plus the instances the implication proofs derive from them.
InstanceLists closed_witnesses(const std::vector<std::string>& bundle_ids) {
  InstanceLists lists;
  for (AxiomId axiom : crosscheck_axioms()) lists.emplace_back(axiom, witness_instances(axiom, bundle_ids));

  const auto npn = list_for(lists, AxiomId::null_player_neutrality);
  const auto nfpn = list_for(lists, AxiomId::nullifying_player_neutrality);
  const auto standard = list_for(lists, AxiomId::coalitional_standard_equivalence);
  const auto nfpp = list_for(lists, AxiomId::nullifying_player_property);

  auto& nppe_out = list_for(lists, AxiomId::null_player_productive_environment);
  for (const AxiomInstance& x : npn) {
    const auto& g = x.games();
    const PlayerId i = x.players()[0];
    append_unique(nppe_out, AxiomInstance::make(AxiomId::null_player_productive_environment, {g[1] - g[2]}, {i}));
    append_unique(nppe_out, AxiomInstance::make(AxiomId::null_player_productive_environment, {g[2] - g[1]}, {i}));
  }

  auto& standard_out = list_for(lists, AxiomId::coalitional_standard_equivalence);
  auto& nfpp_out = list_for(lists, AxiomId::nullifying_player_property);
  for (const AxiomInstance& x : nfpn) {
    const auto& g = x.games();
    const PlayerId i = x.players()[0];
    for (int k : {1, 2}) {
      append_unique(standard_out, AxiomInstance::make(AxiomId::coalitional_standard_equivalence, {g[0], g[k]}, {i}));
      append_unique(nfpp_out, AxiomInstance::make(AxiomId::nullifying_player_property, {g[k]}, {i}));
    }
  }

  auto& nfpn_out = list_for(lists, AxiomId::nullifying_player_neutrality);
  for (const AxiomInstance& x : standard) {
    const auto& g = x.games();
    append_unique(nfpn_out, AxiomInstance::make(AxiomId::nullifying_player_neutrality,
                                                {g[0], g[1], Game::zero(x.n())}, x.players()));
  }
  for (const AxiomInstance& x : nfpp) {
    const Game zero = Game::zero(x.n());
    append_unique(nfpn_out,
                  AxiomInstance::make(AxiomId::nullifying_player_neutrality, {zero, x.games()[0], zero}, x.players()));
  }
  return lists;
}

}  // namespace

FitResult fit_alpha(const SolutionSpec& solution, int n) {
  require_three_players(n);
  const Rat eta = evaluate(solution, unanimity_game(n, Coalition::singleton(PlayerId(1))))[PlayerId(n)];
  const Rat alpha = Rat(n) * eta;
  const Rat off = alpha / Rat(n);
  const Coalition grand = Coalition::grand(n);

  for (std::uint32_t mask = 1; mask <= grand.mask(); ++mask) {
    const Coalition t(mask);
    const PayoffVector x = evaluate(solution, unanimity_game(n, t));
    const Rat on = off + (Rat(1) - alpha) / Rat(t.size());
    for (bool inside : {false, true}) {
      for (int k = 1; k <= n; ++k) {
        const PlayerId i(k);
        if (t.contains(i) != inside) continue;
        const Rat& expected = inside ? on : off;
        if (x[i] != expected) return Inconsistent{t, i, expected, x[i]};
      }
    }
  }
  return ConsistentFit{alpha, eta};
}

MembershipVerdict verify_family_membership(const SolutionSpec& solution, int n, std::uint64_t trials,
                                           std::uint64_t seed) {
  require_three_players(n);
  if (trials == 0) throw std::invalid_argument("membership check needs at least one trial");

  const FitResult fit = fit_alpha(solution, n);
  if (const auto* bad = std::get_if<Inconsistent>(&fit)) {
    const Game u = unanimity_game(n, bad->t);
    const Rat alpha = Rat(n) * evaluate(solution, unanimity_game(n, Coalition::singleton(PlayerId(1))))[PlayerId(n)];
    return NotInFamily{alpha, u, egalitarian_shapley(alpha, u), evaluate(solution, u)};
  }

  const Rat alpha = std::get<ConsistentFit>(fit).alpha;
  for (std::uint64_t k = 0; k < trials; ++k) {
    GameSampler rng(mix_seed(seed, k));
    Game v = rng.structured_game(n);
    PayoffVector expected = egalitarian_shapley(alpha, v);
    PayoffVector actual = evaluate(solution, v);
    if (expected != actual) return NotInFamily{alpha, std::move(v), std::move(expected), std::move(actual)};
  }
  return InFamily{alpha, trials};
}

bool refails(const SolutionSpec& solution, const NotInFamily& verdict) {
  return evaluate(solution, verdict.witness) != egalitarian_shapley(verdict.alpha, verdict.witness);
}

bool CrosscheckReport::consistent() const {
  for (const ImplicationCheck& c : checks) {
    if (!c.consistent) return false;
  }
  return true;
}

const Verdict& CrosscheckReport::verdict(AxiomId axiom) const {
  for (const auto& [a, v] : verdicts) {
    if (a == axiom) return v;
  }
  throw std::out_of_range("axiom not part of the crosscheck");
}

CrosscheckReport implication_crosscheck(const SolutionSpec& solution, const SearchStrategy& strategy) {
  validate(strategy);
  CrosscheckReport report{solution, {}, {}};

  if (const auto* w = std::get_if<WitnessStrategy>(&strategy)) {
    for (const auto& [axiom, list] : closed_witnesses(w->bundle_ids)) {
      report.verdicts.emplace_back(axiom, check_instances(axiom, solution, list));
    }
  } else {
    for (AxiomId axiom : crosscheck_axioms()) {
      report.verdicts.emplace_back(axiom, search_counterexample(axiom, solution, strategy));
    }
  }

  const bool lin = !found(report.verdict(AxiomId::linearity));
  const bool nppe = !found(report.verdict(AxiomId::null_player_productive_environment));
  const bool npn = !found(report.verdict(AxiomId::null_player_neutrality));
  const bool nfpp = !found(report.verdict(AxiomId::nullifying_player_property));
  const bool nfpn = !found(report.verdict(AxiomId::nullifying_player_neutrality));
  const bool standard = !found(report.verdict(AxiomId::coalitional_standard_equivalence));

  report.checks.push_back({"nppe_implies_npn", "linearity and NPPE imply null player neutrality", lin && nppe, !(lin && nppe) || npn});
  report.checks.push_back({"nfpn_iff_standard_equivalence", "nullifying player neutrality iff coalitional standard equivalence", true,
                           nfpn == standard});
  report.checks.push_back({"nfpp_iff_nfpn_under_linearity", "under linearity, nullifying player property iff nullifying player neutrality", lin,
                           !lin || nfpp == nfpn});
  return report;
}

}  // namespace coop
