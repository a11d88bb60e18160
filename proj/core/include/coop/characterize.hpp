#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "coop/search.hpp"

namespace coop {

/// The family parameter read off the unanimity games: η is player n's payoff
/// on u_{1} and α = n·η.
struct ConsistentFit {
  Rat alpha;
  Rat eta;
};

/// First (T, i) where φ_i(u_T) departs from the payoff the fitted α predicts.
struct Inconsistent {
  Coalition t;
  PlayerId i;
  Rat expected;
  Rat actual;
};

using FitResult = std::variant<ConsistentFit, Inconsistent>;

/// Agreement with α·ED + (1−α)·Sh on every sampled game. Evidence within the
/// trial budget, not a proof.
struct InFamily {
  Rat alpha;
  std::uint64_t trials = 0;
};

/// A game on which φ differs from the family member with parameter `alpha`.
/// `expected` is the family payoff, `actual` the solution's.
struct NotInFamily {
  Rat alpha;
  Game witness;
  PayoffVector expected;
  PayoffVector actual;
};

using MembershipVerdict = std::variant<InFamily, NotInFamily>;

/// Requires n ≥ 3. Sweeps T in bitmask order; within T, players outside T are
/// checked before players in T.
FitResult fit_alpha(const SolutionSpec& solution, int n);

/// fit_alpha, then `trials` structured random games drawn from
/// GameSampler(mix_seed(seed, k)). Requires n ≥ 3 and trials > 0.
MembershipVerdict verify_family_membership(const SolutionSpec& solution, int n, std::uint64_t trials,
                                           std::uint64_t seed);

/// True when `verdict` is NotInFamily and the solution still disagrees with
/// the family member on the witness.
bool refails(const SolutionSpec& solution, const NotInFamily& verdict);

struct ImplicationCheck {
  /// nppe_implies_npn, nfpn_iff_standard_equivalence or nfpp_iff_nfpn_under_linearity.
  std::string name;
  std::string statement;
  /// False when the hypothesis did not hold, so nothing was tested.
  bool applicable = false;
  bool consistent = true;
};

struct CrosscheckReport {
  SolutionSpec solution;
  std::vector<std::pair<AxiomId, Verdict>> verdicts;
  std::vector<ImplicationCheck> checks;

  /// An inconsistent check contradicts a proven implication and points at a bug.
  bool consistent() const;
  const Verdict& verdict(AxiomId axiom) const;
};

/// Runs linearity, NPPE, NPN, NfPP, NfPN and coalitional standard equivalence
/// under `strategy` and tests the verdict pattern against:
///   linearity and NPPE pass ⇒ NPN passes;
///   NfPN and standard equivalence have the same outcome;
///   linearity passes ⇒ NfPP and NfPN have the same outcome.
/// BudgetExhausted counts as "no counterexample". Under a witness strategy the
/// corpus instances are closed under the constructions the implications are
/// proved with, so a witness for one side yields one for the other.
CrosscheckReport implication_crosscheck(const SolutionSpec& solution, const SearchStrategy& strategy);

}  // namespace coop
