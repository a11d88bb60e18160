#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "coop/axioms.hpp"

namespace coop {

/// Enumerates every admissible instance over games whose nonempty-coalition
/// worths range over `grid`.
///
/// Slot order: the player (when the game domains depend on it) is outermost,
/// then the primary game, then the secondary slot. The primary game walks its
/// whole domain with coalition 1 as the fastest-moving digit. Secondary slots
/// (the second game of additivity/linearity, the augmenting games of the
/// equivalence and neutrality axioms, the increment of weak monotonicity) are
/// capped at `nested_budget` members: a domain of size D > budget is sampled
/// at indices k·2654435761 mod D for k < budget. Linearity pairs the k-th
/// sampled w with scalars (p[k mod 8], p[(k+3) mod 8]) from the scalar pool.
/// Null and nullifying augmentations at n = 3 have 4^3 = 64 members, so the
/// default budget enumerates them completely.
///
/// When the whole domain holds more than `max_instances` instances the
/// enumeration stops at a primary-slot boundary and the result is
/// BudgetExhausted unless a counterexample turned up first.
struct ExhaustiveStrategy {
  std::vector<Rat> grid = {Rat(-1), Rat(0), Rat(1), Rat(2)};
  int n = 3;
  std::uint64_t nested_budget = 64;
  std::uint64_t max_instances = std::uint64_t{1} << 28;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// `trials` instances from generate_instance with seeds mix_seed(seed, k).
struct RandomStrategy {
  int n = 3;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 42;
};

/// The instances recorded for the axiom in the named corpus bundles (all
/// bundles when the list is empty).
struct WitnessStrategy {
  std::vector<std::string> bundle_ids;
};

using SearchStrategy = std::variant<ExhaustiveStrategy, RandomStrategy, WitnessStrategy>;

struct Passed {
  std::uint64_t instances_checked = 0;
};

struct Counterexample {
  AxiomInstance instance;
  Sides sides;
};

/// The instance cap stopped the enumeration before the domain was covered.
struct BudgetExhausted {
  std::uint64_t instances_checked = 0;
  std::uint64_t primary_games_covered = 0;
  std::uint64_t primary_games_total = 0;
};

/// "Passed" means no counterexample within the strategy's domain; it is
/// evidence, never a proof of the universally quantified axiom.
using Verdict = std::variant<Passed, Counterexample, BudgetExhausted>;

inline bool is_counterexample(const Verdict& v) { return std::holds_alternative<Counterexample>(v); }
inline bool is_passed(const Verdict& v) { return std::holds_alternative<Passed>(v); }
std::string_view outcome_name(const Verdict& v);

void validate(const SearchStrategy& strategy);

/// Returns the first counterexample in enumeration order, independent of the
/// number of worker threads.
Verdict search_counterexample(AxiomId axiom, const SolutionSpec& solution, const SearchStrategy& strategy);

/// First failing instance of an explicit list, or Passed(list size).
Verdict check_instances(AxiomId axiom, const SolutionSpec& solution, std::span<const AxiomInstance> instances);

struct AxiomReport {
  SolutionSpec solution;
  std::vector<std::pair<AxiomId, Verdict>> rows;
};

AxiomReport axiom_report(const SolutionSpec& solution, std::span<const AxiomId> axioms,
                         const SearchStrategy& strategy);

}  // namespace coop
