#include "coop/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>

#include "coop/corpus.hpp"
#include "coop/players.hpp"
#include "coop/random.hpp"

namespace coop {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();
constexpr std::uint64_t kSampleStride = 2654435761ULL;
constexpr std::uint64_t kChunk = 64;

__extension__ typedef unsigned __int128 u128;

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  return __builtin_mul_overflow(a, b, &r) ? kSaturated : r;
}

std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t k = 0; k < exp; ++k) r = sat_mul(r, base);
  return r;
}

std::vector<std::uint64_t> sample_indices(std::uint64_t size, std::uint64_t budget) {
  std::vector<std::uint64_t> out;
  if (size <= budget) {
    out.resize(size);
    for (std::uint64_t k = 0; k < size; ++k) out[k] = k;
    return out;
  }
  out.reserve(budget);
  for (std::uint64_t k = 0; k < budget; ++k) {
    out.push_back(static_cast<std::uint64_t>((static_cast<u128>(k) * kSampleStride) % size));
  }
  return out;
}

// Unranks the k-th permutation of 1..n in lexicographic order.
Permutation unrank_permutation(int n, std::uint64_t rank) {
  std::vector<int> pool(n);
  for (int k = 0; k < n; ++k) pool[k] = k + 1;
  std::vector<std::uint64_t> fact(n + 1, 1);
  for (int k = 1; k <= n; ++k) fact[k] = fact[k - 1] * static_cast<std::uint64_t>(k);
  std::vector<int> images;
  for (int k = n; k >= 1; --k) {
    const std::uint64_t pick = rank / fact[k - 1];
    rank %= fact[k - 1];
    images.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return Permutation::from_images(std::move(images));
}

// Games whose worths on a set of "digit" coalitions range over a grid.
class GridDomain {
 public:
  enum class Kind { free, null_extension, nullifying };

  GridDomain(const std::vector<Rat>& grid, int n, Kind kind, std::uint32_t player_bit = 0)
      : grid_(&grid), n_(n), kind_(kind), bit_(player_bit) {
    const std::uint32_t size = std::uint32_t{1} << n;
    for (std::uint32_t m = 1; m < size; ++m) {
      if (kind == Kind::free || !(m & bit_)) masks_.push_back(m);
    }
    size_ = sat_pow(grid.size(), masks_.size());
  }

  std::uint64_t size() const { return size_; }

  Game at(std::uint64_t index) const {
    std::vector<Rat> w(std::size_t{1} << n_);
    const std::uint64_t g = grid_->size();
    for (std::uint32_t m : masks_) {
      const Rat& x = (*grid_)[index % g];
      index /= g;
      w[m] = x;
      if (kind_ == Kind::null_extension) w[m | bit_] = x;
    }
    return detail::GameAccess::make(n_, std::move(w));
  }

 private:
  const std::vector<Rat>* grid_;
  int n_;
  Kind kind_;
  std::uint32_t bit_;
  std::vector<std::uint32_t> masks_;
  std::uint64_t size_;
};

// Increments g for weak monotonicity: grid worths on nonempty S ∌ i, and
// g(S ∪ i) = g(S) + δ_S with δ_S from the nonnegative part of the grid.
class IncrementDomain {
 public:
  IncrementDomain(const std::vector<Rat>& grid, int n, std::uint32_t player_bit) : grid_(&grid), n_(n), bit_(player_bit) {
    for (const Rat& x : grid) {
      if (x.sign() >= 0) nonneg_.push_back(x);
    }
    const std::uint32_t size = std::uint32_t{1} << n;
    for (std::uint32_t m = 0; m < size; ++m) {
      if (!(m & bit_)) off_.push_back(m);
    }
    size_ = nonneg_.empty() ? 0 : sat_mul(sat_pow(grid.size(), off_.size() - 1), sat_pow(nonneg_.size(), off_.size()));
  }

  std::uint64_t size() const { return size_; }

  // Empty when g(N) < 0, which violates v(N) ≥ w(N).
  std::optional<Game> at(std::uint64_t index) const {
    std::vector<Rat> w(std::size_t{1} << n_);
    const std::uint64_t g = grid_->size();
    for (std::uint32_t m : off_) {
      if (m == 0) continue;
      w[m] = (*grid_)[index % g];
      index /= g;
    }
    const std::uint64_t h = nonneg_.size();
    for (std::uint32_t m : off_) {
      w[m | bit_] = w[m] + nonneg_[index % h];
      index /= h;
    }
    if (w.back().sign() < 0) return std::nullopt;
    return detail::GameAccess::make(n_, std::move(w));
  }

 private:
  const std::vector<Rat>* grid_;
  int n_;
  std::uint32_t bit_;
  std::vector<Rat> nonneg_;
  std::vector<std::uint32_t> off_;
  std::uint64_t size_ = 0;
};

struct OuterOutcome {
  std::uint64_t instances = 0;
  std::optional<Counterexample> found;
};

bool player_outer(AxiomId axiom) {
  switch (axiom) {
    case AxiomId::efficiency:
    case AxiomId::additivity:
    case AxiomId::linearity:
    case AxiomId::symmetry:
    case AxiomId::anonymity:
      return false;
    default:
      return true;
  }
}

// Axioms whose primary game ranges over a null or nullifying domain.
bool constrained_primary(AxiomId axiom) {
  return axiom == AxiomId::null_player_property || axiom == AxiomId::null_player_productive_environment ||
         axiom == AxiomId::nullifying_player_property;
}

class ExhaustiveRun {
 public:
  ExhaustiveRun(AxiomId axiom, const SolutionSpec& solution, const ExhaustiveStrategy& strategy)
      : axiom_(axiom), solution_(solution), strategy_(strategy), n_(strategy.n), free_(strategy.grid, n_, GridDomain::Kind::free) {
    const std::uint64_t budget = strategy.nested_budget;
    switch (axiom) {
      case AxiomId::additivity:
      case AxiomId::linearity: {
        const auto pool = linearity_scalar_pool();
        std::vector<Secondary> list;
        const auto idx = sample_indices(free_.size(), budget);
        for (std::size_t k = 0; k < idx.size(); ++k) {
          Game w = free_.at(idx[k]);
          PayoffVector p = evaluate(solution_, w);
          list.push_back({std::move(w), std::move(p), pool[k % pool.size()], pool[(k + 3) % pool.size()]});
        }
        inner_bound_ = list.size();
        secondary_.push_back(std::move(list));
        break;
      }
      case AxiomId::symmetry:
        inner_bound_ = static_cast<std::uint64_t>(n_) * (n_ - 1) / 2;
        break;
      case AxiomId::anonymity: {
        std::uint64_t fact = 1;
        for (int k = 2; k <= n_; ++k) fact = sat_mul(fact, k);
        for (std::uint64_t r : sample_indices(fact, budget)) perms_.push_back(unrank_permutation(n_, r));
        inner_bound_ = perms_.size() * n_;
        break;
      }
      case AxiomId::null_player_property:
      case AxiomId::null_player_productive_environment:
      case AxiomId::nullifying_player_property: {
        const auto kind = axiom == AxiomId::nullifying_player_property ? GridDomain::Kind::nullifying
                                                                        : GridDomain::Kind::null_extension;
        for (int p = 1; p <= n_; ++p) primary_.emplace_back(strategy.grid, n_, kind, PlayerId(p).bit());
        inner_bound_ = 1;
        break;
      }
      case AxiomId::coalitional_strategic_equivalence:
      case AxiomId::null_player_neutrality:
      case AxiomId::coalitional_standard_equivalence:
      case AxiomId::nullifying_player_neutrality: {
        const bool null = axiom == AxiomId::coalitional_strategic_equivalence ||
                          axiom == AxiomId::null_player_neutrality;
        const bool neutrality = axiom == AxiomId::null_player_neutrality ||
                                axiom == AxiomId::nullifying_player_neutrality;
        for (int p = 1; p <= n_; ++p) {
          GridDomain dom(strategy.grid, n_, null ? GridDomain::Kind::null_extension : GridDomain::Kind::nullifying,
                         PlayerId(p).bit());
          std::vector<Secondary> list;
          for (std::uint64_t idx : sample_indices(dom.size(), budget)) list.push_back({dom.at(idx), {}, 0, 0});
          std::uint64_t pairs = 0;
          for (std::size_t a = 0; a < list.size(); ++a) {
            for (std::size_t b = a + 1; b < list.size(); ++b) {
              if (list[a].game.grand_worth() == list[b].game.grand_worth()) ++pairs;
            }
          }
          const std::uint64_t count = neutrality ? pairs : list.size();
          inner_counts_.push_back(count);
          inner_bound_ = std::max(inner_bound_, count);
          secondary_.push_back(std::move(list));
        }
        break;
      }
      case AxiomId::weak_monotonicity:
        for (int p = 1; p <= n_; ++p) {
          IncrementDomain dom(strategy.grid, n_, PlayerId(p).bit());
          std::vector<Secondary> list;
          for (std::uint64_t idx : sample_indices(dom.size(), budget)) {
            if (auto g = dom.at(idx)) list.push_back({std::move(*g), {}, 0, 0});
          }
          inner_bound_ = std::max<std::uint64_t>(inner_bound_, list.size());
          inner_counts_.push_back(list.size());
          secondary_.push_back(std::move(list));
        }
        break;
      case AxiomId::efficiency:
        inner_bound_ = 1;
        break;
    }

    const std::uint64_t per_player = constrained_primary(axiom) ? primary_.front().size() : free_.size();
    primary_per_player_ = per_player;
    outer_count_ = player_outer(axiom) ? sat_mul(per_player, n_) : per_player;
  }

  std::uint64_t outer_count() const { return outer_count_; }
  std::uint64_t inner_bound() const { return std::max<std::uint64_t>(inner_bound_, 1); }

  OuterOutcome visit(std::uint64_t outer) const {
    if (!player_outer(axiom_)) return visit_free(outer);
    const auto p = static_cast<int>(outer / primary_per_player_);
    return visit_player(PlayerId(p + 1), outer % primary_per_player_);
  }

 private:
  struct Secondary {
    Game game;
    PayoffVector payoff;
    Rat a;
    Rat b;
  };

  PayoffVector phi(const Game& v) const { return evaluate(solution_, v); }

  Counterexample confirm(AxiomInstance instance) const {
    Sides sides = evaluate_sides(axiom_, solution_, instance);
    if (sides.holds()) throw std::logic_error("exhaustive search and instance_holds disagree");
    return {std::move(instance), std::move(sides)};
  }

  OuterOutcome visit_free(std::uint64_t index) const {
    OuterOutcome out;
    const Game v = free_.at(index);
    switch (axiom_) {
      case AxiomId::efficiency: {
        out.instances = 1;
        if (phi(v).sum() != v.grand_worth()) out.found = confirm(AxiomInstance::make(axiom_, {v}));
        return out;
      }
      case AxiomId::additivity:
      case AxiomId::linearity: {
        const PayoffVector pv = phi(v);
        Game scratch = v;
        for (const Secondary& s : secondary_.front()) {
          ++out.instances;
          if (axiom_ == AxiomId::additivity) {
            detail::add_into(scratch, v, s.game);
            if (phi(scratch) == pv + s.payoff) continue;
            out.found = confirm(AxiomInstance::make(axiom_, {v, s.game}));
          } else {
            if (phi(linear_combine(s.a, v, s.b, s.game)) == s.a * pv + s.b * s.payoff) continue;
            out.found = confirm(AxiomInstance::make(axiom_, {v, s.game}, {}, {s.a, s.b}));
          }
          return out;
        }
        return out;
      }
      case AxiomId::symmetry: {
        std::optional<PayoffVector> pv;
        for (int i = 1; i <= n_; ++i) {
          for (int j = i + 1; j <= n_; ++j) {
            if (!symmetric_pair(v, PlayerId(i), PlayerId(j))) continue;
            ++out.instances;
            if (!pv) pv = phi(v);
            if ((*pv)[PlayerId(i)] != (*pv)[PlayerId(j)]) {
              out.found = confirm(AxiomInstance::make(axiom_, {v}, {PlayerId(i), PlayerId(j)}));
              return out;
            }
          }
        }
        return out;
      }
      case AxiomId::anonymity: {
        const PayoffVector pv = phi(v);
        for (const Permutation& pi : perms_) {
          const PayoffVector pp = phi(permute_game(v, pi));
          for (int i = 1; i <= n_; ++i) {
            ++out.instances;
            if (pv[PlayerId(i)] != pp[pi(PlayerId(i))]) {
              out.found = confirm(AxiomInstance::make(axiom_, {v}, {PlayerId(i)}, {}, pi));
              return out;
            }
          }
        }
        return out;
      }
      default:
        throw std::logic_error("axiom has a player-indexed domain");
    }
  }

  OuterOutcome visit_player(PlayerId i, std::uint64_t index) const {
    OuterOutcome out;
    const std::size_t slot = static_cast<std::size_t>(i.index() - 1);
    if (constrained_primary(axiom_)) {
      const Game v = primary_[slot].at(index);
      if (axiom_ == AxiomId::null_player_productive_environment && v.grand_worth().sign() < 0) return out;
      out.instances = 1;
      const Rat x = phi(v)[i];
      const bool ok = axiom_ == AxiomId::null_player_productive_environment ? x.sign() >= 0 : x.is_zero();
      if (!ok) out.found = confirm(AxiomInstance::make(axiom_, {v}, {i}));
      return out;
    }

    const Game v = free_.at(index);
    const auto& list = secondary_[slot];
    out.instances = inner_counts_[slot];
    Game scratch = v;

    switch (axiom_) {
      case AxiomId::coalitional_strategic_equivalence:
      case AxiomId::coalitional_standard_equivalence: {
        const Rat base = phi(v)[i];
        for (const Secondary& s : list) {
          detail::add_into(scratch, v, s.game);
          if (phi(scratch)[i] != base) {
            out.found = confirm(AxiomInstance::make(axiom_, {v, s.game}, {i}));
            return out;
          }
        }
        return out;
      }
      case AxiomId::null_player_neutrality:
      case AxiomId::nullifying_player_neutrality: {
        std::vector<Rat> vals;
        vals.reserve(list.size());
        for (const Secondary& s : list) {
          detail::add_into(scratch, v, s.game);
          vals.push_back(phi(scratch)[i]);
        }
        // Cheap pass: every group of equal grand worth carries one value.
        bool constant = true;
        for (std::size_t a = 0; a < list.size() && constant; ++a) {
          for (std::size_t b = 0; b < a; ++b) {
            if (list[b].game.grand_worth() == list[a].game.grand_worth()) {
              constant = vals[b] == vals[a];
              break;
            }
          }
        }
        if (constant) return out;
        for (std::size_t a = 0; a < list.size(); ++a) {
          for (std::size_t b = a + 1; b < list.size(); ++b) {
            if (list[a].game.grand_worth() == list[b].game.grand_worth() && vals[a] != vals[b]) {
              out.found = confirm(AxiomInstance::make(axiom_, {v, list[a].game, list[b].game}, {i}));
              return out;
            }
          }
        }
        throw std::logic_error("neutrality scan lost its witness");
      }
      case AxiomId::weak_monotonicity: {
        const Rat base = phi(v)[i];
        for (const Secondary& s : list) {
          detail::add_into(scratch, v, s.game);
          if (phi(scratch)[i] < base) {
            out.found = confirm(AxiomInstance::make(axiom_, {scratch, v}, {i}));
            return out;
          }
        }
        return out;
      }
      default:
        throw std::logic_error("axiom has no player-indexed domain");
    }
  }

  AxiomId axiom_;
  SolutionSpec solution_;
  ExhaustiveStrategy strategy_;
  int n_;
  GridDomain free_;
  std::vector<GridDomain> primary_;
  std::vector<std::vector<Secondary>> secondary_;
  std::vector<std::uint64_t> inner_counts_;
  std::vector<Permutation> perms_;
  std::uint64_t inner_bound_ = 0;
  std::uint64_t primary_per_player_ = 0;
  std::uint64_t outer_count_ = 0;
};

struct ChunkResult {
  std::uint64_t instances = 0;
  std::optional<Counterexample> found;
};

ChunkResult run_chunk(const ExhaustiveRun& run, std::uint64_t begin, std::uint64_t end) {
  ChunkResult r;
  for (std::uint64_t k = begin; k < end; ++k) {
    OuterOutcome o = run.visit(k);
    r.instances += o.instances;
    if (o.found) {
      r.found = std::move(o.found);
      return r;
    }
  }
  return r;
}

Verdict run_exhaustive(AxiomId axiom, const SolutionSpec& solution, const ExhaustiveStrategy& strategy) {
  const ExhaustiveRun run(axiom, solution, strategy);
  const std::uint64_t total = run.outer_count();
  const std::uint64_t limit = std::min(total, strategy.max_instances / run.inner_bound());
  const std::uint64_t chunks = (limit + kChunk - 1) / kChunk;

  unsigned workers = strategy.threads ? strategy.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(chunks, 1)));

  std::vector<ChunkResult> results(chunks);
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> best{kSaturated};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&] {
    try {
      for (;;) {
        const std::uint64_t c = next.fetch_add(1);
        if (c >= chunks || c > best.load()) return;
        results[c] = run_chunk(run, c * kChunk, std::min(limit, (c + 1) * kChunk));
        if (results[c].found) {
          std::uint64_t cur = best.load();
          while (c < cur && !best.compare_exchange_weak(cur, c)) {
          }
        }
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      best.store(0);
    }
  };

  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);

  if (best.load() != kSaturated) return std::move(*results[best.load()].found);
  std::uint64_t instances = 0;
  for (const ChunkResult& r : results) instances += r.instances;
  if (limit < total) return BudgetExhausted{instances, limit, total};
  return Passed{instances};
}

Verdict run_random(AxiomId axiom, const SolutionSpec& solution, const RandomStrategy& strategy) {
  for (std::uint64_t t = 0; t < strategy.trials; ++t) {
    AxiomInstance instance = generate_instance(axiom, strategy.n, mix_seed(strategy.seed, t));
    Sides sides = evaluate_sides(axiom, solution, instance);
    if (!sides.holds()) return Counterexample{std::move(instance), std::move(sides)};
  }
  return Passed{strategy.trials};
}

}  // namespace

std::string_view outcome_name(const Verdict& v) {
  switch (v.index()) {
    case 0:
      return "passed";
    case 1:
      return "counterexample";
    default:
      return "budget_exhausted";
  }
}

void validate(const SearchStrategy& strategy) {
  if (const auto* e = std::get_if<ExhaustiveStrategy>(&strategy)) {
    if (e->grid.empty()) throw std::invalid_argument("exhaustive grid must be nonempty");
    for (std::size_t a = 0; a < e->grid.size(); ++a) {
      for (std::size_t b = a + 1; b < e->grid.size(); ++b) {
        if (e->grid[a] == e->grid[b]) throw std::invalid_argument("exhaustive grid has duplicate values");
      }
    }
    if (e->n < 2 || e->n > kMaxPlayers) throw std::invalid_argument("exhaustive search needs 2 ≤ n ≤ 20");
    if (e->nested_budget == 0) throw std::invalid_argument("nested budget must be positive");
    if (e->max_instances == 0) throw std::invalid_argument("instance cap must be positive");
  } else if (const auto* r = std::get_if<RandomStrategy>(&strategy)) {
    if (r->n < 2 || r->n > kMaxPlayers) throw std::invalid_argument("random search needs 2 ≤ n ≤ 20");
    if (r->trials == 0) throw std::invalid_argument("random search needs at least one trial");
  }
}

Verdict check_instances(AxiomId axiom, const SolutionSpec& solution, std::span<const AxiomInstance> instances) {
  for (const AxiomInstance& instance : instances) {
    Sides sides = evaluate_sides(axiom, solution, instance);
    if (!sides.holds()) return Counterexample{instance, std::move(sides)};
  }
  return Passed{instances.size()};
}

Verdict search_counterexample(AxiomId axiom, const SolutionSpec& solution, const SearchStrategy& strategy) {
  validate(strategy);
  if (const auto* e = std::get_if<ExhaustiveStrategy>(&strategy)) return run_exhaustive(axiom, solution, *e);
  if (const auto* r = std::get_if<RandomStrategy>(&strategy)) return run_random(axiom, solution, *r);
  const auto& w = std::get<WitnessStrategy>(strategy);
  const std::vector<AxiomInstance> instances = witness_instances(axiom, w.bundle_ids);
  return check_instances(axiom, solution, instances);
}

AxiomReport axiom_report(const SolutionSpec& solution, std::span<const AxiomId> axioms,
                         const SearchStrategy& strategy) {
  AxiomReport report{solution, {}};
  for (AxiomId axiom : axioms) report.rows.emplace_back(axiom, search_counterexample(axiom, solution, strategy));
  return report;
}

}  // namespace coop
