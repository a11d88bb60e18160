#include "coop/solutions.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

#include "coop/basis.hpp"
#include "coop/players.hpp"

namespace coop {

namespace {

constexpr std::array<std::string_view, 10> kIds = {
    "shapley", "equal_division", "egalitarian", "equal_surplus_division", "phi1",
    "phi2",    "zero",           "asym_first_player", "max_v1",          "vi_plus_a",
};

constexpr std::int64_t factorial(int k) {
  std::int64_t f = 1;
  for (int j = 2; j <= k; ++j) f *= j;
  return f;
}

// Integer marginal weights (s−1)!(n−s)! indexed by s, and n!.
struct ShapleyWeights {
  std::array<std::int64_t, kMaxPlayers + 1> by_size{};
  Rat n_factorial;
};

const ShapleyWeights& shapley_weights(int n) {
  static const auto table = [] {
    std::array<ShapleyWeights, kMaxPlayers + 1> t{};
    for (int m = 1; m <= kMaxPlayers; ++m) {
      for (int s = 1; s <= m; ++s) t[m].by_size[s] = factorial(s - 1) * factorial(m - s);
      t[m].n_factorial = factorial(m);
    }
    return t;
  }();
  return table[n];
}

bool constant_on_nonempty(const Game& v) {
  const auto w = v.worths();
  for (std::size_t m = 2; m < w.size(); ++m) {
    if (w[m] != w[1]) return false;
  }
  return true;
}

Rat singleton_sum(const Game& v) {
  Rat s;
  for (int k = 1; k <= v.n(); ++k) s += v.singleton_worth(PlayerId(k));
  return s;
}

}  // namespace

SolutionSpec SolutionSpec::vi_plus_a(Rat a) {
  if (a.is_zero()) throw std::invalid_argument("vi_plus_a needs a nonzero constant");
  return SolutionSpec(SolutionKind::vi_plus_a, std::move(a));
}

SolutionSpec SolutionSpec::parse(std::string_view id, std::optional<Rat> alpha, std::optional<Rat> a) {
  const auto it = std::find(kIds.begin(), kIds.end(), id);
  if (it == kIds.end()) throw std::invalid_argument("unknown solution '" + std::string(id) + "'");
  const auto kind = static_cast<SolutionKind>(it - kIds.begin());
  if (alpha && kind != SolutionKind::egalitarian) throw std::invalid_argument("--alpha applies only to egalitarian");
  if (a && kind != SolutionKind::vi_plus_a) throw std::invalid_argument("--a applies only to vi_plus_a");
  switch (kind) {
    case SolutionKind::egalitarian:
      if (!alpha) throw std::invalid_argument("egalitarian needs --alpha");
      return egalitarian(*alpha);
    case SolutionKind::vi_plus_a:
      return vi_plus_a(a.value_or(Rat(1)));
    default:
      return SolutionSpec(kind);
  }
}

std::string_view SolutionSpec::id() const { return kIds[static_cast<std::size_t>(kind_)]; }

std::string SolutionSpec::name() const {
  std::string s(id());
  if (kind_ == SolutionKind::egalitarian || kind_ == SolutionKind::vi_plus_a) s += "(" + param_.str() + ")";
  return s;
}

std::vector<std::string_view> solution_ids() { return {kIds.begin(), kIds.end()}; }

std::vector<SolutionSpec> solution_catalog() {
  return {
      SolutionSpec::shapley(),
      SolutionSpec::equal_division(),
      SolutionSpec::egalitarian(Rat(1, 2)),
      SolutionSpec::egalitarian(-1),
      SolutionSpec::equal_surplus_division(),
      SolutionSpec::phi1(),
      SolutionSpec::phi2(),
      SolutionSpec::zero(),
      SolutionSpec::asym_first_player(),
      SolutionSpec::max_v1(),
      SolutionSpec::vi_plus_a(1),
  };
}

PayoffVector shapley(const Game& v) {
  const int n = v.n();
  const ShapleyWeights& wt = shapley_weights(n);
  const auto w = v.worths();
  std::vector<Rat> out(n);
  for (int k = 0; k < n; ++k) {
    const std::uint32_t bit = std::uint32_t{1} << k;
    Rat acc;
    for (std::uint32_t m = bit; m < w.size(); m = (m + 1) | bit) {
      acc += Rat(wt.by_size[__builtin_popcount(m)]) * (w[m] - w[m ^ bit]);
    }
    out[k] = acc / wt.n_factorial;
  }
  return PayoffVector(std::move(out));
}

PayoffVector shapley_by_dividends(const Game& v) {
  const CoefficientMap lambda = to_coefficients(v, Basis::unanimity);
  const auto c = lambda.raw();
  std::vector<Rat> out(v.n());
  for (std::uint32_t t = 1; t < c.size(); ++t) {
    if (c[t].is_zero()) continue;
    const Rat share = c[t] / Rat(__builtin_popcount(t));
    for (std::uint32_t m = t; m != 0; m &= m - 1) out[__builtin_ctz(m)] += share;
  }
  return PayoffVector(std::move(out));
}

PayoffVector shapley_oracle(const Game& v) {
  const int n = v.n();
  if (n > kShapleyOracleMaxPlayers) {
    throw std::invalid_argument("permutation oracle supports at most " + std::to_string(kShapleyOracleMaxPlayers) +
                                " players");
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<Rat> total(n);
  std::int64_t orders = 0;
  do {
    std::uint32_t joined = 0;
    for (int k : order) {
      const std::uint32_t next = joined | (std::uint32_t{1} << k);
      total[k] += v.worth(Coalition(next)) - v.worth(Coalition(joined));
      joined = next;
    }
    ++orders;
  } while (std::next_permutation(order.begin(), order.end()));
  for (Rat& x : total) x /= Rat(orders);
  return PayoffVector(std::move(total));
}

PayoffVector equal_division(const Game& v) {
  return PayoffVector(std::vector<Rat>(v.n(), v.grand_worth() / Rat(v.n())));
}

PayoffVector egalitarian_shapley(const Rat& alpha, const Game& v) {
  return alpha * equal_division(v) + (Rat(1) - alpha) * shapley(v);
}

PayoffVector equal_surplus_division(const Game& v) {
  const Rat surplus_share = (v.grand_worth() - singleton_sum(v)) / Rat(v.n());
  std::vector<Rat> out(v.n());
  for (int k = 1; k <= v.n(); ++k) out[k - 1] = v.singleton_worth(PlayerId(k)) + surplus_share;
  return PayoffVector(std::move(out));
}

PayoffVector phi1(const Game& v) {
  const int n = v.n();
  const Rat singles = singleton_sum(v);
  std::vector<Rat> out(n);
  if (!singles.is_zero()) {
    const Rat scale = v.grand_worth() / singles;
    for (int k = 1; k <= n; ++k) out[k - 1] = v.singleton_worth(PlayerId(k)) * scale;
    return PayoffVector(std::move(out));
  }
  const std::vector<PlayerId> nulls = null_players(v);
  const int active = n - static_cast<int>(nulls.size());
  if (active == 0) {
    // Every player null forces v ≡ 0, so everyone already holds 0.
    if (!v.is_zero()) throw std::logic_error("phi1: all players null in a nonzero game");
    return PayoffVector(std::move(out));
  }
  const Rat share = v.grand_worth() / Rat(active);
  for (int k = 1; k <= n; ++k) {
    if (!std::binary_search(nulls.begin(), nulls.end(), PlayerId(k))) out[k - 1] = share;
  }
  return PayoffVector(std::move(out));
}

PayoffVector phi2(const Game& v) {
  const int n = v.n();
  const std::vector<PlayerId> nullifying = nullifying_players(v);
  if (!nullifying.empty()) {
    std::vector<Rat> out(n);
    const int others = n - static_cast<int>(nullifying.size());
    if (others > 0) {
      const Rat share = v.grand_worth() / Rat(others);
      for (int k = 1; k <= n; ++k) {
        if (!std::binary_search(nullifying.begin(), nullifying.end(), PlayerId(k))) out[k - 1] = share;
      }
    }
    return PayoffVector(std::move(out));
  }
  if (constant_on_nonempty(v)) return equal_division(v);
  return shapley(v);
}

PayoffVector zero_solution(const Game& v) { return PayoffVector::zeros(v.n()); }

PayoffVector asym_first_player(const Game& v) {
  if (v.n() < 2) throw std::invalid_argument("asym_first_player needs at least two players");
  std::vector<Rat> out(v.n(), v.grand_worth() / Rat(v.n() - 1));
  out[0] = 0;
  return PayoffVector(std::move(out));
}

PayoffVector max_v1(const Game& v) {
  const Rat& v1 = v.singleton_worth(PlayerId(1));
  return PayoffVector(std::vector<Rat>(v.n(), v1.sign() > 0 ? v1 : Rat(0)));
}

PayoffVector vi_plus_a(const Rat& a, const Game& v) {
  if (a.is_zero()) throw std::invalid_argument("vi_plus_a needs a nonzero constant");
  std::vector<Rat> out(v.n());
  for (int k = 1; k <= v.n(); ++k) out[k - 1] = v.singleton_worth(PlayerId(k)) + a;
  return PayoffVector(std::move(out));
}

PayoffVector evaluate(const SolutionSpec& spec, const Game& v) {
  switch (spec.kind()) {
    case SolutionKind::shapley:
      return shapley(v);
    case SolutionKind::equal_division:
      return equal_division(v);
    case SolutionKind::egalitarian:
      return egalitarian_shapley(spec.parameter(), v);
    case SolutionKind::equal_surplus_division:
      return equal_surplus_division(v);
    case SolutionKind::phi1:
      return phi1(v);
    case SolutionKind::phi2:
      return phi2(v);
    case SolutionKind::zero:
      return zero_solution(v);
    case SolutionKind::asym_first_player:
      return asym_first_player(v);
    case SolutionKind::max_v1:
      return max_v1(v);
    case SolutionKind::vi_plus_a:
      return vi_plus_a(spec.parameter(), v);
  }
  throw std::invalid_argument("unknown solution kind");
}

}  // namespace coop
