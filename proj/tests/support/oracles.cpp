#include "oracles.hpp"

#include <algorithm>
#include <numeric>

#include <gmpxx.h>

namespace coop::testing {

namespace {

mpq_class q(const Rat& x) {
  mpq_class r(x.str());
  r.canonicalize();
  return r;
}

std::string s(const mpq_class& x) { return x.get_str(); }

}  // namespace

std::string dividend_by_inclusion_exclusion(const Game& v, Coalition t) {
  mpq_class sum = 0;
  for (std::uint32_t m = 0; m < v.coalition_count(); ++m) {
    const Coalition sub(m);
    if (!sub.subset_of(t)) continue;
    const bool odd = (t.size() - sub.size()) % 2 != 0;
    sum += odd ? -q(v(sub)) : q(v(sub));
  }
  return s(sum);
}

std::vector<std::string> shapley_by_orders(const Game& v) {
  const int n = v.n();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<mpq_class> total(n, 0);
  long orders = 0;
  do {
    std::uint32_t mask = 0;
    for (int p : order) {
      const std::uint32_t next = mask | (std::uint32_t{1} << p);
      total[p] += q(v(Coalition(next))) - q(v(Coalition(mask)));
      mask = next;
    }
    ++orders;
  } while (std::next_permutation(order.begin(), order.end()));
  std::vector<std::string> out;
  for (mpq_class& x : total) {
    x /= orders;
    out.push_back(s(x));
  }
  return out;
}

std::vector<std::string> egalitarian_by_orders(const std::string& alpha, const Game& v) {
  mpq_class a(alpha);
  a.canonicalize();
  const auto sh = shapley_by_orders(v);
  const mpq_class ed = q(v.grand_worth()) / v.n();
  std::vector<std::string> out;
  for (const std::string& x : sh) {
    mpq_class y(x);
    out.push_back(s(a * ed + (1 - a) * y));
  }
  return out;
}

std::vector<int> null_players_naive(const Game& v) {
  std::vector<int> out;
  for (int i = 0; i < v.n(); ++i) {
    bool null = true;
    for (std::uint32_t m = 0; m < v.coalition_count() && null; ++m) {
      null = v(Coalition(m | (1u << i))) == v(Coalition(m & ~(1u << i)));
    }
    if (null) out.push_back(i + 1);
  }
  return out;
}

Game grid_game(const std::vector<Rat>& grid, int n, std::uint64_t index) {
  std::vector<Rat> w(std::size_t{1} << n);
  for (std::size_t m = 1; m < w.size(); ++m) {
    w[m] = grid[index % grid.size()];
    index /= grid.size();
  }
  return Game::from_worths(n, std::move(w));
}

std::vector<std::string> strings(const PayoffVector& x) {
  std::vector<std::string> out;
  for (const Rat& r : x.values()) out.push_back(r.str());
  return out;
}

}  // namespace coop::testing
