#include "coop/players.hpp"

#include <stdexcept>

#include "coop/basis.hpp"

namespace coop {

bool is_null(const Game& v, PlayerId i) {
  check_player(v, i);
  const std::uint32_t bit = i.bit();
  const auto w = v.worths();
  for (std::uint32_t m = 0; m < w.size(); ++m) {
    if (!(m & bit) && w[m | bit] != w[m]) return false;
  }
  return true;
}

bool is_nullifying(const Game& v, PlayerId i) {
  check_player(v, i);
  const std::uint32_t bit = i.bit();
  const auto w = v.worths();
  for (std::uint32_t m = 0; m < w.size(); ++m) {
    if ((m & bit) && !w[m].is_zero()) return false;
  }
  return true;
}

std::vector<PlayerId> null_players(const Game& v) {
  std::vector<PlayerId> out;
  for (int k = 1; k <= v.n(); ++k) {
    if (is_null(v, PlayerId(k))) out.emplace_back(k);
  }
  return out;
}

std::vector<PlayerId> null_players_by_dividends(const Game& v) {
  const CoefficientMap lambda = to_coefficients(v, Basis::unanimity);
  const auto c = lambda.raw();
  std::vector<PlayerId> out;
  for (int k = 1; k <= v.n(); ++k) {
    const std::uint32_t bit = PlayerId(k).bit();
    bool null = true;
    for (std::uint32_t m = 0; m < c.size() && null; ++m) {
      if ((m & bit) && !c[m].is_zero()) null = false;
    }
    if (null) out.emplace_back(k);
  }
  return out;
}

std::vector<PlayerId> nullifying_players(const Game& v) {
  std::vector<PlayerId> out;
  for (int k = 1; k <= v.n(); ++k) {
    if (is_nullifying(v, PlayerId(k))) out.emplace_back(k);
  }
  return out;
}

bool symmetric_pair(const Game& v, PlayerId i, PlayerId j) {
  check_player(v, i);
  check_player(v, j);
  if (i == j) throw std::invalid_argument("symmetry needs two distinct players");
  const std::uint32_t bi = i.bit();
  const std::uint32_t bj = j.bit();
  const auto w = v.worths();
  for (std::uint32_t m = 0; m < w.size(); ++m) {
    if (!(m & (bi | bj)) && w[m | bi] != w[m | bj]) return false;
  }
  return true;
}

std::vector<std::pair<PlayerId, PlayerId>> symmetric_pairs(const Game& v) {
  std::vector<std::pair<PlayerId, PlayerId>> out;
  for (int a = 1; a <= v.n(); ++a) {
    for (int b = a + 1; b <= v.n(); ++b) {
      if (symmetric_pair(v, PlayerId(a), PlayerId(b))) out.emplace_back(PlayerId(a), PlayerId(b));
    }
  }
  return out;
}

}  // namespace coop
