#include "coop/game.hpp"

#include <stdexcept>

namespace coop {

namespace {

void check_player_count(int n) {
  if (n < 1 || n > kMaxPlayers) {
    throw std::invalid_argument("player count " + std::to_string(n) + " outside 1.." + std::to_string(kMaxPlayers));
  }
}

void check_same_shape(const Game& v, const Game& w) {
  if (v.n() != w.n()) throw std::invalid_argument("games have different player counts");
}

void check_nonempty(int n, Coalition t) {
  check_player_count(n);
  if (t.empty()) throw std::invalid_argument("basis game needs a nonempty coalition");
  if (!t.subset_of(Coalition::grand(n))) throw std::invalid_argument("coalition outside the player set");
}

}  // namespace

Game Game::zero(int n) {
  check_player_count(n);
  return Game(n, std::vector<Rat>(std::size_t{1} << n));
}

Game Game::from_worths(int n, std::vector<Rat> worths) {
  check_player_count(n);
  if (worths.size() != (std::size_t{1} << n)) throw std::invalid_argument("worth table must have 2^n entries");
  if (!worths[0].is_zero()) throw std::invalid_argument("the empty coalition must have worth 0");
  return Game(n, std::move(worths));
}

bool Game::is_zero() const {
  for (const Rat& x : worth_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Rat PayoffVector::sum() const {
  Rat s;
  for (const Rat& x : values_) s += x;
  return s;
}

std::string PayoffVector::str() const {
  std::string s = "(";
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (k) s += ", ";
    s += values_[k].str();
  }
  return s + ")";
}

PayoffVector operator+(const PayoffVector& a, const PayoffVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("payoff vectors have different lengths");
  std::vector<Rat> out(a.values_.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.values_[k] + b.values_[k];
  return PayoffVector(std::move(out));
}

PayoffVector operator-(const PayoffVector& a, const PayoffVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("payoff vectors have different lengths");
  std::vector<Rat> out(a.values_.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.values_[k] - b.values_[k];
  return PayoffVector(std::move(out));
}

PayoffVector operator*(const Rat& k, const PayoffVector& a) {
  std::vector<Rat> out(a.values_.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = k * a.values_[j];
  return PayoffVector(std::move(out));
}

Game make_game(int n, std::span<const std::pair<Coalition, Rat>> assignments) {
  check_player_count(n);
  const std::size_t size = std::size_t{1} << n;
  std::vector<Rat> worths(size);
  std::vector<bool> seen(size, false);
  for (const auto& [s, value] : assignments) {
    if (s.mask() >= size) throw std::invalid_argument("coalition " + s.str() + " outside the player set");
    if (seen[s.mask()]) throw std::invalid_argument("duplicate coalition " + s.str());
    if (s.empty() && !value.is_zero()) throw std::invalid_argument("the empty coalition must have worth 0");
    seen[s.mask()] = true;
    worths[s.mask()] = value;
  }
  return Game::from_worths(n, std::move(worths));
}

Game make_game(int n, std::initializer_list<std::pair<Coalition, Rat>> assignments) {
  return make_game(n, std::span<const std::pair<Coalition, Rat>>(assignments.begin(), assignments.size()));
}

Game linear_combine(const Rat& a, const Game& v, const Rat& b, const Game& w) {
  check_same_shape(v, w);
  std::vector<Rat> out(v.coalition_count());
  for (std::size_t m = 1; m < out.size(); ++m) out[m] = a * v.worths()[m] + b * w.worths()[m];
  return detail::GameAccess::make(v.n(), std::move(out));
}

Game operator+(const Game& v, const Game& w) {
  check_same_shape(v, w);
  Game out = v;
  detail::add_into(out, v, w);
  return out;
}

Game operator-(const Game& v, const Game& w) { return linear_combine(1, v, -1, w); }

Game operator*(const Rat& a, const Game& v) {
  std::vector<Rat> out(v.coalition_count());
  for (std::size_t m = 1; m < out.size(); ++m) out[m] = a * v.worths()[m];
  return detail::GameAccess::make(v.n(), std::move(out));
}

Game unanimity_game(int n, Coalition t) {
  check_nonempty(n, t);
  std::vector<Rat> worths(std::size_t{1} << n);
  for (std::uint32_t m = 0; m < worths.size(); ++m) {
    if ((m & t.mask()) == t.mask()) worths[m] = 1;
  }
  return detail::GameAccess::make(n, std::move(worths));
}

Game canonical_game(int n, Coalition t) {
  check_nonempty(n, t);
  std::vector<Rat> worths(std::size_t{1} << n);
  worths[t.mask()] = 1;
  return detail::GameAccess::make(n, std::move(worths));
}

Game permute_game(const Game& v, const Permutation& pi) {
  if (pi.size() != v.n()) throw std::invalid_argument("permutation size differs from player count");
  std::vector<Rat> out(v.coalition_count());
  for (std::uint32_t m = 1; m < out.size(); ++m) out[pi.apply(Coalition(m)).mask()] = v.worths()[m];
  return detail::GameAccess::make(v.n(), std::move(out));
}

void check_player(const Game& v, PlayerId i) {
  if (i.index() < 1 || i.index() > v.n()) {
    throw std::invalid_argument("player " + std::to_string(i.index()) + " outside 1.." + std::to_string(v.n()));
  }
}

namespace detail {

void add_into(Game& out, const Game& a, const Game& b) {
  auto& dst = GameAccess::worths(out);
  const auto x = a.worths();
  const auto y = b.worths();
  for (std::size_t m = 1; m < dst.size(); ++m) dst[m] = x[m] + y[m];
}

}  // namespace detail

}  // namespace coop
