#include "coop/random.hpp"

#include <array>
#include <numeric>
#include <stdexcept>

namespace coop {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::span<const Rat> linearity_scalar_pool() {
  static const std::array<Rat, 8> pool = {Rat(1), Rat(-1), Rat(2), Rat(-2), Rat(1, 2), Rat(-1, 2), Rat(3, 2), Rat(-3, 2)};
  return pool;
}

std::uint64_t GameSampler::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("empty range");
  return engine_() % bound;
}

Rat GameSampler::worth() {
  static constexpr std::array<std::int64_t, 5> dens = {1, 1, 1, 2, 3};
  const auto num = static_cast<std::int64_t>(below(13)) - 6;
  return Rat(num, dens[below(dens.size())]);
}

Rat GameSampler::nonnegative_worth() { return abs(worth()); }

Rat GameSampler::scalar() {
  const auto pool = linearity_scalar_pool();
  return pool[below(pool.size())];
}

PlayerId GameSampler::player(int n) { return PlayerId(static_cast<int>(below(n)) + 1); }

PlayerId GameSampler::player_other_than(int n, PlayerId other) {
  if (n < 2) throw std::invalid_argument("need two players");
  const int k = static_cast<int>(below(n - 1)) + 1;
  return PlayerId(k >= other.index() ? k + 1 : k);
}

Permutation GameSampler::permutation(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  for (int k = n - 1; k > 0; --k) std::swap(images[k], images[below(k + 1)]);
  return Permutation::from_images(std::move(images));
}

Game GameSampler::game(int n) {
  std::vector<Rat> w(std::size_t{1} << n);
  for (std::size_t m = 1; m < w.size(); ++m) w[m] = worth();
  return Game::from_worths(n, std::move(w));
}

Game GameSampler::null_extension(int n, PlayerId i) {
  std::vector<Rat> w(std::size_t{1} << n);
  const std::uint32_t bit = i.bit();
  for (std::uint32_t m = 1; m < w.size(); ++m) {
    if (m & bit) continue;
    w[m] = worth();
    w[m | bit] = w[m];
  }
  return Game::from_worths(n, std::move(w));
}

Game GameSampler::nullifying_game(int n, PlayerId i) {
  std::vector<Rat> w(std::size_t{1} << n);
  const std::uint32_t bit = i.bit();
  for (std::uint32_t m = 1; m < w.size(); ++m) {
    if (!(m & bit)) w[m] = worth();
  }
  return Game::from_worths(n, std::move(w));
}

Game GameSampler::structured_game(int n) {
  switch (below(6)) {
    case 0:
      return null_extension(n, player(n));
    case 1:
      return nullifying_game(n, player(n));
    case 2: {
      const Rat c = worth();
      std::vector<Rat> w(std::size_t{1} << n, c);
      w[0] = 0;
      return Game::from_worths(n, std::move(w));
    }
    case 3: {
      Game v = Game::zero(n);
      const std::uint64_t terms = 1 + below(3);
      for (std::uint64_t k = 0; k < terms; ++k) {
        const auto t = static_cast<std::uint32_t>(1 + below((std::uint64_t{1} << n) - 1));
        v = v + worth() * unanimity_game(n, Coalition(t));
      }
      return v;
    }
    default:
      return game(n);
  }
}

}  // namespace coop
