#include "coop/coalition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace coop {

Coalition Coalition::of(std::initializer_list<int> players) {
  std::uint32_t mask = 0;
  for (int p : players) {
    if (p < 1 || p > kMaxPlayers) throw std::out_of_range("player index " + std::to_string(p) + " out of range");
    mask |= PlayerId(p).bit();
  }
  return Coalition(mask);
}

Coalition Coalition::of(const std::vector<PlayerId>& players) {
  std::uint32_t mask = 0;
  for (PlayerId p : players) {
    if (p.index() < 1 || p.index() > kMaxPlayers) {
      throw std::out_of_range("player index " + std::to_string(p.index()) + " out of range");
    }
    mask |= p.bit();
  }
  return Coalition(mask);
}

std::vector<PlayerId> Coalition::members() const {
  std::vector<PlayerId> out;
  for (std::uint32_t m = mask_; m != 0; m &= m - 1) out.emplace_back(__builtin_ctz(m) + 1);
  return out;
}

std::string Coalition::str() const {
  std::string s = "{";
  bool first = true;
  for (PlayerId p : members()) {
    if (!first) s += ',';
    s += std::to_string(p.index());
    first = false;
  }
  return s + "}";
}

Permutation Permutation::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  if (n < 1 || n > kMaxPlayers) throw std::invalid_argument("permutation size out of range");
  std::vector<bool> seen(n, false);
  for (int x : images) {
    if (x < 1 || x > n || seen[x - 1]) throw std::invalid_argument("permutation is not a bijection on 1..n");
    seen[x - 1] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  return from_images(std::move(images));
}

Permutation Permutation::transposition(int n, PlayerId i, PlayerId j) {
  Permutation p = identity(n);
  if (i.index() < 1 || i.index() > n || j.index() < 1 || j.index() > n) {
    throw std::invalid_argument("transposition player out of range");
  }
  std::swap(p.image_[i.index() - 1], p.image_[j.index() - 1]);
  return p;
}

Coalition Permutation::apply(Coalition s) const {
  std::uint32_t out = 0;
  for (std::uint32_t m = s.mask(); m != 0; m &= m - 1) {
    const int k = __builtin_ctz(m);
    out |= std::uint32_t{1} << (image_[k] - 1);
  }
  return Coalition(out);
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (std::size_t k = 0; k < image_.size(); ++k) inv[image_[k] - 1] = static_cast<int>(k) + 1;
  return Permutation(std::move(inv));
}

Permutation compose(const Permutation& sigma, const Permutation& pi) {
  if (sigma.size() != pi.size()) throw std::invalid_argument("composing permutations of different sizes");
  std::vector<int> images(pi.size());
  for (int k = 0; k < pi.size(); ++k) images[k] = sigma(pi(PlayerId(k + 1))).index();
  return Permutation::from_images(std::move(images));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace coop
