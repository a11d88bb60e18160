#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace coop {

/// Largest player count a game may have (2^20 coalitions).
inline constexpr int kMaxPlayers = 20;

/// 1-based player index.
class PlayerId {
 public:
  constexpr explicit PlayerId(int index) : index_(index) {}

  constexpr int index() const { return index_; }
  constexpr std::uint32_t bit() const { return std::uint32_t{1} << (index_ - 1); }

  friend constexpr auto operator<=>(PlayerId, PlayerId) = default;

 private:
  int index_;
};

/// Subset of players; player i sits on bit i-1.
class Coalition {
 public:
  constexpr Coalition() = default;
  constexpr explicit Coalition(std::uint32_t mask) : mask_(mask) {}

  static Coalition of(std::initializer_list<int> players);
  static Coalition of(const std::vector<PlayerId>& players);
  static constexpr Coalition grand(int n) { return Coalition((std::uint32_t{1} << n) - 1); }
  static constexpr Coalition singleton(PlayerId i) { return Coalition(i.bit()); }

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  int size() const { return __builtin_popcount(mask_); }
  constexpr bool contains(PlayerId i) const { return (mask_ & i.bit()) != 0; }
  constexpr bool subset_of(Coalition other) const { return (mask_ & ~other.mask_) == 0; }

  constexpr Coalition with(PlayerId i) const { return Coalition(mask_ | i.bit()); }
  constexpr Coalition without(PlayerId i) const { return Coalition(mask_ & ~i.bit()); }

  /// Members in increasing order.
  std::vector<PlayerId> members() const;

  /// "{1,2}", or "{}" for the empty coalition.
  std::string str() const;

  friend constexpr auto operator<=>(Coalition, Coalition) = default;

 private:
  std::uint32_t mask_ = 0;
};

/// Bijection on {1..n}.
class Permutation {
 public:
  /// `images[k]` is the image of player k+1. Throws std::invalid_argument unless
  /// the list is a bijection on 1..images.size().
  static Permutation from_images(std::vector<int> images);
  static Permutation identity(int n);
  static Permutation transposition(int n, PlayerId i, PlayerId j);

  int size() const { return static_cast<int>(image_.size()); }
  PlayerId operator()(PlayerId i) const { return PlayerId(image_.at(i.index() - 1)); }
  Coalition apply(Coalition s) const;
  Permutation inverse() const;
  const std::vector<int>& images() const { return image_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<int> image) : image_(std::move(image)) {}
  std::vector<int> image_;
};

/// sigma ∘ pi, i.e. apply `pi` first.
Permutation compose(const Permutation& sigma, const Permutation& pi);

/// All n! permutations in lexicographic order of their image lists.
std::vector<Permutation> all_permutations(int n);

}  // namespace coop
