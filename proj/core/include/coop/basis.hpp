#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "coop/game.hpp"

namespace coop {

enum class Basis { unanimity, canonical };

std::string_view to_string(Basis b);
/// Throws std::invalid_argument for anything but "unanimity" or "canonical".
Basis parse_basis(std::string_view name);

/// Coordinates of a game in the unanimity basis (Harsanyi dividends) or the
/// canonical basis, one per nonempty coalition.
class CoefficientMap {
 public:
  /// `coeffs[mask]` for every mask; `coeffs[0]` must be 0.
  CoefficientMap(Basis basis, int n, std::vector<Rat> coeffs);

  Basis basis() const { return basis_; }
  int n() const { return n_; }
  /// Throws std::invalid_argument for the empty coalition.
  const Rat& at(Coalition t) const;
  const Rat& operator[](Coalition t) const { return coeff_[t.mask()]; }
  /// Indexed by mask; entry 0 is a placeholder.
  std::span<const Rat> raw() const { return coeff_; }

  friend bool operator==(const CoefficientMap&, const CoefficientMap&) = default;

 private:
  Basis basis_;
  int n_;
  std::vector<Rat> coeff_;
};

/// Dividends come from an in-place Möbius sweep, O(n·2^n).
CoefficientMap to_coefficients(const Game& v, Basis basis);
Game from_coefficients(const CoefficientMap& c);

}  // namespace coop
