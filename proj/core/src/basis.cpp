#include "coop/basis.hpp"

#include <stdexcept>
#include <string>

namespace coop {

std::string_view to_string(Basis b) { return b == Basis::unanimity ? "unanimity" : "canonical"; }

Basis parse_basis(std::string_view name) {
  if (name == "unanimity") return Basis::unanimity;
  if (name == "canonical") return Basis::canonical;
  throw std::invalid_argument("unknown basis '" + std::string(name) + "'");
}

CoefficientMap::CoefficientMap(Basis basis, int n, std::vector<Rat> coeffs)
    : basis_(basis), n_(n), coeff_(std::move(coeffs)) {
  if (n < 1 || n > kMaxPlayers) throw std::invalid_argument("player count out of range");
  if (coeff_.size() != (std::size_t{1} << n)) throw std::invalid_argument("coefficient table must have 2^n entries");
  if (!coeff_[0].is_zero()) throw std::invalid_argument("the empty coalition carries no coefficient");
}

const Rat& CoefficientMap::at(Coalition t) const {
  if (t.empty() || t.mask() >= coeff_.size()) throw std::invalid_argument("no coefficient for coalition " + t.str());
  return coeff_[t.mask()];
}

CoefficientMap to_coefficients(const Game& v, Basis basis) {
  std::vector<Rat> c(v.worths().begin(), v.worths().end());
  if (basis == Basis::unanimity) {
    const std::uint32_t size = static_cast<std::uint32_t>(c.size());
    for (std::uint32_t bit = 1; bit < size; bit <<= 1) {
      for (std::uint32_t m = 0; m < size; ++m) {
        if (m & bit) c[m] -= c[m ^ bit];
      }
    }
  }
  return CoefficientMap(basis, v.n(), std::move(c));
}

Game from_coefficients(const CoefficientMap& coeffs) {
  std::vector<Rat> w(coeffs.raw().begin(), coeffs.raw().end());
  if (coeffs.basis() == Basis::unanimity) {
    const std::uint32_t size = static_cast<std::uint32_t>(w.size());
    for (std::uint32_t bit = 1; bit < size; bit <<= 1) {
      for (std::uint32_t m = 0; m < size; ++m) {
        if (m & bit) w[m] += w[m ^ bit];
      }
    }
  }
  return Game::from_worths(coeffs.n(), std::move(w));
}

}  // namespace coop
