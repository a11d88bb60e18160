#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

namespace coop {

namespace detail {
struct BigRational;
}

/// Exact rational number kept in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator both fit in a signed 64-bit word
/// live inline and use 128-bit intermediates; anything larger is promoted to
/// an arbitrary-precision GMP rational and demoted again once a result fits.
/// Equality is exact and structural.
class Rat {
 public:
  Rat() = default;
  Rat(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rat(std::int64_t num, std::int64_t den);

  /// Parses "p", "-p" or "p/q" with decimal digits of any length.
  /// Throws std::invalid_argument on malformed text or a zero denominator.
  static Rat parse(std::string_view text);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_integer() const;
  int sign() const;

  std::string str() const;
  std::string numerator_str() const;
  std::string denominator_str() const;
  double to_double() const;

  /// True when the value is held in the arbitrary-precision representation.
  bool is_big() const { return static_cast<bool>(big_); }

  Rat operator-() const;
  Rat& operator+=(const Rat& rhs);
  Rat& operator-=(const Rat& rhs);
  Rat& operator*=(const Rat& rhs);
  Rat& operator/=(const Rat& rhs);

  friend Rat operator+(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a, const Rat& b);
  friend Rat operator*(const Rat& a, const Rat& b);
  friend Rat operator/(const Rat& a, const Rat& b);

  friend bool operator==(const Rat& a, const Rat& b);
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const detail::BigRational> big_;

  friend struct detail::BigRational;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

Rat abs(const Rat& r);

}  // namespace coop
