#include "coop/rational.hpp"

#include <gmpxx.h>

#include <cctype>
#include <climits>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace coop {

namespace {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

u128 gcd_u128(u128 a, u128 b) {
  while (b != 0) {
    if ((a >> 64) == 0 && (b >> 64) == 0) {
      return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    }
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u128 magnitude(i128 v) { return v < 0 ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v); }

mpz_class mpz_from(i128 v) {
  const u128 m = magnitude(v);
  mpz_class r = static_cast<unsigned long>(m >> 64);
  r <<= 64;
  r += static_cast<unsigned long>(static_cast<std::uint64_t>(m));
  if (v < 0) r = -r;
  return r;
}

bool fits_small(const mpz_class& z) { return mpz_fits_slong_p(z.get_mpz_t()) && z != LONG_MIN; }

}  // namespace

namespace detail {

struct BigRational {
  mpq_class value;

  // `q` must be canonical.
  static Rat make(mpq_class q) {
    Rat r;
    if (fits_small(q.get_num()) && fits_small(q.get_den())) {
      r.num_ = q.get_num().get_si();
      r.den_ = q.get_den().get_si();
      return r;
    }
    r.big_ = std::make_shared<const BigRational>(BigRational{std::move(q)});
    return r;
  }

  static mpq_class of(const Rat& r) {
    if (r.big_) return r.big_->value;
    mpq_class q;
    mpq_set_si(q.get_mpq_t(), r.num_, static_cast<unsigned long>(r.den_));
    return q;
  }

  // `den` must be nonzero.
  static Rat normalize(i128 num, i128 den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const u128 g = gcd_u128(magnitude(num), static_cast<u128>(den));
    if (g > 1) {
      num /= static_cast<i128>(g);
      den /= static_cast<i128>(g);
    }
    if (num >= -static_cast<i128>(kMax) && num <= kMax && den <= kMax) {
      Rat r;
      r.num_ = static_cast<std::int64_t>(num);
      r.den_ = static_cast<std::int64_t>(den);
      return r;
    }
    mpq_class q(mpz_from(num), mpz_from(den));
    q.canonicalize();
    return make(std::move(q));
  }

  static Rat add(const Rat& a, const Rat& b) {
    if (!a.big_ && !b.big_) {
      if (a.den_ == 1 && b.den_ == 1) {
        std::int64_t s;
        if (!__builtin_add_overflow(a.num_, b.num_, &s) && s != std::numeric_limits<std::int64_t>::min()) {
          Rat r;
          r.num_ = s;
          return r;
        }
      }
      if (a.den_ == b.den_) return normalize(static_cast<i128>(a.num_) + b.num_, a.den_);
      return normalize(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                       static_cast<i128>(a.den_) * b.den_);
    }
    return make(of(a) + of(b));
  }

  static Rat mul(const Rat& a, const Rat& b) {
    if (!a.big_ && !b.big_) {
      if (a.den_ == 1 && b.den_ == 1) {
        std::int64_t p;
        if (!__builtin_mul_overflow(a.num_, b.num_, &p) && p != std::numeric_limits<std::int64_t>::min()) {
          Rat r;
          r.num_ = p;
          return r;
        }
      }
      return normalize(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
    }
    return make(of(a) * of(b));
  }

  static Rat div(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw std::domain_error("rational division by zero");
    if (!a.big_ && !b.big_) {
      return normalize(static_cast<i128>(a.num_) * b.den_, static_cast<i128>(a.den_) * b.num_);
    }
    return make(of(a) / of(b));
  }

  static std::strong_ordering compare(const Rat& a, const Rat& b) {
    if (!a.big_ && !b.big_) {
      if (a.den_ == b.den_) return a.num_ <=> b.num_;
      return static_cast<i128>(a.num_) * b.den_ <=> static_cast<i128>(b.num_) * a.den_;
    }
    const int c = cmp(of(a), of(b));
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  static bool equal(const Rat& a, const Rat& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    // A big value never fits the inline representation, so mixed pairs differ.
    if (!a.big_ || !b.big_) return false;
    return a.big_->value == b.big_->value;
  }
};

}  // namespace detail

using detail::BigRational;

Rat::Rat(std::int64_t value) {
  if (value == std::numeric_limits<std::int64_t>::min()) {
    *this = BigRational::normalize(value, 1);
  } else {
    num_ = value;
  }
}

Rat::Rat(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  *this = BigRational::normalize(num, den);
}

Rat Rat::parse(std::string_view text) {
  auto valid_integer = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num_text = text.substr(0, slash);
  std::string_view den_text = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer(num_text, true) || !valid_integer(den_text, false)) {
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  }
  if (num_text.front() == '+') num_text.remove_prefix(1);
  mpz_class num(std::string(num_text), 10);
  mpz_class den(std::string(den_text), 10);
  if (den == 0) throw std::invalid_argument("zero denominator in rational literal '" + std::string(text) + "'");
  mpq_class q(num, den);
  q.canonicalize();
  return BigRational::make(std::move(q));
}

bool Rat::is_integer() const { return big_ ? big_->value.get_den() == 1 : den_ == 1; }

int Rat::sign() const {
  if (big_) return sgn(big_->value);
  return (num_ > 0) - (num_ < 0);
}

std::string Rat::str() const {
  if (big_) return big_->value.get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rat::numerator_str() const { return big_ ? big_->value.get_num().get_str() : std::to_string(num_); }

std::string Rat::denominator_str() const { return big_ ? big_->value.get_den().get_str() : std::to_string(den_); }

double Rat::to_double() const { return big_ ? big_->value.get_d() : static_cast<double>(num_) / static_cast<double>(den_); }

Rat Rat::operator-() const {
  if (big_) return BigRational::make(-big_->value);
  Rat r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rat& Rat::operator+=(const Rat& rhs) { return *this = BigRational::add(*this, rhs); }
Rat& Rat::operator-=(const Rat& rhs) { return *this = BigRational::add(*this, -rhs); }
Rat& Rat::operator*=(const Rat& rhs) { return *this = BigRational::mul(*this, rhs); }
Rat& Rat::operator/=(const Rat& rhs) { return *this = BigRational::div(*this, rhs); }

Rat operator+(const Rat& a, const Rat& b) { return BigRational::add(a, b); }
Rat operator-(const Rat& a, const Rat& b) { return BigRational::add(a, -b); }
Rat operator*(const Rat& a, const Rat& b) { return BigRational::mul(a, b); }
Rat operator/(const Rat& a, const Rat& b) { return BigRational::div(a, b); }

bool operator==(const Rat& a, const Rat& b) { return BigRational::equal(a, b); }
std::strong_ordering operator<=>(const Rat& a, const Rat& b) { return BigRational::compare(a, b); }

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

}  // namespace coop
