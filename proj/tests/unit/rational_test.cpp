#include <gtest/gtest.h>
#include <gmpxx.h>

#include <limits>
#include <random>

#include "coop/rational.hpp"

namespace coop {
namespace {

mpq_class ref(const Rat& x) {
  mpq_class r(x.str());
  r.canonicalize();
  return r;
}

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(Rat(6, -4).str(), "-3/2");
  EXPECT_EQ(Rat(0, -7).str(), "0");
  EXPECT_EQ(Rat(10, 5).str(), "2");
  EXPECT_TRUE(Rat(10, 5).is_integer());
  EXPECT_EQ(Rat(2, 4), Rat(1, 2));
}

TEST(Rational, ZeroDenominatorThrows) {
  EXPECT_THROW(Rat(1, 0), std::domain_error);
  EXPECT_THROW(Rat(1) / Rat(0), std::domain_error);
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rat::parse("5/3"), Rat(5, 3));
  EXPECT_EQ(Rat::parse("-4"), Rat(-4));
  EXPECT_EQ(Rat::parse("+4/6"), Rat(2, 3));
  EXPECT_EQ(Rat::parse("123456789012345678901234567890/3").str(), "41152263004115226300411522630");
  for (const char* bad : {"", "1/0", "1/", "/2", "1.5", "x", "1/2/3", "--1", "1 "}) {
    EXPECT_THROW(Rat::parse(bad), std::invalid_argument) << bad;
  }
}

TEST(Rational, OrderingAndSign) {
  EXPECT_LT(Rat(-1, 2), Rat(-1, 3));
  EXPECT_GT(Rat(7, 3), Rat(2));
  EXPECT_EQ(Rat(-5, 9).sign(), -1);
  EXPECT_EQ(Rat().sign(), 0);
  EXPECT_EQ(abs(Rat(-5, 9)), Rat(5, 9));
}

TEST(Rational, OverflowPromotesAndDemotes) {
  const Rat big = Rat(std::numeric_limits<std::int64_t>::max()) * Rat(4);
  EXPECT_TRUE(big.is_big());
  EXPECT_EQ(big.str(), "36893488147419103228");
  const Rat back = big / Rat(4);
  EXPECT_FALSE(back.is_big());
  EXPECT_EQ(back, Rat(std::numeric_limits<std::int64_t>::max()));
  const Rat min = Rat(std::numeric_limits<std::int64_t>::min());
  EXPECT_EQ((-min).str(), "9223372036854775808");
  EXPECT_EQ(-(-min), min);
}

// Mixed small and huge operands against GMP.
TEST(Rational, ArithmeticMatchesGmp) {
  std::mt19937_64 rng(7);
  const auto draw = [&]() {
    const std::int64_t range = (rng() % 3 == 0) ? std::numeric_limits<std::int64_t>::max() : 1000;
    std::int64_t num = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(range)) - range / 2;
    std::int64_t den = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(range)) + 1;
    return Rat(num, den);
  };
  for (int k = 0; k < 5000; ++k) {
    Rat a = draw();
    Rat b = draw();
    if (k % 5 == 0) a = a * draw() * draw();
    const mpq_class qa = ref(a), qb = ref(b);
    EXPECT_EQ(ref(a + b), mpq_class(qa + qb));
    EXPECT_EQ(ref(a - b), mpq_class(qa - qb));
    EXPECT_EQ(ref(a * b), mpq_class(qa * qb));
    if (!b.is_zero()) EXPECT_EQ(ref(a / b), mpq_class(qa / qb));
    EXPECT_EQ(a < b, qa < qb);
    EXPECT_EQ(a == b, qa == qb);
  }
}

TEST(Rational, CompoundAssignment) {
  Rat x(1, 2);
  x += Rat(1, 3);
  x *= Rat(6);
  x -= Rat(1);
  x /= Rat(2);
  EXPECT_EQ(x, Rat(2));
}

}  // namespace
}  // namespace coop
