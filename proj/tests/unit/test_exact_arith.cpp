#include <gtest/gtest.h>

#include "supercong/exact_arith.hpp"
#include "supercong/recurrence.hpp"
#include "test_support.hpp"

using namespace supercong;
using supercong::testing::Gen;

TEST(Valuation, KnownValues) {
  EXPECT_EQ(vp(ExactRational(-1023750), 5), Valuation(4));
  EXPECT_EQ(vp(ExactRational(43125), 5), Valuation(4));
  EXPECT_EQ(vp(make_rational(7, 250), 5), Valuation(-3));
  EXPECT_EQ(vp(ExactRational(-123703125), 5), Valuation(6));
}

TEST(Valuation, ZeroIsInfinite) {
  const Valuation v = vp(ExactRational(0), 7);
  EXPECT_TRUE(v.is_infinite());
  EXPECT_EQ(v, Valuation::infinity());
  EXPECT_EQ(v.to_string(), "inf");
}

TEST(Valuation, InfinityOrdersAboveEveryInteger) {
  const Valuation inf;
  EXPECT_GT(inf, Valuation(1000000));
  EXPECT_LT(Valuation(-5), inf);
  EXPECT_FALSE(inf < 4);
  EXPECT_TRUE(inf >= 4);
  EXPECT_EQ(inf, Valuation::infinity());
  EXPECT_LT(Valuation(3), Valuation(4));
  EXPECT_TRUE(Valuation(3) < 4);
}

TEST(Valuation, RejectsNonPrimes) {
  EXPECT_THROW(vp(ExactRational(10), 4), NotPrime);
  EXPECT_THROW(vp(ExactRational(10), 1), NotPrime);
  EXPECT_THROW(vp(ExactRational(10), 0), NotPrime);
  EXPECT_NO_THROW(vp(ExactRational(10), 2));
}

TEST(Valuation, PropertyMultiplicative) {
  Gen g(11);
  for (std::uint64_t p : {2, 3, 5, 7, 11}) {
    for (int i = 0; i < 200; ++i) {
      const ExactRational x = g.rational_with_p(p), y = g.rational_with_p(p);
      EXPECT_EQ(vp(ExactRational(x * y), p).value(), vp(x, p).value() + vp(y, p).value());
    }
  }
}

TEST(Valuation, PropertyUltrametric) {
  Gen g(12);
  for (std::uint64_t p : {2, 3, 5, 7}) {
    for (int i = 0; i < 300; ++i) {
      const ExactRational x = g.rational_with_p(p), y = g.rational_with_p(p);
      const Valuation vx = vp(x, p), vy = vp(y, p), vs = vp(ExactRational(x + y), p);
      EXPECT_GE(vs, std::min(vx, vy));
      if (vx != vy) EXPECT_EQ(vs, std::min(vx, vy));
    }
  }
}

TEST(Congruence, SupercongruenceInstance) {
  const SequenceTable a = a_seq(45);
  EXPECT_TRUE(congruent_mod_power(ExactRational(a.A(45)), ExactRational(a.A(9)), 5, 4));
}

TEST(Congruence, Reflexive) {
  Gen g(13);
  for (int i = 0; i < 50; ++i) {
    ExactRational x = g.rational();
    while (!is_p_integral(x, 7)) x = g.rational();
    EXPECT_TRUE(congruent_mod_power(x, x, 7, 20));
  }
}

TEST(Congruence, NegativeValuationIsAnError) {
  EXPECT_THROW(congruent_mod_power(make_rational(1, 5), 0, 5, 1), NotPIntegral);
  EXPECT_THROW(congruent_mod_power(0, make_rational(2, 25), 5, 1), NotPIntegral);
  EXPECT_NO_THROW(congruent_mod_power(make_rational(1, 3), 0, 5, 1));
}

TEST(Congruence, PropertyEquivalenceRelation) {
  Gen g(14);
  const std::uint64_t p = 5;
  const int k = 3;
  const BigInt pk = pow_ui(p, k);
  auto integral = [&] {
    ExactRational x = g.rational(4);
    while (!is_p_integral(x, p)) x = g.rational(4);
    return x;
  };
  for (int i = 0; i < 200; ++i) {
    const ExactRational x = integral();
    // y and z in the class of x half the time
    const ExactRational y = g.uniform(0, 1) ? ExactRational(x + ExactRational(pk) * integral()) : integral();
    const ExactRational z = g.uniform(0, 1) ? ExactRational(y + ExactRational(pk) * integral()) : integral();
    const bool xy = congruent_mod_power(x, y, p, k), yx = congruent_mod_power(y, x, p, k);
    const bool yz = congruent_mod_power(y, z, p, k), xz = congruent_mod_power(x, z, p, k);
    EXPECT_EQ(xy, yx);
    if (xy && yz) EXPECT_TRUE(xz);
  }
}

TEST(Primality, AgreesWithTrialDivision) {
  for (std::uint64_t n = 0; n < 20000; ++n) {
    bool prime = n >= 2;
    for (std::uint64_t d = 2; d * d <= n && prime; ++d) prime = n % d != 0;
    ASSERT_EQ(is_prime(n), prime) << n;
  }
}

TEST(Primality, LargeAndPseudoprimeInputs) {
  EXPECT_TRUE(is_prime(2305843009213693951ULL));  // 2^61 - 1
  EXPECT_TRUE(is_prime(18446744073709551557ULL));  // largest 64-bit prime
  EXPECT_FALSE(is_prime(561));
  EXPECT_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
  EXPECT_FALSE(is_prime(18446744073709551615ULL));
}

TEST(Rational, CanonicalForm) {
  const ExactRational x = make_rational(6, -4);
  EXPECT_EQ(x.get_num(), -3);
  EXPECT_EQ(x.get_den(), 2);
  EXPECT_EQ(make_rational(0, 17).get_den(), 1);
  EXPECT_THROW(make_rational(1, 0), std::domain_error);
}

TEST(Rational, StringRoundTrip) {
  Gen g(15);
  for (int i = 0; i < 100; ++i) {
    const ExactRational x = g.rational(30);
    EXPECT_EQ(parse_rational(to_string(x)), x);
  }
  EXPECT_EQ(to_string(ExactRational(-57)), "-57");
  EXPECT_EQ(to_string(make_rational(3, 6)), "1/2");
  EXPECT_THROW(parse_rational("1/0"), std::domain_error);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
}

TEST(Integers, FactorialAndBinomial) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(10), 3628800);
  EXPECT_EQ(binomial(10, 3), 120);
  EXPECT_EQ(binomial(3, 10), 0);
  EXPECT_EQ(pow_ui(5, 4), 625);
  EXPECT_EQ(vp(factorial(25), 5), Valuation(6));
}
