#include <numeric>

#include <gtest/gtest.h>

#include "supercong/modular_series.hpp"
#include "test_support.hpp"

using namespace supercong;
using supercong::testing::sigma4chi3_oracle;

namespace {

std::vector<long> first(const TruncatedSeries& s, std::int64_t from, std::int64_t count) {
  std::vector<long> out;
  for (std::int64_t n = from; n < from + count; ++n) out.push_back(s.coeff(n).get_num().get_si());
  return out;
}

ExactRational sigma_minus1(std::uint64_t n) {
  ExactRational s = 0;
  for (std::uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) s += make_rational(1, d);
  return s;
}

}  // namespace

TEST(ArithmeticFunctions, Chi3) {
  EXPECT_EQ(chi3(3), 0);
  EXPECT_EQ(chi3(2), -1);
  EXPECT_EQ(chi3(7), 1);
  EXPECT_EQ(chi3(0), 0);
  EXPECT_EQ(chi3(-1), -1);
  EXPECT_EQ(chi3(-2), 1);
}

TEST(ArithmeticFunctions, TwistedDivisorSumValues) {
  EXPECT_EQ(sigma4chi3(1), 1);
  EXPECT_EQ(sigma4chi3(2), -15);
  EXPECT_EQ(sigma4chi3(4), 241);
  EXPECT_EQ(sigma4chi3(3), 1);
  EXPECT_EQ(sigma4chi3(6), sigma4chi3(2) * sigma4chi3(3));
  for (std::uint64_t n = 1; n <= 300; ++n) EXPECT_EQ(sigma4chi3(n), sigma4chi3_oracle(n)) << n;
}

TEST(ArithmeticFunctions, LambdaValues) {
  EXPECT_EQ(lambda_fn(1), 1);
  EXPECT_EQ(lambda_fn(3), make_rational(1, 3));
  EXPECT_EQ(lambda_fn(make_rational(3, 2)), 0);
  EXPECT_EQ(lambda_fn(2), make_rational(3, 2));
  EXPECT_EQ(lambda_fn(0), 0);
  EXPECT_EQ(lambda_fn(-3), 0);
  for (std::uint64_t n = 1; n <= 200; ++n) {
    const ExactRational expected = sigma_minus1(n) - (n % 3 == 0 ? sigma_minus1(n / 3) : ExactRational(0));
    EXPECT_EQ(lambda_fn(static_cast<long>(n)), expected) << n;
  }
}

TEST(ArithmeticFunctions, MuValuesAndLambdaCrossIdentity) {
  EXPECT_EQ(mu_fn(1), 12);
  EXPECT_EQ(mu_fn(3), 12);
  EXPECT_EQ(mu_fn(2), 36);
  for (std::uint64_t n = 1; n <= 500; ++n)
    EXPECT_EQ(ExactRational(mu_fn(n)) / ExactRational(n), 12 * lambda_fn(static_cast<long>(n))) << n;
}

TEST(ArithmeticFunctionCache, MatchesDirectEvaluation) {
  const ArithmeticFunctionCache cache(2000);
  EXPECT_EQ(cache.bound(), 2000u);
  for (std::uint64_t n = 1; n <= 2000; n += (n < 200 ? 1 : 37)) {
    EXPECT_EQ(cache.sigma4chi3(n), sigma4chi3(n)) << n;
    EXPECT_EQ(cache.mu(n), mu_fn(n)) << n;
    EXPECT_EQ(cache.lambda(n), lambda_fn(static_cast<long>(n))) << n;
  }
  EXPECT_THROW(cache.sigma4chi3(0), std::out_of_range);
  EXPECT_THROW(cache.mu(2001), std::out_of_range);
}

TEST(ArithmeticFunctionCache, PropertyMultiplicativeTo10000) {
  const std::uint64_t bound = 10000;
  const ArithmeticFunctionCache cache(bound);
  std::size_t pairs = 0;
  for (std::uint64_t m = 2; m * 2 <= bound; ++m)
    for (std::uint64_t n = m + 1; m * n <= bound; ++n)
      if (std::gcd(m, n) == 1) {
        ASSERT_EQ(cache.sigma4chi3(m * n), cache.sigma4chi3(m) * cache.sigma4chi3(n)) << m << "*" << n;
        ++pairs;
      }
  EXPECT_GT(pairs, 10000u);
}

TEST(ArithmeticFunctionCache, PropertyEulerFactorsTo10000) {
  const std::uint64_t bound = 10000;
  const ArithmeticFunctionCache cache(bound);
  for (std::uint64_t p = 2; p <= bound; ++p) {
    if (!is_prime(p) || p == 3) continue;
    BigInt expected = 0;
    std::uint64_t pk = 1;
    for (unsigned k = 0; pk <= bound; ++k, pk *= p) {
      expected += (k % 2 == 1 && chi3(static_cast<std::int64_t>(p)) < 0 ? -1 : 1) * pow_ui(p, 4 * k);
      ASSERT_EQ(cache.sigma4chi3(pk), expected) << p << "^" << k;
      if (pk > bound / p) break;
    }
  }
  // chi3(3) = 0: powers of 3 contribute nothing
  for (std::uint64_t pk = 3; pk <= bound; pk *= 3) EXPECT_EQ(cache.sigma4chi3(pk), 1);
}

TEST(ArithmeticFunctionCache, PropertyTowerDifference) {
  const ArithmeticFunctionCache cache(20000);
  for (std::uint64_t p : {5, 7, 11, 13}) {
    for (std::uint64_t m = 1; m * p * p <= 20000; ++m) {
      std::uint64_t m0 = m;
      unsigned a = 0;
      while (m0 % p == 0) m0 /= p, ++a;
      for (unsigned r = 1; r <= 2; ++r) {
        const std::uint64_t hi = m * (r == 1 ? p : p * p), lo = r == 1 ? m : m * p;
        const unsigned e = a + r;
        const BigInt expected = (e % 2 == 1 && chi3(static_cast<std::int64_t>(p)) < 0 ? -1 : 1) * pow_ui(p, 4 * e) * cache.sigma4chi3(m0);
        ASSERT_EQ(cache.sigma4chi3(hi) - cache.sigma4chi3(lo), expected) << p << " " << m << " " << r;
      }
    }
  }
}

TEST(QExpansions, Hauptmodul) {
  const auto t = gen_t(5);
  EXPECT_EQ(t.min_exp(), 1);
  EXPECT_EQ(first(t, 1, 4), (std::vector<long>{1, 12, 90, 508}));
  EXPECT_EQ(first(gen_H(5), 0, 5), (std::vector<long>{1, -12, 54, -76, -243}));
  const auto th = mul(gen_t(80), gen_H(80));
  EXPECT_TRUE(agree(th, TruncatedSeries::monomial(1, 1, th.prec())));
  const auto theta = gen_theta(30);
  EXPECT_EQ(theta.coeff(0), 1);
  EXPECT_TRUE(theta.is_integral());
}

TEST(QExpansions, EisensteinSeries) {
  const auto C = gen_C(40);
  EXPECT_EQ(first(C, 0, 5), (std::vector<long>{1, 3, -45, 3, 723}));
  EXPECT_EQ(C.coeff(6), 3 * sigma4chi3(2) * sigma4chi3(3));
  for (std::int64_t n = 1; n < 40; ++n) EXPECT_EQ(C.coeff(n), 3 * sigma4chi3_oracle(static_cast<std::uint64_t>(n)));
}

TEST(QExpansions, ThreeConstructionsOfLogAgreeTo500Terms) {
  const std::int64_t N = 500;
  const auto L = gen_L(N);
  EXPECT_EQ(L.coeff(1), 12);
  const auto from_H = -log_unit(gen_H(N));
  std::vector<ExactRational> lam(static_cast<std::size_t>(N), ExactRational(0));
  for (std::int64_t n = 1; n < N; ++n) lam[n] = 12 * lambda_fn(n);
  const TruncatedSeries from_lambda(0, std::move(lam));
  EXPECT_TRUE(agree(L, from_H));
  EXPECT_TRUE(agree(L, from_lambda));
  EXPECT_EQ(from_H.prec(), N);
  const auto from_t = log_unit(gen_t(N + 1).shifted(-1));
  EXPECT_TRUE(agree(L, from_t));
}

TEST(QExpansions, UpClosedFormMatchesLogForm) {
  for (std::uint64_t p : {5, 7, 11, 13}) {
    const auto pp = static_cast<std::int64_t>(p);
    const std::int64_t N = 4 * pp * pp;
    const auto U = gen_Up(p, N);
    const auto L = gen_L(N);
    const auto log_form = sub(scale(L, ExactRational(pp)), v_substitute(L, pp).truncated(N));
    EXPECT_TRUE(agree(U, log_form)) << p;
    EXPECT_EQ(U.coeff(pp), 12 * pp);
    EXPECT_EQ(U.coeff(0), 0);
    for (std::int64_t n = 1; n < N; ++n) {
      EXPECT_GE(vp(U.coeff(n), p), 1) << p << " " << n;
      EXPECT_EQ(vp(BigInt(U.coeff(n).get_den()), p), 0);
    }
  }
  EXPECT_THROW(gen_Up(4, 10), NotPrime);
  EXPECT_THROW(gen_Up(3, 10), NotPrime);
}

TEST(QExpansions, WeaklyHolomorphicBasis) {
  const auto b1 = gen_basis(1, 6), b2 = gen_basis(2, 7), b3 = gen_basis(3, 8);
  EXPECT_EQ(b1.min_exp(), -1);
  EXPECT_EQ(first(b1, -1, 5), (std::vector<long>{1, -9, -27, 629, -2214}));
  EXPECT_EQ(first(b2, -2, 5), (std::vector<long>{1, -21, 135, 391, -10779}));
  EXPECT_EQ(first(b3, -3, 4), (std::vector<long>{1, -33, 441, -2439}));
  EXPECT_EQ(gen_basis(0, 10), gen_C(10));
  EXPECT_TRUE(agree(gen_basis(2, 30), mul(gen_C(30), invert(pow_int(gen_t(31), 2)))));
  EXPECT_THROW(gen_basis(4, 10), std::invalid_argument);
}
