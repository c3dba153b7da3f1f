#include "supercong/modular_series.hpp"

#include <array>
#include <string>

namespace supercong {

int chi3(std::int64_t n) {
  const std::int64_t r = ((n % 3) + 3) % 3;
  return r == 0 ? 0 : (r == 1 ? 1 : -1);
}

BigInt sigma4chi3(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("sigma4chi3: n must be positive");
  BigInt total = 0;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    const std::uint64_t e = n / d;
    total += chi3(static_cast<std::int64_t>(d)) * pow_ui(d, 4);
    if (e != d) total += chi3(static_cast<std::int64_t>(e)) * pow_ui(e, 4);
  }
  return total;
}

namespace {

BigInt sigma1(std::uint64_t n) {
  BigInt total = 0;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    total += static_cast<unsigned long>(d);
    if (n / d != d) total += static_cast<unsigned long>(n / d);
  }
  return total;
}

ExactRational sigma_minus1(const ExactRational& x) {
  if (!is_integral(x) || x <= 0) return 0;
  if (!x.get_num().fits_ulong_p()) throw std::out_of_range("sigma_{-1}: argument too large");
  const std::uint64_t n = x.get_num().get_ui();
  return make_rational(sigma1(n), static_cast<unsigned long>(n));
}

}  // namespace

ExactRational lambda_fn(const ExactRational& n) {
  return sigma_minus1(n) - sigma_minus1(ExactRational(n / 3));
}

BigInt mu_fn(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("mu_fn: n must be positive");
  while (n % 3 == 0) n /= 3;
  return 12 * sigma1(n);
}

ArithmeticFunctionCache::ArithmeticFunctionCache(std::uint64_t bound)
    : bound_(bound), sigma4chi3_(bound + 1), lambda_(bound + 1), mu_(bound + 1) {
  // Divisor sieve: each d contributes to all its multiples.
  std::vector<BigInt> sigma1_tab(bound + 1);
  for (std::uint64_t d = 1; d <= bound; ++d) {
    const BigInt d4 = chi3(static_cast<std::int64_t>(d)) * pow_ui(d, 4);
    for (std::uint64_t m = d; m <= bound; m += d) {
      sigma4chi3_[m] += d4;
      sigma1_tab[m] += static_cast<unsigned long>(d);
    }
  }
  for (std::uint64_t n = 1; n <= bound; ++n) {
    ExactRational s = make_rational(sigma1_tab[n], static_cast<unsigned long>(n));
    if (n % 3 == 0) s -= make_rational(sigma1_tab[n / 3], static_cast<unsigned long>(n / 3));
    lambda_[n] = s;
    std::uint64_t core = n;
    while (core % 3 == 0) core /= 3;
    mu_[n] = 12 * sigma1_tab[core];
  }
}

void ArithmeticFunctionCache::check(std::uint64_t n) const {
  if (n == 0 || n > bound_)
    throw std::out_of_range("arithmetic cache: index " + std::to_string(n) + " outside 1.." +
                            std::to_string(bound_));
}

const BigInt& ArithmeticFunctionCache::sigma4chi3(std::uint64_t n) const {
  check(n);
  return sigma4chi3_[n];
}

const ExactRational& ArithmeticFunctionCache::lambda(std::uint64_t n) const {
  check(n);
  return lambda_[n];
}

const BigInt& ArithmeticFunctionCache::mu(std::uint64_t n) const {
  check(n);
  return mu_[n];
}

namespace {

void require_prec(std::int64_t N, std::int64_t least, const char* what) {
  if (N < least)
    throw std::invalid_argument(std::string(what) + ": precision must be >= " + std::to_string(least));
}

std::uint64_t cache_bound(std::int64_t N) { return static_cast<std::uint64_t>(std::max<std::int64_t>(N, 1)); }

}  // namespace

TruncatedSeries gen_t(std::int64_t N) {
  require_prec(N, 2, "gen_t");
  const std::array<EtaFactor, 2> f{EtaFactor{3, 12, 0}, EtaFactor{1, -12, 0}};
  return eta_like_product(f, N - 1).shifted(1);
}

TruncatedSeries gen_H(std::int64_t N) {
  require_prec(N, 2, "gen_H");
  const std::array<EtaFactor, 1> f{EtaFactor{1, 12, 3}};
  return eta_like_product(f, N);
}

TruncatedSeries gen_theta(std::int64_t N) {
  require_prec(N, 2, "gen_theta");
  const std::array<EtaFactor, 2> f{EtaFactor{1, 9, 0}, EtaFactor{3, -3, 0}};
  return eta_like_product(f, N);
}

TruncatedSeries gen_C(std::int64_t N) {
  require_prec(N, 1, "gen_C");
  const ArithmeticFunctionCache cache(cache_bound(N - 1));
  std::vector<ExactRational> c(static_cast<std::size_t>(N));
  c[0] = 1;
  for (std::int64_t n = 1; n < N; ++n) c[n] = 3 * cache.sigma4chi3(n);
  return TruncatedSeries(0, std::move(c));
}

TruncatedSeries gen_L(std::int64_t N) {
  require_prec(N, 2, "gen_L");
  const ArithmeticFunctionCache cache(cache_bound(N - 1));
  std::vector<ExactRational> c(static_cast<std::size_t>(N));
  for (std::int64_t n = 1; n < N; ++n) c[n] = make_rational(cache.mu(n), n);
  return TruncatedSeries(0, std::move(c));
}

TruncatedSeries gen_Up(std::uint64_t p, std::int64_t N) {
  require_prec(N, 2, "gen_Up");
  if (p < 5 || !is_prime(p)) throw NotPrime("gen_Up: p must be a prime >= 5");
  const ArithmeticFunctionCache cache(cache_bound(N - 1));
  std::vector<ExactRational> c(static_cast<std::size_t>(N));
  const BigInt twelve_p = 12 * BigInt(static_cast<unsigned long>(p));
  for (std::int64_t n = 1; n < N; ++n) {
    std::uint64_t m = static_cast<std::uint64_t>(n);
    while (m % p == 0) m /= p;
    c[n] = twelve_p * cache.lambda(m);
  }
  return TruncatedSeries(0, std::move(c));
}

TruncatedSeries gen_basis(int j, std::int64_t N) {
  if (j < 0 || j > 3) throw std::invalid_argument("gen_basis: j must be in 0..3");
  require_prec(N, 2, "gen_basis");
  const TruncatedSeries C = gen_C(N);
  if (j == 0) return C;
  return mul(C, pow_int(gen_H(N), j)).shifted(-j);
}

}  // namespace supercong
