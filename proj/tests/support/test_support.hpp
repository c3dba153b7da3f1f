#pragma once

// Hand-rolled generators and independent oracles shared by the unit and
// acceptance tests. Nothing here calls the library's fast paths.

#include <cstdint>
#include <random>
#include <vector>

#include "supercong/exact_arith.hpp"
#include "supercong/series.hpp"

namespace supercong::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

  BigInt big(int max_digits) {
    BigInt x = 0;
    const int digits = static_cast<int>(uniform(1, max_digits));
    for (int i = 0; i < digits; ++i) x = x * 10 + static_cast<long>(uniform(0, 9));
    return uniform(0, 1) ? x : BigInt(-x);
  }

  ExactRational rational(int max_digits = 6) {
    BigInt den = 0;
    while (den == 0) den = big(3);
    return make_rational(big(max_digits), abs(den));
  }

  ExactRational nonzero_rational(int max_digits = 6) {
    ExactRational x = 0;
    while (x == 0) x = rational(max_digits);
    return x;
  }

  // Rationals built from a random power of p so valuations are well spread.
  ExactRational rational_with_p(std::uint64_t p, int spread = 4) {
    ExactRational x = nonzero_rational(4);
    const std::int64_t k = uniform(-spread, spread);
    const BigInt pk = pow_ui(p, static_cast<unsigned>(k < 0 ? -k : k));
    return k < 0 ? ExactRational(x / ExactRational(pk)) : ExactRational(x * ExactRational(pk));
  }

  TruncatedSeries series(std::int64_t min_exp, std::size_t len, bool integral = false, int digits = 4) {
    std::vector<ExactRational> c(len);
    for (auto& x : c) x = integral ? ExactRational(big(digits)) : rational(digits);
    return TruncatedSeries(min_exp, std::move(c));
  }

  TruncatedSeries unit_series(std::size_t len, bool integral = false) {
    TruncatedSeries s = series(0, len, integral);
    std::vector<ExactRational> c(s.coeffs().begin(), s.coeffs().end());
    c[0] = 1;
    return TruncatedSeries(0, std::move(c));
  }

 private:
  std::mt19937_64 rng_;
};

// Double-loop Cauchy product over rationals, independent of the integer kernels.
inline TruncatedSeries naive_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::int64_t lo = a.min_exp() + b.min_exp();
  const std::int64_t hi = std::min(a.prec() + b.min_exp(), b.prec() + a.min_exp());
  std::vector<ExactRational> c(static_cast<std::size_t>(hi - lo), ExactRational(0));
  for (std::int64_t i = a.min_exp(); i < a.prec(); ++i)
    for (std::int64_t j = b.min_exp(); j < b.prec(); ++j)
      if (i + j < hi) c[static_cast<std::size_t>(i + j - lo)] += a.coeff(i) * b.coeff(j);
  return TruncatedSeries(lo, std::move(c));
}

inline int chi3_oracle(std::int64_t d) {
  const std::int64_t r = ((d % 3) + 3) % 3;
  return r == 0 ? 0 : (r == 1 ? 1 : -1);
}

// sum over every d <= n that divides n
inline BigInt sigma4chi3_oracle(std::uint64_t n) {
  BigInt s = 0;
  for (std::uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) s += chi3_oracle(static_cast<std::int64_t>(d)) * pow_ui(d, 4);
  return s;
}

// prod_m (1 - q^m)^{e(m)} via f_N = -(1/N) sum_k s(k) f_{N-k}, s(k) = sum_{d|k} d e(d).
template <class Exponent>
std::vector<BigInt> eta_oracle(Exponent e, std::int64_t N) {
  std::vector<BigInt> s(static_cast<std::size_t>(N), BigInt(0));
  for (std::int64_t d = 1; d < N; ++d)
    for (std::int64_t k = d; k < N; k += d) s[k] += d * e(d);
  std::vector<BigInt> f(static_cast<std::size_t>(N), BigInt(0));
  f[0] = 1;
  for (std::int64_t n = 1; n < N; ++n) {
    BigInt acc = 0;
    for (std::int64_t k = 1; k <= n; ++k) acc += s[k] * f[n - k];
    f[n] = -acc / n;
  }
  return f;
}

// 27^n [z^n] 2F1(1/3, 1/3; 1; z)^3 from the term ratio (k+1/3)^2 / (k+1)^2.
inline std::vector<BigInt> hypergeometric_a(std::int64_t n_max) {
  const auto n = static_cast<std::size_t>(n_max + 1);
  std::vector<ExactRational> f(n);
  f[0] = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const ExactRational r = make_rational(3 * static_cast<long>(k) + 1, 3 * static_cast<long>(k) + 3);
    f[k + 1] = f[k] * r * r;
  }
  std::vector<ExactRational> f2(n, ExactRational(0)), f3(n, ExactRational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) f2[i + j] += f[i] * f[j];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) f3[i + j] += f2[i] * f[j];
  std::vector<BigInt> a(n);
  for (std::size_t k = 0; k < n; ++k) {
    const ExactRational v = f3[k] * ExactRational(pow_ui(27, static_cast<unsigned>(k)));
    a[k] = v.get_num();
    if (v.get_den() != 1) a[k] = -1;  // flags a non-integral value
  }
  return a;
}

}  // namespace supercong::testing
