#pragma once

#include <cstdint>
#include <vector>

#include "supercong/exact_arith.hpp"
#include "supercong/series.hpp"

namespace supercong {

/// Legendre symbol (n/3).
int chi3(std::int64_t n);

/// sum_{d | n} chi3(d) d^4, by trial division.
BigInt sigma4chi3(std::uint64_t n);
/// sigma_{-1}(n) - sigma_{-1}(n/3); zero at non-integral or non-positive arguments.
ExactRational lambda_fn(const ExactRational& n);
/// 12 sigma_1(n / 3^{v_3(n)}).
BigInt mu_fn(std::uint64_t n);

/// Sieved tables of sigma4chi3, lambda_fn and mu_fn for 1 <= n <= bound.
/// Immutable once built; share freely between threads.
class ArithmeticFunctionCache {
 public:
  explicit ArithmeticFunctionCache(std::uint64_t bound);

  std::uint64_t bound() const { return bound_; }
  const BigInt& sigma4chi3(std::uint64_t n) const;
  const ExactRational& lambda(std::uint64_t n) const;
  const BigInt& mu(std::uint64_t n) const;

 private:
  void check(std::uint64_t n) const;

  std::uint64_t bound_;
  std::vector<BigInt> sigma4chi3_;
  std::vector<ExactRational> lambda_;
  std::vector<BigInt> mu_;
};

// q-expansions. N is the precision: coefficients are exact for exponents < N.

/// t = q prod (1 - q^{3n})^12 / (1 - q^n)^12; min_exp 1.
TruncatedSeries gen_t(std::int64_t N);
/// H = q/t = prod_{3 !| n} (1 - q^n)^12.
TruncatedSeries gen_H(std::int64_t N);
/// Theta = prod (1 - q^n)^9 / (1 - q^{3n})^3.
TruncatedSeries gen_theta(std::int64_t N);
/// C = 1 + sum 3 sigma4chi3(n) q^n.
TruncatedSeries gen_C(std::int64_t N);
/// L = log(t/q) = sum mu(n)/n q^n.
TruncatedSeries gen_L(std::int64_t N);
/// U_p = log(t^p / t(q^p)); coefficient of q^{p^a m} (p !| m) is 12 p lambda(m).
TruncatedSeries gen_Up(std::uint64_t p, std::int64_t N);
/// C / t^j = q^{-j} C H^j, 0 <= j <= 3; known to O(q^{N-j}).
TruncatedSeries gen_basis(int j, std::int64_t N);

}  // namespace supercong
