#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "supercong/exact_arith.hpp"

namespace supercong {

class OutOfPrecision : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};
class NonUnitLeadingCoefficient : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};
class NotUnitOne : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};
class HasConstantTerm : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};
class InnerNotPositiveValuation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Dense truncated Laurent series sum_{min_exp <= n < prec} a_n q^n + O(q^prec).
///
/// Precision is part of the value. Every operation derives the result precision
/// from its inputs; nothing is known at exponents >= prec, and coeff() refuses to
/// answer there. Exponents below min_exp are known to be zero.
class TruncatedSeries {
 public:
  TruncatedSeries(std::int64_t min_exp, std::vector<ExactRational> coeffs);

  static TruncatedSeries zero(std::int64_t prec, std::int64_t min_exp = 0);
  static TruncatedSeries one(std::int64_t prec);
  /// c q^exp + O(q^prec).
  static TruncatedSeries monomial(std::int64_t exp, const ExactRational& c, std::int64_t prec);
  static TruncatedSeries from_integers(std::int64_t min_exp, std::span<const BigInt> coeffs);

  std::int64_t min_exp() const { return min_exp_; }
  std::int64_t prec() const { return min_exp_ + static_cast<std::int64_t>(coeffs_.size()); }
  std::size_t size() const { return coeffs_.size(); }
  std::span<const ExactRational> coeffs() const { return coeffs_; }

  /// [q^n]; zero below min_exp, OutOfPrecision at or beyond prec.
  const ExactRational& coeff(std::int64_t n) const;

  bool is_integral() const;
  bool is_zero() const;

  /// Drop knowledge at exponents >= new_prec (new_prec <= prec).
  TruncatedSeries truncated(std::int64_t new_prec) const;
  /// Re-express with a lower min_exp by padding zeros (new_min <= min_exp).
  TruncatedSeries with_min_exp(std::int64_t new_min) const;
  /// Raise min_exp past leading zero coefficients; an all-zero series is returned unchanged.
  TruncatedSeries strip_leading_zeros() const;
  /// q^k * this.
  TruncatedSeries shifted(std::int64_t k) const;

  TruncatedSeries operator-() const;
  TruncatedSeries& operator*=(const ExactRational& c);

  /// Coefficientwise equality over the common known range.
  friend bool agree(const TruncatedSeries& a, const TruncatedSeries& b);

 private:
  std::int64_t min_exp_;
  std::vector<ExactRational> coeffs_;
};

/// Same min_exp, same prec, same coefficients.
bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries scale(const TruncatedSeries& a, const ExactRational& c);

/// Cauchy product. min_exp adds; prec = min(a.prec + b.min_exp, b.prec + a.min_exp).
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// [q^n] (a b) without forming the product; n must lie in the product's known range.
ExactRational coeff_of_product(const TruncatedSeries& a, const TruncatedSeries& b, std::int64_t n);

/// Inverse of a series whose coefficient at min_exp is nonzero. The result has
/// min_exp = -a.min_exp and the same number of known coefficients.
TruncatedSeries invert(const TruncatedSeries& a);

/// a^k by binary exponentiation; k < 0 inverts first.
TruncatedSeries pow_int(const TruncatedSeries& a, std::int64_t k);

/// log(a) for a = 1 + O(q).
TruncatedSeries log_unit(const TruncatedSeries& a);
/// exp(a) for a = O(q).
TruncatedSeries exp_series(const TruncatedSeries& a);

/// f(g(q)) for f with f.min_exp >= 0 and g = O(q). Horner evaluation from the
/// highest outer coefficient that can still reach the result precision
/// min(g.prec, v * f.prec), v the order of g.
TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g);

TruncatedSeries differentiate(const TruncatedSeries& a);

/// V_p: q -> q^p.
TruncatedSeries v_substitute(const TruncatedSeries& a, std::int64_t p);
/// Lambda_p: sum a_{np} q^n.
TruncatedSeries lambda_extract(const TruncatedSeries& a, std::int64_t p);

inline const ExactRational& coeff(const TruncatedSeries& a, std::int64_t n) { return a.coeff(n); }

/// One factor prod_{n >= 1, filter(n)} (1 - q^{stride n})^exponent. The filter
/// excludes n divisible by skip_multiples_of when that is > 1.
struct EtaFactor {
  std::int64_t stride = 1;
  std::int64_t exponent = 1;
  std::int64_t skip_multiples_of = 0;
};

/// Product of eta-like factors, exact to precision N (exponents 0..N-1).
TruncatedSeries eta_like_product(std::span<const EtaFactor> factors, std::int64_t N);

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return add(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return sub(a, b); }
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return mul(a, b); }
inline TruncatedSeries operator*(const ExactRational& c, const TruncatedSeries& a) { return scale(a, c); }

namespace detail {

// Integer convolution kernels behind mul(); both compute c_n = sum a_i b_{n-i}
// for n < out_len. Exposed for cross-validation in tests and benchmarks.
std::vector<BigInt> convolve_schoolbook(std::span<const BigInt> a, std::span<const BigInt> b,
                                        std::size_t out_len);
std::vector<BigInt> convolve_kronecker(std::span<const BigInt> a, std::span<const BigInt> b,
                                       std::size_t out_len);
std::vector<BigInt> convolve(std::span<const BigInt> a, std::span<const BigInt> b,
                             std::size_t out_len);

}  // namespace detail

}  // namespace supercong
