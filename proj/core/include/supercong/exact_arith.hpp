#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace supercong {

using BigInt = mpz_class;
// Always canonical: gmpxx arithmetic on mpq_class returns reduced fractions,
// and every constructor path in this library goes through make_rational().
using ExactRational = mpq_class;

ExactRational make_rational(const BigInt& numerator, const BigInt& denominator = 1);
ExactRational parse_rational(const std::string& text);
std::string to_string(const BigInt& x);
std::string to_string(const ExactRational& x);

inline bool is_integral(const ExactRational& x) { return x.get_den() == 1; }

class NotPIntegral : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotPrime : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// p-adic valuation of an exact rational. Zero has valuation Infinity, which
/// compares greater than every finite valuation.
class Valuation {
 public:
  constexpr Valuation() = default;  // Infinity
  constexpr explicit Valuation(std::int64_t v) : value_(v) {}

  static constexpr Valuation infinity() { return Valuation(); }

  constexpr bool is_infinite() const { return !value_.has_value(); }
  std::int64_t value() const;

  constexpr bool operator==(const Valuation&) const = default;
  constexpr std::strong_ordering operator<=>(const Valuation& other) const {
    if (is_infinite() || other.is_infinite())
      return is_infinite() <=> other.is_infinite();
    return *value_ <=> *other.value_;
  }
  constexpr bool operator==(std::int64_t v) const { return value_ == v; }
  constexpr std::strong_ordering operator<=>(std::int64_t v) const {
    return *this <=> Valuation(v);
  }

  /// "inf" or the decimal value.
  std::string to_string() const;

 private:
  std::optional<std::int64_t> value_;
};

/// Deterministic for all 64-bit inputs (Miller-Rabin with the first twelve
/// prime bases).
bool is_prime(std::uint64_t n);

/// v_p(x) = v_p(numerator) - v_p(denominator). Throws NotPrime for p < 2 or
/// composite p.
Valuation vp(const ExactRational& x, std::uint64_t p);
Valuation vp(const BigInt& x, std::uint64_t p);

/// v_p(x) >= 0.
bool is_p_integral(const ExactRational& x, std::uint64_t p);

/// True iff v_p(x - y) >= k. Both arguments must be p-integral, otherwise
/// NotPIntegral is thrown: a failed congruence and a denominator divisible by p
/// are different failures.
bool congruent_mod_power(const ExactRational& x, const ExactRational& y, std::uint64_t p,
                         std::int64_t k);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);
BigInt pow_ui(std::uint64_t base, unsigned exp);

}  // namespace supercong
