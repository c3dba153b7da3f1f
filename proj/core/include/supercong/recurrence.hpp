#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "supercong/exact_arith.hpp"

namespace supercong {

class NonIntegralStep : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};
class TableTooShort : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Polynomial in the index variable n with integer coefficients, low degree first.
/// The leading coefficient is nonzero; the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<long> coeffs);
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  static IntPolynomial constant(const BigInt& c);
  /// (n + shift)^k
  static IntPolynomial shifted_power(long shift, unsigned k);

  std::span<const BigInt> coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  BigInt operator()(const BigInt& n) const;
  /// P(n + k)
  IntPolynomial shift(long k) const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const BigInt& c, const IntPolynomial& a);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// sum_k P_k(n) S^k in Q[n]<S> with S P(n) = P(n+1) S. Zero coefficients are
/// never stored, so structural equality is operator equality.
class OreOperator {
 public:
  OreOperator() = default;
  OreOperator(std::initializer_list<std::pair<const unsigned, IntPolynomial>> terms);

  static OreOperator identity();
  static OreOperator shift();

  const std::map<unsigned, IntPolynomial>& terms() const { return terms_; }
  const IntPolynomial& coefficient(unsigned k) const;
  unsigned order() const;

  void add_term(unsigned k, const IntPolynomial& p);

  friend OreOperator operator+(const OreOperator& a, const OreOperator& b);
  friend OreOperator operator-(const OreOperator& a, const OreOperator& b);
  friend bool operator==(const OreOperator& a, const OreOperator& b) = default;

  std::string to_string() const;

 private:
  std::map<unsigned, IntPolynomial> terms_;
};

/// Composition f g with the twisted product rule.
OreOperator ore_multiply(const OreOperator& f, const OreOperator& g);

/// sum_k P_k(n) f(n + k).
BigInt apply_operator(const OreOperator& op, std::span<const BigInt> f, std::int64_t n);

/// A_0..A_max with B_n = (-1)^n A_n.
class SequenceTable {
 public:
  explicit SequenceTable(std::vector<BigInt> values) : a_(std::move(values)) {}

  std::size_t size() const { return a_.size(); }
  std::int64_t n_max() const { return static_cast<std::int64_t>(a_.size()) - 1; }
  const BigInt& A(std::int64_t n) const;
  BigInt B(std::int64_t n) const;
  std::span<const BigInt> values() const { return a_; }

 private:
  std::vector<BigInt> a_;
};

/// A_0..A_{n_max} from the order-2 recurrence
///   (n+2)^4 A_{n+2} = 3 R(n) A_{n+1} - 729 (n+1)^4 A_n,  A_0 = 1, A_1 = 9.
/// Throws NonIntegralStep if a division is inexact.
SequenceTable a_seq(std::int64_t n_max);

/// R(n) = 18n^4 + 108n^3 + 250n^2 + 264n + 107.
IntPolynomial r_polynomial();
/// L2 = 729(n+1)^4 - 3R(n) S + (n+2)^4 S^2.
OreOperator l2_operator();
/// The specialized order-3 operator with constant factor -19683(n+1)^4.
OreOperator l3_operator();
/// S - 27.
OreOperator shift_minus_27();

}  // namespace supercong
