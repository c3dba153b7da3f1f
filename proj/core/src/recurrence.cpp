#include "supercong/recurrence.hpp"

#include <algorithm>
#include <sstream>

namespace supercong {

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

IntPolynomial IntPolynomial::shifted_power(long shift, unsigned k) {
  // (n + s)^k = sum_i C(k, i) s^{k-i} n^i
  std::vector<BigInt> c(k + 1);
  const BigInt s(shift);
  for (unsigned i = 0; i <= k; ++i) {
    BigInt sp;
    mpz_pow_ui(sp.get_mpz_t(), s.get_mpz_t(), k - i);
    c[i] = binomial(k, i) * sp;
  }
  return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::operator()(const BigInt& n) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * n + *it;
  return acc;
}

IntPolynomial IntPolynomial::shift(long k) const {
  // Horner in the shifted variable: P(n + k) = (...(c_d (n+k) + c_{d-1})(n+k) ...).
  const IntPolynomial x({k, 1});
  IntPolynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + constant(*it);
  return acc;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + BigInt(-1) * b; }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const BigInt& c, const IntPolynomial& a) {
  std::vector<BigInt> v(a.coeffs_.begin(), a.coeffs_.end());
  for (auto& x : v) x *= c;
  return IntPolynomial(std::move(v));
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    const BigInt mag = abs(c);
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i >= 1) os << "n";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

OreOperator::OreOperator(std::initializer_list<std::pair<const unsigned, IntPolynomial>> terms) {
  for (const auto& [k, p] : terms) add_term(k, p);
}

OreOperator OreOperator::identity() { return OreOperator{{0u, IntPolynomial{1}}}; }
OreOperator OreOperator::shift() { return OreOperator{{1u, IntPolynomial{1}}}; }

const IntPolynomial& OreOperator::coefficient(unsigned k) const {
  static const IntPolynomial zero;
  auto it = terms_.find(k);
  return it == terms_.end() ? zero : it->second;
}

unsigned OreOperator::order() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

void OreOperator::add_term(unsigned k, const IntPolynomial& p) {
  IntPolynomial sum = coefficient(k) + p;
  if (sum.is_zero()) terms_.erase(k);
  else terms_[k] = std::move(sum);
}

OreOperator operator+(const OreOperator& a, const OreOperator& b) {
  OreOperator r = a;
  for (const auto& [k, p] : b.terms_) r.add_term(k, p);
  return r;
}

OreOperator operator-(const OreOperator& a, const OreOperator& b) {
  OreOperator r = a;
  for (const auto& [k, p] : b.terms_) r.add_term(k, BigInt(-1) * p);
  return r;
}

std::string OreOperator::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, p] : terms_) {
    if (!first) os << " + ";
    os << "(" << p.to_string() << ")";
    if (k == 1) os << "S";
    if (k > 1) os << "S^" << k;
    first = false;
  }
  return os.str();
}

OreOperator ore_multiply(const OreOperator& f, const OreOperator& g) {
  // P_i(n) S^i Q_j(n) S^j = P_i(n) Q_j(n + i) S^{i+j}
  OreOperator r;
  for (const auto& [i, p] : f.terms())
    for (const auto& [j, q] : g.terms()) r.add_term(i + j, p * q.shift(static_cast<long>(i)));
  return r;
}

BigInt apply_operator(const OreOperator& op, std::span<const BigInt> f, std::int64_t n) {
  if (n < 0 || n + static_cast<std::int64_t>(op.order()) >= static_cast<std::int64_t>(f.size()))
    throw TableTooShort("apply_operator: table of length " + std::to_string(f.size()) +
                        " does not reach index " + std::to_string(n + op.order()));
  BigInt acc = 0;
  const BigInt nn(static_cast<long>(n));
  for (const auto& [k, p] : op.terms()) acc += p(nn) * f[n + k];
  return acc;
}

const BigInt& SequenceTable::A(std::int64_t n) const {
  if (n < 0 || n >= static_cast<std::int64_t>(a_.size()))
    throw TableTooShort("sequence table has no entry " + std::to_string(n));
  return a_[n];
}

BigInt SequenceTable::B(std::int64_t n) const { return (n % 2 == 0) ? A(n) : BigInt(-A(n)); }

IntPolynomial r_polynomial() { return IntPolynomial{107, 264, 250, 108, 18}; }

SequenceTable a_seq(std::int64_t n_max) {
  if (n_max < 1) throw std::invalid_argument("a_seq: n_max must be >= 1");
  std::vector<BigInt> a(static_cast<std::size_t>(n_max + 1));
  a[0] = 1;
  a[1] = 9;
  const IntPolynomial R = r_polynomial();
  BigInt num, den, rem;
  for (std::int64_t n = 0; n + 2 <= n_max; ++n) {
    const BigInt nn(static_cast<long>(n));
    num = 3 * R(nn) * a[n + 1] - 729 * pow_ui(n + 1, 4) * a[n];
    den = pow_ui(n + 2, 4);
    mpz_tdiv_qr(a[n + 2].get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (rem != 0) throw NonIntegralStep("a_seq: inexact division at n = " + std::to_string(n + 2));
  }
  return SequenceTable(std::move(a));
}

OreOperator l2_operator() {
  return OreOperator{{0u, BigInt(729) * IntPolynomial::shifted_power(1, 4)},
                     {1u, BigInt(-3) * r_polynomial()},
                     {2u, IntPolynomial::shifted_power(2, 4)}};
}

OreOperator l3_operator() {
  return OreOperator{{0u, BigInt(-19683) * IntPolynomial::shifted_power(1, 4)},
                     {1u, BigInt(81) * IntPolynomial{251, 552, 466, 180, 27}},
                     {2u, BigInt(-3) * IntPolynomial{891, 1448, 898, 252, 27}},
                     {3u, IntPolynomial::shifted_power(3, 4)}};
}

OreOperator shift_minus_27() { return OreOperator{{0u, IntPolynomial{-27}}, {1u, IntPolynomial{1}}}; }

}  // namespace supercong
