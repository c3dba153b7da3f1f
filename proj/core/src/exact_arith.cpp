#include "supercong/exact_arith.hpp"

#include <array>

namespace supercong {

ExactRational make_rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw std::domain_error("zero denominator");
  ExactRational r(numerator, denominator);
  r.canonicalize();
  return r;
}

ExactRational parse_rational(const std::string& text) {
  ExactRational r;
  if (r.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: " + text);
  if (r.get_den() == 0) throw std::domain_error("zero denominator: " + text);
  r.canonicalize();
  return r;
}

std::string to_string(const BigInt& x) { return x.get_str(10); }
std::string to_string(const ExactRational& x) { return x.get_str(10); }

std::int64_t Valuation::value() const {
  if (!value_) throw std::logic_error("valuation is infinite");
  return *value_;
}

std::string Valuation::to_string() const {
  return value_ ? std::to_string(*value_) : std::string("inf");
}

namespace {

__extension__ using uint128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<uint128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
    e >>= 1;
  }
  return r;
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw NotPrime("valuation requested at non-prime " + std::to_string(p));
}

std::int64_t remove_factor(const BigInt& x, std::uint64_t p) {
  if (x == 0) return 0;
  BigInt rest;
  const BigInt prime(static_cast<unsigned long>(p));
  return static_cast<std::int64_t>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), prime.get_mpz_t()));
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  constexpr std::array<std::uint64_t, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto b : bases) {
    if (n % b == 0) return n == b;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (auto a : bases) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Valuation vp(const ExactRational& x, std::uint64_t p) {
  require_prime(p);
  if (x == 0) return Valuation::infinity();
  return Valuation(remove_factor(x.get_num(), p) - remove_factor(x.get_den(), p));
}

Valuation vp(const BigInt& x, std::uint64_t p) {
  require_prime(p);
  if (x == 0) return Valuation::infinity();
  return Valuation(remove_factor(x, p));
}

bool is_p_integral(const ExactRational& x, std::uint64_t p) { return vp(x, p) >= 0; }

bool congruent_mod_power(const ExactRational& x, const ExactRational& y, std::uint64_t p,
                         std::int64_t k) {
  if (!is_p_integral(x, p) || !is_p_integral(y, p))
    throw NotPIntegral("congruence mod " + std::to_string(p) + "^" + std::to_string(k) +
                       " on a value with p in the denominator");
  return vp(ExactRational(x - y), p) >= k;
}

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt pow_ui(std::uint64_t base, unsigned exp) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), exp);
  return r;
}

}  // namespace supercong
