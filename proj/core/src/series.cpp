#include "supercong/series.hpp"

#include <algorithm>
#include <optional>
#include <string>

namespace supercong {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

const ExactRational& zero_rational() {
  static const ExactRational z(0);
  return z;
}

// Integer image of a rational coefficient vector: values = ints / den.
struct ScaledIntegers {
  std::vector<BigInt> ints;
  BigInt den = 1;
};

ScaledIntegers to_integers(std::span<const ExactRational> values, std::size_t count) {
  ScaledIntegers out;
  count = std::min(count, values.size());
  for (std::size_t i = 0; i < count; ++i) {
    const BigInt& d = values[i].get_den();
    if (d != 1) mpz_lcm(out.den.get_mpz_t(), out.den.get_mpz_t(), d.get_mpz_t());
  }
  out.ints.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto& v = values[i];
    if (out.den == 1) {
      out.ints[i] = v.get_num();
    } else {
      BigInt f = out.den / v.get_den();
      out.ints[i] = v.get_num() * f;
    }
  }
  return out;
}

std::vector<ExactRational> from_integers_over(std::vector<BigInt>&& ints, const BigInt& den) {
  std::vector<ExactRational> out(ints.size());
  for (std::size_t i = 0; i < ints.size(); ++i) {
    if (den == 1) {
      mpz_swap(out[i].get_num_mpz_t(), ints[i].get_mpz_t());
    } else {
      out[i] = make_rational(ints[i], den);
    }
  }
  return out;
}

std::size_t max_bits(std::span<const BigInt> v) {
  std::size_t bits = 0;
  for (const auto& x : v) {
    if (x != 0) bits = std::max<std::size_t>(bits, mpz_sizeinbase(x.get_mpz_t(), 2));
  }
  return bits;
}

// sum v_i 2^{k i}, balanced by divide and conquer.
BigInt kronecker_pack(std::span<const BigInt> v, std::size_t k) {
  if (v.size() <= 8) {
    BigInt r = 0;
    for (std::size_t i = v.size(); i-- > 0;) {
      mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), k);
      r += v[i];
    }
    return r;
  }
  const std::size_t mid = v.size() / 2;
  BigInt lo = kronecker_pack(v.first(mid), k);
  BigInt hi = kronecker_pack(v.subspan(mid), k);
  mpz_mul_2exp(hi.get_mpz_t(), hi.get_mpz_t(), k * mid);
  hi += lo;
  return hi;
}

// Splits X = lo + 2^bits hi with |lo| < 2^(bits-1).
void balanced_split(BigInt& x, std::size_t bits, BigInt& lo) {
  mpz_fdiv_r_2exp(lo.get_mpz_t(), x.get_mpz_t(), bits);
  if (bits > 0 && mpz_tstbit(lo.get_mpz_t(), bits - 1)) {
    BigInt full;
    mpz_setbit(full.get_mpz_t(), bits);
    lo -= full;
  }
  x -= lo;
  mpz_fdiv_q_2exp(x.get_mpz_t(), x.get_mpz_t(), bits);
}

// Inverse of kronecker_pack for digits in (-2^(k-1), 2^(k-1)).
void kronecker_unpack(BigInt x, std::size_t k, std::span<BigInt> out) {
  if (out.size() == 1) {
    mpz_swap(out[0].get_mpz_t(), x.get_mpz_t());
    return;
  }
  const std::size_t mid = out.size() / 2;
  BigInt lo;
  balanced_split(x, k * mid, lo);
  kronecker_unpack(std::move(lo), k, out.first(mid));
  kronecker_unpack(std::move(x), k, out.subspan(mid));
}

constexpr std::size_t kKroneckerThreshold = 24;

}  // namespace

namespace detail {

std::vector<BigInt> convolve_schoolbook(std::span<const BigInt> a, std::span<const BigInt> b,
                                        std::size_t out_len) {
  std::vector<BigInt> c(out_len);
  for (std::size_t n = 0; n < out_len; ++n) {
    mpz_ptr acc = c[n].get_mpz_t();
    const std::size_t lo = n >= b.size() ? n - b.size() + 1 : 0;
    const std::size_t hi = std::min(n, a.size() - 1);
    for (std::size_t i = lo; i <= hi && i < a.size(); ++i)
      mpz_addmul(acc, a[i].get_mpz_t(), b[n - i].get_mpz_t());
  }
  return c;
}

std::vector<BigInt> convolve_kronecker(std::span<const BigInt> a, std::span<const BigInt> b,
                                       std::size_t out_len) {
  std::vector<BigInt> c(out_len);
  if (out_len == 0 || a.empty() || b.empty()) return c;
  const bool square = a.data() == b.data() && a.size() == b.size();
  a = a.first(std::min(a.size(), out_len));
  b = b.first(std::min(b.size(), out_len));
  const std::size_t terms = std::min(a.size(), b.size());
  std::size_t len_bits = 1;
  while ((std::size_t{1} << len_bits) <= terms) ++len_bits;
  const std::size_t k = max_bits(a) + max_bits(b) + len_bits + 2;

  BigInt pa = kronecker_pack(a, k);
  BigInt prod;
  if (square) {
    mpz_mul(prod.get_mpz_t(), pa.get_mpz_t(), pa.get_mpz_t());
  } else {
    BigInt pb = kronecker_pack(b, k);
    mpz_mul(prod.get_mpz_t(), pa.get_mpz_t(), pb.get_mpz_t());
  }
  BigInt low;
  balanced_split(prod, k * out_len, low);
  kronecker_unpack(std::move(low), k, c);
  return c;
}

std::vector<BigInt> convolve(std::span<const BigInt> a, std::span<const BigInt> b,
                             std::size_t out_len) {
  if (std::min({a.size(), b.size(), out_len}) < kKroneckerThreshold)
    return convolve_schoolbook(a, b, out_len);
  return convolve_kronecker(a, b, out_len);
}

}  // namespace detail

TruncatedSeries::TruncatedSeries(std::int64_t min_exp, std::vector<ExactRational> coeffs)
    : min_exp_(min_exp), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw OutOfPrecision("series must know at least one coefficient");
}

TruncatedSeries TruncatedSeries::zero(std::int64_t prec, std::int64_t min_exp) {
  if (prec <= min_exp) throw OutOfPrecision("zero series with empty range");
  return TruncatedSeries(min_exp, std::vector<ExactRational>(prec - min_exp));
}

TruncatedSeries TruncatedSeries::one(std::int64_t prec) {
  auto s = zero(prec, 0);
  s.coeffs_[0] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::monomial(std::int64_t exp, const ExactRational& c,
                                          std::int64_t prec) {
  auto s = zero(prec, std::min(exp, prec - 1));
  if (exp < prec) s.coeffs_[exp - s.min_exp_] = c;
  return s;
}

TruncatedSeries TruncatedSeries::from_integers(std::int64_t min_exp, std::span<const BigInt> coeffs) {
  std::vector<ExactRational> v(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) v[i] = coeffs[i];
  return TruncatedSeries(min_exp, std::move(v));
}

const ExactRational& TruncatedSeries::coeff(std::int64_t n) const {
  if (n >= prec())
    throw OutOfPrecision("coefficient of q^" + std::to_string(n) + " requested from a series known to O(q^" +
                         std::to_string(prec()) + ")");
  if (n < min_exp_) return zero_rational();
  return coeffs_[static_cast<std::size_t>(n - min_exp_)];
}

bool TruncatedSeries::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& c) { return c.get_den() == 1; });
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& c) { return c == 0; });
}

TruncatedSeries TruncatedSeries::truncated(std::int64_t new_prec) const {
  if (new_prec > prec()) throw OutOfPrecision("cannot truncate to a higher precision");
  if (new_prec <= min_exp_) throw OutOfPrecision("truncation leaves no known coefficients");
  return TruncatedSeries(min_exp_, std::vector<ExactRational>(
                                       coeffs_.begin(), coeffs_.begin() + (new_prec - min_exp_)));
}

TruncatedSeries TruncatedSeries::with_min_exp(std::int64_t new_min) const {
  if (new_min > min_exp_) throw std::invalid_argument("with_min_exp cannot raise min_exp");
  std::vector<ExactRational> v(static_cast<std::size_t>(prec() - new_min));
  std::copy(coeffs_.begin(), coeffs_.end(), v.begin() + (min_exp_ - new_min));
  return TruncatedSeries(new_min, std::move(v));
}

TruncatedSeries TruncatedSeries::strip_leading_zeros() const {
  std::size_t i = 0;
  while (i + 1 < coeffs_.size() && coeffs_[i] == 0) ++i;
  if (coeffs_[i] == 0) return *this;
  return TruncatedSeries(min_exp_ + static_cast<std::int64_t>(i),
                         std::vector<ExactRational>(coeffs_.begin() + i, coeffs_.end()));
}

TruncatedSeries TruncatedSeries::shifted(std::int64_t k) const {
  return TruncatedSeries(min_exp_ + k, coeffs_);
}

TruncatedSeries TruncatedSeries::operator-() const {
  auto r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

TruncatedSeries& TruncatedSeries::operator*=(const ExactRational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

bool agree(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::int64_t lo = std::min(a.min_exp_, b.min_exp_);
  const std::int64_t hi = std::min(a.prec(), b.prec());
  for (std::int64_t n = lo; n < hi; ++n) {
    if (a.coeff(n) != b.coeff(n)) return false;
  }
  return true;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a.min_exp() == b.min_exp() && a.prec() == b.prec() &&
         std::equal(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin());
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::int64_t lo = std::min(a.min_exp(), b.min_exp());
  const std::int64_t hi = std::min(a.prec(), b.prec());
  std::vector<ExactRational> v(static_cast<std::size_t>(hi - lo));
  for (std::int64_t n = lo; n < hi; ++n) v[n - lo] = a.coeff(n) + b.coeff(n);
  return TruncatedSeries(lo, std::move(v));
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) { return add(a, -b); }

TruncatedSeries scale(const TruncatedSeries& a, const ExactRational& c) {
  auto r = a;
  r *= c;
  return r;
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t len = std::min(a.size(), b.size());
  const bool same = &a == &b;
  ScaledIntegers sa = to_integers(a.coeffs(), len);
  std::vector<BigInt> prod;
  BigInt den;
  if (same) {
    prod = detail::convolve(sa.ints, sa.ints, len);
    den = sa.den * sa.den;
  } else {
    ScaledIntegers sb = to_integers(b.coeffs(), len);
    prod = detail::convolve(sa.ints, sb.ints, len);
    den = sa.den * sb.den;
  }
  return TruncatedSeries(a.min_exp() + b.min_exp(), from_integers_over(std::move(prod), den));
}

ExactRational coeff_of_product(const TruncatedSeries& a, const TruncatedSeries& b, std::int64_t n) {
  const std::int64_t prec = std::min(a.prec() + b.min_exp(), b.prec() + a.min_exp());
  if (n >= prec)
    throw OutOfPrecision("coefficient of q^" + std::to_string(n) + " of a product known to O(q^" +
                         std::to_string(prec) + ")");
  const std::int64_t lo = std::max(a.min_exp(), n - (b.prec() - 1));
  const std::int64_t hi = std::min(a.prec() - 1, n - b.min_exp());
  const bool integral = a.is_integral() && b.is_integral();
  if (integral) {
    BigInt acc = 0;
    for (std::int64_t i = lo; i <= hi; ++i)
      mpz_addmul(acc.get_mpz_t(), a.coeff(i).get_num_mpz_t(), b.coeff(n - i).get_num_mpz_t());
    return acc;
  }
  ExactRational acc = 0;
  for (std::int64_t i = lo; i <= hi; ++i) acc += a.coeff(i) * b.coeff(n - i);
  return acc;
}

namespace {

// 1/a for a unit power series (coefficient list starting at q^0), by the
// triangular recurrence for short inputs and Newton iteration otherwise.
std::vector<ExactRational> unit_inverse(std::span<const ExactRational> a) {
  const std::size_t len = a.size();
  if (len < 48) {
    std::vector<ExactRational> b(len);
    const ExactRational inv0 = 1 / a[0];
    b[0] = inv0;
    for (std::size_t n = 1; n < len; ++n) {
      ExactRational acc = 0;
      for (std::size_t k = 1; k <= n; ++k) {
        if (a[k] != 0) acc += a[k] * b[n - k];
      }
      b[n] = -acc * inv0;
    }
    return b;
  }
  // b <- b (2 - a b), doubling the number of correct terms each round.
  const TruncatedSeries full(0, std::vector<ExactRational>(a.begin(), a.end()));
  TruncatedSeries b(0, std::vector<ExactRational>{1 / a[0]});
  while (b.size() < len) {
    const std::size_t next = std::min(len, 2 * b.size());
    std::vector<ExactRational> padded(next);
    std::copy(b.coeffs().begin(), b.coeffs().end(), padded.begin());
    const TruncatedSeries bext(0, std::move(padded));
    const TruncatedSeries ab = mul(full.truncated(static_cast<std::int64_t>(next)), bext);
    std::vector<ExactRational> corr(next);
    corr[0] = 2;
    for (std::size_t i = 0; i < next; ++i) corr[i] -= ab.coeffs()[i];
    b = mul(bext, TruncatedSeries(0, std::move(corr)));
  }
  return std::vector<ExactRational>(b.coeffs().begin(), b.coeffs().end());
}

}  // namespace

TruncatedSeries invert(const TruncatedSeries& a) {
  if (a.coeffs()[0] == 0)
    throw NonUnitLeadingCoefficient("invert: coefficient at q^" + std::to_string(a.min_exp()) +
                                    " is zero");
  return TruncatedSeries(-a.min_exp(), unit_inverse(a.coeffs()));
}

TruncatedSeries pow_int(const TruncatedSeries& a, std::int64_t k) {
  if (k == 0) return TruncatedSeries::one(static_cast<std::int64_t>(a.size()));
  if (k < 0) return pow_int(invert(a), -k);
  TruncatedSeries base = a;
  std::optional<TruncatedSeries> acc;
  auto e = static_cast<std::uint64_t>(k);
  while (true) {
    if (e & 1) acc = acc ? mul(*acc, base) : base;
    e >>= 1;
    if (!e) break;
    base = mul(base, base);
  }
  return *acc;
}

namespace {

// Coefficients at exponents 0..prec-1 of a series whose entries below 0 vanish.
std::vector<ExactRational> power_part(const TruncatedSeries& a) {
  std::vector<ExactRational> v(static_cast<std::size_t>(std::max<std::int64_t>(a.prec(), 0)));
  for (std::int64_t n = 0; n < a.prec(); ++n) v[n] = a.coeff(n);
  return v;
}

bool vanishes_below(const TruncatedSeries& a, std::int64_t e) {
  for (std::int64_t n = a.min_exp(); n < std::min(e, a.prec()); ++n) {
    if (a.coeff(n) != 0) return false;
  }
  return true;
}

}  // namespace

TruncatedSeries log_unit(const TruncatedSeries& a) {
  if (a.prec() < 1 || !vanishes_below(a, 0) || a.coeff(0) != 1)
    throw NotUnitOne("log_unit: series is not 1 + O(q)");
  const TruncatedSeries u(0, power_part(a));
  // log(a)' = a'/a
  const TruncatedSeries ratio = mul(differentiate(u), invert(u));
  std::vector<ExactRational> out(u.size());
  for (std::int64_t n = 1; n < static_cast<std::int64_t>(u.size()); ++n)
    out[n] = ratio.coeff(n - 1) / n;
  return TruncatedSeries(0, std::move(out));
}

TruncatedSeries exp_series(const TruncatedSeries& a) {
  if (!vanishes_below(a, 1)) throw HasConstantTerm("exp_series: argument has terms at q^0 or below");
  const std::int64_t prec = std::max<std::int64_t>(a.prec(), 1);
  std::vector<ExactRational> ka(static_cast<std::size_t>(prec));
  for (std::int64_t k = 1; k < a.prec(); ++k) ka[k] = k * a.coeff(k);
  // n E_n = sum_{k=1}^{n} k a_k E_{n-k}
  std::vector<ExactRational> e(static_cast<std::size_t>(prec));
  e[0] = 1;
  for (std::int64_t n = 1; n < prec; ++n) {
    ExactRational acc = 0;
    for (std::int64_t k = 1; k <= n; ++k) {
      if (ka[k] != 0) acc += ka[k] * e[n - k];
    }
    e[n] = acc / n;
  }
  return TruncatedSeries(0, std::move(e));
}

TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g) {
  if (f.min_exp() < 0 && !vanishes_below(f, 0))
    throw std::domain_error("compose: outer series has negative exponents");
  if (!vanishes_below(g, 1)) throw InnerNotPositiveValuation("compose: inner series is not O(q)");
  if (g.is_zero()) return TruncatedSeries::monomial(0, f.coeff(0), std::max<std::int64_t>(g.prec(), 1));
  const TruncatedSeries inner = g.strip_leading_zeros();
  const std::int64_t v = inner.min_exp();
  const std::int64_t prec = std::min(g.prec(), v * f.prec());
  if (prec < 1) throw OutOfPrecision("compose: no sound coefficients");
  // Terms f_i g^i with i v >= prec cannot contribute.
  const std::int64_t top = std::min(f.prec() - 1, (prec - 1) / v);
  const TruncatedSeries gt = inner.prec() > prec ? inner.truncated(prec) : inner;
  TruncatedSeries acc = TruncatedSeries::monomial(0, f.coeff(top), prec);
  for (std::int64_t i = top - 1; i >= 0; --i) {
    acc = mul(acc, gt).with_min_exp(0);
    if (acc.prec() > prec) acc = acc.truncated(prec);
    acc = add(acc, TruncatedSeries::monomial(0, f.coeff(i), prec));
  }
  if (acc.prec() > prec) acc = acc.truncated(prec);
  return acc;
}

TruncatedSeries differentiate(const TruncatedSeries& a) {
  std::vector<ExactRational> v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = (a.min_exp() + static_cast<std::int64_t>(i)) * a.coeffs()[i];
  return TruncatedSeries(a.min_exp() - 1, std::move(v));
}

TruncatedSeries v_substitute(const TruncatedSeries& a, std::int64_t p) {
  if (p < 1) throw std::invalid_argument("v_substitute: p must be positive");
  const std::int64_t lo = p * a.min_exp();
  const std::int64_t hi = p * (a.prec() - 1) + 1;
  std::vector<ExactRational> v(static_cast<std::size_t>(hi - lo));
  for (std::size_t i = 0; i < a.size(); ++i) v[i * p] = a.coeffs()[i];
  return TruncatedSeries(lo, std::move(v));
}

TruncatedSeries lambda_extract(const TruncatedSeries& a, std::int64_t p) {
  if (p < 1) throw std::invalid_argument("lambda_extract: p must be positive");
  const std::int64_t lo = ceil_div(a.min_exp(), p);
  const std::int64_t hi = floor_div(a.prec() - 1, p) + 1;
  if (hi <= lo) throw OutOfPrecision("lambda_extract: no multiple of p inside the known range");
  std::vector<ExactRational> v(static_cast<std::size_t>(hi - lo));
  for (std::int64_t n = lo; n < hi; ++n) v[n - lo] = a.coeff(n * p);
  return TruncatedSeries(lo, std::move(v));
}

TruncatedSeries eta_like_product(std::span<const EtaFactor> factors, std::int64_t N) {
  if (N < 1) throw std::invalid_argument("eta_like_product: N must be >= 1");
  std::vector<BigInt> c(static_cast<std::size_t>(N));
  c[0] = 1;
  for (const auto& f : factors) {
    if (f.stride < 1) throw std::invalid_argument("eta_like_product: stride must be positive");
    for (std::int64_t n = 1; f.stride * n < N; ++n) {
      if (f.skip_multiples_of > 1 && n % f.skip_multiples_of == 0) continue;
      const std::int64_t m = f.stride * n;
      if (f.exponent > 0) {
        for (std::int64_t rep = 0; rep < f.exponent; ++rep)
          for (std::int64_t i = N - 1; i >= m; --i) c[i] -= c[i - m];
      } else {
        // multiplication by the inverse 1/(1 - q^m) = 1 + q^m + q^{2m} + ...
        for (std::int64_t rep = 0; rep < -f.exponent; ++rep)
          for (std::int64_t i = m; i < N; ++i) c[i] += c[i - m];
      }
    }
  }
  return TruncatedSeries::from_integers(0, c);
}

}  // namespace supercong
