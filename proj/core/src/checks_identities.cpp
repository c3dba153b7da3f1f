#include <string>

#include "checks_common.hpp"
#include "supercong/modular_series.hpp"
#include "supercong/recurrence.hpp"

namespace supercong {

using detail::guarded;
using detail::label;
using detail::make_report;

namespace {

std::vector<BigInt> b_values(const SequenceTable& a, std::int64_t count) {
  std::vector<BigInt> b(static_cast<std::size_t>(count));
  for (std::int64_t n = 0; n < count; ++n) b[n] = a.B(n);
  return b;
}

// First exponent in [lo, hi) where the series differ, or hi.
std::int64_t first_mismatch(const TruncatedSeries& x, const TruncatedSeries& y, std::int64_t lo,
                            std::int64_t hi) {
  for (std::int64_t n = lo; n < hi; ++n)
    if (x.coeff(n) != y.coeff(n)) return n;
  return hi;
}

}  // namespace

CheckReport check_modular_identity(std::int64_t N) {
  if (N < 10) throw std::invalid_argument("check_modular_identity: N must be >= 10");
  const SequenceTable a = a_seq(N - 1);
  const auto b = b_values(a, N);
  return check_modular_identity(b, N);
}

CheckReport check_modular_identity(std::span<const BigInt> b_coeffs, std::int64_t N) {
  if (static_cast<std::int64_t>(b_coeffs.size()) < N)
    throw std::invalid_argument("check_modular_identity: need N outer coefficients");
  auto report = make_report("modular_identity");
  report.param("N", N);
  return guarded(std::move(report), [&](CheckReport& r) {
    const TruncatedSeries F = TruncatedSeries::from_integers(0, b_coeffs.first(N));
    const TruncatedSeries lhs = compose(F, gen_t(N));
    const TruncatedSeries theta = gen_theta(N);
    r.witness("theta[q^0]", theta.coeff(0));
    r.witness("F(t)[q^1]", lhs.coeff(1));
    r.witness("theta[q^1]", theta.coeff(1));
    if (lhs.prec() < N) r.fail("composition known only to O(q^" + std::to_string(lhs.prec()) + ")");
    const std::int64_t bad = first_mismatch(lhs, theta, 0, N);
    if (bad < N) {
      r.witness("first_mismatch_exponent", ExactRational(bad));
      r.fail("F(t(q)) and Theta differ at q^" + std::to_string(bad));
    }
  });
}

CheckReport check_C_eisenstein(std::int64_t N) {
  if (N < 10) throw std::invalid_argument("check_C_eisenstein: N must be >= 10");
  auto report = make_report("C_eisenstein");
  report.param("N", N);
  return guarded(std::move(report), [&](CheckReport& r) {
    const TruncatedSeries dt = differentiate(gen_t(N + 1));
    const TruncatedSeries lhs = mul(mul(gen_theta(N), gen_H(N)), dt);
    const TruncatedSeries C = gen_C(N);
    for (std::int64_t n : {1, 2}) {
      r.witness(label("lhs", {{"n", n}}), lhs.coeff(n));
      r.witness(label("C", {{"n", n}}), C.coeff(n));
    }
    const std::int64_t bad = first_mismatch(lhs, C, 0, N);
    if (bad < N) r.fail("Theta (q/t) t' and C differ at q^" + std::to_string(bad));
  });
}

CheckReport check_lagrange_burmann(std::int64_t m_max) {
  if (m_max < 1) throw std::invalid_argument("check_lagrange_burmann: m_max must be >= 1");
  auto report = make_report("lagrange_burmann");
  report.param("m_max", m_max);
  return guarded(std::move(report), [&](CheckReport& r) {
    const std::int64_t P = m_max + 1;
    const TruncatedSeries C = gen_C(P);
    const TruncatedSeries H = gen_H(P);
    const SequenceTable a = a_seq(std::max<std::int64_t>(m_max, 1));
    TruncatedSeries Hm = TruncatedSeries::one(P);
    for (std::int64_t m = 0; m <= m_max; ++m) {
      if (m > 0) Hm = mul(Hm, H);
      const ExactRational lhs = coeff_of_product(C, Hm, m);
      if (m <= 1) r.witness(label("[q^m]CH^m", {{"m", m}}), lhs);
      if (lhs != a.B(m)) {
        r.witness(label("mismatch", {{"m", m}}), lhs);
        r.fail("[q^m] C H^m != B_m at m = " + std::to_string(m));
      }
    }
  });
}

CheckReport check_ore_factorization(std::int64_t n_max) {
  if (n_max < 3) throw std::invalid_argument("check_ore_factorization: n_max must be >= 3");
  auto report = make_report("ore_factorization");
  report.param("n_max", n_max);
  return guarded(std::move(report), [&](CheckReport& r) {
    const OreOperator l2 = l2_operator();
    const OreOperator l3 = l3_operator();
    const OreOperator product = ore_multiply(shift_minus_27(), l2);
    if (!(product == l3)) r.fail("(S - 27) L2 = " + product.to_string() + " differs from L3");

    const IntPolynomial R = r_polynomial();
    const IntPolynomial n2_4 = IntPolynomial::shifted_power(2, 4);
    if (!(BigInt(729) * n2_4 + BigInt(81) * R == BigInt(81) * IntPolynomial{251, 552, 466, 180, 27}))
      r.fail("729(n+2)^4 + 81R(n) bridging identity fails");
    if (!(BigInt(3) * R.shift(1) + BigInt(27) * n2_4 == BigInt(3) * IntPolynomial{891, 1448, 898, 252, 27}))
      r.fail("3R(n+1) + 27(n+2)^4 bridging identity fails");

    const SequenceTable a = a_seq(n_max);
    const BigInt w0 = apply_operator(l2, a.values(), 0);
    r.witness("w_0", ExactRational(w0));
    r.witness("729*A_0", ExactRational(BigInt(729) * a.A(0)));
    r.witness("-3R(0)*A_1", ExactRational(BigInt(-3) * R(0) * a.A(1)));
    r.witness("2^4*A_2", ExactRational(BigInt(16) * a.A(2)));
    if (w0 != 0) r.fail("w_0 != 0");
    for (std::int64_t n = 0; n + 2 <= n_max; ++n) {
      if (apply_operator(l2, a.values(), n) != 0) {
        r.fail("L2 A != 0 at n = " + std::to_string(n));
        break;
      }
    }
    for (std::int64_t n = 0; n + 3 <= n_max; ++n) {
      if (apply_operator(l3, a.values(), n) != 0) {
        r.fail("L3 A != 0 at n = " + std::to_string(n));
        break;
      }
    }
  });
}

CheckReport check_supercongruence_window(std::uint64_t p_max, std::int64_t n_max) {
  if (p_max < 5) throw std::invalid_argument("check_supercongruence_window: no primes >= 5 up to p_max");
  if (n_max < 5) throw std::invalid_argument("check_supercongruence_window: n_max must be >= 5");
  auto report = make_report("supercongruence_window");
  report.param("p_max", static_cast<long long>(p_max)).param("n_max", n_max);
  return guarded(std::move(report), [&](CheckReport& r) {
    const SequenceTable a = a_seq(n_max);
    std::uint64_t arg_p = 0;
    std::int64_t arg_m = 0;
    long long pairs = 0;
    for (std::uint64_t p = 5; p <= p_max; ++p) {
      if (!is_prime(p)) continue;
      for (std::int64_t m = 1; static_cast<std::int64_t>(p) * m <= n_max; ++m) {
        const Valuation v = vp(BigInt(a.A(static_cast<std::int64_t>(p) * m) - a.A(m)), p);
        ++pairs;
        if (!r.min_valuation || v < *r.min_valuation) {
          arg_p = p;
          arg_m = m;
        }
        r.observe(v);
        if (v < 4) r.fail("A(pm) != A(m) mod p^4 at p = " + std::to_string(p) + ", m = " + std::to_string(m));
      }
    }
    if (pairs == 0) throw std::invalid_argument("check_supercongruence_window: empty window");
    r.witness("pairs_checked", ExactRational(static_cast<long>(pairs)));
    r.witness("argmin_p", ExactRational(static_cast<unsigned long>(arg_p)));
    r.witness("argmin_m", ExactRational(arg_m));
    r.witness("min_valuation", *r.min_valuation);
  });
}

CheckReport diagonal_valuation(std::uint64_t p) {
  detail::require_prime_ge5(p, "diagonal_valuation");
  if (p > 47) throw std::invalid_argument("diagonal_valuation: p too large for A(p^2)");
  auto report = make_report("diagonal_valuation");
  report.param("p", static_cast<long long>(p));
  return guarded(std::move(report), [&](CheckReport& r) {
    const auto pp = static_cast<std::int64_t>(p);
    const SequenceTable a = a_seq(pp * pp);
    const Valuation v = vp(BigInt(a.A(pp * pp) - a.A(pp)), p);
    r.witness("v_p(A(p^2)-A(p))", v);
    r.observe(v);
    const bool tabulated = p == 5 || p == 7;
    if (v < 4) r.fail("A(p^2) != A(p) mod p^4");
    if (tabulated && !(v == 8)) r.fail("diagonal valuation differs from the tabulated 8");
    if (!tabulated) r.note("observation only: no tabulated value for this prime");
  });
}

}  // namespace supercong
