#include <string>

#include "checks_common.hpp"
#include "supercong/modular_series.hpp"
#include "supercong/recurrence.hpp"

namespace supercong {

using detail::guarded;
using detail::label;
using detail::make_report;
using detail::require_prime_ge5;

CheckReport check_beukers(std::uint64_t p, std::int64_t N) {
  require_prime_ge5(p, "check_beukers");
  const auto pp = static_cast<std::int64_t>(p);
  if (N < pp) throw std::invalid_argument("check_beukers: N must be >= p");
  auto report = make_report("beukers");
  report.param("p", static_cast<long long>(p)).param("N", N);
  return guarded(std::move(report), [&](CheckReport& r) {
    const std::int64_t P = N + 1;
    const SequenceTable a = a_seq(pp);
    // F_p is a polynomial: its coefficients beyond degree p-1 are exactly zero.
    std::vector<ExactRational> fp(static_cast<std::size_t>(P), ExactRational(0));
    for (std::int64_t n = 0; n < pp; ++n) fp[n] = ExactRational(a.B(n));
    const TruncatedSeries Fp_t = compose(TruncatedSeries(0, std::move(fp)), gen_t(P));
    const TruncatedSeries theta = gen_theta(P);
    const TruncatedSeries theta_p = v_substitute(gen_theta(N / pp + 2), pp).truncated(P);
    const TruncatedSeries residual = sub(theta, mul(Fp_t, theta_p));
    for (std::int64_t n = 0; n < pp; ++n)
      if (residual.coeff(n) != 0) r.fail("residual is nonzero at q^" + std::to_string(n));
    for (std::int64_t n = pp; n <= N; ++n) {
      const Valuation v = detail::require_p_integral(residual.coeff(n), p, "Beukers residual");
      r.observe(v);
      if (v < 4) r.fail("residual coefficient at q^" + std::to_string(n) + " has v_p < 4");
    }
    r.witness("residual[q^p]", residual.coeff(pp));
  });
}

CoupledCancellation compute_coupled_cancellation(std::uint64_t p, std::int64_t m) {
  require_prime_ge5(p, "compute_coupled_cancellation");
  const auto pp = static_cast<std::int64_t>(p);
  if (m < 1 || m >= pp) throw std::invalid_argument("compute_coupled_cancellation: need 1 <= m < p");
  const std::int64_t P = m * pp + 1;
  const TruncatedSeries C = gen_C(P);
  const ArithmeticFunctionCache cache(static_cast<std::uint64_t>(m * pp));
  auto c = [&](std::int64_t n) -> const ExactRational& { return C.coeff(n); };
  auto mu_over = [&](std::int64_t n) -> ExactRational {
    return ExactRational(cache.mu(static_cast<std::uint64_t>(n))) / ExactRational(n);
  };

  CoupledCancellation out;
  out.S = 0;
  for (std::int64_t u = 1; u <= m; ++u) out.S += ((pp + 1) * c((m - u) * pp) - c(m - u)) * mu_over(u);
  out.T = 0;
  for (std::int64_t u = 0; u < m; ++u)
    for (std::int64_t r = 1; r < pp; ++r) out.T += c((m - u) * pp - r) * mu_over(u * pp + r);
  out.T *= pp;

  const TruncatedSeries CL = mul(C, gen_L(P));
  out.lhs = ExactRational(pp) * CL.coeff(m * pp) - CL.coeff(m);
  return out;
}

CheckReport check_coupled_cancellation(std::uint64_t p, std::int64_t m) {
  auto report = make_report("coupled_cancellation");
  report.param("p", static_cast<long long>(p)).param("m", m);
  const CoupledCancellation cc = compute_coupled_cancellation(p, m);
  return guarded(std::move(report), [&](CheckReport& r) {
    const ExactRational sum = cc.S + cc.T;
    r.witness("S", cc.S).witness("T", cc.T).witness("S+T", sum);
    r.witness("v_p(S)", vp(cc.S, p)).witness("v_p(T)", vp(cc.T, p));
    const Valuation v = vp(sum, p);
    r.witness("v_p(S+T)", v);
    r.observe(v);
    if (sum != cc.lhs) r.fail("S + T differs from p B^(1)_{mp} - B^(1)_m");
    // B^(1)_n = sum_j c_{n-j} mu(j)/j, evaluated directly
    const auto pp = static_cast<std::int64_t>(p);
    const TruncatedSeries C = gen_C(m * pp + 1);
    auto b1 = [&](std::int64_t n) {
      ExactRational s = 0;
      for (std::int64_t j = 1; j <= n; ++j)
        s += C.coeff(n - j) * ExactRational(mu_fn(static_cast<std::uint64_t>(j))) / ExactRational(j);
      return s;
    };
    if (ExactRational(pp * b1(m * pp) - b1(m)) != cc.lhs)
      r.fail("B^(1) from the divisor-sum formula disagrees with [q^n] C L");
    if (v < 4) r.fail("v_p(S + T) < 4");
  });
}

}  // namespace supercong
