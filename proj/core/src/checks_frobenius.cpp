#include <string>

#include "checks_common.hpp"
#include "supercong/modular_series.hpp"
#include "supercong/recurrence.hpp"

namespace supercong {

using detail::guarded;
using detail::label;
using detail::make_report;
using detail::require_p_integral;
using detail::require_prime_ge5;

const DeltaEntry& DeltaTable::at(int r, int s) const {
  for (const auto& e : entries)
    if (e.r == r && e.s == s) return e;
  throw std::out_of_range("DeltaTable: no entry (" + std::to_string(r) + "," + std::to_string(s) + ")");
}

std::int64_t delta_precision(std::uint64_t p) { return 3 * static_cast<std::int64_t>(p) + 1; }

DeltaTable compute_deltas(std::uint64_t p) {
  require_prime_ge5(p, "compute_deltas");
  const std::int64_t P = delta_precision(p);
  return compute_deltas(p, gen_C(P), gen_H(P));
}

DeltaTable compute_deltas(std::uint64_t p, const TruncatedSeries& C_in, const TruncatedSeries& H_in) {
  require_prime_ge5(p, "compute_deltas");
  const std::int64_t P = delta_precision(p);
  if (C_in.prec() < P || H_in.prec() < P)
    throw OutOfPrecision("compute_deltas: C and H must be known to " + std::to_string(P) + " terms");
  const TruncatedSeries C = C_in.prec() > P ? C_in.truncated(P) : C_in;
  const TruncatedSeries H = H_in.prec() > P ? H_in.truncated(P) : H_in;
  const auto big = detail::h_powers(H, p);
  const TruncatedSeries Hsmall = H.truncated(4);

  DeltaTable table;
  table.p = p;
  std::size_t k = 0;
  const auto pp = static_cast<std::int64_t>(p);
  for (int r = 1; r <= 3; ++r) {
    const TruncatedSeries Hr = pow_int(Hsmall, r);
    for (int s = 1; s <= r; ++s) {
      const ExactRational d = coeff_of_product(C, big.get(r), s * pp) - coeff_of_product(C, Hr, s);
      DeltaEntry& e = table.entries[k++];
      e.r = r;
      e.s = s;
      e.value = d.get_num();
      e.valuation = vp(e.value, p);
    }
  }
  return table;
}

CheckReport check_fixed_prime(std::uint64_t p) { return check_fixed_prime(compute_deltas(p)); }

CheckReport check_fixed_prime(const DeltaTable& table) {
  auto r = make_report("fixed_prime");
  r.param("p", static_cast<long long>(table.p)).param("precision", delta_precision(table.p));
  for (const auto& e : table.entries) {
    r.witness(label("delta", {{"r", e.r}, {"s", e.s}}), ExactRational(e.value));
    r.witness(label("v_p(delta)", {{"r", e.r}, {"s", e.s}}), e.valuation);
    r.observe(e.valuation);
    if (e.valuation < 4)
      r.fail("v_p(delta_{" + std::to_string(e.r) + "," + std::to_string(e.s) + "}) = " +
             e.valuation.to_string() + " < 4");
    else if (e.valuation > 4)
      r.note("delta_{" + std::to_string(e.r) + "," + std::to_string(e.s) + "} has valuation " +
             e.valuation.to_string() + " > 4");
  }
  return r;
}

CheckReport check_tower(std::uint64_t p, std::int64_t m_max, std::int64_t r_max) {
  require_prime_ge5(p, "check_tower");
  if (m_max < 1 || r_max < 1) throw std::invalid_argument("check_tower: m_max and r_max must be >= 1");
  auto report = make_report("eisenstein_tower");
  report.param("p", static_cast<long long>(p)).param("m_max", m_max).param("r_max", r_max);
  return guarded(std::move(report), [&](CheckReport& r) {
    std::uint64_t bound = static_cast<std::uint64_t>(m_max);
    for (std::int64_t i = 0; i < r_max; ++i) bound *= p;
    const ArithmeticFunctionCache cache(bound);
    const int chi = chi3(static_cast<std::int64_t>(p));
    for (std::int64_t m = 1; m <= m_max; ++m) {
      std::uint64_t m0 = static_cast<std::uint64_t>(m);
      unsigned a = 0;
      while (m0 % p == 0) {
        m0 /= p;
        ++a;
      }
      std::uint64_t lo = static_cast<std::uint64_t>(m);
      for (std::int64_t k = 1; k <= r_max; ++k) {
        const std::uint64_t hi = lo * p;
        const BigInt diff = 3 * (cache.sigma4chi3(hi) - cache.sigma4chi3(lo));
        const unsigned e = a + static_cast<unsigned>(k);
        const BigInt expected = 3 * ((e % 2 == 1 && chi < 0) ? -1 : 1) * pow_ui(p, 4 * e) * cache.sigma4chi3(m0);
        const Valuation v = vp(diff, p);
        if (m == 1) r.witness(label("v_p(c_{mp^r}-c_{mp^{r-1}})", {{"m", m}, {"r", k}}), v);
        if (v < 4 * k)
          r.fail("c_{mp^r} != c_{mp^{r-1}} mod p^{4r} at m = " + std::to_string(m) + ", r = " + std::to_string(k));
        if (diff != expected)
          r.fail("Euler-factor difference formula fails at m = " + std::to_string(m) + ", r = " + std::to_string(k));
        lo = hi;
      }
    }
  });
}

CheckReport check_main_frobenius(std::uint64_t p, std::int64_t m_max) {
  require_prime_ge5(p, "check_main_frobenius");
  if (m_max < 1) throw std::invalid_argument("check_main_frobenius: m_max must be >= 1");
  auto report = make_report("main_frobenius");
  report.param("p", static_cast<long long>(p)).param("m_max", m_max);
  return guarded(std::move(report), [&](CheckReport& r) {
    const auto pp = static_cast<std::int64_t>(p);
    const std::int64_t P = m_max * pp + 1;
    r.param("precision", P);
    const TruncatedSeries C = gen_C(P);
    const TruncatedSeries H = gen_H(P);
    const TruncatedSeries U = gen_Up(p, P);
    const SequenceTable a = a_seq(m_max * pp);
    const TruncatedSeries VH = v_substitute(H, pp).truncated(P);
    const TruncatedSeries Hp = pow_int(H, pp);
    TruncatedSeries VHm = TruncatedSeries::one(P);
    TruncatedSeries Hmp = TruncatedSeries::one(P);
    for (std::int64_t m = 1; m <= m_max; ++m) {
      VHm = mul(VHm, VH);
      Hmp = mul(Hmp, Hp);
      const ExactRational M = coeff_of_product(C, VHm, m * pp);
      const ExactRational R = coeff_of_product(C, sub(Hmp, VHm), m * pp);
      const ExactRational Bm = a.B(m);
      const Valuation v = vp(ExactRational(M - Bm), p);
      r.observe(v);
      r.witness(label("v_p(M-B_m)", {{"m", m}}), v);
      if (!congruent_mod_power(M, Bm, p, 4)) r.fail("M_{m,p} != B_m mod p^4 at m = " + std::to_string(m));
      if (ExactRational(a.B(m * pp)) != M + R) r.fail("B_{mp} != M + R at m = " + std::to_string(m));
      const TruncatedSeries layer = sub(exp_series(scale(U, ExactRational(-m))), TruncatedSeries::one(P));
      const ExactRational R_exp = coeff_of_product(C, mul(VHm, layer), m * pp);
      if (R_exp != R) r.fail("R_{m,p} differs from its exponential form at m = " + std::to_string(m));
      if (m == 1) {
        r.witness("M_{1,p}", M);
        r.witness("R_{1,p}", R);
      }
    }
  });
}

CheckReport check_generalized_frobenius(std::uint64_t p, std::int64_t a_max, std::int64_t m_max) {
  require_prime_ge5(p, "check_generalized_frobenius");
  if (a_max < 0 || m_max < 0) throw std::invalid_argument("check_generalized_frobenius: negative bound");
  auto report = make_report("generalized_frobenius");
  report.param("p", static_cast<long long>(p)).param("a_max", a_max).param("m_max", m_max);
  return guarded(std::move(report), [&](CheckReport& r) {
    const auto pp = static_cast<std::int64_t>(p);
    const std::int64_t P = a_max * pp + 1;
    const TruncatedSeries C = gen_C(P);
    const TruncatedSeries H = gen_H(std::max<std::int64_t>(P, 2));
    const TruncatedSeries VH = v_substitute(H, pp).truncated(P);
    TruncatedSeries Hm = TruncatedSeries::one(P);
    TruncatedSeries VHm = TruncatedSeries::one(P);
    const TruncatedSeries Ht = H.truncated(P);
    for (std::int64_t m = 0; m <= m_max; ++m) {
      if (m > 0) {
        Hm = mul(Hm, Ht);
        VHm = mul(VHm, VH);
      }
      for (std::int64_t k = 0; k <= a_max; ++k) {
        const ExactRational lhs = coeff_of_product(C, VHm, k * pp);
        const ExactRational rhs = coeff_of_product(C, Hm, k);
        const Valuation v = vp(ExactRational(lhs - rhs), p);
        r.observe(v);
        if (v < 4)
          r.fail("generalized Frobenius fails at a = " + std::to_string(k) + ", m = " + std::to_string(m));
      }
    }
  });
}

std::array<TruncatedSeries, 3> compute_defects(std::uint64_t p, std::int64_t n_report) {
  require_prime_ge5(p, "compute_defects");
  if (n_report < 0) throw std::invalid_argument("compute_defects: n_report must be >= 0");
  const auto pp = static_cast<std::int64_t>(p);
  const std::int64_t P0 = pp * (n_report + 3) + 1;
  const TruncatedSeries C = gen_C(P0);
  const TruncatedSeries H = gen_H(P0);
  const auto big = detail::h_powers(H, p);
  std::vector<TruncatedSeries> out;
  TruncatedSeries Hr = TruncatedSeries::one(P0);
  for (int r = 1; r <= 3; ++r) {
    Hr = mul(Hr, H);
    const TruncatedSeries pole_rp =
        mul(C, big.get(r)).truncated(pp * (n_report + r) + 1).shifted(-r * pp);  // C / t^{rp}
    const TruncatedSeries pole_r = mul(C, Hr).shifted(-r);                        // C / t^r
    out.push_back(sub(lambda_extract(pole_rp, pp), pole_r));
  }
  return {out[0], out[1], out[2]};
}

CheckReport check_F_defects(std::uint64_t p, std::int64_t n_report) {
  require_prime_ge5(p, "check_F_defects");
  if (n_report < 1) throw std::invalid_argument("check_F_defects: n_report must be >= 1");
  auto report = make_report("F_defects");
  report.param("p", static_cast<long long>(p)).param("n_report", n_report);
  return guarded(std::move(report), [&](CheckReport& rep) {
    const auto F = compute_defects(p, n_report);
    for (int r = 1; r <= 3; ++r) {
      const TruncatedSeries& f = F[r - 1];
      const ExactRational& principal = f.coeff(-r);
      rep.witness(label("[q^-r]F_r", {{"r", r}}), principal);
      if (principal != 0) rep.fail("principal coefficient of F_" + std::to_string(r) + " does not cancel");
      for (int s = 1; s <= r; ++s)
        rep.witness(label("delta", {{"r", r}, {"s", s}}), f.coeff(-r + s));
      for (std::int64_t n = -r + 1; n <= n_report; ++n) {
        const Valuation v = require_p_integral(f.coeff(n), p, "[q^" + std::to_string(n) + "]F_" + std::to_string(r));
        rep.observe(v);
        if (v < 4) rep.fail("[q^" + std::to_string(n) + "]F_" + std::to_string(r) + " not divisible by p^4");
      }
    }
  });
}

CheckReport check_reconstruction(std::uint64_t p, std::int64_t depth) {
  require_prime_ge5(p, "check_reconstruction");
  if (depth < 0) throw std::invalid_argument("check_reconstruction: depth must be >= 0");
  auto report = make_report("reconstruction");
  report.param("p", static_cast<long long>(p)).param("depth", depth);
  return guarded(std::move(report), [&](CheckReport& rep) {
    const auto F = compute_defects(p, depth);
    const std::int64_t P = depth + 4;
    const TruncatedSeries b0 = gen_basis(0, P), b1 = gen_basis(1, P), b2 = gen_basis(2, P);
    auto d = [&](int r, int s) { return F[r - 1].coeff(-r + s); };
    const std::array<TruncatedSeries, 3> combos{
        scale(b0, d(1, 1)),
        add(scale(b1, d(2, 1)), scale(b0, d(2, 2) + 9 * d(2, 1))),
        add(add(scale(b2, d(3, 1)), scale(b1, d(3, 2) + 21 * d(3, 1))),
            scale(b0, d(3, 3) + 9 * d(3, 2) + 54 * d(3, 1)))};
    for (int r = 1; r <= 3; ++r) {
      const TruncatedSeries residual = sub(F[r - 1], combos[r - 1]);
      for (std::int64_t n = -r; n <= 0; ++n) {
        if (residual.coeff(n) != 0)
          rep.fail("reconstruction leaves a principal-part term at q^" + std::to_string(n) + " for r = " +
                   std::to_string(r));
      }
      for (std::int64_t n = 1; n <= depth; ++n) {
        const Valuation v = require_p_integral(residual.coeff(n), p, "reconstruction residual");
        rep.observe(v);
        if (v < 4) rep.fail("F_" + std::to_string(r) + " minus its basis combination is not 0 mod p^4 at q^" +
                            std::to_string(n));
      }
    }
  });
}

CheckReport check_delta_consistency(std::uint64_t p) {
  require_prime_ge5(p, "check_delta_consistency");
  auto report = make_report("delta_consistency");
  report.param("p", static_cast<long long>(p));
  return guarded(std::move(report), [&](CheckReport& rep) {
    const DeltaTable direct = compute_deltas(p);
    const auto F = compute_defects(p, 0);
    const auto Y = compute_y_values(p);
    const TruncatedSeries H = gen_H(5);
    for (int r = 1; r <= 3; ++r) {
      const TruncatedSeries Hr = pow_int(H, r);
      for (int s = 1; s <= r; ++s) {
        const ExactRational d = direct.at(r, s).value;
        if (F[r - 1].coeff(-r + s) != d)
          rep.fail("principal part of F_" + std::to_string(r) + " differs from the direct delta at s = " +
                   std::to_string(s));
        // sum_l (-r)^l / l! sum_j h_j^{(r)} Y_l(s - j), with Y_l(0) = 0
        ExactRational layered = 0;
        ExactRational coef = 1;
        for (int l = 1; l <= 3; ++l) {
          coef *= make_rational(-r, l);
          ExactRational inner = 0;
          for (int j = 0; j < s; ++j) inner += Hr.coeff(j) * Y[l - 1][s - j - 1];
          layered += coef * inner;
        }
        rep.witness(label("layer_delta", {{"r", r}, {"s", s}}), layered);
        const Valuation v = vp(ExactRational(layered - d), p);
        rep.observe(v);
        if (!congruent_mod_power(layered, d, p, 4))
          rep.fail("layer formula disagrees with delta mod p^4 at (r,s) = (" + std::to_string(r) + "," +
                   std::to_string(s) + ")");
      }
    }
  });
}

}  // namespace supercong
