#include <string>

#include "checks_common.hpp"
#include "supercong/modular_series.hpp"

namespace supercong {

using detail::guarded;
using detail::label;
using detail::make_report;
using detail::require_p_integral;
using detail::require_prime_ge5;

namespace {

// Power series in q with coefficients in Q[X]/(X^4), stored by X-degree.
struct XSeries {
  std::array<TruncatedSeries, 4> c;
};

XSeries mul(const XSeries& a, const XSeries& b) {
  XSeries out{a.c};
  for (int k = 0; k < 4; ++k) {
    TruncatedSeries acc = supercong::mul(a.c[0], b.c[k]);
    for (int i = 1; i <= k; ++i) acc = add(acc, supercong::mul(a.c[i], b.c[k - i]));
    out.c[k] = std::move(acc);
  }
  return out;
}

// exp(s X) truncated at X^4.
XSeries exp_x(const TruncatedSeries& s) {
  const std::int64_t P = s.prec();
  XSeries out{{TruncatedSeries::one(P), s, scale(supercong::mul(s, s), make_rational(1, 2)), s}};
  out.c[3] = scale(supercong::mul(out.c[2], s), make_rational(1, 3));
  return out;
}

XSeries constant_x(const TruncatedSeries& s) {
  const TruncatedSeries z = TruncatedSeries::zero(s.prec());
  return {{s, z, z, z}};
}

std::int64_t series_precision(std::uint64_t p, std::int64_t count) {
  return count * static_cast<std::int64_t>(p) + 1;
}

}  // namespace

std::array<std::array<ExactRational, 3>, 3> compute_y_values(std::uint64_t p) {
  require_prime_ge5(p, "compute_y_values");
  const auto pp = static_cast<std::int64_t>(p);
  const std::int64_t P = series_precision(p, 3);
  const TruncatedSeries C = gen_C(P);
  const TruncatedSeries U = gen_Up(p, P);
  std::array<std::array<ExactRational, 3>, 3> y;
  TruncatedSeries Ul = TruncatedSeries::one(P);
  for (int l = 1; l <= 3; ++l) {
    Ul = mul(Ul, U);
    for (int n = 1; n <= 3; ++n) y[l - 1][n - 1] = coeff_of_product(C, Ul, n * pp);
  }
  return y;
}

CheckReport check_Y_matrix(std::uint64_t p) {
  require_prime_ge5(p, "check_Y_matrix");
  auto report = make_report("Y_matrix");
  report.param("p", static_cast<long long>(p)).param("precision", series_precision(p, 3));
  return guarded(std::move(report), [&](CheckReport& r) {
    const auto y = compute_y_values(p);
    ValuationMatrix m(3, std::vector<Valuation>(3));
    for (int l = 1; l <= 3; ++l)
      for (int n = 1; n <= 3; ++n) {
        const Valuation v = require_p_integral(y[l - 1][n - 1], p, "Y value");
        m[l - 1][n - 1] = v;
        r.witness(label("Y", {{"l", l}, {"n", n}}), y[l - 1][n - 1]);
        r.observe(v);
        if (v < 4) r.fail("v_p(Y_" + std::to_string(l) + "(" + std::to_string(n) + ")) < 4");
      }
    r.matrix = std::move(m);
  });
}

CheckReport check_coeff_layers(std::uint64_t p, int a_max, std::int64_t m_max) {
  require_prime_ge5(p, "check_coeff_layers");
  if (a_max < 0 || m_max < 1) throw std::invalid_argument("check_coeff_layers: need a_max >= 0, m_max >= 1");
  auto report = make_report("coeff_layers");
  const std::int64_t P = series_precision(p, m_max);
  report.param("p", static_cast<long long>(p)).param("a_max", a_max).param("m_max", m_max).param("precision", P);
  return guarded(std::move(report), [&](CheckReport& r) {
    const auto pp = static_cast<std::int64_t>(p);
    const TruncatedSeries C = gen_C(P);
    const TruncatedSeries L = gen_L(P);
    ValuationMatrix matrix;
    TruncatedSeries CLa = C;
    BigInt pa = 1;
    for (int a = 0; a <= a_max; ++a) {
      if (a > 0) {
        CLa = mul(CLa, L);
        pa *= static_cast<unsigned long>(p);
      }
      std::vector<Valuation> row;
      for (std::int64_t m = 1; m <= m_max; ++m) {
        // B^(a)_{mp} itself may carry p^-a; the scaled value must not
        const ExactRational hi = ExactRational(pa) * CLa.coeff(m * pp);
        const ExactRational& lo = CLa.coeff(m);
        require_p_integral(hi, p, "p^a B^(a)_{mp}");
        require_p_integral(lo, p, "B^(a)_m");
        const Valuation v = vp(ExactRational(hi - lo), p);
        r.observe(v);
        row.push_back(v);
        if (v < 4)
          r.fail("p^a B^(a)_{mp} != B^(a)_m mod p^4 at a = " + std::to_string(a) + ", m = " + std::to_string(m));
      }
      if (a > 0) matrix.push_back(std::move(row));
    }
    if (!matrix.empty()) r.matrix = std::move(matrix);
  });
}

CheckReport check_dwork(std::uint64_t p, std::int64_t m_max) {
  require_prime_ge5(p, "check_dwork");
  if (m_max < 1) throw std::invalid_argument("check_dwork: m_max must be >= 1");
  auto report = make_report("dwork");
  const std::int64_t P = series_precision(p, m_max);
  report.param("p", static_cast<long long>(p)).param("m_max", m_max).param("precision", P);
  return guarded(std::move(report), [&](CheckReport& r) {
    const auto pp = static_cast<std::int64_t>(p);
    const TruncatedSeries C = gen_C(P);
    const TruncatedSeries L = gen_L(P);
    // H^X = exp(-X L), H^{pX} = exp(-p X L)
    const XSeries HX = exp_x(-L.truncated(m_max + 1));
    const XSeries HpX = exp_x(scale(L, ExactRational(-static_cast<long>(p))));
    const XSeries lhs_full = mul(constant_x(C), HpX);
    const XSeries rhs = mul(constant_x(C.truncated(m_max + 1)), HX);
    for (int a = 0; a < 4; ++a) {
      const TruncatedSeries lhs = lambda_extract(lhs_full.c[a], pp);
      for (std::int64_t m = 1; m <= m_max; ++m) {
        const ExactRational d = lhs.coeff(m) - rhs.c[a].coeff(m);
        const Valuation v = require_p_integral(d, p, "Dwork difference");
        r.observe(v);
        if (v < 4)
          r.fail("X^" + std::to_string(a) + " coefficient of the Dwork difference is nonzero mod p^4 at q^" +
                 std::to_string(m));
      }
      r.witness(label("X-coefficient at q^1", {{"a", a}}), ExactRational(lhs.coeff(1) - rhs.c[a].coeff(1)));
    }
  });
}

CheckReport check_layer_matrices(std::uint64_t p, std::int64_t depth) {
  require_prime_ge5(p, "check_layer_matrices");
  if (depth < 1) throw std::invalid_argument("check_layer_matrices: depth must be >= 1");
  auto report = make_report("layer_matrices");
  const std::int64_t P = series_precision(p, depth);
  report.param("p", static_cast<long long>(p)).param("depth", depth).param("precision", P);
  return guarded(std::move(report), [&](CheckReport& r) {
    const auto pp = static_cast<std::int64_t>(p);
    const TruncatedSeries C = gen_C(P);
    const TruncatedSeries U = gen_Up(p, P);
    const TruncatedSeries D = sub(exp_series(-U), TruncatedSeries::one(P));

    std::array<TruncatedSeries, 3> X{D, D, D}, Y{U, U, U};
    TruncatedSeries Dr = TruncatedSeries::one(P), Ur = TruncatedSeries::one(P);
    for (int k = 0; k < 3; ++k) {
      Dr = mul(Dr, D);
      Ur = mul(Ur, U);
      X[k] = lambda_extract(mul(C, Dr), pp);
      Y[k] = lambda_extract(mul(C, Ur), pp);
    }
    const ExactRational half(1, 2), sixth(1, 6);
    const std::array<TruncatedSeries, 3> MY{
        add(add(-Y[0], scale(Y[1], half)), scale(Y[2], -sixth)),
        sub(Y[1], Y[2]),
        -Y[2]};
    for (int k = 0; k < 3; ++k)
      for (std::int64_t n = 0; n <= depth; ++n) {
        const Valuation v = require_p_integral(X[k].coeff(n) - MY[k].coeff(n), p, "X - M Y");
        r.observe(v);
        if (v < 4)
          r.fail("X_" + std::to_string(k + 1) + " != (M Y)_" + std::to_string(k + 1) + " mod p^4 at q^" +
                 std::to_string(n));
      }

    // u_{m,p} = t(q^p)^m / t(q)^{pm}, built from t rather than from U_p.
    const TruncatedSeries t = gen_t(P + 1);
    const TruncatedSeries LC = lambda_extract(C, pp);
    const int binom[3][3] = {{1, 0, 0}, {2, 1, 0}, {3, 3, 1}};
    TruncatedSeries tm = TruncatedSeries::one(P + 1);
    const TruncatedSeries tp = pow_int(t, pp);
    TruncatedSeries tpm = TruncatedSeries::one(P + 1);
    for (int m = 1; m <= 3; ++m) {
      tm = mul(tm, t);
      tpm = mul(tpm, tp);
      const TruncatedSeries u = mul(v_substitute(tm, pp), invert(tpm)).truncated(P);
      if (!agree(u, exp_series(scale(U, ExactRational(-m)))))
        r.fail("t(q^p)^m / t^{pm} differs from exp(-m U_p) for m = " + std::to_string(m));
      const TruncatedSeries lhs = sub(lambda_extract(mul(C, u), pp), LC);
      TruncatedSeries rhs = TruncatedSeries::zero(lhs.prec());
      for (int k = 0; k < 3; ++k)
        if (binom[m - 1][k] != 0) rhs = add(rhs, scale(X[k], ExactRational(binom[m - 1][k])));
      if (!agree(lhs, rhs))
        r.fail("binomial identity for Lambda_p(C u_m) - Lambda_p(C) fails at m = " + std::to_string(m));
    }
  });
}

CheckReport check_layer_truncation_bound(std::uint64_t p, std::int64_t r_max) {
  require_prime_ge5(p, "check_layer_truncation_bound");
  if (r_max < 5) throw std::invalid_argument("check_layer_truncation_bound: r_max must be >= 5");
  auto report = make_report("layer_truncation_bound");
  report.param("p", static_cast<long long>(p)).param("r_max", r_max);
  return guarded(std::move(report), [&](CheckReport& rep) {
    for (std::int64_t r = 4; r <= r_max; ++r) {
      const Valuation vf = vp(factorial(static_cast<unsigned long>(r)), p);
      const std::int64_t bound = r - vf.value();
      rep.witness(label("r - v_p(r!)", {{"r", r}}), ExactRational(bound));
      if (bound < 4) rep.fail("r - v_p(r!) < 4 at r = " + std::to_string(r));
    }
    const auto pp = static_cast<std::int64_t>(p);
    const std::int64_t P = 2 * pp + 6;
    const TruncatedSeries U = gen_Up(p, P);
    TruncatedSeries Ur = pow_int(U, 3);
    for (int r = 4; r <= 5; ++r) {
      Ur = mul(Ur, U);
      const TruncatedSeries layer = scale(Ur, ExactRational(1) / ExactRational(factorial(r)));
      bool seen = false;
      for (std::int64_t n = layer.min_exp(); n < layer.prec(); ++n) {
        const ExactRational& c = layer.coeff(n);
        if (c == 0) continue;
        const Valuation v = require_p_integral(c, p, "U_p^r / r!");
        rep.observe(v);
        if (!seen) rep.witness(label("v_p(first nonzero of U_p^r/r!)", {{"r", r}}), v);
        seen = true;
        if (v < 4) rep.fail("U_p^" + std::to_string(r) + "/" + std::to_string(r) + "! has a coefficient with v_p < 4");
      }
    }
  });
}

}  // namespace supercong
