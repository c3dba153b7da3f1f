// One PASS/FAIL line per acceptance criterion; exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "supercong/checks.hpp"
#include "supercong/modular_series.hpp"
#include "supercong/recurrence.hpp"
#include "test_support.hpp"

using namespace supercong;
namespace st = supercong::testing;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> run;
};

Outcome sequence_ground_truth() {
  Outcome o;
  const std::vector<long> listed{1, 9, 135, 2439, 48519, 1023759, 22478121, 507897945};
  const SequenceTable a = a_seq(30);
  for (std::size_t n = 0; n < listed.size(); ++n)
    o.require(a.A(static_cast<std::int64_t>(n)) == listed[n], "listed prefix differs at n = " + std::to_string(n));
  const auto oracle = st::hypergeometric_a(30);
  for (std::int64_t n = 0; n <= 30; ++n)
    o.require(a.A(n) == oracle[static_cast<std::size_t>(n)], "hypergeometric oracle differs at n = " + std::to_string(n));
  return o;
}

Outcome ore_factorization() {
  Outcome o;
  o.require(ore_multiply(shift_minus_27(), l2_operator()) == l3_operator(), "(S-27) L2 != L3");
  const auto r = check_ore_factorization(500);
  o.require(r.passed(), r.notes.empty() ? "check failed" : r.notes.front());
  return o;
}

Outcome modular_identity() {
  Outcome o;
  const auto a = check_modular_identity(200), b = check_C_eisenstein(200);
  o.require(a.passed(), "compose(F, t) != Theta");
  o.require(b.passed(), "Theta (q/t) dt/dq != C");
  return o;
}

Outcome lagrange_burmann() {
  Outcome o;
  o.require(check_lagrange_burmann(100).passed(), "B_m != [q^m] C H^m");
  return o;
}

Outcome fixed_prime_sweep() {
  Outcome o;
  const auto C = gen_C(delta_precision(499)), H = gen_H(delta_precision(499));
  long sub_checks = 0, passed = 0;
  for (std::uint64_t p = 5; p <= 499; ++p) {
    if (!is_prime(p)) continue;
    const DeltaTable t = compute_deltas(p, C.truncated(delta_precision(p)), H.truncated(delta_precision(p)));
    for (const auto& e : t.entries) {
      ++sub_checks;
      if (e.valuation >= 4) ++passed;
      else o.require(false, "v_p(delta) < 4 at p = " + std::to_string(p));
    }
  }
  o.require(sub_checks == 558, "expected 558 sub-checks, got " + std::to_string(sub_checks));
  const DeltaTable t5 = compute_deltas(5);
  const char* expected[] = {"-1023750", "-123703125", "6556498796250", "-1159950000", "2553999742959375",
                            "-57476307230175420000"};
  for (std::size_t i = 0; i < 6; ++i) o.require(t5.entries[i].value == BigInt(expected[i]), "p = 5 delta mismatch");
  if (o.ok) o.detail = std::to_string(passed) + "/" + std::to_string(sub_checks) + " sub-checks";
  return o;
}

Outcome window() {
  Outcome o;
  const auto r = check_supercongruence_window(47, 499);
  o.require(r.passed(), "A(pm) != A(m) mod p^4 somewhere in the window");
  o.require(r.min_valuation && *r.min_valuation == Valuation(4), "minimum valuation is not 4");
  return o;
}

ValuationMatrix rows(std::vector<std::vector<long>> in) {
  ValuationMatrix m;
  for (const auto& r : in) {
    std::vector<Valuation> row;
    for (long v : r) row.emplace_back(v);
    m.push_back(row);
  }
  return m;
}

Outcome valuation_matrices() {
  Outcome o;
  o.require(*check_coeff_layers(5).matrix == rows({{4, 4, 4}, {4, 4, 5}, {4, 4, 4}}), "coefficient form p = 5");
  o.require(*check_coeff_layers(7).matrix == rows({{4, 4, 4}, {4, 4, 4}, {4, 4, 4}}), "coefficient form p = 7");
  o.require(*check_coeff_layers(11).matrix == rows({{4, 4, 4}, {4, 4, 4}, {4, 5, 4}}), "coefficient form p = 11");
  o.require(*check_Y_matrix(5).matrix == rows({{4, 6, 4}, {4, 6, 4}, {4, 4, 4}}), "Y matrix p = 5");
  o.require(*check_Y_matrix(7).matrix == rows({{4, 4, 4}, {4, 4, 5}, {4, 4, 4}}), "Y matrix p = 7");
  o.require(*check_Y_matrix(11).matrix == rows({{4, 4, 4}, {4, 5, 4}, {4, 4, 4}}), "Y matrix p = 11");
  return o;
}

Outcome beukers() {
  Outcome o;
  for (std::uint64_t p : {5, 7, 11}) o.require(check_beukers(p, 50).passed(), "residual fails at p = " + std::to_string(p));
  return o;
}

Outcome coupled_cancellation() {
  Outcome o;
  const auto c5 = compute_coupled_cancellation(5, 1), c7 = compute_coupled_cancellation(7, 1);
  o.require(c5.S == 60 && c5.T == 43065 && c5.S + c5.T == 43125, "p = 5 values");
  o.require(c7.S == 84 && c7.T == -223377 && c7.S + c7.T == -223293, "p = 7 values");
  for (std::uint64_t p : {5, 7}) {
    const auto& c = p == 5 ? c5 : c7;
    o.require(vp(c.S, p) == 1 && vp(c.T, p) == 1 && vp(ExactRational(c.S + c.T), p) == 4,
              "valuation pattern at p = " + std::to_string(p));
  }
  return o;
}

Outcome diagonal() {
  Outcome o;
  const SequenceTable a = a_seq(49);
  o.require(vp(BigInt(a.A(25) - a.A(5)), 5) == 8, "v_5(A_25 - A_5) != 8");
  o.require(vp(BigInt(a.A(49) - a.A(7)), 7) == 8, "v_7(A_49 - A_7) != 8");
  return o;
}

Outcome property_suites() {
  Outcome o;
  st::Gen g(20260101);
  for (int i = 0; i < 100; ++i) {
    const std::int64_t p = g.uniform(2, 7);
    const auto h = g.series(g.uniform(-3, 3), static_cast<std::size_t>(g.uniform(2, 10)));
    const auto gs = g.series(g.uniform(-10, 5), static_cast<std::size_t>(g.uniform(p, 40)));
    o.require(agree(lambda_extract(mul(v_substitute(h, p), gs), p), mul(h, lambda_extract(gs, p))),
              "projection identity");
  }
  for (int i = 0; i < 30; ++i) {
    const auto a = g.series(g.uniform(-2, 2), 12), b = g.series(g.uniform(-2, 2), 12), c = g.series(0, 12);
    o.require(agree(mul(a, mul(b, c)), mul(mul(a, b), c)), "associativity");
    o.require(agree(mul(a, add(b, c)), add(mul(a, b), mul(a, c))), "distributivity");
    o.require(agree(mul(a, b), mul(b, a)), "commutativity");
    const auto big_a = g.series(0, static_cast<std::size_t>(g.uniform(1, 80)), true, 20);
    const auto big_b = g.series(0, static_cast<std::size_t>(g.uniform(1, 80)), true, 20);
    o.require(agree(mul(big_a, big_b), st::naive_mul(big_a, big_b)), "mul vs schoolbook oracle");
    const auto u = g.series(1, 15);
    o.require(agree(log_unit(exp_series(u)), u), "log(exp(u)) != u");
    const auto unit = g.unit_series(15);
    o.require(agree(exp_series(log_unit(scale(unit, 1 / unit.coeff(0)))), scale(unit, 1 / unit.coeff(0))),
              "exp(log(f)) != f");
  }
  const std::uint64_t bound = 10000;
  const ArithmeticFunctionCache cache(bound);
  for (std::uint64_t m = 2; m * 2 <= bound; ++m)
    for (std::uint64_t n = m + 1; m * n <= bound; ++n)
      if (std::gcd(m, n) == 1 && cache.sigma4chi3(m * n) != cache.sigma4chi3(m) * cache.sigma4chi3(n))
        o.require(false, "multiplicativity");
  for (std::uint64_t p = 2; p <= bound; ++p) {
    if (!is_prime(p)) continue;
    BigInt expected = 0;
    BigInt term = 1;
    const int chi = st::chi3_oracle(static_cast<std::int64_t>(p));
    for (std::uint64_t pk = 1;; pk *= p) {
      expected += term;
      o.require(cache.sigma4chi3(pk) == expected, "Euler factor at p = " + std::to_string(p));
      if (pk > bound / p) break;
      term *= chi * static_cast<long>(pow_ui(p, 4).get_si());
    }
  }
  const std::int64_t N = 500;
  const auto L = gen_L(N);
  std::vector<ExactRational> lam(static_cast<std::size_t>(N), ExactRational(0));
  for (std::int64_t n = 1; n < N; ++n) lam[n] = 12 * lambda_fn(n);
  o.require(agree(L, -log_unit(gen_H(N))), "L vs -log H");
  o.require(agree(L, TruncatedSeries(0, std::move(lam))), "L vs lambda sum");
  for (std::uint64_t p : {5, 7, 11, 13})
    o.require(check_tower(p, 20, 2).passed(), "tower at p = " + std::to_string(p));
  return o;
}

Outcome delta_consistency() {
  Outcome o;
  for (std::uint64_t p : {5, 7, 11})
    o.require(check_delta_consistency(p).passed(), "routes disagree at p = " + std::to_string(p));
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "sequence ground truth", sequence_ground_truth},
      {2, "Ore factorization", ore_factorization},
      {3, "modular identity", modular_identity},
      {4, "Lagrange-Burmann", lagrange_burmann},
      {5, "fixed-prime sweep 5..499", fixed_prime_sweep},
      {6, "window p <= 47, mp <= 499", window},
      {7, "valuation matrices", valuation_matrices},
      {8, "Beukers residual", beukers},
      {9, "coupled cancellation", coupled_cancellation},
      {10, "diagonal observation", diagonal},
      {11, "property suites", property_suites},
      {12, "delta consistency", delta_consistency},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %d: %s (%.2fs)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.title, secs,
                o.detail.empty() ? "" : " - ", o.detail.c_str());
    std::fflush(stdout);
    if (!o.ok) ++failures;
  }
  return failures;
}
