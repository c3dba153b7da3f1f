#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "supercong/check_report.hpp"
#include "supercong/exact_arith.hpp"
#include "supercong/series.hpp"

namespace supercong {

/// delta_{r,s} = [q^{sp}] C H^{rp} - [q^s] C H^r for 1 <= s <= r <= 3.
struct DeltaEntry {
  int r = 0;
  int s = 0;
  BigInt value;
  Valuation valuation;
};

struct DeltaTable {
  std::uint64_t p = 0;
  std::array<DeltaEntry, 6> entries;  // (1,1) (2,1) (2,2) (3,1) (3,2) (3,3)

  const DeltaEntry& at(int r, int s) const;
};

/// Series precision the fixed-prime computation needs: 3p + 1 terms.
std::int64_t delta_precision(std::uint64_t p);

DeltaTable compute_deltas(std::uint64_t p);
/// Same, reusing C and H known to at least delta_precision(p) terms.
DeltaTable compute_deltas(std::uint64_t p, const TruncatedSeries& C, const TruncatedSeries& H);

/// v_p(delta_{r,s}) >= 4 for all six entries.
CheckReport check_fixed_prime(std::uint64_t p);
CheckReport check_fixed_prime(const DeltaTable& table);

/// sum_{n<N} B_n t^n = Theta to precision N.
CheckReport check_modular_identity(std::int64_t N);
/// Same with caller-supplied outer coefficients B_0..B_{N-1}.
CheckReport check_modular_identity(std::span<const BigInt> b_coeffs, std::int64_t N);

/// Theta (q/t) dt/dq = C to precision N.
CheckReport check_C_eisenstein(std::int64_t N);

/// B_m = [q^m] C H^m for 0 <= m <= m_max.
CheckReport check_lagrange_burmann(std::int64_t m_max);

/// Order-drop factorization (S - 27) L2 = L3, the bridging polynomial
/// identities, w_0 = 0 and L2 A = L3 A = 0 up to n_max.
CheckReport check_ore_factorization(std::int64_t n_max = 500);

/// c_{mp^r} = c_{mp^{r-1}} mod p^{4r}, with the exact Euler-factor difference.
CheckReport check_tower(std::uint64_t p, std::int64_t m_max, std::int64_t r_max);

/// M_{m,p} = [q^{mp}] C H(q^p)^m = B_m mod p^4, plus B_{mp} = M + R exactly and
/// R = [q^{mp}] C H(q^p)^m (exp(-m U_p) - 1) exactly.
CheckReport check_main_frobenius(std::uint64_t p, std::int64_t m_max);

/// A(pm) = A(m) mod p^4 for primes 5 <= p <= p_max, mp <= n_max.
CheckReport check_supercongruence_window(std::uint64_t p_max, std::int64_t n_max);

/// Y_l(n) = [q^{np}] C U_p^l for 1 <= l, n <= 3 (row l, column n).
std::array<std::array<ExactRational, 3>, 3> compute_y_values(std::uint64_t p);
CheckReport check_Y_matrix(std::uint64_t p);

/// v_p(p^a B^{(a)}_{mp} - B^{(a)}_m) >= 4, B^{(a)}_m = [q^m] C L^a; row a, column m.
CheckReport check_coeff_layers(std::uint64_t p, int a_max = 3, std::int64_t m_max = 3);

/// Lambda_p(C H^{pX}) = C H^X mod (p^4, X^4) through q^{m_max}.
CheckReport check_dwork(std::uint64_t p, std::int64_t m_max);

/// F_r = Lambda_p(C / t^{rp}) - C / t^r for r = 1, 2, 3, known through q^{n_report}.
std::array<TruncatedSeries, 3> compute_defects(std::uint64_t p, std::int64_t n_report);
/// Principal coefficient of F_r cancels exactly; the rest is 0 mod p^4.
CheckReport check_F_defects(std::uint64_t p, std::int64_t n_report);

/// F_r minus its unitriangular combination of C, C/t, C/t^2 built from the deltas.
CheckReport check_reconstruction(std::uint64_t p, std::int64_t depth = 5);

/// X = M Y mod p^4 for the exponential layers, and the exact binomial identity
/// for Lambda_p(C u_{m,p}) - Lambda_p(C).
CheckReport check_layer_matrices(std::uint64_t p, std::int64_t depth = 4);

/// [q^{ap}] C H(q^p)^m = [q^a] C H^m mod p^4.
CheckReport check_generalized_frobenius(std::uint64_t p, std::int64_t a_max, std::int64_t m_max);

/// F(t(q)) - F_p(t(q)) F(t(q^p)): zero below q^p, divisible by p^4 up to q^N.
CheckReport check_beukers(std::uint64_t p, std::int64_t N = 50);

struct CoupledCancellation {
  ExactRational S;
  ExactRational T;
  ExactRational lhs;  // p B^{(1)}_{mp} - B^{(1)}_m
};
/// Requires m < p; throws std::invalid_argument otherwise.
CoupledCancellation compute_coupled_cancellation(std::uint64_t p, std::int64_t m);
CheckReport check_coupled_cancellation(std::uint64_t p, std::int64_t m);

/// v_p(A(p^2) - A(p)); expected 8 where tabulated.
CheckReport diagonal_valuation(std::uint64_t p);

/// r - v_p(r!) >= 4 for 4 <= r <= r_max, and U_p^r / r! divisible by p^4 for r = 4, 5.
CheckReport check_layer_truncation_bound(std::uint64_t p, std::int64_t r_max = 8);

/// delta_{r,s} computed directly, from the principal parts of F_r (exact), and
/// from the Y-layer formula (mod p^4).
CheckReport check_delta_consistency(std::uint64_t p);

}  // namespace supercong
