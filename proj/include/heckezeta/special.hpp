#pragma once

#include <vector>

#include "heckezeta/complex.hpp"
#include "heckezeta/precision.hpp"

namespace hz {

class ZetaCache;

// Riemann zeta at a complex argument, via Euler-Maclaurin:
//
//   zeta(z) = sum_{n<M} n^-z + M^(1-z)/(z-1) + M^-z/2
//           + sum_{j=1..nu} B_{2j}/(2j)! (z)_{2j-1} M^(-z-2j+1) + R_nu,
//
//   |R_nu| <= 4 |(z)_{2nu+1}| / (2pi)^(2nu+1) * M^-(sigma+2nu) / (sigma+2nu),
//
// with M picked from the working precision and |Im z|, and nu grown until the
// (outward-rounded) remainder bound is below the error target. Absolute error
// of the result is below 2^(guard_bits - working_bits).
//
// Throws PoleAt1 if z = 1 within precision, PrecisionExhausted if the
// remainder cannot reach the target.
Complex zeta_complex(const Complex& z, const PrecisionContext& ctx);

// Batch form used by the matrix builders: values zeta(2s + t*k_step) for
// t = 0..count-1. The power sums n^-z are shared across the batch (each step
// divides by n^k_step), so the whole range costs one Euler-Maclaurin table
// instead of `count` of them. Each returned value depends only on
// (working_bits, s, t*k_step), never on `count`, so cached values are
// bit-identical across batch shapes. Only k_step = 2 (or a single value with
// k_step = 1) is accepted; that keeps every cache key on one code path.
// If `cache` is non-null it is consulted/filled per (working_bits, s, k).
std::vector<Complex> zeta_range(const Complex& s, long k_step, long count,
                                const PrecisionContext& ctx, ZetaCache* cache = nullptr);

// Generalized binomial coefficient binom(z, k) = z(z-1)...(z-k+1) / k! for
// complex z, by the exact product; exact zeros (z a small nonnegative
// integer < k) come out exactly zero. Supports the incremental recurrence
// binom(z, k+1) = binom(z, k) (z - k) / (k + 1), which the matrix builder
// applies along anti-diagonals where z is constant.
Complex binom_complex(const Complex& z, unsigned long k, const PrecisionContext& ctx);

enum class PolylogOrder { MinusHalf, MinusThreeHalves };

// Rigorous upper bound on Li_{-1/2}(x) = sum n^(1/2) x^n or
// Li_{-3/2}(x) = sum n^(3/2) x^n for 0 <= x < 1: partial sum with every
// operation rounded up plus a ratio-test tail bound (valid once
// x (1 + 1/N)^(3/2) < 1). The bound is within 2^(guard_bits - working_bits)
// of the true value.
Real polylog_neg_upper(PolylogOrder order, const Real& x, const PrecisionContext& ctx);

namespace detail {
// Test hook: same bound with the crossover term count forced (still rounded
// outward, still a valid upper bound as long as the ratio test passes there).
Real polylog_neg_upper_terms(PolylogOrder order, const Real& x, long terms,
                             const PrecisionContext& ctx);
}  // namespace detail

// Upper bound C(s) on sup over even n >= 0 of |zeta(2s + n)|: the finitely
// many n with 2 Re(s) + n < 2 are scanned (|zeta| there, rounded up), and the
// tail is bounded by zeta(2 Re(s) + n0) on the real axis, which dominates all
// later n by Dirichlet-series comparison. scan_cutoff records n0.
struct CBound {
    Real value;
    long scan_cutoff;
};

// Throws PoleProximity if a scanned argument is within 2^-guard_bits of 1.
CBound c_upper(const Complex& s, const PrecisionContext& ctx);

}  // namespace hz
