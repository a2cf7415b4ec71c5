#pragma once

#include <vector>

#include "heckezeta/transfer_matrix.hpp"

namespace hz {

class ZetaCache;

// Check of the determinant identity F_N(0) = 2 F_{N-1}(1), which encodes the
// value 2 of the dynamical zeta quotient at s = 0. Both sides are computed
// independently (two matrix builds, two determinants); the identity holding
// to working accuracy is a strong cross-check of the whole entry pipeline.
struct RuelleCheck {
    Real lhs;        // F_N(0)
    Real rhs;        // 2 F_{N-1}(1)
    Real defect;     // |lhs - rhs|
    Real tolerance;  // 2^(guard_bits - working_bits + 8) max(1, |lhs|)
    bool within;
    long n;
};

RuelleCheck ruelle_at_zero(long n, const GroupParam& w, const PrecisionContext& ctx,
                           ZetaCache* cache = nullptr);

// The matrix 1 - A(s) restricted to its leading (2m+1) x (2m+1) block at the
// exact point s = -m, where every entry is an exact small integer: the
// entries with i+j < 2m vanish through exact zeta zeros, those with
// i+j > 2m through exact binomial zeros, and the i+j = 2m anti-diagonal
// carries 2 zeta(0) binom(-1, i) = (-1)^i with w^0 substituted exactly.
struct UMatrix {
    long m;
    long size;  // 2m+1
    std::vector<Complex> one_minus;

    const Complex& at(long i, long j) const {
        return one_minus[static_cast<std::size_t>(i * size + j)];
    }
};

UMatrix u_matrix(long m, const GroupParam& w, const PrecisionContext& ctx,
                 ZetaCache* cache = nullptr);

// Rank of 1 - A(-m) on the block above, giving the order window of the zero
// of the determinant at s = -m: the order is at least the nullity and at
// most the block size 2m+1. Entries are checked against the exact integer
// pattern first; any deviation throws PatternMismatch (it would mean the
// exact-zero paths broke, not a rounding issue).
struct RankReport {
    long m;
    long size;
    long rank;
    long nullity;
    long order_min;  // max(m, nullity)
    long order_max;  // 2m+1
};

RankReport rank_analysis(long m, const GroupParam& w, const PrecisionContext& ctx,
                         ZetaCache* cache = nullptr);

// Empirical cross-check of the order window: sample |F_N(-m + eps)| at
// eps = 1e-4 .. 1e-8 and fit log|F| against log eps. The slope estimates the
// vanishing order. Precision is chosen internally from m so the smallest
// sample stays far above the noise floor. Throws IllConditioned if the fit
// residual exceeds 0.1 (the samples then do not look like C eps^d).
struct OrderProbe {
    long m;
    long n;
    double slope;
    double residual;  // rms deviation of the log-log fit
};

OrderProbe vanishing_order_probe(long m, const GroupParam& w, ZetaCache* cache = nullptr);

}  // namespace hz
