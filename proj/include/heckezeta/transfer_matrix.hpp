#pragma once

#include <string>
#include <vector>

#include "heckezeta/complex.hpp"
#include "heckezeta/precision.hpp"
#include "heckezeta/special.hpp"

namespace hz {

class ZetaCache;

// Group parameter w > 2 of the Hecke triangle group. Carries the exact Real
// used everywhere downstream; symbolic "2pi" is expanded at the context's
// working precision.
struct GroupParam {
    Real w;

    explicit GroupParam(Real value) : w(std::move(value)) {
        if (!(w > 2L))
            fail(ErrorKind::DomainError, "GroupParam: w must be > 2");
    }

    static GroupParam from_string(const std::string& text, const PrecisionContext& ctx);
};

// Basis of the truncated transfer operator: Symmetric carries the
// sqrt((j+1)/(i+1)) weight, Plain drops it. Determinants of 1 - L agree
// between the two (similarity by a diagonal matrix), which the tests check.
enum class MatrixBasis { Symmetric, Plain };

struct TransferMatrix {
    long n;
    Complex s;
    Real w;
    MatrixBasis basis;
    std::vector<Complex> entries;  // row-major n x n

    const Complex& at(long i, long j) const {
        return entries[static_cast<std::size_t>(i * n + j)];
    }
};

// Single matrix entries:
//   l_ij(s) = 2 sqrt((j+1)/(i+1)) zeta(2s+i+j) w^-(2s+i+j) binom(2s+i+j-1, i)
// for i+j even, exactly 0 for i+j odd; a_ij is the Plain-basis variant with
// the sqrt weight replaced by 1 (times sqrt((i+1)/(j+1)) relative to l_ij).
Complex entry_l(long i, long j, const Complex& s, const GroupParam& w,
                const PrecisionContext& ctx);
Complex entry_a(long i, long j, const Complex& s, const GroupParam& w,
                const PrecisionContext& ctx);

// Full N x N truncation. Zeta values are batched per anti-diagonal
// (k = i+j, one zeta each), powers w^-(2s+k) advance by 1/w^2 with a fresh
// re-anchor every 64 steps, and the binomials run the lower-index recurrence
// along each anti-diagonal, restarting from the product formula.
TransferMatrix build(long n, const Complex& s, const GroupParam& w, MatrixBasis basis,
                     const PrecisionContext& ctx, ZetaCache* cache = nullptr);

struct FNValue {
    Complex value;
    long n;
    Complex s;
    Real w;
};

// det(1 - L) by LU with partial (max-modulus) pivoting; the determinant is
// the signed product of the pivots.
FNValue det_one_minus(const TransferMatrix& m, const PrecisionContext& ctx);

// build + det in one step. Enforces the trivial-zero guard: evaluating at an
// exact nonpositive integer s = -m requires n >= m+1 (the finite determinant
// is meaningless below that truncation).
FNValue evaluate_fn(long n, const Complex& s, const GroupParam& w, MatrixBasis basis,
                    const PrecisionContext& ctx, ZetaCache* cache = nullptr);

namespace detail {

// In-place LU reduction with partial pivoting, shared by the determinant and
// the numerical-rank paths. Returns the number of pivots exceeding `tol`
// (all pivots count if tol is null); `det` accumulates the signed pivot
// product. Columns whose remaining entries vanish (or stay below tol) are
// skipped without consuming a row.
long lu_reduce_complex(std::vector<Complex>& a, long n, Complex& det, const Real* tol,
                       mpfr_prec_t prec);
long lu_reduce_real(std::vector<Real>& a, long n, Real& det, const Real* tol,
                    mpfr_prec_t prec);

}  // namespace detail

}  // namespace hz
