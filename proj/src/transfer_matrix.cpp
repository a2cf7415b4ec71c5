#include "heckezeta/transfer_matrix.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <utility>

#include "heckezeta/errors.hpp"
#include "heckezeta/zeta_cache.hpp"

namespace hz {

GroupParam GroupParam::from_string(const std::string& text, const PrecisionContext& ctx) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    mpfr_prec_t p = ctx.working_bits + 64;
    if (t == "2pi" || t == "2*pi") {
        Real pi = Real::pi(p, MPFR_RNDN);
        return GroupParam(Real::ldexp(pi, 1));
    }
    return GroupParam(Real(t, p, MPFR_RNDN));
}

namespace {

// Exact value of 2*s + shift (shift a small integer); the target precision is
// padded so neither the doubling nor the addition can round.
Complex shift_twice(const Complex& s, long shift) {
    mpfr_prec_t px = std::max<mpfr_prec_t>(std::max(s.re().prec(), s.im().prec()), 64) + 48;
    Real re(px);
    mpfr_mul_2si(re.raw(), s.re().raw(), 1, MPFR_RNDN);
    mpfr_add_si(re.raw(), re.raw(), shift, MPFR_RNDN);
    Real im(px);
    mpfr_mul_2si(im.raw(), s.im().raw(), 1, MPFR_RNDN);
    return Complex(std::move(re), std::move(im));
}

// If s is real and -2*Re(s) is a small nonnegative integer, returns it: the
// anti-diagonal index k at which w^-(2s+k) equals 1 exactly. At that index
// the power is substituted by an exact 1 so the vanishing-block structure at
// integer points survives in exact arithmetic. Returns -1 otherwise.
long exact_unit_power_index(const Complex& s) {
    if (!s.is_real()) return -1;
    mpfr_prec_t px = std::max<mpfr_prec_t>(s.re().prec(), 64) + 4;
    Real t(px);
    mpfr_mul_2si(t.raw(), s.re().raw(), 1, MPFR_RNDN);
    mpfr_neg(t.raw(), t.raw(), MPFR_RNDN);
    if (t.sign() < 0 || !t.is_integer()) return -1;
    if (mpfr_cmp_si(t.raw(), 1L << 30) >= 0) return -1;
    return t.to_long();
}

}  // namespace

Complex entry_l(long i, long j, const Complex& s, const GroupParam& w,
                const PrecisionContext& ctx) {
    if (i < 0 || j < 0) fail(ErrorKind::DomainError, "entry_l: negative index");
    mpfr_prec_t p = ctx.working_bits;
    if ((i + j) % 2 != 0) return Complex(p);
    Complex r = entry_a(i, j, s, w, ctx);
    Real num = Real::sqrt(Real(j + 1, p), MPFR_RNDN);
    Real den = Real::sqrt(Real(i + 1, p), MPFR_RNDN);
    return r * (num / den);
}

Complex entry_a(long i, long j, const Complex& s, const GroupParam& w,
                const PrecisionContext& ctx) {
    if (i < 0 || j < 0) fail(ErrorKind::DomainError, "entry_a: negative index");
    mpfr_prec_t p = ctx.working_bits;
    if ((i + j) % 2 != 0) return Complex(p);
    long k = i + j;
    Complex zk = shift_twice(s, k);
    Complex zeta = zeta_complex(zk, ctx);
    Complex wpow = (k == exact_unit_power_index(s))
                       ? Complex(1, p)
                       : pow_real_base(w.w, -zk.round_to(p, MPFR_RNDN), p);
    Complex bin = binom_complex(shift_twice(s, k - 1), static_cast<unsigned long>(i), ctx);
    return zeta * wpow * bin * 2L;
}

TransferMatrix build(long n, const Complex& s, const GroupParam& w, MatrixBasis basis,
                     const PrecisionContext& ctx, ZetaCache* cache) {
    if (n < 1) fail(ErrorKind::DomainError, "build: matrix size must be >= 1");
    mpfr_prec_t p = ctx.working_bits;

    TransferMatrix m{n, s, w.w, basis, {}};
    m.entries.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Complex(p));

    // One zeta per even anti-diagonal k = 2t, t = 0..n-1.
    std::vector<Complex> zv = zeta_range(s, 2, n, ctx, cache);

    // w^-(2s+k) along even k: start from w^-2s and step by w^-2, re-anchoring
    // with a freshly computed power every 64 steps so ulp drift cannot
    // compound past the guard bits.
    Complex wpow = pow_real_base(w.w, -shift_twice(s, 0).round_to(p, MPFR_RNDN), p);
    Real winv2(p);
    mpfr_ui_div(winv2.raw(), 1, w.w.raw(), MPFR_RNDN);
    mpfr_sqr(winv2.raw(), winv2.raw(), MPFR_RNDN);

    long unit_k = exact_unit_power_index(s);

    std::vector<Real> weight;  // sqrt(j+1) and 1/sqrt(i+1) tables
    std::vector<Real> inv_weight;
    if (basis == MatrixBasis::Symmetric) {
        weight.reserve(static_cast<std::size_t>(n));
        inv_weight.reserve(static_cast<std::size_t>(n));
        for (long i = 0; i < n; ++i) {
            Real r = Real::sqrt(Real(i + 1, p), MPFR_RNDN);
            Real inv(p);
            mpfr_ui_div(inv.raw(), 1, r.raw(), MPFR_RNDN);
            weight.push_back(std::move(r));
            inv_weight.push_back(std::move(inv));
        }
    }

    for (long t = 0; t < n; ++t) {
        long k = 2 * t;
        if (t > 0) {
            if (t % 64 == 0)
                wpow = pow_real_base(w.w, -shift_twice(s, k).round_to(p, MPFR_RNDN), p);
            else
                wpow = wpow * winv2;
        }
        Complex common = (k == unit_k) ? zv[static_cast<std::size_t>(t)] * 2L
                                       : zv[static_cast<std::size_t>(t)] * wpow * 2L;

        // binom(2s+k-1, i) along the anti-diagonal by the lower-index
        // recurrence b(i+1) = b(i) (z-i) / (i+1). Exact integer zeros of the
        // factors propagate, which keeps the vanishing blocks at integer
        // points exactly zero.
        Complex z = shift_twice(s, k - 1).round_to(p, MPFR_RNDN);
        Complex bin(1, p);
        long imax = std::min(k, n - 1);
        long imin = std::max(0L, k - (n - 1));
        for (long i = 0; i <= imax; ++i) {
            if (i > 0) bin = bin * (z - (i - 1)) / i;
            if (i < imin) continue;
            long j = k - i;
            Complex val = common * bin;
            if (basis == MatrixBasis::Symmetric)
                val = val * (weight[static_cast<std::size_t>(j)] *
                             inv_weight[static_cast<std::size_t>(i)]);
            m.entries[static_cast<std::size_t>(i * n + j)] = std::move(val);
        }
    }
    return m;
}

namespace detail {

namespace {

// Pivot selection compares |x|^2 evaluated at 64 bits; any near-maximal
// pivot is an equally good choice, so low precision suffices here.
void abs2_lowprec(mpfr_ptr out, const Complex& x) {
    mpfr_fmma(out, x.re().raw(), x.re().raw(), x.im().raw(), x.im().raw(), MPFR_RNDN);
}

}  // namespace

long lu_reduce_complex(std::vector<Complex>& a, long n, Complex& det, const Real* tol,
                       mpfr_prec_t prec) {
    auto at = [&](long r, long c) -> Complex& {
        return a[static_cast<std::size_t>(r * n + c)];
    };
    det = Complex(1, prec);
    long swaps = 0;
    long rank = 0;
    long row = 0;

    Real best(64), cand(64), tol2(64);
    if (tol) mpfr_sqr(tol2.raw(), tol->raw(), MPFR_RNDN);
    Real t1(prec), t2(prec);

    for (long col = 0; col < n && row < n; ++col) {
        long piv = row;
        abs2_lowprec(best.raw(), at(row, col));
        for (long r = row + 1; r < n; ++r) {
            abs2_lowprec(cand.raw(), at(r, col));
            if (cand > best) {
                piv = r;
                best = cand;
            }
        }
        bool negligible = tol ? (best <= tol2) : at(piv, col).is_zero();
        if (negligible) {
            if (tol) continue;  // rank mode: drop the column, keep the row
            det = Complex(prec);
            return rank;
        }
        if (piv != row) {
            for (long c = col; c < n; ++c) std::swap(at(piv, c), at(row, c));
            ++swaps;
        }
        const Complex& pv = at(row, col);
        det = det * pv;
        for (long r = row + 1; r < n; ++r) {
            Complex& lead = at(r, col);
            if (lead.is_zero()) continue;
            Complex f = lead / pv;
            for (long c = col + 1; c < n; ++c) {
                Complex& x = at(r, c);
                const Complex& y = at(row, c);
                // x -= f*y with a single fused rounding per product
                mpfr_fmms(t1.raw(), f.re().raw(), y.re().raw(), f.im().raw(), y.im().raw(),
                          MPFR_RNDN);
                mpfr_sub(x.re().raw(), x.re().raw(), t1.raw(), MPFR_RNDN);
                mpfr_fmma(t2.raw(), f.re().raw(), y.im().raw(), f.im().raw(), y.re().raw(),
                          MPFR_RNDN);
                mpfr_sub(x.im().raw(), x.im().raw(), t2.raw(), MPFR_RNDN);
            }
            lead = Complex(prec);
        }
        ++row;
        ++rank;
    }
    if (swaps % 2 != 0) det = -det;
    return rank;
}

long lu_reduce_real(std::vector<Real>& a, long n, Real& det, const Real* tol,
                    mpfr_prec_t prec) {
    auto at = [&](long r, long c) -> Real& {
        return a[static_cast<std::size_t>(r * n + c)];
    };
    det = Real(1L, prec);
    long swaps = 0;
    long rank = 0;
    long row = 0;

    Real t1(prec);

    for (long col = 0; col < n && row < n; ++col) {
        long piv = row;
        for (long r = row + 1; r < n; ++r)
            if (mpfr_cmpabs(at(r, col).raw(), at(piv, col).raw()) > 0) piv = r;
        bool negligible = tol ? (mpfr_cmpabs(at(piv, col).raw(), tol->raw()) <= 0)
                              : at(piv, col).is_zero();
        if (negligible) {
            if (tol) continue;
            det = Real(prec);
            return rank;
        }
        if (piv != row) {
            for (long c = col; c < n; ++c) std::swap(at(piv, c), at(row, c));
            ++swaps;
        }
        const Real& pv = at(row, col);
        det = Real::mul(det, pv, MPFR_RNDN);
        for (long r = row + 1; r < n; ++r) {
            Real& lead = at(r, col);
            if (lead.is_zero()) continue;
            Real f = Real::div(lead, pv, MPFR_RNDN);
            for (long c = col + 1; c < n; ++c) {
                Real& x = at(r, c);
                // x -= f*y in a single rounding: x = -(f*y - x)
                mpfr_fms(t1.raw(), f.raw(), at(row, c).raw(), x.raw(), MPFR_RNDN);
                mpfr_neg(x.raw(), t1.raw(), MPFR_RNDN);
            }
            lead = Real(prec);
        }
        ++row;
        ++rank;
    }
    if (swaps % 2 != 0) det = Real::neg(det);
    return rank;
}

}  // namespace detail

FNValue det_one_minus(const TransferMatrix& m, const PrecisionContext& ctx) {
    mpfr_prec_t p = ctx.working_bits;
    long n = m.n;

    // Real s makes every entry's imaginary part exactly zero (the arithmetic
    // preserves exact zeros), so the determinant can run on Reals at roughly
    // a quarter of the cost.
    if (m.s.is_real()) {
        std::vector<Real> a;
        a.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j) {
                Real v(p);
                if (i == j)
                    mpfr_si_sub(v.raw(), 1, m.at(i, j).re().raw(), MPFR_RNDN);
                else
                    mpfr_neg(v.raw(), m.at(i, j).re().raw(), MPFR_RNDN);
                a.push_back(std::move(v));
            }
        Real det(p);
        detail::lu_reduce_real(a, n, det, nullptr, p);
        return FNValue{Complex(std::move(det), Real(p)), n, m.s, m.w};
    }

    std::vector<Complex> a;
    a.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            Complex v = -m.at(i, j).round_to(p, MPFR_RNDN);
            if (i == j) v = v + 1L;
            a.push_back(std::move(v));
        }
    Complex det(p);
    detail::lu_reduce_complex(a, n, det, nullptr, p);
    return FNValue{std::move(det), n, m.s, m.w};
}

FNValue evaluate_fn(long n, const Complex& s, const GroupParam& w, MatrixBasis basis,
                    const PrecisionContext& ctx, ZetaCache* cache) {
    // At an exact nonpositive integer s = -m the truncation must reach past
    // the vanishing block, i.e. n >= m+1; below that the determinant does not
    // see the full structure and is meaningless.
    if (s.is_real() && s.re().is_integer() && s.re().sign() <= 0) {
        long m = -s.re().to_long();
        if (n < m + 1)
            fail(ErrorKind::DomainError,
                 "evaluate_fn: truncation too small for exact integer point");
    }
    TransferMatrix m = build(n, s, w, basis, ctx, cache);
    return det_one_minus(m, ctx);
}

}  // namespace hz
