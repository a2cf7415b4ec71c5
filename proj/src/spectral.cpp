#include "heckezeta/spectral.hpp"

#include <cmath>
#include <string>

#include "heckezeta/errors.hpp"
#include "heckezeta/zeta_cache.hpp"

namespace hz {

RuelleCheck ruelle_at_zero(long n, const GroupParam& w, const PrecisionContext& ctx,
                           ZetaCache* cache) {
    if (n < 2) fail(ErrorKind::DomainError, "ruelle_at_zero: need n >= 2");
    const mpfr_prec_t wb = ctx.working_bits;

    FNValue f0 = evaluate_fn(n, Complex(0, wb), w, MatrixBasis::Symmetric, ctx, cache);
    FNValue f1 = evaluate_fn(n - 1, Complex(1, wb), w, MatrixBasis::Symmetric, ctx, cache);

    Real lhs = f0.value.re();
    Real rhs = Real::ldexp(f1.value.re(), 1);
    Real defect = Real::abs(Real::sub(lhs, rhs, MPFR_RNDN));
    Real tol = Real::max(Real(1L, wb), Real::abs(lhs));
    tol = Real::mul(tol, Real::pow2(ctx.error_exponent() + 8, wb), MPFR_RNDU);
    bool within = defect <= tol;
    return RuelleCheck{std::move(lhs), std::move(rhs), std::move(defect),
                       std::move(tol), within, n};
}

UMatrix u_matrix(long m, const GroupParam& w, const PrecisionContext& ctx, ZetaCache* cache) {
    if (m < 0) fail(ErrorKind::DomainError, "u_matrix: m must be >= 0");
    if (m > (1L << 20)) fail(ErrorKind::DomainError, "u_matrix: m out of range");
    const mpfr_prec_t wb = ctx.working_bits;
    long size = 2 * m + 1;

    TransferMatrix a = build(size, Complex(-m, wb), w, MatrixBasis::Plain, ctx, cache);
    UMatrix u{m, size, {}};
    u.one_minus.reserve(static_cast<std::size_t>(size) * static_cast<std::size_t>(size));
    for (long i = 0; i < size; ++i)
        for (long j = 0; j < size; ++j) {
            Complex v = -a.at(i, j);
            if (i == j) v = v + 1L;
            u.one_minus.push_back(std::move(v));
        }
    return u;
}

namespace {

long expected_entry(long i, long j, long m) {
    if (i == m && j == m) return (m % 2 == 0) ? 2 : 0;
    if (i == j) return 1;
    if (i + j == 2 * m) return (i % 2 == 0) ? 1 : -1;
    return 0;
}

}  // namespace

RankReport rank_analysis(long m, const GroupParam& w, const PrecisionContext& ctx,
                         ZetaCache* cache) {
    const mpfr_prec_t wb = ctx.working_bits;
    UMatrix u = u_matrix(m, w, ctx, cache);

    for (long i = 0; i < u.size; ++i)
        for (long j = 0; j < u.size; ++j) {
            const Complex& v = u.at(i, j);
            long want = expected_entry(i, j, m);
            if (!v.im().is_zero() || mpfr_cmp_si(v.re().raw(), want) != 0)
                fail(ErrorKind::PatternMismatch,
                     "rank_analysis: entry (" + std::to_string(i) + "," + std::to_string(j) +
                         ") of 1-A(-" + std::to_string(m) + ") is not the exact integer " +
                         std::to_string(want));
        }

    std::vector<Real> a;
    a.reserve(u.one_minus.size());
    for (const Complex& v : u.one_minus) a.push_back(v.re());
    Real det(wb);
    Real tol = Real::pow2(-static_cast<long>(wb) / 2, wb);
    long rank = detail::lu_reduce_real(a, u.size, det, &tol, wb);

    long nullity = u.size - rank;
    RankReport r{m, u.size, rank, nullity, std::max(m, nullity), 2 * m + 1};
    return r;
}

OrderProbe vanishing_order_probe(long m, const GroupParam& w, ZetaCache* cache) {
    if (m < 1 || m > 8)
        fail(ErrorKind::DomainError, "vanishing_order_probe: m must be in [1, 8]");

    // The smallest sample is eps = 1e-8 where |F| ~ eps^(2m+1) at worst;
    // resolve that with ~25 digits to spare.
    long digits = 8 * (2 * m + 1) + 25;
    PrecisionContext ctx = PrecisionContext::for_digits(digits, 64);
    const mpfr_prec_t wb = ctx.working_bits;
    long n = 2 * m + 8;

    double xs[5], ys[5];
    for (int t = 0; t < 5; ++t) {
        Real eps(wb);
        mpfr_ui_pow_ui(eps.raw(), 10, static_cast<unsigned long>(4 + t), MPFR_RNDN);
        mpfr_ui_div(eps.raw(), 1, eps.raw(), MPFR_RNDN);
        Real s = Real::add(Real(-m, wb), eps, MPFR_RNDN);
        // the exact offset actually used (the addition above may round)
        Real off = Real::add(s, Real(m, wb), MPFR_RNDN);

        FNValue f = evaluate_fn(n, Complex(s, Real(wb)), w, MatrixBasis::Plain, ctx, cache);
        Real av = f.value.abs(MPFR_RNDN);
        if (av.is_zero())
            fail(ErrorKind::IllConditioned, "vanishing_order_probe: sample underflowed to 0");
        Real lx = Real::log(off, MPFR_RNDN);
        Real ly = Real::log(av, MPFR_RNDN);
        xs[t] = lx.to_double();
        ys[t] = ly.to_double();
    }

    double xb = 0, yb = 0;
    for (int t = 0; t < 5; ++t) {
        xb += xs[t];
        yb += ys[t];
    }
    xb /= 5;
    yb /= 5;
    double sxx = 0, sxy = 0;
    for (int t = 0; t < 5; ++t) {
        sxx += (xs[t] - xb) * (xs[t] - xb);
        sxy += (xs[t] - xb) * (ys[t] - yb);
    }
    double slope = sxy / sxx;
    double icpt = yb - slope * xb;
    double rss = 0;
    for (int t = 0; t < 5; ++t) {
        double r = ys[t] - (slope * xs[t] + icpt);
        rss += r * r;
    }
    double residual = std::sqrt(rss / 5.0);
    if (residual > 0.1)
        fail(ErrorKind::IllConditioned,
             "vanishing_order_probe: log-log fit residual " + std::to_string(residual) +
                 " exceeds 0.1");
    return OrderProbe{m, n, slope, residual};
}

}  // namespace hz
