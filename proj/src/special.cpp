#include "heckezeta/special.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "heckezeta/bernoulli.hpp"
#include "heckezeta/zeta_cache.hpp"

namespace hz {

namespace {

// Euler-Maclaurin cutoff M for internal precision P and |Im z| = t:
// enough power-sum terms that the Bernoulli tail converges well before the
// remainder target, and at least |Im z|/pi so the tail is in its decay
// regime from the first term.
long em_cutoff(mpfr_prec_t P, double abs_im) {
    double from_prec = std::ceil(static_cast<double>(P) * 0.17328679513998632);  // P ln2 / 4
    double from_im = std::ceil(std::abs(abs_im) / 3.141592653589793);
    double m = std::max({3.0, from_prec, from_im});
    return static_cast<long>(m);
}

// zeta at an exact nonpositive integer -n: zeta(0) = -1/2, zeta(-2k) = 0,
// zeta(-(2k+1)) = -B_{2k+2}/(2k+2). Exact rational, rounded once.
Complex zeta_nonpos_int(long n, mpfr_prec_t wb) {
    Complex r(wb);
    if (n == 0) {
        mpfr_set_si_2exp(r.re().raw(), -1, -1, MPFR_RNDN);  // -1/2
        return r;
    }
    if (n % 2 == 0) return r;  // trivial zero
    Rational b = bernoulli(static_cast<unsigned long>(n) + 1);
    Rational v;
    mpq_set_si(v.raw(), -1, 1);
    mpq_mul(v.raw(), v.raw(), b.raw());
    Rational den;
    mpq_set_ui(den.raw(), static_cast<unsigned long>(n) + 1, 1);
    mpq_div(v.raw(), v.raw(), den.raw());
    mpfr_set_q(r.re().raw(), v.raw(), MPFR_RNDN);
    return r;
}

struct EmPlan {
    mpfr_prec_t p_base;   // precision of the shared tables and tail sums
    long m;               // power-sum cutoff
    mpfr_prec_t px;       // precision holding 2 Re(s) + k exactly
};

// The plan must not depend on the batch length, only on (wb, s): cached
// values for a given (working_bits, s, k) have to be bit-identical no matter
// which build produced them.
EmPlan plan_for(const Complex& s, const PrecisionContext& ctx) {
    EmPlan plan{};
    mpfr_prec_t p0 = ctx.working_bits + 96;
    long m0 = em_cutoff(p0, Real::ldexp(s.im(), 1).to_double());
    double x0 = Real::ldexp(s.re(), 1).to_double();
    mpfr_prec_t extra_neg = 0;
    if (x0 < 0) {
        // power-sum terms grow like n^|sigma|; keep their rounding under the
        // absolute target
        extra_neg = static_cast<mpfr_prec_t>(
            std::ceil(-x0 * std::log2(static_cast<double>(m0) + 2.0)) + 8);
    }
    plan.p_base = p0 + extra_neg;
    plan.m = em_cutoff(plan.p_base, Real::ldexp(s.im(), 1).to_double());
    plan.px = std::max<mpfr_prec_t>(s.re().prec(), 64) + 48;
    return plan;
}

}  // namespace

std::vector<Complex> zeta_range(const Complex& s, long k_step, long count,
                                const PrecisionContext& ctx, ZetaCache* cache) {
    if (count <= 0) return {};
    if (k_step != 2 && !(k_step == 1 && count == 1))
        fail(ErrorKind::DomainError, "zeta_range: only step 2 batches (or single values) supported");

    const mpfr_prec_t wb = ctx.working_bits;

    std::vector<Complex> out;
    out.reserve(static_cast<std::size_t>(count));
    for (long t = 0; t < count; ++t) out.emplace_back(wb);

    std::vector<char> have(static_cast<std::size_t>(count), 0);
    bool all_hit = false;
    if (cache != nullptr) {
        all_hit = true;
        for (long t = 0; t < count; ++t) {
            auto hit = cache->lookup(wb, s, t * k_step);
            if (hit) {
                out[static_cast<std::size_t>(t)] = std::move(*hit);
                have[static_cast<std::size_t>(t)] = 1;
            } else {
                all_hit = false;
            }
        }
        if (all_hit) return out;
    }

    const EmPlan plan = plan_for(s, ctx);
    const mpfr_prec_t P = plan.p_base;
    const long M = plan.m;

    // exact batch base 2s; x_t = x0 + t k_step stays exact at plan.px bits
    Real x0 = Real::ldexp(s.re(), 1).round_to(plan.px);
    Real y = Real::ldexp(s.im(), 1).round_to(plan.px);
    const bool real_axis = y.is_zero();

    Real logM(P);
    mpfr_log_ui(logM.raw(), static_cast<unsigned long>(M), MPFR_RNDN);

    // n^{-(2s)} for n = 2..M-1, advanced by n^{-k_step} per batch step
    std::vector<Complex> npow;
    std::vector<Real> recip;
    npow.reserve(static_cast<std::size_t>(M));
    recip.reserve(static_cast<std::size_t>(M));
    for (long n = 2; n < M; ++n) {
        Real ln(P);
        mpfr_log_ui(ln.raw(), static_cast<unsigned long>(n), MPFR_RNDN);
        npow.push_back(cexp(Complex(Real::neg(x0.round_to(P) * ln), Real::neg(y.round_to(P) * ln))));
        Real pk(P);
        mpfr_ui_pow_ui(pk.raw(), static_cast<unsigned long>(n),
                       static_cast<unsigned long>(k_step), MPFR_RNDN);
        recip.push_back(1L / pk);
    }

    const Real target = Real::pow2(-(static_cast<long>(wb) + 32), 64);
    const Real twopi_dn = Real::ldexp(Real::pi(64, MPFR_RNDD), 1);
    const Real m_real(M, 64);
    const long nu_max = std::max<long>(64, static_cast<long>(P));

    for (long t = 0; t < count; ++t) {
        const long k = t * k_step;
        Real zx = x0 + k;  // exact
        Complex z(zx.round_to(P), y.round_to(P));

        // advance the shared power table before any early-out below; element
        // t+1 must always see exactly t+1 updates
        struct Advance {
            std::vector<Complex>* npow;
            const std::vector<Real>* recip;
            bool last;
            ~Advance() {
                if (!last)
                    for (std::size_t i = 0; i < npow->size(); ++i)
                        (*npow)[i] = (*npow)[i] * (*recip)[i];
            }
        } advance{&npow, &recip, t + 1 == count};

        if (real_axis && zx.is_integer() && zx <= 0) {
            out[static_cast<std::size_t>(t)] = zeta_nonpos_int(-zx.to_long(), wb);
            continue;
        }

        // pole handling: exact hit or indistinguishable-from-1 is an error;
        // otherwise pad the pole-term precision by its closeness
        Real dx = zx - 1;  // exact
        if (dx.is_zero() && real_axis)
            fail(ErrorKind::PoleAt1,
                 "zeta argument hits the pole at 1 (offset k = " + std::to_string(k) + ")");
        Real dist(64);
        mpfr_hypot(dist.raw(), dx.raw(), y.raw(), MPFR_RNDD);
        if (dist < Real::pow2(-static_cast<long>(wb), 64))
            fail(ErrorKind::PoleAt1, "zeta argument within working precision of the pole at 1");
        mpfr_prec_t pole_pad = 0;
        if (dist < 1L) pole_pad = static_cast<mpfr_prec_t>(1 - mpfr_get_exp(dist.raw()));

        // partial sum 1 + sum_{n=2}^{M-1} n^-z
        Complex acc(1, P);
        for (const Complex& term : npow) acc = acc + term;

        // pole term M^(1-z)/(z-1) at padded precision; both the term and its
        // sensitivity to z grow like powers of 1/|z-1|, hence the 2x pad
        {
            const mpfr_prec_t pp = P + 2 * pole_pad;
            Real lg(pp);
            mpfr_log_ui(lg.raw(), static_cast<unsigned long>(M), MPFR_RNDN);
            Complex zp(zx.round_to(pp), y.round_to(pp));
            Complex tp = cexp(Complex(Real::neg(zp.re() * lg), Real::neg(zp.im() * lg)));
            Complex pole = (tp * static_cast<long>(M)) / Complex(dx.round_to(pp), y.round_to(pp));
            acc = acc + pole;
        }

        // half term + Bernoulli tail at base precision
        Complex tb = cexp(Complex(Real::neg(z.re() * logM), Real::neg(z.im() * logM)));
        acc = acc + Complex(Real::ldexp(tb.re(), -1), Real::ldexp(tb.im(), -1));

        Complex rf = z;              // rising factorial (z)_{2j-1}
        Complex pw = tb / static_cast<long>(M);  // M^(-z-2j+1)
        Real inv_m2(P);
        mpfr_ui_pow_ui(inv_m2.raw(), static_cast<unsigned long>(M), 2, MPFR_RNDN);
        inv_m2 = 1L / inv_m2;
        Real prev_rem(64);
        bool have_prev = false;
        bool done = false;
        for (long j = 1; j <= nu_max; ++j) {
            Real coef = bernoulli_over_factorial(2 * static_cast<unsigned long>(j)).to_real(P);
            acc = acc + rf * pw * coef;

            rf = rf * (z + (2 * j - 1));
            rf = rf * (z + 2 * j);

            // remainder after j terms:
            //   4 |(z)_{2j+1}| / (2pi)^(2j+1) * M^-(sigma+2j) / (sigma+2j)
            Real sig_dn = Real::add(zx.round_to(64, MPFR_RNDD), Real(2 * j, 64), MPFR_RNDD);
            if (sig_dn > 0L) {
                Real rem = rf.abs(MPFR_RNDU).round_to(64, MPFR_RNDU);
                rem = Real::ldexp(rem, 2);  // the factor 4
                Real dn = Real::pow_ui(twopi_dn, static_cast<unsigned long>(2 * j + 1), MPFR_RNDD);
                rem = Real::div(rem, dn, MPFR_RNDU);
                Real mp = Real::pow(m_real, Real::neg(sig_dn), MPFR_RNDU);
                rem = Real::mul(rem, mp, MPFR_RNDU);
                rem = Real::div(rem, sig_dn, MPFR_RNDU);
                if (rem <= target) {
                    done = true;
                    break;
                }
                if (have_prev && rem > Real::ldexp(prev_rem, 2)) break;  // diverging
                prev_rem = rem;
                have_prev = true;
            }
            pw = pw * inv_m2;
        }
        if (!done)
            fail(ErrorKind::PrecisionExhausted,
                 "zeta: Euler-Maclaurin remainder did not reach target at offset k = " +
                     std::to_string(k));

        out[static_cast<std::size_t>(t)] = acc.round_to(wb);
    }

    if (cache != nullptr) {
        for (long t = 0; t < count; ++t)
            if (!have[static_cast<std::size_t>(t)])
                cache->store(wb, s, t * k_step, out[static_cast<std::size_t>(t)]);
    }
    return out;
}

Complex zeta_complex(const Complex& z, const PrecisionContext& ctx) {
    // z/2 is an exact halving, so this is the k = 0 element of a batch at
    // s = z/2; single values and batch elements share one code path.
    Complex half(Real::ldexp(z.re(), -1), Real::ldexp(z.im(), -1));
    return zeta_range(half, 1, 1, ctx, nullptr)[0];
}

Complex binom_complex(const Complex& z, unsigned long k, const PrecisionContext& ctx) {
    const mpfr_prec_t wb = ctx.working_bits;
    if (k == 0) return Complex(1, wb);
    const mpfr_prec_t P = wb + 32;
    Complex zr = z.round_to(P);
    Complex num = zr;
    for (unsigned long t = 1; t < k; ++t) num = num * (zr - static_cast<long>(t));
    mpz_t fz;
    mpz_init(fz);
    mpz_fac_ui(fz, k);
    Real fact(P);
    mpfr_set_z(fact.raw(), fz, MPFR_RNDN);
    mpz_clear(fz);
    return (num / fact).round_to(wb);
}

namespace detail {

// Shared partial-sum core: forced_terms < 0 means "choose the crossover
// adaptively". All operations round up, so the result is a true upper bound.
static Real polylog_upper_impl(PolylogOrder order, const Real& x, long forced_terms,
                               const PrecisionContext& ctx) {
    const mpfr_prec_t wb = ctx.working_bits;
    if (x.sign() < 0 || x >= 1L)
        fail(ErrorKind::DomainError, "polylog_neg_upper: argument must lie in [0, 1)");
    if (x.is_zero()) return Real(0L, wb);

    const mpfr_prec_t P = wb + 32;
    const bool three_halves = (order == PolylogOrder::MinusThreeHalves);
    const Real target = Real::pow2(-static_cast<long>(wb), 64);
    const Real xu = x.round_to(P, MPFR_RNDU);
    const long n_cap = forced_terms > 0 ? forced_terms : (1L << 22);

    Real sum(0L, P);
    Real xn(1L, P);
    Real three(3L, P);
    Real half_exp = three / 2L;  // exact: 1.5
    for (long n = 1; n <= n_cap; ++n) {
        xn = Real::mul(xn, xu, MPFR_RNDU);
        Real term = Real::sqrt(Real(n, P), MPFR_RNDU);
        if (three_halves) term = Real::mul(term, Real(n, P), MPFR_RNDU);
        term = Real::mul(term, xn, MPFR_RNDU);
        sum = Real::add(sum, term, MPFR_RNDU);

        bool check = (forced_terms > 0) ? (n == forced_terms) : (n >= 8);
        if (!check) continue;

        // ratio test past n: t_{m+1}/t_m <= x (1 + 1/(n+1))^{3/2} = rho < 1
        Real base = Real::add(Real(1L, P), Real::div(Real(1L, P), Real(n + 1, P), MPFR_RNDU),
                              MPFR_RNDU);
        Real rho = Real::mul(xu, Real::pow(base, half_exp, MPFR_RNDU), MPFR_RNDU);
        if (rho >= 1L) {
            if (forced_terms > 0)
                fail(ErrorKind::DomainError,
                     "polylog_neg_upper: forced term count too small for the ratio test");
            continue;
        }
        Real tnext = Real::mul(xn, xu, MPFR_RNDU);
        Real np = Real::sqrt(Real(n + 1, P), MPFR_RNDU);
        if (three_halves) np = Real::mul(np, Real(n + 1, P), MPFR_RNDU);
        tnext = Real::mul(tnext, np, MPFR_RNDU);
        Real tail = Real::div(tnext, Real::sub(Real(1L, P), rho, MPFR_RNDD), MPFR_RNDU);
        if (forced_terms > 0 || tail <= target)
            return Real::add(sum, tail, MPFR_RNDU).round_to(wb, MPFR_RNDU);
    }
    fail(ErrorKind::PrecisionExhausted,
         "polylog_neg_upper: tail bound did not reach target (argument too close to 1)");
}

Real polylog_neg_upper_terms(PolylogOrder order, const Real& x, long terms,
                             const PrecisionContext& ctx) {
    if (terms < 1) fail(ErrorKind::DomainError, "polylog_neg_upper_terms: terms must be >= 1");
    return polylog_upper_impl(order, x, terms, ctx);
}

}  // namespace detail

Real polylog_neg_upper(PolylogOrder order, const Real& x, const PrecisionContext& ctx) {
    return detail::polylog_upper_impl(order, x, -1, ctx);
}

CBound c_upper(const Complex& s, const PrecisionContext& ctx) {
    const mpfr_prec_t wb = ctx.working_bits;
    const Real allot = Real::pow2(ctx.error_exponent(), wb);

    // smallest even n0 with 2 Re(s) + n0 >= 2
    Real two_re = Real::ldexp(s.re(), 1);
    long n0 = 0;
    {
        Real deficit = 2L - two_re;
        if (deficit.sign() > 0) n0 = 2 * Real::ceil_long(Real::ldexp(deficit, -1));
    }

    // pole proximity screen over the scanned arguments
    const Real prox = Real::pow2(-static_cast<long>(ctx.guard_bits), 64);
    for (long n = 0; n < n0; n += 2) {
        Real dx = two_re + (n - 1);
        Real d(64);
        mpfr_hypot(d.raw(), dx.raw(), s.im().raw(), MPFR_RNDN);
        if (d < prox)
            fail(ErrorKind::PoleProximity,
                 "c_upper: zeta argument 2s + " + std::to_string(n) +
                     " within 2^-guard_bits of the pole");
    }

    Real best(0L, wb);
    if (n0 > 0) {
        std::vector<Complex> vals = zeta_range(s, 2, n0 / 2, ctx, nullptr);
        for (const Complex& v : vals) {
            Real a = Real::add(v.abs(MPFR_RNDU), allot, MPFR_RNDU);
            if (a > best) best = a;
        }
    }

    // real-axis tail dominates every even n >= n0 by Dirichlet comparison
    Real tail_arg = two_re + n0;  // >= 2
    Complex tail = zeta_complex(Complex(tail_arg), ctx);
    Real tail_up = Real::add(Real::abs(tail.re()), allot, MPFR_RNDU);
    if (tail_up > best) best = tail_up;

    return CBound{best.round_to(wb, MPFR_RNDU), n0};
}

}  // namespace hz
