#include "heckezeta/error_bounds.hpp"

#include <string>

#include "heckezeta/errors.hpp"

namespace hz {

namespace {

// -2 Re(s), exact (doubling and negation never round).
Real neg_two_re(const Complex& s) {
    Real e(s.re().prec());
    mpfr_mul_2si(e.raw(), s.re().raw(), 1, MPFR_RNDN);
    mpfr_neg(e.raw(), e.raw(), MPFR_RNDN);
    return e;
}

}  // namespace

BoundContext::BoundContext(const Complex& s, const GroupParam& w, const PrecisionContext& ctx)
    : p_(ctx.working_bits), c_(p_), q_(p_), pref_(p_), two_over_w_(p_) {
    // Everything below rounds toward +infinity; all factors are positive, so
    // the products stay true upper bounds.
    c_ = c_upper(s, ctx).value;

    mpfr_ui_div(two_over_w_.raw(), 2, w.w.raw(), MPFR_RNDU);
    Real li_half = polylog_neg_upper(PolylogOrder::MinusHalf, two_over_w_, ctx);

    Real sqrt2 = Real::sqrt(Real(2L, p_), MPFR_RNDU);
    Real bracket = Real::add(Real(1L, p_), Real::mul(sqrt2, li_half, MPFR_RNDU), MPFR_RNDU);

    Real abs2s = Real::ldexp(s.abs(MPFR_RNDU), 1);  // upper bound on 2|s|
    Real pow2ceil = Real::pow2(Real::ceil_long(abs2s), p_);

    // w > 1, so rounding the exponent up can only push the power up; with
    // RNDU on the pow itself the result is a certified upper bound.
    Real wpow = Real::pow(w.w.round_to(p_, MPFR_RNDU), neg_two_re(s).round_to(p_, MPFR_RNDU),
                          MPFR_RNDU);

    pref_ = Real::mul(w.w.round_to(p_, MPFR_RNDU), c_, MPFR_RNDU);
    pref_ = Real::mul(pref_, pow2ceil, MPFR_RNDU);
    pref_ = Real::mul(pref_, wpow, MPFR_RNDU);
    pref_ = Real::mul(pref_, li_half, MPFR_RNDU);
    pref_ = Real::mul(pref_, bracket, MPFR_RNDU);

    // Q(s) = 2 C (w/(w-1))^(2|s|) (w-1) w^(-2 Re s) Li_{-3/2}(1/(w-1))
    Real wm1_up = Real::sub(w.w, Real(1L, p_), MPFR_RNDU).round_to(p_, MPFR_RNDU);
    Real wm1_dn = Real::sub(w.w, Real(1L, p_), MPFR_RNDD).round_to(p_, MPFR_RNDD);
    Real ratio = Real::div(w.w.round_to(p_, MPFR_RNDU), wm1_dn, MPFR_RNDU);
    Real ratio_pow = Real::pow(ratio, abs2s, MPFR_RNDU);
    Real inv_wm1 = Real(p_);
    mpfr_ui_div(inv_wm1.raw(), 1, wm1_dn.raw(), MPFR_RNDU);
    Real li32 = polylog_neg_upper(PolylogOrder::MinusThreeHalves, inv_wm1, ctx);

    q_ = Real::ldexp(c_, 1);
    q_ = Real::mul(q_, ratio_pow, MPFR_RNDU);
    q_ = Real::mul(q_, wm1_up, MPFR_RNDU);
    q_ = Real::mul(q_, wpow, MPFR_RNDU);
    q_ = Real::mul(q_, li32, MPFR_RNDU);
}

Real BoundContext::p_n(long n) const {
    if (n < 1) fail(ErrorKind::DomainError, "p_n: truncation size must be >= 1");
    Real geo = Real::pow_ui(two_over_w_, static_cast<unsigned long>(n), MPFR_RNDU);
    Real root = Real::sqrt(Real(n + 1, p_), MPFR_RNDU);
    return Real::mul(Real::mul(geo, root, MPFR_RNDU), pref_, MPFR_RNDU);
}

Real BoundContext::total(long n) const {
    Real p = p_n(n);
    Real e = Real::add(Real::add(p, q_, MPFR_RNDU), Real(1L, p_), MPFR_RNDU);
    e = Real::exp(e, MPFR_RNDU);
    return Real::mul(p, e, MPFR_RNDU);
}

ErrorBudget BoundContext::budget(long n) const {
    Real p = p_n(n);
    Real e = Real::add(Real::add(p, q_, MPFR_RNDU), Real(1L, p_), MPFR_RNDU);
    e = Real::exp(e, MPFR_RNDU);
    return ErrorBudget{p, q_, c_, Real::mul(p, e, MPFR_RNDU), n};
}

Real p_n_bound(long n, const Complex& s, const GroupParam& w, const PrecisionContext& ctx) {
    return BoundContext(s, w, ctx).p_n(n);
}

Real q_bound(const Complex& s, const GroupParam& w, const PrecisionContext& ctx) {
    return BoundContext(s, w, ctx).q();
}

Real total_bound(long n, const Complex& s, const GroupParam& w, const PrecisionContext& ctx) {
    return BoundContext(s, w, ctx).total(n);
}

long BoundContext::choose(const Real& eps, long n_max) const {
    if (eps.sign() <= 0) fail(ErrorKind::DomainError, "choose_n: eps must be positive");

    long lo = 1;
    long hi = 8;
    while (total(hi) > eps) {
        lo = hi;
        hi *= 2;
        if (hi >= n_max) {
            hi = n_max;
            Real at_max = total(n_max);
            if (at_max > eps) {
                char* msg = nullptr;
                mpfr_asprintf(&msg, "choose_n: bound %.3Re at n=%ld still above eps %.3Re",
                              at_max.raw(), n_max, eps.raw());
                std::string text(msg);
                mpfr_free_str(msg);
                fail(ErrorKind::BoundUnreachable, text);
            }
            break;
        }
    }
    // smallest n in (lo, hi] with total(n) <= eps (bound is monotone there)
    while (lo + 1 < hi) {
        long mid = lo + (hi - lo) / 2;
        if (total(mid) <= eps)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

long choose_n(const Real& eps, const Complex& s, const GroupParam& w,
              const PrecisionContext& ctx, long n_max) {
    return BoundContext(s, w, ctx).choose(eps, n_max);
}

}  // namespace hz
