#include "heckezeta/certified_roots.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "heckezeta/errors.hpp"
#include "heckezeta/report_format.hpp"
#include "heckezeta/zeta_cache.hpp"

namespace hz {

SignCertificate certified_sign(const Real& s, const GroupParam& w, const Real& eps_hint,
                               const PrecisionContext& ctx, ZetaCache* cache) {
    if (eps_hint.sign() <= 0)
        fail(ErrorKind::DomainError, "certified_sign: eps_hint must be positive");
    const mpfr_prec_t wb = ctx.working_bits;
    Complex sc(s, Real(s.prec()));
    BoundContext bc(sc, w, ctx);

    Real eps = eps_hint;
    for (int attempt = 0; attempt < 6; ++attempt) {
        long n = bc.choose(eps, 5000);
        FNValue f = evaluate_fn(n, sc, w, MatrixBasis::Symmetric, ctx, cache);
        Real fv = f.value.re();  // real s keeps the imaginary part exactly zero
        Real afv = Real::abs(fv);

        Real allow = Real::max(Real(1L, wb), afv);
        allow = Real::mul(allow, Real::pow2(ctx.error_exponent(), wb), MPFR_RNDU);
        Real gate = Real::add(bc.total(n), allow, MPFR_RNDU);

        if (afv > gate) {
            return SignCertificate{fv.sign() > 0 ? Sign::Positive : Sign::Negative,
                                   s, std::move(fv), std::move(gate), n, wb};
        }
        eps = eps / 100000L;
    }
    char* msg = nullptr;
    mpfr_asprintf(&msg, "certified_sign: |F_N(%.20Rg)| stayed inside the error bound", s.raw());
    std::string text(msg);
    mpfr_free_str(msg);
    fail(ErrorKind::Undetermined, text);
}

namespace {

struct Tracker {
    long max_n = 0;
    mpfr_prec_t max_bits = 0;
    void see(const SignCertificate& c) {
        max_n = std::max(max_n, c.n);
        max_bits = std::max(max_bits, c.bits);
    }
};

// Sign at `point` with the step's schedule; falls back to a perturbed point
// (the exact dyadic point + width/1024) and then to +128 bits of precision.
// Whichever point succeeds is returned inside the certificate.
SignCertificate classify(const Real& point, const Real& width, const GroupParam& w,
                         const Real& eps, const PrecisionContext& sctx, ZetaCache* cache) {
    try {
        return certified_sign(point, w, eps, sctx, cache);
    } catch (const Error& e) {
        if (!e.is_certification_failure()) throw;
    }
    Real nudged = Real::add(point, Real::ldexp(width, -10), MPFR_RNDN);
    try {
        return certified_sign(nudged, w, eps, sctx, cache);
    } catch (const Error& e) {
        if (!e.is_certification_failure()) throw;
    }
    PrecisionContext bumped =
        PrecisionContext::for_bits(sctx.working_bits + 128, sctx.guard_bits);
    return certified_sign(point, w, eps, bumped, cache);
}

}  // namespace

RootEnclosure bisect_delta(const GroupParam& w, long digits, ZetaCache* cache) {
    if (digits < 1 || digits > 200)
        fail(ErrorKind::DomainError, "bisect_delta: digits must be in [1, 200]");

    // Endpoints are exact dyadics; the span they accumulate over the whole
    // run stays well under this width, so midpoints never round.
    const mpfr_prec_t pb = bits_for_digits(digits) + 192;

    Real tgt(pb);  // certified lower bound of 10^-digits
    mpfr_ui_pow_ui(tgt.raw(), 10, static_cast<unsigned long>(digits), MPFR_RNDU);
    mpfr_ui_div(tgt.raw(), 1, tgt.raw(), MPFR_RNDD);

    Real eps_floor(64);  // 10^-(digits+10), the tightest truncation target used
    mpfr_ui_pow_ui(eps_floor.raw(), 10, static_cast<unsigned long>(digits + 10), MPFR_RNDU);
    mpfr_ui_div(eps_floor.raw(), 1, eps_floor.raw(), MPFR_RNDD);

    PrecisionContext coarse = PrecisionContext::for_digits(24, 64);
    Real eps0("1e-16", 64);
    Tracker track;

    // Lower bracket: walk 1/2 + 2^-k toward 1/2 until the sign is Negative.
    Real lo(pb);
    bool have_lo = false;
    for (long k = 4; k <= 48; k += 4) {
        Real cand = Real::add(Real::pow2(-1, pb), Real::pow2(-k, pb), MPFR_RNDN);
        try {
            SignCertificate c = certified_sign(cand, w, eps0, coarse, cache);
            track.see(c);
            if (c.sign == Sign::Negative) {
                lo = std::move(cand);
                have_lo = true;
                break;
            }
        } catch (const Error& e) {
            if (!e.is_certification_failure()) throw;
        }
    }
    if (!have_lo)
        fail(ErrorKind::BracketFailure,
             "bisect_delta: no certified negative value on (1/2, 1/2 + 2^-4]");

    // Upper bracket: walk 1 - 2^-j toward 1 until the sign is Positive.
    Real hi(pb);
    bool have_hi = false;
    for (long j = 10; j <= 30; j += 4) {
        Real cand = Real::sub(Real(1L, pb), Real::pow2(-j, pb), MPFR_RNDN);
        try {
            SignCertificate c = certified_sign(cand, w, eps0, coarse, cache);
            track.see(c);
            if (c.sign == Sign::Positive) {
                hi = std::move(cand);
                have_hi = true;
                break;
            }
        } catch (const Error& e) {
            if (!e.is_certification_failure()) throw;
        }
    }
    if (!have_hi)
        fail(ErrorKind::BracketFailure,
             "bisect_delta: no certified positive value on [1 - 2^-10, 1)");

    long steps = 0;
    long overtime = 0;
    const long step_cap = 4 * digits + 220;
    while (true) {
        Real width = Real::sub(hi, lo, MPFR_RNDN);  // exact at pb
        if (width < tgt) {
            // Truncation agreement: every point of [lo, hi], the zero
            // included, then starts with the same `digits` decimal digits.
            if (to_fixed_trunc(lo, digits) == to_fixed_trunc(hi, digits)) break;
            // The zero sits next to a digit boundary; keep narrowing.
            if (++overtime > 24)
                fail(ErrorKind::Undetermined,
                     "bisect_delta: enclosure keeps straddling a digit boundary");
        }
        if (++steps > step_cap)
            fail(ErrorKind::Undetermined, "bisect_delta: step cap exceeded");

        // Schedule: resolve ~18 digits past the current width, floor 24,
        // cap a little past the requested digits.
        long e = static_cast<long>(mpfr_get_exp(width.raw()));
        long dnow = static_cast<long>(std::ceil(-static_cast<double>(e) * 0.30103)) + 18;
        dnow = std::clamp(dnow, 24L, digits + 22);
        PrecisionContext sctx = PrecisionContext::for_digits(dnow, 64);

        Real eps = Real::mul(width.round_to(64, MPFR_RNDD), Real("1e-6", 64), MPFR_RNDN);
        if (eps < eps_floor) eps = eps_floor;

        Real mid = Real::ldexp(Real::add(lo, hi, MPFR_RNDN), -1);  // exact at pb
        SignCertificate c = classify(mid, width, w, eps, sctx, cache);
        track.see(c);
        if (c.sign == Sign::Negative)
            lo = c.s;
        else
            hi = c.s;
    }

    std::string value = to_fixed_trunc(lo, digits);
    return RootEnclosure{std::move(lo), std::move(hi), digits, std::move(value),
                         steps, track.max_n, track.max_bits};
}

std::vector<TableRow> hausdorff_table(const std::vector<std::string>& w_specs, long digits,
                                      ZetaCache* cache) {
    PrecisionContext pctx =
        PrecisionContext::for_bits(bits_for_digits(digits) + 256, 64);
    std::vector<TableRow> rows;
    rows.reserve(w_specs.size());
    for (const std::string& spec : w_specs) {
        GroupParam w = GroupParam::from_string(spec, pctx);
        RootEnclosure enc = bisect_delta(w, digits, cache);
        rows.push_back(TableRow{spec, w.w, std::move(enc)});
    }
    return rows;
}

}  // namespace hz
