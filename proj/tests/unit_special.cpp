#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <mpfr.h>

#include "heckezeta/bernoulli.hpp"
#include "heckezeta/special.hpp"

using namespace hz;

namespace {

const PrecisionContext kCtx = PrecisionContext::for_bits(256, 64);

Real abs_diff(const Real& a, const Real& b) {
    return Real::abs(Real::sub(a, b, MPFR_RNDN));
}

// tolerance 2^(guard - working + slack)
Real tol(long slack = 0) {
    return Real::pow2(kCtx.error_exponent() + slack, kCtx.working_bits);
}

}  // namespace

TEST_CASE("bernoulli numbers match the classical table") {
    // B_0..B_12: 1, -1/2, 1/6, 0, -1/30, 0, 1/42, 0, -1/30, 0, 5/66, 0, -691/2730
    struct Row {
        unsigned long n;
        long num;
        long den;
    };
    const Row rows[] = {{0, 1, 1},   {1, -1, 2}, {2, 1, 6},   {3, 0, 1},
                        {4, -1, 30}, {5, 0, 1},  {6, 1, 42},  {8, -1, 30},
                        {10, 5, 66}, {12, -691, 2730}};
    for (const Row& r : rows) {
        Rational b = bernoulli(r.n);
        Rational want;
        mpq_set_si(want.raw(), r.num, r.den);
        mpq_canonicalize(want.raw());
        CHECK(mpq_cmp(b.raw(), want.raw()) == 0);
    }
}

TEST_CASE("zeta at 0 and negative integers is exact") {
    // zeta(0) = -1/2, bit for bit
    Complex z0 = zeta_complex(Complex(0, 256), kCtx);
    CHECK(z0.im().is_zero());
    Real half = Real::ldexp(Real(1L, 256), -1);
    CHECK(Real::abs(z0.re()) == half);
    CHECK(z0.re().sign() < 0);

    // zeta(-2k) = 0 exactly
    for (long k = 1; k <= 6; ++k) {
        Complex z = zeta_complex(Complex(-2 * k, 256), kCtx);
        CHECK(z.re().is_zero());
        CHECK(z.im().is_zero());
    }

    // zeta(-1) = -1/12 and zeta(-3) = 1/120: same exact rational, same
    // rounding, so the comparison is bitwise
    Complex zm1 = zeta_complex(Complex(-1, 256), kCtx);
    CHECK(zm1.re() == Real(-1L, 256) / 12L);
    Complex zm3 = zeta_complex(Complex(-3, 256), kCtx);
    CHECK(zm3.re() == Real(1L, 256) / 120L);
}

TEST_CASE("zeta on the real axis agrees with the mpfr implementation") {
    // independent route: mpfr_zeta uses its own algorithm
    const char* points[] = {"1.5", "2.0", "2.5", "3.7", "0.25", "-0.5", "-2.5", "4.25", "9.0"};
    for (const char* p : points) {
        Real x(p, 256);
        Complex mine = zeta_complex(Complex(x, Real(256)), kCtx);
        CHECK(mine.im().is_zero());
        Real oracle(256);
        mpfr_zeta(oracle.raw(), x.raw(), MPFR_RNDN);
        CHECK(abs_diff(mine.re(), oracle) <= tol(2));
    }
}

TEST_CASE("zeta(2) equals pi^2/6 to working accuracy") {
    Complex z2 = zeta_complex(Complex(2, 256), kCtx);
    Real pi = Real::pi(256);
    CHECK(abs_diff(z2.re(), pi * pi / 6L) <= tol(2));
}

TEST_CASE("complex zeta: conjugate symmetry and cross-precision consistency") {
    Complex z(Real("1.7", 256), Real("3.25", 256));
    Complex v = zeta_complex(z, kCtx);
    Complex vc = zeta_complex(z.conj(), kCtx);
    CHECK(abs_diff(v.re(), vc.re()) <= tol(2));
    CHECK(abs_diff(v.im(), Real::neg(vc.im())) <= tol(2));

    // recompute at a very different working precision: different summation
    // cutoff M and different correction depth, same value
    PrecisionContext hi = PrecisionContext::for_bits(512, 64);
    Complex vhi = zeta_complex(Complex(Real("1.7", 512), Real("3.25", 512)), hi);
    CHECK(abs_diff(v.re(), vhi.re().round_to(256)) <= tol(2));
    CHECK(abs_diff(v.im(), vhi.im().round_to(256)) <= tol(2));
}

TEST_CASE("zeta vanishes at the first nontrivial zero") {
    Real re("0.5", 256);
    Real im("14.134725141734693790457251983562470270784257115699", 256);
    Complex v = zeta_complex(Complex(re, im), kCtx);
    CHECK(v.abs(MPFR_RNDU) < Real("1e-10", 64));
}

TEST_CASE("zeta pole handling") {
    CHECK_THROWS_WITH_AS(zeta_complex(Complex(1, 256), kCtx), doctest::Contains("pole"),
                         Error);
    try {
        zeta_complex(Complex(1, 256), kCtx);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::PoleAt1);
    }
    // within 2^-working_bits of 1 counts as on the pole
    Real close = Real::add(Real(1L, 400), Real::pow2(-300, 400), MPFR_RNDN);
    CHECK_THROWS_AS(zeta_complex(Complex(close, Real(400)), kCtx), Error);
}

TEST_CASE("zeta values near the pole stay accurate") {
    // 2^-40 away from the pole: huge value, still matches mpfr_zeta
    Real x = Real::add(Real(1L, 256), Real::pow2(-40, 256), MPFR_RNDN);
    Complex mine = zeta_complex(Complex(x, Real(256)), kCtx);
    Real oracle(256);
    mpfr_zeta(oracle.raw(), x.raw(), MPFR_RNDN);
    // absolute error scales with the value here; compare relatively
    Real rel = Real::div(abs_diff(mine.re(), oracle), Real::abs(oracle), MPFR_RNDU);
    CHECK(rel <= tol(8));
}

TEST_CASE("zeta_range: batch values are independent of batch length") {
    Complex s(Real("0.375", 256), Real("0.5", 256));
    std::vector<Complex> a = zeta_range(s, 2, 12, kCtx);
    std::vector<Complex> b = zeta_range(s, 2, 4, kCtx);
    REQUIRE(a.size() == 12);
    REQUIRE(b.size() == 4);
    for (std::size_t t = 0; t < 4; ++t) {
        CHECK(a[t].re() == b[t].re());  // bitwise
        CHECK(a[t].im() == b[t].im());
    }
    // and consistent with the single-value route
    for (std::size_t t = 0; t < 4; ++t) {
        Complex zt(Real::add(Real::ldexp(s.re(), 1), Real(static_cast<long>(2 * t), 64),
                             MPFR_RNDN),
                   Real::ldexp(s.im(), 1));
        Complex single = zeta_complex(zt, kCtx);
        CHECK(abs_diff(a[t].re(), single.re()) <= tol(2));
        CHECK(abs_diff(a[t].im(), single.im()) <= tol(2));
    }
}

TEST_CASE("zeta_range rejects unsupported stepping") {
    Complex s(Real("0.3", 256), Real(256));
    CHECK_THROWS_AS(zeta_range(s, 1, 3, kCtx), Error);
    CHECK_THROWS_AS(zeta_range(s, 3, 2, kCtx), Error);
    CHECK_NOTHROW(zeta_range(s, 1, 1, kCtx));
    CHECK_NOTHROW(zeta_range(s, 2, 2, kCtx));
}

TEST_CASE("generalized binomials") {
    // integer arguments give the exact integer triangle
    const long c6[] = {1, 6, 15, 20, 15, 6, 1};
    for (unsigned long k = 0; k <= 6; ++k) {
        Complex b = binom_complex(Complex(6, 256), k, kCtx);
        CHECK(b.im().is_zero());
        CHECK(mpfr_cmp_si(b.re().raw(), c6[k]) == 0);
    }
    // nonnegative integer z below k: exactly zero
    CHECK(binom_complex(Complex(3, 256), 5, kCtx).is_zero());
    CHECK(binom_complex(Complex(0, 256), 1, kCtx).is_zero());

    // binom(-1, k) = (-1)^k exactly
    for (unsigned long k = 0; k <= 9; ++k) {
        Complex b = binom_complex(Complex(-1, 256), k, kCtx);
        CHECK(mpfr_cmp_si(b.re().raw(), (k % 2 == 0) ? 1 : -1) == 0);
    }

    // recurrence consistency at a complex argument
    Complex z(Real("0.7", 256), Real("1.3", 256));
    for (unsigned long k = 0; k < 8; ++k) {
        Complex lhs = binom_complex(z, k + 1, kCtx) * static_cast<long>(k + 1);
        Complex rhs = binom_complex(z, k, kCtx) * (z - static_cast<long>(k));
        CHECK(abs_diff(lhs.re(), rhs.re()) <= tol(8));
        CHECK(abs_diff(lhs.im(), rhs.im()) <= tol(8));
    }

    // half-integer oracle: binom(1/2, 2) = -1/8 exactly representable
    Complex bh = binom_complex(Complex(Real("0.5", 256), Real(256)), 2, kCtx);
    CHECK(abs_diff(bh.re(), Real(-1L, 256) / 8L) <= tol(2));
}

TEST_CASE("polylog upper bounds") {
    // dominance over partial sums, tightness to the guard level
    for (PolylogOrder ord : {PolylogOrder::MinusHalf, PolylogOrder::MinusThreeHalves}) {
        for (const char* xs : {"0.25", "0.5", "0.6666666666666666666666666666", "0.9"}) {
            Real x(xs, 256);
            Real up = polylog_neg_upper(ord, x, kCtx);

            // brute partial sum, all RNDN, until terms go negligible
            Real sum(0L, 320);
            Real xp(1L, 320);
            double half_exp = ord == PolylogOrder::MinusHalf ? 0.5 : 1.5;
            for (long n = 1; n <= 4000; ++n) {
                xp = Real::mul(xp, x.round_to(320), MPFR_RNDN);
                Real t = Real::pow(Real(n, 320), Real(half_exp, 320), MPFR_RNDN);
                sum = Real::add(sum, Real::mul(t, xp, MPFR_RNDN), MPFR_RNDN);
            }
            CHECK(up >= sum.round_to(256, MPFR_RNDD));
            // tight: within 2^(gb-wb) plus the brute sum's own tail
            Real slack = Real::sub(up, sum.round_to(256), MPFR_RNDU);
            Real budget = Real::add(tol(4), Real("1e-50", 64), MPFR_RNDU);
            if (std::string(xs) != "0.9")  // x=0.9 tail at n=4000 ~ 1e-180, fine too
                CHECK(slack <= budget);
        }
    }
    // domain errors
    CHECK_THROWS_AS(polylog_neg_upper(PolylogOrder::MinusHalf, Real(1L, 64), kCtx), Error);
    CHECK_THROWS_AS(polylog_neg_upper(PolylogOrder::MinusHalf, Real(-1L, 64) / 2L, kCtx),
                    Error);
}

TEST_CASE("even-shift zeta sup bound") {
    // s = 0.75: the n = 0 term zeta(1.5) dominates the tail zeta(3.5)
    CBound c = c_upper(Complex(Real("0.75", 256), Real(256)), kCtx);
    Real z15(256);
    Real x15("1.5", 256);
    mpfr_zeta(z15.raw(), x15.raw(), MPFR_RNDN);
    CHECK(c.value >= z15);
    CHECK(Real::sub(c.value, z15, MPFR_RNDU) <= Real("1e-15", 64));
    CHECK(c.scan_cutoff == 2);

    // s = 1.2: no scan needed, bound is the real-axis tail zeta(2.4)
    CBound c2 = c_upper(Complex(Real("1.2", 256), Real(256)), kCtx);
    Real z24(256);
    Real x24("2.4", 256);
    mpfr_zeta(z24.raw(), x24.raw(), MPFR_RNDN);
    CHECK(c2.value >= z24);
    CHECK(c2.scan_cutoff == 0);

    // dominance over a sweep of even shifts at a complex point
    Complex s(Real("0.4", 256), Real("1.1", 256));
    CBound cc = c_upper(s, kCtx);
    std::vector<Complex> vals = zeta_range(s, 2, 30, kCtx);
    for (const Complex& v : vals)
        CHECK(cc.value >= Real::sub(v.abs(MPFR_RNDD), tol(2), MPFR_RNDD));

    // too close to the pole for the guard: refuse
    Real near_half = Real::add(Real(1L, 256) / 2L, Real::pow2(-100, 256), MPFR_RNDN);
    CHECK_THROWS_AS(c_upper(Complex(near_half, Real(256)), kCtx), Error);
}
