#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "heckezeta/error_bounds.hpp"
#include "heckezeta/transfer_matrix.hpp"

using namespace hz;

namespace {

const PrecisionContext kCtx = PrecisionContext::for_bits(256, 64);

Real from_str(const char* s) { return Real(s, 256, MPFR_RNDN); }

}  // namespace

TEST_CASE("budget components are positive and finite") {
    GroupParam w(Real(3L, 256));
    Complex s(from_str("0.75"), Real(256));
    ErrorBudget b = BoundContext(s, w, kCtx).budget(50);
    CHECK(b.p > 0L);
    CHECK(b.q > 0L);
    CHECK(b.c > 0L);
    CHECK(b.total > 0L);
    CHECK(b.n == 50);
    CHECK(!b.total.is_nan());
}

TEST_CASE("bound decreases geometrically in the truncation size") {
    GroupParam w(Real(3L, 256));
    Complex s(from_str("0.75"), Real(256));
    BoundContext bc(s, w, kCtx);
    Real prev = bc.total(10);
    for (long n = 20; n <= 200; n += 10) {
        Real cur = bc.total(n);
        CHECK(cur < prev);
        prev = cur;
    }
    // (2/3)^10 per decade of N, so 200 vs 10 should gain > 20 binary orders
    CHECK(bc.total(200) < Real::ldexp(bc.total(10), -100));
}

TEST_CASE("total dominates p alone") {
    // total = p e^(p+q+1) with p, q >= 0, so total >= p * e > 2 p
    for (const char* wstr : {"3", "8", "2.5"}) {
        GroupParam w = GroupParam::from_string(wstr, kCtx);
        Complex s(from_str("0.6"), from_str("1.25"));
        BoundContext bc(s, w, kCtx);
        for (long n : {5L, 40L}) {
            Real p = bc.p_n(n);
            CHECK(bc.total(n) > Real::ldexp(p, 1));
        }
    }
}

TEST_CASE("frozen reference magnitudes") {
    // independently recomputed by hand from the closed formulas:
    //   C(0.75) = zeta(1.5) = 2.6123753486...
    //   Q(0.75, w=3) = 2 * C * (3/2)^1.5 * 2 * 3^-1.5 * Li_{-3/2}(1/2)
    //                = 12.1663...
    GroupParam w3(Real(3L, 256));
    Complex s(from_str("0.75"), Real(256));
    BoundContext bc(s, w3, kCtx);
    CHECK(bc.c() >= from_str("2.612375348685488"));
    CHECK(bc.c() <= from_str("2.612375348685489"));
    CHECK(bc.q() > from_str("12.16"));
    CHECK(bc.q() < from_str("12.18"));

    // deep-truncation magnitudes used as go/no-go thresholds elsewhere
    Real t350 = total_bound(350, s, w3, kCtx);
    CHECK(t350 < from_str("1e-50"));
    CHECK(t350 > from_str("1e-56"));

    GroupParam w8(Real(8L, 256));
    Complex s55(from_str("0.55"), Real(256));
    Real t100 = total_bound(100, s55, w8, kCtx);
    CHECK(t100 < from_str("1e-50"));
    CHECK(t100 > from_str("1e-60"));
}

TEST_CASE("free helpers agree with the context") {
    GroupParam w(Real(5L, 256));
    Complex s(from_str("0.3"), from_str("2"));
    BoundContext bc(s, w, kCtx);
    CHECK(p_n_bound(17, s, w, kCtx) == bc.p_n(17));
    CHECK(q_bound(s, w, kCtx) == bc.q());
    CHECK(total_bound(17, s, w, kCtx) == bc.total(17));
}

TEST_CASE("choose_n returns the minimal sufficient size") {
    GroupParam w(Real(3L, 256));
    Complex s(from_str("0.75"), Real(256));
    BoundContext bc(s, w, kCtx);
    for (const char* eps_str : {"1e-10", "1e-30", "1e-60"}) {
        Real eps = from_str(eps_str);
        long n = bc.choose(eps, 5000);
        CHECK(bc.total(n) <= eps);
        CHECK(bc.total(n - 1) > eps);
    }
    CHECK(choose_n(from_str("1e-60"), s, w, kCtx) <= 400);
}

TEST_CASE("unreachable targets throw with diagnostics") {
    // w barely above 2: the geometric factor 2/w is nearly 1, so tiny caps
    // cannot certify much
    GroupParam w = GroupParam::from_string("2.005", kCtx);
    Complex s(from_str("0.75"), Real(256));
    try {
        choose_n(from_str("1e-40"), s, w, kCtx, 50);
        FAIL("expected BoundUnreachable");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BoundUnreachable);
        CHECK(e.is_certification_failure());
    }
}

TEST_CASE("larger imaginary part weakens the bound") {
    GroupParam w(Real(3L, 256));
    BoundContext low(Complex(from_str("0.75"), from_str("0.5")), w, kCtx);
    BoundContext high(Complex(from_str("0.75"), from_str("6")), w, kCtx);
    CHECK(high.total(60) > low.total(60));
}

TEST_CASE("bound certifies observed truncation differences") {
    // |F_N - F_2N| <= |Z - F_N| + |Z - F_2N| <= total(N) + total(2N)
    GroupParam w(Real(3L, 256));
    Complex s(from_str("0.65"), from_str("0.8"));
    BoundContext bc(s, w, kCtx);
    FNValue a = evaluate_fn(20, s, w, MatrixBasis::Symmetric, kCtx);
    FNValue b = evaluate_fn(40, s, w, MatrixBasis::Symmetric, kCtx);
    Real diff = (a.value - b.value).abs(MPFR_RNDU);
    Real cap = Real::add(bc.total(20), bc.total(40), MPFR_RNDU);
    CHECK(diff <= cap);
    // and the bound is not absurdly loose at this depth
    CHECK(diff > Real::ldexp(cap, -80));
}
