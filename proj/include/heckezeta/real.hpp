#pragma once

#include <mpfr.h>

#include <algorithm>
#include <string>
#include <utility>

#include "heckezeta/errors.hpp"

namespace hz {

// RAII wrapper over mpfr_t. Plain operators round to nearest and give the
// result the wider operand's precision; the static directed variants take an
// explicit rounding mode and are what the bound-side code uses (MPFR rounds
// the true result toward +inf under MPFR_RNDU regardless of sign, which is
// exactly the "outward for upper bounds" semantics needed).
class Real {
  public:
    explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }

    Real(long x, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_si(v_, x, MPFR_RNDN);
    }

    Real(unsigned long x, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_ui(v_, x, MPFR_RNDN);
    }

    Real(double x, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_d(v_, x, MPFR_RNDN);
    }

    Real(const std::string& dec, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN) {
        mpfr_init2(v_, prec);
        if (mpfr_set_str(v_, dec.c_str(), 10, rnd) != 0)
            fail(ErrorKind::DomainError, "Real: unparseable decimal literal '" + dec + "'");
    }

    Real(const Real& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }

    Real(Real&& o) noexcept {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, o.v_);
    }

    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }

    Real& operator=(Real&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }

    ~Real() { mpfr_clear(v_); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    void swap(Real& o) noexcept { mpfr_swap(v_, o.v_); }

    // Rounded copy at a different precision.
    Real round_to(mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN) const {
        Real r(prec);
        mpfr_set(r.v_, v_, rnd);
        return r;
    }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_integer() const { return mpfr_integer_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

    static Real pi(mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN) {
        Real r(prec);
        mpfr_const_pi(r.v_, rnd);
        return r;
    }

    // 2^e, exact.
    static Real pow2(long e, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_ui_2exp(r.v_, 1, static_cast<mpfr_exp_t>(e), MPFR_RNDN);
        return r;
    }

    // ---- directed arithmetic -------------------------------------------

    static Real add(const Real& a, const Real& b, mpfr_rnd_t rnd) {
        Real r(std::max(a.prec(), b.prec()));
        mpfr_add(r.v_, a.v_, b.v_, rnd);
        return r;
    }
    static Real sub(const Real& a, const Real& b, mpfr_rnd_t rnd) {
        Real r(std::max(a.prec(), b.prec()));
        mpfr_sub(r.v_, a.v_, b.v_, rnd);
        return r;
    }
    static Real mul(const Real& a, const Real& b, mpfr_rnd_t rnd) {
        Real r(std::max(a.prec(), b.prec()));
        mpfr_mul(r.v_, a.v_, b.v_, rnd);
        return r;
    }
    static Real div(const Real& a, const Real& b, mpfr_rnd_t rnd) {
        Real r(std::max(a.prec(), b.prec()));
        mpfr_div(r.v_, a.v_, b.v_, rnd);
        return r;
    }
    static Real sqrt(const Real& a, mpfr_rnd_t rnd) {
        Real r(a.prec());
        mpfr_sqrt(r.v_, a.v_, rnd);
        return r;
    }
    static Real exp(const Real& a, mpfr_rnd_t rnd) {
        Real r(a.prec());
        mpfr_exp(r.v_, a.v_, rnd);
        return r;
    }
    static Real log(const Real& a, mpfr_rnd_t rnd) {
        Real r(a.prec());
        mpfr_log(r.v_, a.v_, rnd);
        return r;
    }
    static Real pow(const Real& a, const Real& b, mpfr_rnd_t rnd) {
        Real r(std::max(a.prec(), b.prec()));
        mpfr_pow(r.v_, a.v_, b.v_, rnd);
        return r;
    }
    static Real pow_ui(const Real& a, unsigned long e, mpfr_rnd_t rnd) {
        Real r(a.prec());
        mpfr_pow_ui(r.v_, a.v_, e, rnd);
        return r;
    }
    static Real abs(const Real& a) {
        Real r(a.prec());
        mpfr_abs(r.v_, a.v_, MPFR_RNDN);  // exact
        return r;
    }
    static Real neg(const Real& a) {
        Real r(a.prec());
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);  // exact
        return r;
    }
    static Real ldexp(const Real& a, long e) {
        Real r(a.prec());
        mpfr_mul_2si(r.v_, a.v_, e, MPFR_RNDN);  // exact
        return r;
    }
    static Real max(const Real& a, const Real& b) {
        return mpfr_cmp(a.v_, b.v_) >= 0 ? a : b;
    }
    static Real min(const Real& a, const Real& b) {
        return mpfr_cmp(a.v_, b.v_) <= 0 ? a : b;
    }

    // Smallest integer >= a, as a machine long (domain errors past long).
    static long ceil_long(const Real& a) {
        Real r(a.prec());
        mpfr_ceil(r.v_, a.v_);
        if (!mpfr_fits_slong_p(r.v_, MPFR_RNDN))
            fail(ErrorKind::DomainError, "ceil_long: value out of long range");
        return mpfr_get_si(r.v_, MPFR_RNDN);
    }

    // ---- round-to-nearest operators ------------------------------------

    friend Real operator+(const Real& a, const Real& b) { return add(a, b, MPFR_RNDN); }
    friend Real operator-(const Real& a, const Real& b) { return sub(a, b, MPFR_RNDN); }
    friend Real operator*(const Real& a, const Real& b) { return mul(a, b, MPFR_RNDN); }
    friend Real operator/(const Real& a, const Real& b) { return div(a, b, MPFR_RNDN); }
    friend Real operator-(const Real& a) { return neg(a); }

    friend Real operator+(const Real& a, long b) {
        Real r(a.prec());
        mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend Real operator+(long a, const Real& b) { return b + a; }
    friend Real operator-(const Real& a, long b) {
        Real r(a.prec());
        mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend Real operator-(long a, const Real& b) {
        Real r(b.prec());
        mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator*(const Real& a, long b) {
        Real r(a.prec());
        mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend Real operator*(long a, const Real& b) { return b * a; }
    friend Real operator/(const Real& a, long b) {
        Real r(a.prec());
        mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend Real operator/(long a, const Real& b) {
        Real r(b.prec());
        mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
        return r;
    }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_); }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_); }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_); }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_); }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_); }
    friend bool operator!=(const Real& a, const Real& b) { return !mpfr_equal_p(a.v_, b.v_); }

    friend bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
    friend bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
    friend bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) <= 0; }
    friend bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) >= 0; }
    friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }
    friend bool operator!=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) != 0; }

  private:
    mpfr_t v_;
};

inline void swap(Real& a, Real& b) noexcept { a.swap(b); }

}  // namespace hz
