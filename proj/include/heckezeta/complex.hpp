#pragma once

#include <mpfr.h>

#include <algorithm>
#include <string>

#include "heckezeta/real.hpp"

namespace hz {

// Complex numbers as a pair of Reals. Arithmetic is written so that exact
// zero imaginary parts stay exactly zero (mpfr keeps 0*x and 0+0 exact),
// which the real-axis paths rely on: F_N(s) for real s comes out with
// imaginary part identically zero, not merely small.
class Complex {
  public:
    explicit Complex(mpfr_prec_t prec) : re_(prec), im_(prec) {}
    Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
    explicit Complex(Real re) : re_(std::move(re)), im_(re_.prec()) {}
    Complex(long re, mpfr_prec_t prec) : re_(re, prec), im_(prec) {}

    const Real& re() const { return re_; }
    const Real& im() const { return im_; }
    Real& re() { return re_; }
    Real& im() { return im_; }

    mpfr_prec_t prec() const { return std::max(re_.prec(), im_.prec()); }
    bool is_real() const { return im_.is_zero(); }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    Complex round_to(mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN) const {
        return Complex(re_.round_to(prec, rnd), im_.round_to(prec, rnd));
    }

    Complex conj() const { return Complex(re_, Real::neg(im_)); }

    // |z|, rounded in the requested direction.
    Real abs(mpfr_rnd_t rnd = MPFR_RNDN) const {
        Real r(prec());
        mpfr_hypot(r.raw(), re_.raw(), im_.raw(), rnd);
        return r;
    }

    friend Complex operator+(const Complex& a, const Complex& b) {
        return Complex(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend Complex operator-(const Complex& a, const Complex& b) {
        return Complex(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend Complex operator-(const Complex& a) {
        return Complex(Real::neg(a.re_), Real::neg(a.im_));
    }
    friend Complex operator+(const Complex& a, long b) { return Complex(a.re_ + b, a.im_); }
    friend Complex operator-(const Complex& a, long b) { return Complex(a.re_ - b, a.im_); }

    friend Complex operator*(const Complex& a, const Complex& b) {
        mpfr_prec_t p = std::max(a.prec(), b.prec());
        Complex r(p);
        // fmms/fmma give each component a single rounding.
        mpfr_fmms(r.re_.raw(), a.re_.raw(), b.re_.raw(), a.im_.raw(), b.im_.raw(), MPFR_RNDN);
        mpfr_fmma(r.im_.raw(), a.re_.raw(), b.im_.raw(), a.im_.raw(), b.re_.raw(), MPFR_RNDN);
        return r;
    }
    friend Complex operator*(const Complex& a, const Real& b) {
        return Complex(a.re_ * b, a.im_ * b);
    }
    friend Complex operator*(const Real& a, const Complex& b) { return b * a; }
    friend Complex operator*(const Complex& a, long b) { return Complex(a.re_ * b, a.im_ * b); }

    friend Complex operator/(const Complex& a, const Complex& b) {
        mpfr_prec_t p = std::max(a.prec(), b.prec());
        Complex r(p);
        Real den(p);
        mpfr_fmma(den.raw(), b.re_.raw(), b.re_.raw(), b.im_.raw(), b.im_.raw(), MPFR_RNDN);
        Real nre(p), nim(p);
        mpfr_fmma(nre.raw(), a.re_.raw(), b.re_.raw(), a.im_.raw(), b.im_.raw(), MPFR_RNDN);
        mpfr_fmms(nim.raw(), a.im_.raw(), b.re_.raw(), a.re_.raw(), b.im_.raw(), MPFR_RNDN);
        mpfr_div(r.re_.raw(), nre.raw(), den.raw(), MPFR_RNDN);
        mpfr_div(r.im_.raw(), nim.raw(), den.raw(), MPFR_RNDN);
        return r;
    }
    friend Complex operator/(const Complex& a, const Real& b) {
        return Complex(a.re_ / b, a.im_ / b);
    }
    friend Complex operator/(const Complex& a, long b) { return Complex(a.re_ / b, a.im_ / b); }

    friend bool operator==(const Complex& a, const Complex& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

  private:
    Real re_;
    Real im_;
};

// e^z = e^x (cos y + i sin y); exact on the real axis (sin 0 = 0).
inline Complex cexp(const Complex& z) {
    mpfr_prec_t p = z.prec();
    Real ex = Real::exp(z.re(), MPFR_RNDN);
    Real c(p), s(p);
    mpfr_sin_cos(s.raw(), c.raw(), z.im().raw(), MPFR_RNDN);
    return Complex(ex * c, ex * s);
}

// base^z for real base > 0, as exp(z log base). Result at `prec` bits.
inline Complex pow_real_base(const Real& base, const Complex& z, mpfr_prec_t prec) {
    if (base.sign() <= 0)
        fail(ErrorKind::DomainError, "pow_real_base: base must be positive");
    Real lb(prec);
    mpfr_log(lb.raw(), base.raw(), MPFR_RNDN);
    Complex e(z.re().round_to(prec) * lb, z.im().round_to(prec) * lb);
    return cexp(e);
}

}  // namespace hz
