#include "heckezeta/report_format.hpp"

#include <gmp.h>
#include <mpfr.h>

#include <cstring>
#include <string>

#include "heckezeta/errors.hpp"

namespace hz {

namespace {

std::string fixed_impl(const Real& x, long digits, mpfr_rnd_t rnd) {
    if (digits < 0) fail(ErrorKind::DomainError, "to_fixed: negative digit count");
    if (x.is_nan()) return "nan";
    if (mpfr_inf_p(x.raw())) return mpfr_sgn(x.raw()) > 0 ? "inf" : "-inf";

    // x * 10^digits, exactly (the widened precision makes the product
    // representable), then one rounding to an integer.
    mpz_t scale;
    mpz_init(scale);
    mpz_ui_pow_ui(scale, 10, static_cast<unsigned long>(digits));
    mpfr_prec_t p = x.prec() + static_cast<mpfr_prec_t>(mpz_sizeinbase(scale, 2)) + 8;
    Real scaled(p);
    mpfr_mul_z(scaled.raw(), x.raw(), scale, MPFR_RNDN);
    mpz_clear(scale);

    mpz_t n;
    mpz_init(n);
    mpfr_get_z(n, scaled.raw(), rnd);
    bool neg = mpz_sgn(n) < 0;
    mpz_abs(n, n);
    char* raw = mpz_get_str(nullptr, 10, n);
    std::string ds(raw);
    void (*freefunc)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefunc);
    freefunc(raw, std::strlen(raw) + 1);
    mpz_clear(n);

    if (static_cast<long>(ds.size()) <= digits)
        ds.insert(0, static_cast<std::size_t>(digits) - ds.size() + 1, '0');
    std::string out;
    if (neg) out.push_back('-');
    out.append(ds, 0, ds.size() - static_cast<std::size_t>(digits));
    if (digits > 0) {
        out.push_back('.');
        out.append(ds, ds.size() - static_cast<std::size_t>(digits), std::string::npos);
    }
    return out;
}

}  // namespace

std::string to_fixed(const Real& x, long digits) { return fixed_impl(x, digits, MPFR_RNDN); }

std::string to_fixed_trunc(const Real& x, long digits) {
    return fixed_impl(x, digits, MPFR_RNDD);
}

std::string to_sci(const Real& x, long sig) {
    if (sig < 1) fail(ErrorKind::DomainError, "to_sci: need at least one digit");
    if (x.is_nan()) return "nan";
    if (mpfr_inf_p(x.raw())) return mpfr_sgn(x.raw()) > 0 ? "inf" : "-inf";
    if (x.is_zero()) {
        std::string out = "0";
        if (sig > 1) out += "." + std::string(static_cast<std::size_t>(sig - 1), '0');
        return out + "e+00";
    }

    mpfr_exp_t e;
    char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<std::size_t>(sig), x.raw(), MPFR_RNDN);
    std::string ds(raw);
    mpfr_free_str(raw);
    bool neg = false;
    if (!ds.empty() && ds[0] == '-') {
        neg = true;
        ds.erase(0, 1);
    }
    // mpfr_get_str returns digits d1 d2 ... with value 0.d1 d2... * 10^e
    long exp10 = static_cast<long>(e) - 1;
    std::string out;
    if (neg) out.push_back('-');
    out.push_back(ds[0]);
    if (ds.size() > 1) {
        out.push_back('.');
        out.append(ds, 1, std::string::npos);
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "e%+03ld", exp10);
    out += buf;
    return out;
}

std::string complex_to_sci(const Complex& z, long sig) {
    if (z.is_real()) return to_sci(z.re(), sig);
    std::string im = to_sci(Real::abs(z.im()), sig);
    return to_sci(z.re(), sig) + (z.im().sign() < 0 ? " - " : " + ") + im + "i";
}

}  // namespace hz
