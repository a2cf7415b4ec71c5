#pragma once

#include <gmp.h>
#include <mpfr.h>

#include "heckezeta/real.hpp"

namespace hz {

// Minimal RAII wrapper over mpq_t so rationals can live in containers.
class Rational {
  public:
    Rational() { mpq_init(q_); }
    Rational(const Rational& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        if (this != &o) mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rational() { mpq_clear(q_); }

    mpq_ptr raw() { return q_; }
    mpq_srcptr raw() const { return q_; }

    Real to_real(mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN) const {
        Real r(prec);
        mpfr_set_q(r.raw(), q_, rnd);
        return r;
    }

  private:
    mpq_t q_;
};

// Bernoulli number B_n as an exact rational (B_1 = -1/2 convention).
// Values are computed once via the defining recurrence and cached;
// thread-safe, and exact, so there is no precision state involved.
Rational bernoulli(unsigned long n);

// B_{2j} / (2j)! as an exact rational (the Euler-Maclaurin coefficient).
Rational bernoulli_over_factorial(unsigned long two_j);

}  // namespace hz
