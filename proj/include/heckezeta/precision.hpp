#pragma once

#include <mpfr.h>

#include <cmath>

#include "heckezeta/errors.hpp"

namespace hz {

// Bits needed to represent `digits` decimal digits, rounded up. The constant
// is log2(10) rounded up in the last place so the ceiling never undershoots.
inline mpfr_prec_t bits_for_digits(long digits) {
    return static_cast<mpfr_prec_t>(std::ceil(static_cast<double>(digits) * 3.321928094887363));
}

// Explicit precision bundle threaded through every computation. No global
// precision state anywhere: every mpfr allocation takes its width from one
// of these.
//
// working_bits is the mantissa width of computed values; guard_bits is the
// slack reserved above the decimal target, so a value with working_bits
// mantissa is trusted to absolute accuracy 2^(guard_bits - working_bits).
struct PrecisionContext {
    mpfr_prec_t working_bits;
    mpfr_prec_t guard_bits;
    long target_digits;

    PrecisionContext(mpfr_prec_t wb, mpfr_prec_t gb, long digits)
        : working_bits(wb), guard_bits(gb), target_digits(digits) {
        if (digits < 1)
            fail(ErrorKind::DomainError, "PrecisionContext: target_digits must be >= 1");
        if (gb < 32)
            fail(ErrorKind::DomainError, "PrecisionContext: guard_bits must be >= 32");
        if (wb < bits_for_digits(digits) + gb)
            fail(ErrorKind::DomainError,
                 "PrecisionContext: working_bits too small for target_digits + guard_bits");
    }

    // Smallest valid context for a decimal target.
    static PrecisionContext for_digits(long digits, mpfr_prec_t guard = 64) {
        return PrecisionContext(bits_for_digits(digits) + guard, guard, digits);
    }

    // Context with a given mantissa width; decimal target derived from what
    // the width can actually support.
    static PrecisionContext for_bits(mpfr_prec_t bits, mpfr_prec_t guard = 64) {
        long digits = static_cast<long>(
            std::floor(static_cast<double>(bits - guard) / 3.321928094887363));
        if (digits < 1) digits = 1;
        return PrecisionContext(bits, guard, digits);
    }

    // Absolute error allotment 2^(guard_bits - working_bits) as a double
    // exponent; values needing it as a Real build it with ldexp.
    long error_exponent() const { return static_cast<long>(guard_bits - working_bits); }
};

}  // namespace hz
