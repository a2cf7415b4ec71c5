#pragma once

#include <string>
#include <vector>

#include "heckezeta/error_bounds.hpp"
#include "heckezeta/transfer_matrix.hpp"

namespace hz {

class ZetaCache;

enum class Sign { Negative, Positive };

// Certificate that Z(s) has a definite sign at a real point: F_N(s) was
// computed and |F_N(s)| strictly exceeds the truncation bound plus a
// floating-point allowance of 2^(guard_bits - working_bits) max(1, |F_N|),
// so Z(s) shares the sign of F_N(s).
struct SignCertificate {
    Sign sign;
    Real s;        // the exact point certified
    Real f_value;  // F_N(s)
    Real bound;    // what |f_value| had to beat
    long n;
    mpfr_prec_t bits;
};

// Establishes the sign of Z(s), tightening the truncation target from
// eps_hint by factors of 1e-5 while the value stays inside the bound.
// Throws Undetermined if six tightenings are not enough (s is then
// indistinguishable from a zero at this working precision), or
// BoundUnreachable if no admissible truncation size reaches the target.
SignCertificate certified_sign(const Real& s, const GroupParam& w, const Real& eps_hint,
                               const PrecisionContext& ctx, ZetaCache* cache = nullptr);

// Enclosure of the single zero of Z in (1/2, 1): exact dyadic endpoints with
// certified opposite signs, narrowed until both endpoints truncate to the
// same `digits` fractional digits. Truncation is monotone, so the zero's
// decimal expansion provably begins with `value`.
struct RootEnclosure {
    Real lo;
    Real hi;
    long digits;
    std::string value;  // leading decimal digits shared by all of [lo, hi]
    long steps;         // bisection steps taken
    long max_n;         // largest truncation size used along the way
    mpfr_prec_t max_bits;
};

// Certified bisection. Brackets adaptively (lo = 1/2 + 2^-k moving toward
// 1/2, hi = 1 - 2^-j moving toward 1 until the signs are Negative/Positive),
// then bisects on exact dyadic midpoints. Working precision and truncation
// follow the current interval width, so early steps are cheap and only the
// last few run at full depth. Throws BracketFailure if no sign change is
// found, Undetermined if a midpoint cannot be classified even after
// perturbation and a precision bump.
RootEnclosure bisect_delta(const GroupParam& w, long digits, ZetaCache* cache = nullptr);

struct TableRow {
    std::string label;  // the parameter as requested ("3", "2pi", ...)
    Real w;
    RootEnclosure enc;
};

// bisect_delta over a list of parameter strings, parsed at a precision that
// keeps the parameter exact relative to everything downstream.
std::vector<TableRow> hausdorff_table(const std::vector<std::string>& w_specs, long digits,
                                      ZetaCache* cache = nullptr);

}  // namespace hz
