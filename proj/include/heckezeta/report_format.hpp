#pragma once

#include <string>

#include "heckezeta/complex.hpp"

namespace hz {

// Schema tag stamped into machine-readable CLI output.
inline constexpr const char* kReportSchema = "heckezeta/1";

// Fixed-point decimal with exactly `digits` fractional digits, rounded to
// nearest (ties to even) by exact integer scaling; no precision is lost to
// intermediate binary/decimal hops. "0.75194...", "-0.083333...".
std::string to_fixed(const Real& x, long digits);

// Same, but rounded toward minus infinity. For positive x this is the
// truncated decimal expansion: the digits printed are literally the leading
// digits of x. Monotone in x, which is what interval endpoints need.
std::string to_fixed_trunc(const Real& x, long digits);

// Scientific notation with `sig` significant digits: "2.486589e-53".
std::string to_sci(const Real& x, long sig);

// "re" for exactly-real values, otherwise "re + im i" / "re - im i".
std::string complex_to_sci(const Complex& z, long sig);

}  // namespace hz
