#pragma once

#include <stdexcept>
#include <string>

namespace hz {

// Failure classes surfaced by the library. The CLI maps these onto exit
// codes: domain-style problems (bad input, poles) exit 2, certification
// failures (a bound or sign that could not be established) exit 3.
enum class ErrorKind {
    PoleAt1,             // zeta argument hit s = 1 within precision
    PrecisionExhausted,  // series/remainder could not reach the error target
    DomainError,         // input outside the documented domain
    PoleProximity,       // zeta bound requested too close to the pole
    BoundUnreachable,    // choose_n hit N_max with the bound still too large
    Undetermined,        // sign certification failed after retries
    BracketFailure,      // no certified sign change bracketing the root
    PatternMismatch,     // U-matrix support/pairing structure violated
    IllConditioned,      // order-probe regression residual too large
    CacheError,          // zeta cache file unusable
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

    // true for errors that mean "the certification could not be completed"
    // as opposed to "the request itself was invalid".
    bool is_certification_failure() const {
        return kind_ == ErrorKind::BoundUnreachable ||
               kind_ == ErrorKind::Undetermined ||
               kind_ == ErrorKind::BracketFailure ||
               kind_ == ErrorKind::PrecisionExhausted;
    }

  private:
    ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::PoleAt1: return "PoleAt1";
        case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
        case ErrorKind::DomainError: return "DomainError";
        case ErrorKind::PoleProximity: return "PoleProximity";
        case ErrorKind::BoundUnreachable: return "BoundUnreachable";
        case ErrorKind::Undetermined: return "Undetermined";
        case ErrorKind::BracketFailure: return "BracketFailure";
        case ErrorKind::PatternMismatch: return "PatternMismatch";
        case ErrorKind::IllConditioned: return "IllConditioned";
        case ErrorKind::CacheError: return "CacheError";
    }
    return "Unknown";
}

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

}  // namespace hz
