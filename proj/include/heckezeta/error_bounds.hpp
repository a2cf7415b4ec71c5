#pragma once

#include "heckezeta/complex.hpp"
#include "heckezeta/precision.hpp"
#include "heckezeta/special.hpp"
#include "heckezeta/transfer_matrix.hpp"

namespace hz {

// Certified truncation error of the finite determinant:
//
//   |Z(s) - F_N(s)| <= P_N(s) * exp(P_N(s) + Q(s) + 1)
//
// with
//
//   P_N(s) = (2/w)^N sqrt(N+1) w C(s) 2^ceil(2|s|) w^(-2 Re s)
//            * Li_{-1/2}(2/w) * (1 + sqrt(2) Li_{-1/2}(2/w)),
//   Q(s)   = 2 C(s) (w/(w-1))^(2|s|) (w-1) w^(-2 Re s) Li_{-3/2}(1/(w-1)),
//
// every operation rounded toward +infinity, so the returned numbers are true
// upper bounds. C(s) is the even-shift zeta sup bound from c_upper.
struct ErrorBudget {
    Real p;      // P_N(s)
    Real q;      // Q(s)
    Real c;      // C(s)
    Real total;  // P_N e^(P_N + Q + 1)
    long n;
};

// Precomputes everything independent of N once, so scanning many N (as
// choose_n does) costs one pow_ui + sqrt + exp per probe.
class BoundContext {
  public:
    BoundContext(const Complex& s, const GroupParam& w, const PrecisionContext& ctx);

    Real p_n(long n) const;
    const Real& q() const { return q_; }
    const Real& c() const { return c_; }
    Real total(long n) const;
    ErrorBudget budget(long n) const;

    // Smallest truncation size with total(n) <= eps; see choose_n below.
    long choose(const Real& eps, long n_max) const;

  private:
    mpfr_prec_t p_;
    Real c_;
    Real q_;
    Real pref_;        // N-independent part of P_N
    Real two_over_w_;  // rounded up
};

Real p_n_bound(long n, const Complex& s, const GroupParam& w, const PrecisionContext& ctx);
Real q_bound(const Complex& s, const GroupParam& w, const PrecisionContext& ctx);
Real total_bound(long n, const Complex& s, const GroupParam& w, const PrecisionContext& ctx);

// Smallest truncation size whose certified bound is <= eps, found by
// doubling then bisection (the bound is eventually monotone in N; for w very
// close to 2 the search may return a slightly conservative N). Throws
// BoundUnreachable, reporting the bound achieved at n_max, if even n_max
// cannot reach eps.
long choose_n(const Real& eps, const Complex& s, const GroupParam& w,
              const PrecisionContext& ctx, long n_max = 5000);

}  // namespace hz
