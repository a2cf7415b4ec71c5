#include "heckezeta/bernoulli.hpp"

#include <mutex>
#include <vector>

namespace hz {

namespace {

std::mutex cache_mutex;
std::vector<Rational> cache;  // cache[n] = B_n

// Extend the cache through index n using
//   sum_{k=0}^{m} C(m+1, k) B_k = 0  (m >= 1),
// i.e. B_m = -1/(m+1) * sum_{k=0}^{m-1} C(m+1, k) B_k.
void extend_locked(unsigned long n) {
    if (cache.empty()) {
        Rational one;
        mpq_set_ui(one.raw(), 1, 1);
        cache.push_back(std::move(one));
    }
    mpz_t binom;
    mpz_init(binom);
    mpq_t term, acc;
    mpq_init(term);
    mpq_init(acc);
    for (unsigned long m = cache.size(); m <= n; ++m) {
        mpq_set_ui(acc, 0, 1);
        for (unsigned long k = 0; k < m; ++k) {
            if (k > 1 && (k & 1)) continue;  // odd B_k vanish past B_1
            mpz_bin_uiui(binom, m + 1, k);
            mpq_set_z(term, binom);
            mpq_mul(term, term, cache[k].raw());
            mpq_add(acc, acc, term);
        }
        Rational b;
        mpq_set_si(b.raw(), -1, 1);
        mpq_div(b.raw(), b.raw(), (mpq_set_ui(term, m + 1, 1), term));
        mpq_mul(b.raw(), b.raw(), acc);
        cache.push_back(std::move(b));
    }
    mpq_clear(acc);
    mpq_clear(term);
    mpz_clear(binom);
}

}  // namespace

Rational bernoulli(unsigned long n) {
    std::lock_guard<std::mutex> lock(cache_mutex);
    if (n >= cache.size()) extend_locked(n);
    return cache[n];
}

Rational bernoulli_over_factorial(unsigned long two_j) {
    Rational b = bernoulli(two_j);
    mpz_t fact;
    mpz_init(fact);
    mpz_fac_ui(fact, two_j);
    Rational f;
    mpq_set_z(f.raw(), fact);
    mpz_clear(fact);
    Rational r;
    mpq_div(r.raw(), b.raw(), f.raw());
    return r;
}

}  // namespace hz
