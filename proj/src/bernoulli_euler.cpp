#include "trigexact/bernoulli_euler.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace trigexact {

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

namespace {

// Grow-only caches. deque keeps references stable across appends, so a
// returned const& survives later insertions by other threads.
struct PolyCache {
    std::shared_mutex mu;
    std::deque<Poly> entries;
};

PolyCache& bernoulli_cache() {
    static PolyCache c;
    return c;
}

PolyCache& euler_cache() {
    static PolyCache c;
    return c;
}

Poly next_bernoulli(const std::deque<Poly>& done, unsigned n) {
    // B_n = x^n - (1/(n+1)) sum_{k<n} C(n+1,k) B_k
    Poly acc;
    for (unsigned k = 0; k < n; ++k)
        acc = acc + done[k].scaled(Rational(binomial(n + 1, k)));
    return Poly::monomial(static_cast<int>(n)) - acc.scaled(Rational(1L, static_cast<long>(n) + 1));
}

Poly next_euler(const std::deque<Poly>& done, unsigned n) {
    // E_n = x^n - (1/2) sum_{k<n} C(n,k) E_k
    Poly acc;
    for (unsigned k = 0; k < n; ++k)
        acc = acc + done[k].scaled(Rational(binomial(n, k)));
    return Poly::monomial(static_cast<int>(n)) - acc.scaled(Rational(1L, 2L));
}

template <typename Next>
const Poly& cached_poly(PolyCache& cache, unsigned n, Next next) {
    {
        std::shared_lock lock(cache.mu);
        if (n < cache.entries.size()) return cache.entries[n];
    }
    std::unique_lock lock(cache.mu);
    while (cache.entries.size() <= n)
        cache.entries.push_back(next(cache.entries, static_cast<unsigned>(cache.entries.size())));
    return cache.entries[n];
}

} // namespace

const Poly& bernoulli_poly(unsigned n) {
    return cached_poly(bernoulli_cache(), n, next_bernoulli);
}

const Poly& euler_poly(unsigned n) {
    return cached_poly(euler_cache(), n, next_euler);
}

Rational zeta_neg(unsigned n, const Rational& a) {
    if (n == 0) throw std::invalid_argument("zeta_neg: n must be >= 1");
    if (a.sign() <= 0) throw std::domain_error("zeta_neg: a must be positive");
    return -bernoulli_poly(n).eval(a) / Rational(static_cast<long>(n));
}

Rational zeta_star_neg(unsigned n, const Rational& a) {
    if (a.sign() <= 0) throw std::domain_error("zeta_star_neg: a must be positive");
    return euler_poly(n).eval(a) / Rational(2);
}

} // namespace trigexact
