#include "trigexact/oracle.hpp"

#include <cmath>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <sstream>

#include "trigexact/errors.hpp"

namespace trigexact {

namespace {

// One differentiation step. Writing a term as A * u^a * v^b with u the
// multiplicative variable (csc/sec) and v the squaring one (cot/tan), the
// rules combine to
//   (A u^a v^b)' = sigma * A * (a * u^a v^(b+1) + b * u^a (v^(b-1) + v^(b+1)))
// with sigma = -1 for the cot/csc family and +1 for tan/sec.
DerivPoly differentiate(const DerivPoly& poly) {
    const int sigma = pole_at_integers(poly.fn) ? -1 : 1;
    DerivPoly out{poly.fn, poly.n + 1, {}};
    auto bump = [&out](unsigned a, unsigned b, mpz_class delta) {
        auto [it, inserted] = out.terms.emplace(std::make_pair(a, b), delta);
        if (!inserted) {
            it->second += delta;
            if (it->second == 0) out.terms.erase(it);
        }
    };
    for (const auto& [key, coeff] : poly.terms) {
        const auto [a, b] = key;
        const mpz_class scaled = sigma * coeff;
        if (a > 0) bump(a, b + 1, a * scaled);
        if (b > 0) {
            bump(a, b - 1, b * scaled);
            bump(a, b + 1, b * scaled);
        }
    }
    return out;
}

DerivPoly base_poly(Trig fn) {
    DerivPoly p{fn, 0, {}};
    const bool multiplicative = (fn == Trig::Csc || fn == Trig::Sec);
    p.terms[multiplicative ? std::make_pair(1u, 0u) : std::make_pair(0u, 1u)] = 1;
    return p;
}

struct DerivPolyCache {
    std::shared_mutex mutex;
    std::deque<DerivPoly> chain[4];
};

DerivPolyCache& deriv_cache() {
    static DerivPolyCache cache;
    return cache;
}

} // namespace

const DerivPoly& deriv_poly(Trig fn, unsigned n) {
    auto& cache = deriv_cache();
    auto& chain = cache.chain[static_cast<int>(fn)];
    {
        std::shared_lock lock(cache.mutex);
        if (n < chain.size()) return chain[n];
    }
    std::unique_lock lock(cache.mutex);
    if (chain.empty()) chain.push_back(base_poly(fn));
    while (chain.size() <= n) chain.push_back(differentiate(chain.back()));
    return chain[n];
}

Real eval_oracle(Trig fn, unsigned n, unsigned long p, unsigned long q,
                 mpfr_prec_t bits) {
    if (q == 0) throw std::invalid_argument("eval_oracle: q must be positive");
    const Rational x{mpz_class(p), mpz_class(q)};
    if (pole_at_integers(fn)) {
        if (x.is_integer())
            throw pole_error(std::string(name(fn)) + "(pi*x) has a pole at x = " + x.str());
    } else if ((x - Rational(1, 2)).is_integer()) {
        throw pole_error(std::string(name(fn)) + "(pi*x) has a pole at x = " + x.str());
    }

    const mpfr_prec_t guard =
        64 + static_cast<mpfr_prec_t>(double(n) * std::log2(double(q) + 1.0));
    const mpfr_prec_t work = bits + guard;

    // theta = pi*p/q, then the two state variables at theta.
    Real theta = Real::pi(work);
    mpfr_mul_ui(theta.raw(), theta.raw(), p, MPFR_RNDN);
    mpfr_div_ui(theta.raw(), theta.raw(), q, MPFR_RNDN);

    Real v(work), u(work);
    if (pole_at_integers(fn)) {
        mpfr_cot(v.raw(), theta.raw(), MPFR_RNDN);
        if (fn == Trig::Csc) mpfr_csc(u.raw(), theta.raw(), MPFR_RNDN);
    } else {
        mpfr_tan(v.raw(), theta.raw(), MPFR_RNDN);
        if (fn == Trig::Sec) mpfr_sec(u.raw(), theta.raw(), MPFR_RNDN);
    }

    Real acc(work), term(work);
    for (const auto& [key, coeff] : deriv_poly(fn, n).terms) {
        const auto [a, b] = key;
        mpfr_set_z(term.raw(), coeff.get_mpz_t(), MPFR_RNDN);
        if (a > 0) {
            Real up = pow_ui(u, a);
            mpfr_mul(term.raw(), term.raw(), up.raw(), MPFR_RNDN);
        }
        if (b > 0) {
            Real vp = pow_ui(v, b);
            mpfr_mul(term.raw(), term.raw(), vp.raw(), MPFR_RNDN);
        }
        acc += term;
    }

    // d^n/dx^n fn(pi x) = pi^n * (d^n/dtheta^n fn)(theta).
    const Real pin = pow_ui(Real::pi(work), n);
    acc *= pin;

    Real out(bits);
    mpfr_set(out.raw(), acc.raw(), MPFR_RNDN);
    return out;
}

Real eval_exact(const ExactValue& value, mpfr_prec_t bits) {
    const mpfr_prec_t work = bits + 64;
    Real sum = value.sum.to_real(work);
    sum *= pow_ui(Real::pi(work), value.pi_power);
    Real out(bits);
    mpfr_set(out.raw(), sum.raw(), MPFR_RNDN);
    return out;
}

std::string VerificationReport::line() const {
    std::ostringstream os;
    os << name(fn) << " n=" << n << " x=" << x.str() << " "
       << (pass ? "pass" : "FAIL") << " rel_gap=" << rel_gap.str(3);
    return os.str();
}

VerificationReport verify(Trig fn, unsigned n, const Rational& x, mpfr_prec_t bits) {
    const ExactValue value = deriv(fn, n, x);

    // The oracle evaluates at the normalized point and the normalization
    // sign/reflection were already folded into the exact value, so compare
    // at the original x: fold it to [0,1) for the oracle's p/q interface.
    const Rational y = x - Rational(x.floor());
    const unsigned long p = y.is_zero() ? 0 : y.num().get_ui();
    const unsigned long q = y.den().get_ui();
    Real oracle = eval_oracle(fn, n, p, q, bits);
    if (antiperiodic(fn) && mpz_odd_p(mpz_class(x.floor()).get_mpz_t()))
        oracle = -oracle; // f(x) = (-1)^floor(x) f(frac(x)) for antiperiodic f

    const Real exact = eval_exact(value, bits);
    const Real gap = abs(exact - oracle);
    Real scale = abs(oracle);
    if (scale < Real(1L, bits)) scale = Real(1L, bits);
    const Real rel = gap / scale;
    const bool pass = rel <= Real::pow2(-(bits - 56), 64);
    return {fn, n, x, pass, exact, oracle, gap, rel};
}

} // namespace trigexact
