#include "trigexact/cyclotomic.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include "trigexact/errors.hpp"

namespace trigexact {

namespace {

// Grow-only cache of cyclotomic polynomials, indexed by n (index 0 unused).
// A deque keeps references stable while the vectorish container grows.
struct CycloCache {
    std::shared_mutex mutex;
    std::deque<Poly> polys;
};

CycloCache& cyclo_cache() {
    static CycloCache cache;
    return cache;
}

// Phi_n via the product formula: x^n - 1 = prod_{d | n} Phi_d, so Phi_n is
// the exact quotient of x^n - 1 by the product over proper divisors.
// Assumes Phi_d for all proper divisors d is already in `polys`.
Poly compute_cyclotomic(unsigned n, const std::deque<Poly>& polys) {
    Poly numerator = Poly::monomial(n) - Poly::monomial(0);
    Poly denominator = Poly::monomial(0);
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0) denominator = denominator * polys[d];
    auto [quotient, remainder] = numerator.divmod(denominator);
    return quotient;
}

} // namespace

const Poly& cyclotomic_poly(unsigned n) {
    if (n == 0) throw std::invalid_argument("cyclotomic_poly: order must be positive");
    auto& cache = cyclo_cache();
    {
        std::shared_lock lock(cache.mutex);
        if (n < cache.polys.size()) return cache.polys[n];
    }
    std::unique_lock lock(cache.mutex);
    if (cache.polys.empty()) cache.polys.emplace_back(); // dummy index 0
    while (cache.polys.size() <= n)
        cache.polys.push_back(
            compute_cyclotomic(static_cast<unsigned>(cache.polys.size()), cache.polys));
    return cache.polys[n];
}

unsigned euler_phi(unsigned n) {
    return static_cast<unsigned>(cyclotomic_poly(n).degree());
}

Cyclotomic::Cyclotomic(unsigned m) : m_(m), c_(euler_phi(m)) {}

Cyclotomic::Cyclotomic(unsigned m, const Rational& value) : Cyclotomic(m) {
    c_[0] = value;
}

Cyclotomic Cyclotomic::zeta_power(unsigned m, long j) {
    long r = j % static_cast<long>(m);
    if (r < 0) r += m;
    Cyclotomic z(m);
    const unsigned phi = static_cast<unsigned>(z.c_.size());
    if (static_cast<unsigned>(r) < phi) {
        z.c_[r] = Rational(1);
    } else {
        auto [q, rem] = Poly::monomial(static_cast<unsigned>(r)).divmod(cyclotomic_poly(m));
        for (unsigned k = 0; k < phi; ++k) z.c_[k] = rem.coeff(k);
    }
    return z;
}

const Rational& Cyclotomic::coord(unsigned k) const {
    static const Rational zero;
    return k < c_.size() ? c_[k] : zero;
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (std::size_t k = 1; k < c_.size(); ++k)
        if (!c_[k].is_zero()) return false;
    return true;
}

void Cyclotomic::check_order(const Cyclotomic& o) const {
    if (m_ != o.m_)
        throw order_mismatch_error("cyclotomic orders differ: " + std::to_string(m_) +
                                   " vs " + std::to_string(o.m_));
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    check_order(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    check_order(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    a.check_order(b);
    Poly pa, pb;
    for (std::size_t k = 0; k < a.c_.size(); ++k) {
        pa = pa + Poly::monomial(static_cast<unsigned>(k), a.c_[k]);
        pb = pb + Poly::monomial(static_cast<unsigned>(k), b.c_[k]);
    }
    auto [q, rem] = (pa * pb).divmod(cyclotomic_poly(a.m_));
    Cyclotomic out(a.m_);
    for (std::size_t k = 0; k < out.c_.size(); ++k)
        out.c_[k] = rem.coeff(static_cast<unsigned>(k));
    return out;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out(m_);
    for (std::size_t k = 0; k < c_.size(); ++k) out.c_[k] = -c_[k];
    return out;
}

Cyclotomic Cyclotomic::scaled(const Rational& s) const {
    Cyclotomic out(m_);
    for (std::size_t k = 0; k < c_.size(); ++k) out.c_[k] = c_[k] * s;
    return out;
}

Cyclotomic Cyclotomic::conj() const {
    Cyclotomic out(m_);
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        long j = (k == 0) ? 0 : static_cast<long>(m_ - k);
        out += zeta_power(m_, j).scaled(c_[k]);
    }
    return out;
}

Cyclotomic Cyclotomic::lift(unsigned big_order) const {
    if (big_order % m_ != 0)
        throw order_mismatch_error("lift target " + std::to_string(big_order) +
                                   " is not a multiple of " + std::to_string(m_));
    const unsigned scale = big_order / m_;
    Cyclotomic out(big_order);
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        out += zeta_power(big_order, static_cast<long>(k * scale)).scaled(c_[k]);
    }
    return out;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.m_ == b.m_ && a.c_ == b.c_;
}

Complex Cyclotomic::to_complex(mpfr_prec_t bits) const {
    const mpfr_prec_t work = bits + 64;
    const Real two_pi_over_m =
        ldexp2(Real::pi(work), 1) / Real(static_cast<long>(m_), work);
    Complex acc(work);
    Real angle(work);
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        mpfr_mul_ui(angle.raw(), two_pi_over_m.raw(), static_cast<unsigned long>(k),
                    MPFR_RNDN);
        Complex term = Complex::from_unit_angle(angle);
        acc = acc + term.scaled(Real(c_[k], work));
    }
    Complex out(bits);
    mpfr_set(out.re.raw(), acc.re.raw(), MPFR_RNDN);
    mpfr_set(out.im.raw(), acc.im.raw(), MPFR_RNDN);
    return out;
}

} // namespace trigexact
