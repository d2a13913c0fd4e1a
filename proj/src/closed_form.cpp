#include "trigexact/closed_form.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "trigexact/bernoulli_euler.hpp"
#include "trigexact/errors.hpp"

namespace trigexact {

namespace {

Rational rat(unsigned long num, unsigned long den) {
    return Rational(mpz_class(num), mpz_class(den));
}

[[noreturn]] void throw_pole(Trig fn, const Rational& x) {
    throw pole_error(std::string(name(fn)) + "(pi*x) has a pole at x = " + x.str());
}

// Real part of iota^P * e^(i*pi*t) scaled by c, accumulated into the sum:
// the four residues of P give +-cos / -+sin of the same angle.
void add_real_part(TrigSum& sum, unsigned P, const Rational& t, const Rational& c) {
    switch (P % 4) {
        case 0: sum.add(TrigKind::Cos, t, c); break;
        case 1: sum.add(TrigKind::Sin, t, -c); break;
        case 2: sum.add(TrigKind::Cos, t, -c); break;
        case 3: sum.add(TrigKind::Sin, t, c); break;
    }
}

unsigned long to_ulong(const mpz_class& z, const char* what) {
    if (!z.fits_ulong_p())
        throw std::domain_error(std::string(what) + " too large for this build");
    return z.get_ui();
}

} // namespace

NormalizedArgument normalize_argument(Trig fn, const Rational& x) {
    if (pole_at_integers(fn)) {
        if (x.is_integer()) throw_pole(fn, x);
    } else {
        if ((x - rat(1, 2)).is_integer()) throw_pole(fn, x);
    }

    const mpz_class shift = x.floor();
    const Rational y = x - Rational(shift); // in [0, 1)
    int sign = 1;
    if (antiperiodic(fn) && mpz_odd_p(shift.get_mpz_t())) sign = -1;

    const unsigned long p = to_ulong(y.num(), "numerator");
    const unsigned long q = to_ulong(y.den(), "denominator");

    if (pole_at_integers(fn)) return {p, q, sign, false}; // 1 <= p < q here

    // tan/sec: integers fall outside the q >= 3 theorem window and cannot
    // be reached by the x -> 1-x reflection either.
    if (q == 1)
        throw std::domain_error(std::string(name(fn)) +
                                " derivative formula needs a non-integer x with "
                                "denominator >= 3; got x = " +
                                x.str());
    if (2 * p < q) return {p, q, sign, false};
    return {q - p, q, sign, true}; // y > 1/2 (y = 1/2 was the pole)
}

namespace detail {

ExactValue theorem_value(Trig fn, unsigned n, unsigned long p, unsigned long q) {
    if (n == 0) throw std::invalid_argument("derivative order n must be >= 1");
    if (pole_at_integers(fn)) {
        if (p < 1 || p >= q)
            throw std::invalid_argument("theorem window requires 1 <= p < q");
    } else {
        if (q < 3 || p < 1 || 2 * p >= q)
            throw std::invalid_argument(
                "theorem window requires q >= 3 and 1 <= p < q/2");
    }

    const unsigned long M = std::lcm(4ul, 2 * q);
    const bool half_odd_angles = (fn == Trig::Csc || fn == Trig::Sec);
    const bool alternating = (fn == Trig::Tan || fn == Trig::Sec);
    const unsigned P = (fn == Trig::Sec) ? n : n + 1; // iota exponent

    Rational prefactor;
    if (alternating) {
        prefactor = Rational::pow(rat(2 * q, 1), n);
    } else {
        prefactor = Rational(2) * Rational::pow(rat(2 * q, 1), n) / Rational(long(n) + 1);
    }

    // Inner weight per the four theorem statements; tan/sec switch between
    // the Euler and Bernoulli forms on the parity of q.
    const bool bernoulli_branch = !alternating || q % 2 == 0;
    const Poly& poly = bernoulli_branch ? bernoulli_poly(n + 1) : euler_poly(n);
    Rational branch_scale(1);
    if (alternating) {
        if (q % 2 == 0) {
            branch_scale = Rational(2) / Rational(long(n) + 1);
            if (fn == Trig::Sec) branch_scale = -branch_scale;
        } else if (fn == Trig::Tan) {
            branch_scale = Rational(-1);
        }
    }

    TrigSum sum;
    Cyclotomic acc(static_cast<unsigned>(M));
    for (unsigned long alpha = 1; alpha <= q; ++alpha) {
        Rational inner = branch_scale *
                         poly.eval(half_odd_angles ? rat(2 * alpha - 1, 2 * q)
                                                   : rat(alpha, q));
        if (alternating && alpha % 2 == 0) inner = -inner;
        if (inner.is_zero()) continue;

        const unsigned long zexp = half_odd_angles ? (M / (2 * q)) * (2 * alpha - 1) * p
                                                   : (M / q) * alpha * p;
        acc += Cyclotomic::zeta_power(static_cast<unsigned>(M),
                                      static_cast<long>(zexp % M))
                   .scaled(inner);

        const Rational t = half_odd_angles ? rat((2 * alpha - 1) * p, q)
                                           : rat(2 * alpha * p, q);
        add_real_part(sum, P, t, prefactor * inner);
    }

    Cyclotomic witness =
        (Cyclotomic::zeta_power(static_cast<unsigned>(M),
                                static_cast<long>((M / 4) * (P % 4))) *
         acc)
            .scaled(prefactor);
    return {fn, n, p, q, 1, n, std::move(sum), std::move(witness)};
}

} // namespace detail

ExactValue deriv(Trig fn, unsigned n, const Rational& x) {
    if (n == 0) throw std::invalid_argument("derivative order n must be >= 1");
    const NormalizedArgument w = normalize_argument(fn, x);
    int sign = w.sign;
    if (w.reflected && n % 2 == 0) sign = -sign; // reflection contributes (-1)^(n+1)

    ExactValue v = detail::theorem_value(fn, n, w.p, w.q);
    if (sign < 0) {
        v.sum = v.sum.scaled(Rational(-1));
        v.witness = -v.witness;
    }
    v.sign = sign;
    return v;
}

namespace {

ExactValue rational_exact_value(Trig fn, unsigned n, unsigned long p, unsigned long q,
                                const Rational& r) {
    const unsigned M = static_cast<unsigned>(std::lcm(4ul, 2 * q));
    TrigSum sum;
    sum.add(TrigKind::Cos, Rational(), r);
    return {fn, n, p, q, 1, n, std::move(sum), Cyclotomic(M, r)};
}

} // namespace

ExactValue special_case(Trig fn, unsigned n, const Rational& x) {
    if (n == 0) throw std::invalid_argument("derivative order n must be >= 1");

    if (fn == Trig::Csc && x == rat(1, 2)) {
        if (n % 2 == 1) // odd orders vanish at the symmetry center
            return rational_exact_value(fn, n, 1, 2, Rational());
        const unsigned m = n / 2;
        const Rational r = Rational(m % 2 == 1 ? 4 : -4) *
                           Rational::pow(Rational(4), n) /
                           Rational(long(n) + 1) *
                           bernoulli_poly(n + 1).eval(rat(1, 4));
        return rational_exact_value(fn, n, 1, 2, r);
    }

    if (fn == Trig::Cot && (x == rat(1, 4) || x == rat(3, 4))) {
        const unsigned long p = to_ulong(x.num(), "numerator");
        if (n % 2 == 1) { // equal at 1/4 and 3/4
            const unsigned m = (n + 1) / 2;
            const Rational r = Rational(m % 2 == 1 ? -1 : 1) *
                               Rational::pow(Rational(4), n) *
                               (Rational::pow(Rational(2), n + 1) - Rational(1)) *
                               bernoulli_poly(n + 1).eval(Rational()) /
                               Rational(long(m));
            return rational_exact_value(fn, n, p, 4, r);
        }
        const unsigned m = n / 2; // opposite signs at 1/4 and 3/4
        Rational r = Rational(m % 2 == 1 ? 4 : -4) *
                     Rational::pow(Rational(8), n) / Rational(long(n) + 1) *
                     bernoulli_poly(n + 1).eval(rat(1, 4));
        if (p == 3) r = -r;
        return rational_exact_value(fn, n, p, 4, r);
    }

    throw std::invalid_argument("special_case: unsupported (fn, x) combination");
}

} // namespace trigexact
