#ifndef TRIGEXACT_CLOSED_FORM_HPP
#define TRIGEXACT_CLOSED_FORM_HPP

#include "trigexact/cyclotomic.hpp"
#include "trigexact/rational.hpp"
#include "trigexact/trig.hpp"
#include "trigexact/trig_sum.hpp"

namespace trigexact {

/// Exact value of d^n/dx^n fn(pi*x) at a rational point: pi^pi_power times
/// the real trigonometric sum `sum`, whose cyclotomic `witness` (order
/// lcm(4, 2q)) encodes the same algebraic number and certifies reality
/// exactly. The normalization bookkeeping (window p/q and the sign it
/// contributed, already folded into sum and witness) rides along for
/// reporting.
struct ExactValue {
    Trig fn;
    unsigned n;
    unsigned long p, q; // evaluation point folded into the theorem window
    int sign;           // normalization sign, already applied to sum/witness
    unsigned pi_power;  // equals n
    TrigSum sum;
    Cyclotomic witness;
};

/// Window-folding of an arbitrary rational argument:
///   - cot/tan fold by period 1; csc/sec by antiperiod 1 (sign flips per
///     unit shift);
///   - tan/sec points in (1/2, 1) reflect to 1 - x via f(1-x) = -f(x); the
///     derivative then picks up (-1)^(n+1), which depends on n and is
///     therefore reported as `reflected` rather than merged into `sign`.
struct NormalizedArgument {
    unsigned long p, q;
    int sign;       // antiperiod sign only (n-independent)
    bool reflected; // caller applies the extra (-1)^(n+1)
};

/// Throws pole_error at poles (cot/csc: integers; tan/sec: half-integers);
/// throws domain_error for tan/sec at integers, where the theorem window is
/// empty and reflection cannot apply.
NormalizedArgument normalize_argument(Trig fn, const Rational& x);

/// n-th derivative of fn(pi*x) at x, any non-pole rational. n >= 1.
ExactValue deriv(Trig fn, unsigned n, const Rational& x);

inline ExactValue cot_deriv(unsigned n, unsigned long p, unsigned long q) {
    return deriv(Trig::Cot, n, Rational(mpz_class(p), mpz_class(q)));
}
inline ExactValue csc_deriv(unsigned n, unsigned long p, unsigned long q) {
    return deriv(Trig::Csc, n, Rational(mpz_class(p), mpz_class(q)));
}
inline ExactValue tan_deriv(unsigned n, unsigned long p, unsigned long q) {
    return deriv(Trig::Tan, n, Rational(mpz_class(p), mpz_class(q)));
}
inline ExactValue sec_deriv(unsigned n, unsigned long p, unsigned long q) {
    return deriv(Trig::Sec, n, Rational(mpz_class(p), mpz_class(q)));
}

/// Dedicated short formulae for csc at 1/2 and cot at 1/4, 3/4; must agree
/// with the general path exactly. Throws invalid_argument for other (fn, x).
ExactValue special_case(Trig fn, unsigned n, const Rational& x);

namespace detail {

/// Direct theorem evaluation on window-compliant arguments, with no
/// reduction or folding: cot/csc need 1 <= p < q, tan/sec need q >= 3 and
/// 1 <= p < q/2. gcd(p, q) > 1 is allowed (the theorems hold as stated);
/// the witness order lcm(4, 2q) then differs from the reduced form's.
ExactValue theorem_value(Trig fn, unsigned n, unsigned long p, unsigned long q);

} // namespace detail

} // namespace trigexact

#endif
