#ifndef TRIGEXACT_ORACLE_HPP
#define TRIGEXACT_ORACLE_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>

#include "trigexact/closed_form.hpp"
#include "trigexact/rational.hpp"
#include "trigexact/real.hpp"
#include "trigexact/trig.hpp"

namespace trigexact {

/// d^n/d(theta)^n fn(theta) written exactly as an integer polynomial in the
/// trig state variables, built by iterating the textbook substitution rules
///   cot' = -(1+cot^2)   csc' = -csc*cot
///   tan' = 1+tan^2      sec' = sec*tan.
/// This is the independent check the closed forms are verified against: it
/// shares no code with the theorem path.
///
/// Exponent key (a, b): a is the power of the multiplicative variable
/// (csc or sec; always 0 for cot/tan), b the power of the squaring variable
/// (cot or tan).
struct DerivPoly {
    Trig fn;
    unsigned n;
    std::map<std::pair<unsigned, unsigned>, mpz_class> terms;
};

/// Cached per (fn, n); n = 0 is the function itself.
const DerivPoly& deriv_poly(Trig fn, unsigned n);

/// pi^n * DerivPoly(fn, n) evaluated at theta = pi*p/q with arbitrary-
/// precision trig; carries >= 32 + n*log2(q) guard bits internally and
/// returns `bits` of precision. Throws pole_error at poles.
Real eval_oracle(Trig fn, unsigned n, unsigned long p, unsigned long q,
                 mpfr_prec_t bits);

/// pi^pi_power times the numeric value of the trig sum.
Real eval_exact(const ExactValue& value, mpfr_prec_t bits);

/// Closed form vs. oracle at one query point; passes iff
/// |exact - oracle| <= 2^-(bits-56) * max(1, |oracle|).
struct VerificationReport {
    Trig fn;
    unsigned n;
    Rational x;
    bool pass;
    Real exact_value, oracle_value, abs_gap, rel_gap;

    /// One line: "fn n x pass/FAIL rel_gap".
    std::string line() const;
};

VerificationReport verify(Trig fn, unsigned n, const Rational& x, mpfr_prec_t bits);

} // namespace trigexact

#endif
