#ifndef TRIGEXACT_BERNOULLI_EULER_HPP
#define TRIGEXACT_BERNOULLI_EULER_HPP

#include "trigexact/poly.hpp"
#include "trigexact/rational.hpp"

namespace trigexact {

/// Bernoulli polynomial B_n(x), exact coefficients.
///
/// Generated by solving sum_{k=0}^{n} C(n+1,k) B_k(x) = (n+1) x^n for the
/// top term. Results are memoized process-wide; the returned reference
/// stays valid for the lifetime of the process.
const Poly& bernoulli_poly(unsigned n);

/// Euler polynomial E_n(x), from E_n(x) + sum_{k=0}^{n} C(n,k) E_k(x) = 2 x^n.
const Poly& euler_poly(unsigned n);

/// zeta(1-n, a) = -B_n(a)/n for n >= 1, a > 0.
Rational zeta_neg(unsigned n, const Rational& a);

/// zeta*(-n, a) = E_n(a)/2 for n >= 0, a > 0 (alternating Hurwitz zeta).
Rational zeta_star_neg(unsigned n, const Rational& a);

/// Binomial coefficient as an exact integer.
mpz_class binomial(unsigned long n, unsigned long k);

} // namespace trigexact

#endif
