#ifndef TRIGEXACT_SERIES_HPP
#define TRIGEXACT_SERIES_HPP

#include <string>
#include <vector>

#include "trigexact/rational.hpp"
#include "trigexact/real.hpp"

namespace trigexact {

/// Direct-summation evaluators for the zeta / Lerch / chi series, with
/// truncation chosen from explicit tail bounds so the total truncation error
/// stays below `tol`. These are validators: deliberately naive summation in
/// the convergence region, independent of the closed-form machinery.
///
/// Tail handling: monotone (non-oscillating) sums require s > 1 and add the
/// integral tail estimate, leaving error <= half the first omitted term;
/// oscillating sums (any rational rotation, including the alternating case)
/// use the Abel partial-summation bound 2/|1-w| times the first omitted
/// term and work for any s > 0.

/// zeta(s, a) = sum_{k>=0} (k+a)^(-s); requires s >= 1.5, 0 < a <= 1.
Real hurwitz_zeta(double s, const Rational& a, double tol);

/// zeta*(s, a) = sum_{k>=0} (-1)^k (k+a)^(-s); s >= 0.5, 0 < a <= 1.
Real alt_hurwitz_zeta(double s, const Rational& a, double tol);

/// l_s(p/q) = sum_{k>=1} e^(2 pi i k p/q) / k^s; s >= 1.5.
Complex lerch_l(double s, unsigned long p, unsigned long q, double tol);

/// l*_s(p/q) = sum_{k>=1} (-1)^(k-1) e^(2 pi i k p/q) / k^s; s >= 0.75
/// (s >= 1.5 when the rotation degenerates to w = 1).
Complex lerch_l_star(double s, unsigned long p, unsigned long q, double tol);

/// chi_s(e^(i pi p/q)) = sum_{k>=0} e^(i pi (2k+1) p/q) / (2k+1)^s; s >= 1.5.
Complex legendre_chi(double s, unsigned long p, unsigned long q, double tol);

/// chi*_s(e^(i pi p/q)) = sum_{k>=0} (-1)^k e^(i pi (2k+1) p/q) / (2k+1)^s;
/// s >= 0.75 (s >= 1.5 when the rotation degenerates).
Complex legendre_chi_star(double s, unsigned long p, unsigned long q, double tol);

/// Residual check of the four root-of-unity decompositions into Hurwitz
/// sums: for each p = 1..q both sides are summed independently and the
/// absolute difference reported.
///   lerch-hurwitz:     l_s(p/q)            = q^-s sum_a zeta(s, a/q) e^(2 pi i a p/q)
///   chi-hurwitz:       chi_s(e^(i pi p/q)) = (2q)^-s sum_a zeta(s, (2a-1)/(2q)) e^(i pi (2a-1) p/q)
///   alt-lerch-hurwitz: l*_s(p/q)           = q^-s sum_a (-1)^(a-1) e^(2 pi i a p/q) * {zeta* | zeta}(s, a/q)
///   alt-chi-hurwitz:   chi*_s(e^(i pi p/q)) = (2q)^-s sum_a (-1)^(a-1) e^(i pi (2a-1) p/q) * {zeta* | zeta}(s, (2a-1)/(2q))
/// (braces: zeta* for odd q, zeta for even q).
struct DecompositionReport {
    struct Row {
        std::string identity; // one of the four names above
        double s;
        unsigned long q, p;
        double residual;
    };
    std::string header; // records the alt-chi reading (argument and prefactor)
    std::vector<Row> rows;
    double max_residual = 0.0;
};

DecompositionReport check_decompositions(double s, unsigned long max_q, double tol);

} // namespace trigexact

#endif
