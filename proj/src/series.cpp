#include "trigexact/series.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace trigexact {

namespace {

constexpr mpfr_prec_t kWork = 160;

unsigned long ipow_ul(unsigned long base, unsigned long exp) {
    unsigned long r = 1;
    while (exp--) r *= base;
    return r;
}

// Master sum S = sum_{k>=0} w^k (c + e k)^(-s) with w = e^(i pi u), u
// rational. Truncation error < tol: monotone case (w = 1) adds the integral
// tail estimate and keeps error below half the first omitted term;
// otherwise the Abel bound 2/|1-w| * f(K) picks the cutoff.
Complex master_sum(const Rational& u_in, unsigned long c, unsigned long e,
                   double s, double tol) {
    if (!(tol > 0)) throw std::invalid_argument("series: tol must be positive");
    if (c == 0 || e == 0)
        throw std::invalid_argument("series: c and e must be positive");
    if (!(s > 0)) throw std::invalid_argument("series: s must be positive");

    const Rational u =
        u_in - Rational((u_in * Rational(1, 2)).floor()) * Rational(2); // in [0, 2)
    const unsigned long a = u.num().get_ui();
    const unsigned long b = u.den().get_ui();
    const bool monotone = u.is_zero();
    if (monotone && s < 1.5)
        throw std::invalid_argument(
            "series: non-oscillating sum requires s >= 1.5");

    // Pick K so the first omitted term is small enough for the error bound.
    double threshold;
    if (monotone) {
        threshold = 2.0 * tol;
    } else {
        const double gap = 2.0 * std::sin(M_PI * double(a) / (2.0 * double(b)));
        threshold = 0.999 * tol * gap / 2.0;
    }
    const double X = std::pow(threshold, -1.0 / s);
    unsigned long K = 0;
    if (X > double(c)) K = static_cast<unsigned long>((X - double(c)) / double(e)) + 1;

    // Integer s with (c+eK)^s inside 64 bits: denominators by integer
    // multiply; otherwise per-term mpfr_pow.
    const bool int_s = (s == std::floor(s)) && s < 60.0;
    const unsigned long si = static_cast<unsigned long>(s);
    const bool fast = int_s && std::pow(double(c) + double(e) * double(K) + double(e),
                                        s) < 9.0e18;

    // Root-of-unity table: w^k cycles with period 2b/gcd(a, 2b); each entry
    // from an exactly reduced angle so no error accumulates around the circle.
    unsigned long period = 1;
    std::vector<Real> tab_re, tab_im;
    if (!monotone) {
        period = 2 * b / std::gcd(a, 2 * b);
        const Real pi = Real::pi(kWork);
        Real angle(kWork);
        for (unsigned long r = 0; r < period; ++r) {
            const unsigned long ar = (a * r) % (2 * b);
            mpfr_mul_ui(angle.raw(), pi.raw(), ar, MPFR_RNDN);
            mpfr_div_ui(angle.raw(), angle.raw(), b, MPFR_RNDN);
            Real cr(kWork), sr(kWork);
            sin_cos(sr, cr, angle);
            tab_re.push_back(std::move(cr));
            tab_im.push_back(std::move(sr));
        }
    }

    Real acc_re(kWork), acc_im(kWork), term(kWork), denom(kWork);
    const Real one(1L, kWork);
    Real s_neg(kWork);
    mpfr_set_d(s_neg.raw(), -s, MPFR_RNDN);

    unsigned long r = 0;
    for (unsigned long k = 0; k < K; ++k) {
        const unsigned long d = c + e * k;
        if (fast) {
            const unsigned long ds = ipow_ul(d, si);
            if (monotone) {
                mpfr_div_ui(term.raw(), one.raw(), ds, MPFR_RNDN);
                acc_re += term;
            } else {
                mpfr_div_ui(term.raw(), tab_re[r].raw(), ds, MPFR_RNDN);
                acc_re += term;
                mpfr_div_ui(term.raw(), tab_im[r].raw(), ds, MPFR_RNDN);
                acc_im += term;
            }
        } else {
            mpfr_set_ui(denom.raw(), d, MPFR_RNDN);
            mpfr_pow(denom.raw(), denom.raw(), s_neg.raw(), MPFR_RNDN); // d^(-s)
            if (monotone) {
                mpfr_add(acc_re.raw(), acc_re.raw(), denom.raw(), MPFR_RNDN);
            } else {
                mpfr_mul(term.raw(), tab_re[r].raw(), denom.raw(), MPFR_RNDN);
                acc_re += term;
                mpfr_mul(term.raw(), tab_im[r].raw(), denom.raw(), MPFR_RNDN);
                acc_im += term;
            }
        }
        if (!monotone && ++r == period) r = 0;
    }

    if (monotone) {
        // tail estimate: integral (c+eK)^(1-s)/(e(s-1)) plus f(K)/2.
        Real dK(kWork), t(kWork);
        mpfr_set_ui(dK.raw(), c + e * K, MPFR_RNDN);
        mpfr_set_d(t.raw(), 1.0 - s, MPFR_RNDN);
        Real integral(kWork);
        mpfr_pow(integral.raw(), dK.raw(), t.raw(), MPFR_RNDN);
        mpfr_div_d(integral.raw(), integral.raw(), double(e) * (s - 1.0), MPFR_RNDN);
        Real fK(kWork);
        mpfr_pow(fK.raw(), dK.raw(), s_neg.raw(), MPFR_RNDN);
        mpfr_div_2ui(fK.raw(), fK.raw(), 1, MPFR_RNDN);
        acc_re += integral;
        acc_re += fK;
    }

    return {std::move(acc_re), std::move(acc_im)};
}

void check_unit_interval(const Rational& a, const char* who) {
    if (a.sign() <= 0 || a > Rational(1))
        throw std::invalid_argument(std::string(who) + ": a must satisfy 0 < a <= 1");
}

// e^s at working precision (s need not be an integer).
Real pow_ui_d(unsigned long base, double s) {
    Real r(kWork), e(kWork);
    mpfr_set_ui(r.raw(), base, MPFR_RNDN);
    mpfr_set_d(e.raw(), s, MPFR_RNDN);
    mpfr_pow(r.raw(), r.raw(), e.raw(), MPFR_RNDN);
    return r;
}

// e^(i pi t) for rational t, angle reduced exactly before evaluation.
Complex unit_rotation(const Rational& t_in) {
    const Rational t =
        t_in - Rational((t_in * Rational(1, 2)).floor()) * Rational(2);
    Real angle = Real::pi(kWork);
    mpfr_mul_q(angle.raw(), angle.raw(), t.mpq().get_mpq_t(), MPFR_RNDN);
    return Complex::from_unit_angle(angle);
}

Complex lerch_common(double s, unsigned long p, unsigned long q, double tol,
                     bool alternating) {
    if (q == 0) throw std::invalid_argument("lerch: q must be positive");
    const Rational u = alternating
                           ? Rational(2 * p, static_cast<long>(q)) + Rational(1)
                           : Rational(2 * p, static_cast<long>(q));
    const Complex sum = master_sum(u, 1, 1, s, tol);
    return unit_rotation(Rational(2 * p, static_cast<long>(q))) * sum;
}

Complex chi_common(double s, unsigned long p, unsigned long q, double tol,
                   bool alternating) {
    if (q == 0) throw std::invalid_argument("chi: q must be positive");
    const Rational u = alternating
                           ? Rational(2 * p, static_cast<long>(q)) + Rational(1)
                           : Rational(2 * p, static_cast<long>(q));
    const Complex sum = master_sum(u, 1, 2, s, tol);
    return unit_rotation(Rational(static_cast<long>(p), static_cast<long>(q))) * sum;
}

} // namespace

Real hurwitz_zeta(double s, const Rational& a, double tol) {
    if (s < 1.5) throw std::invalid_argument("hurwitz_zeta: requires s >= 1.5");
    check_unit_interval(a, "hurwitz_zeta");
    const unsigned long c = a.num().get_ui();
    const unsigned long e = a.den().get_ui();
    const Real scale = pow_ui_d(e, s); // zeta(s, c/e) = e^s * S(0; c, e)
    const Complex sum = master_sum(Rational(0), c, e, s, tol / scale.to_double());
    return sum.re * scale;
}

Real alt_hurwitz_zeta(double s, const Rational& a, double tol) {
    if (s < 0.5) throw std::invalid_argument("alt_hurwitz_zeta: requires s >= 0.5");
    check_unit_interval(a, "alt_hurwitz_zeta");
    const unsigned long c = a.num().get_ui();
    const unsigned long e = a.den().get_ui();
    const Real scale = pow_ui_d(e, s);
    const Complex sum = master_sum(Rational(1), c, e, s, tol / scale.to_double());
    return sum.re * scale;
}

Complex lerch_l(double s, unsigned long p, unsigned long q, double tol) {
    if (s < 1.5) throw std::invalid_argument("lerch_l: requires s >= 1.5");
    return lerch_common(s, p, q, tol, false);
}

Complex lerch_l_star(double s, unsigned long p, unsigned long q, double tol) {
    if (s < 0.75) throw std::invalid_argument("lerch_l_star: requires s >= 0.75");
    return lerch_common(s, p, q, tol, true);
}

Complex legendre_chi(double s, unsigned long p, unsigned long q, double tol) {
    if (s < 1.5) throw std::invalid_argument("legendre_chi: requires s >= 1.5");
    return chi_common(s, p, q, tol, false);
}

Complex legendre_chi_star(double s, unsigned long p, unsigned long q, double tol) {
    if (s < 0.75)
        throw std::invalid_argument("legendre_chi_star: requires s >= 0.75");
    return chi_common(s, p, q, tol, true);
}

DecompositionReport check_decompositions(double s, unsigned long max_q, double tol) {
    if (!(tol > 0))
        throw std::invalid_argument("check_decompositions: tol must be positive");
    if (s < 1.5)
        throw std::invalid_argument("check_decompositions: requires s >= 1.5");

    DecompositionReport report;
    report.header =
        "alt-chi-hurwitz reading: argument e^(i*pi*p/q), prefactor (2q)^(-s)";

    for (unsigned long q = 1; q <= max_q; ++q) {
        const bool odd_q = (q % 2 == 1);

        // Hurwitz values are independent of p: compute once per q, with the
        // per-term tolerance budgeted so each assembled side stays within
        // tol/4.
        const double zeta_tol = tol / 4.0 * std::pow(double(q), s) / double(q);
        const double zeta_h_tol =
            tol / 4.0 * std::pow(2.0 * double(q), s) / double(q);
        std::vector<Real> Z, Zh, Zs, Zhs;
        for (unsigned long alpha = 1; alpha <= q; ++alpha) {
            const Rational aq(static_cast<long>(alpha), static_cast<long>(q));
            const Rational ah(static_cast<long>(2 * alpha - 1),
                              static_cast<long>(2 * q));
            Z.push_back(hurwitz_zeta(s, aq, zeta_tol));
            Zh.push_back(hurwitz_zeta(s, ah, zeta_h_tol));
            if (odd_q) {
                Zs.push_back(alt_hurwitz_zeta(s, aq, zeta_tol));
                Zhs.push_back(alt_hurwitz_zeta(s, ah, zeta_h_tol));
            }
        }

        Real q_scale = pow_ui_d(q, -s);
        Real q2_scale = pow_ui_d(2 * q, -s);

        for (unsigned long p = 1; p <= q; ++p) {
            Complex rhs13(kWork), rhs14(kWork), rhs19(kWork), rhs20(kWork);
            for (unsigned long alpha = 1; alpha <= q; ++alpha) {
                const Complex full =
                    unit_rotation(Rational(2 * alpha * p, static_cast<long>(q)));
                const Complex half = unit_rotation(
                    Rational((2 * alpha - 1) * p, static_cast<long>(q)));
                const bool flip = (alpha % 2 == 0);
                const std::size_t i = alpha - 1;

                rhs13 = rhs13 + full.scaled(Z[i]);
                rhs14 = rhs14 + half.scaled(Zh[i]);
                const Real& w19 = odd_q ? Zs[i] : Z[i];
                const Real& w20 = odd_q ? Zhs[i] : Zh[i];
                rhs19 = rhs19 + (flip ? full.scaled(w19).scaled(Real(-1L, kWork))
                                      : full.scaled(w19));
                rhs20 = rhs20 + (flip ? half.scaled(w20).scaled(Real(-1L, kWork))
                                      : half.scaled(w20));
            }
            rhs13 = rhs13.scaled(q_scale);
            rhs14 = rhs14.scaled(q2_scale);
            rhs19 = rhs19.scaled(q_scale);
            rhs20 = rhs20.scaled(q2_scale);

            const double lhs_tol = tol / 4.0;
            const Complex lhs13 = lerch_l(s, p, q, lhs_tol);
            const Complex lhs14 = legendre_chi(s, p, q, lhs_tol);
            const Complex lhs19 = lerch_l_star(s, p, q, lhs_tol);
            const Complex lhs20 = legendre_chi_star(s, p, q, lhs_tol);

            const auto push = [&](const char* identity, const Complex& lhs,
                                  const Complex& rhs) {
                const double residual = (lhs - rhs).abs().to_double();
                report.rows.push_back({identity, s, q, p, residual});
                if (residual > report.max_residual) report.max_residual = residual;
            };
            push("lerch-hurwitz", lhs13, rhs13);
            push("chi-hurwitz", lhs14, rhs14);
            push("alt-lerch-hurwitz", lhs19, rhs19);
            push("alt-chi-hurwitz", lhs20, rhs20);
        }
    }
    return report;
}

} // namespace trigexact
