#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "trigexact/cyclotomic.hpp"
#include "trigexact/errors.hpp"

using namespace trigexact;

namespace {

// phi(n) by the classic factorization formula, independent of the
// polynomial construction under test.
unsigned phi_reference(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

Real im_magnitude(const Complex& z) { return abs(z.im); }

} // namespace

TEST_CASE("small cyclotomic polynomials") {
    CHECK(cyclotomic_poly(1).str() == "x - 1");
    CHECK(cyclotomic_poly(2).str() == "x + 1");
    CHECK(cyclotomic_poly(3).str() == "x^2 + x + 1");
    CHECK(cyclotomic_poly(4).str() == "x^2 + 1");
    CHECK(cyclotomic_poly(6).str() == "x^2 - x + 1");
    CHECK(cyclotomic_poly(12).str() == "x^4 - x^2 + 1");
    CHECK_THROWS_AS(cyclotomic_poly(0), std::invalid_argument);
}

TEST_CASE("product over divisors reconstructs x^m - 1; degrees are phi(m)") {
    for (unsigned m = 1; m <= 48; ++m) {
        CAPTURE(m);
        Poly product = Poly::monomial(0);
        for (unsigned d = 1; d <= m; ++d)
            if (m % d == 0) product = product * cyclotomic_poly(d);
        CHECK(product == Poly::monomial(m) - Poly::monomial(0));
        CHECK(euler_phi(m) == phi_reference(m));
    }
}

TEST_CASE("zeta_power reduces into the canonical basis") {
    // zeta_4^2 = -1
    const Cyclotomic z = Cyclotomic::zeta_power(4, 2);
    CHECK(z.coord(0) == Rational(-1));
    CHECK(z.coord(1) == Rational(0));
    CHECK(z == Cyclotomic(4, Rational(-1)));

    // zeta_3^2 = -1 - zeta_3 (reduction mod x^2 + x + 1)
    const Cyclotomic w = Cyclotomic::zeta_power(3, 2);
    CHECK(w.coord(0) == Rational(-1));
    CHECK(w.coord(1) == Rational(-1));

    // exponents wrap mod m, including negatives
    CHECK(Cyclotomic::zeta_power(12, 13) == Cyclotomic::zeta_power(12, 1));
    CHECK(Cyclotomic::zeta_power(12, -1) == Cyclotomic::zeta_power(12, 11));
}

TEST_CASE("field arithmetic identities") {
    const Cyclotomic one(6, Rational(1));

    // zeta_6 + zeta_6^5 = 1 (conjugate pair summing to 2cos(pi/3))
    CHECK(Cyclotomic::zeta_power(6, 1) + Cyclotomic::zeta_power(6, 5) == one);

    // inverse pair multiplies to 1
    CHECK(Cyclotomic::zeta_power(7, 1) * Cyclotomic::zeta_power(7, 6) ==
          Cyclotomic(7, Rational(1)));

    // all m-th roots sum to zero
    for (unsigned m : {2u, 3u, 4u, 6u, 8u, 12u}) {
        Cyclotomic sum(m);
        for (unsigned k = 0; k < m; ++k) sum += Cyclotomic::zeta_power(m, k);
        CAPTURE(m);
        CHECK(sum.is_zero());
    }

    // additive identity and scaling
    Cyclotomic z = Cyclotomic::zeta_power(12, 5);
    CHECK(z + Cyclotomic(12) == z);
    CHECK(z.scaled(Rational(0)).is_zero());
    CHECK((z - z).is_zero());
    CHECK((-z) + z == Cyclotomic(12));
}

TEST_CASE("order mismatch is surfaced as a distinct error") {
    const Cyclotomic a(4, Rational(1));
    const Cyclotomic b(8, Rational(1));
    CHECK_THROWS_AS(a + b, order_mismatch_error);
    CHECK_THROWS_AS(a * b, order_mismatch_error);
    CHECK_THROWS_AS(a.lift(6), order_mismatch_error); // 4 does not divide 6
}

TEST_CASE("conjugation") {
    CHECK(Cyclotomic(5, Rational(22, 7)).conj() == Cyclotomic(5, Rational(22, 7)));
    CHECK(Cyclotomic::zeta_power(4, 1).conj() ==
          Cyclotomic::zeta_power(4, 1).scaled(Rational(-1)));

    std::mt19937 rng(20260823);
    std::uniform_int_distribution<int> coin(-5, 5);
    for (int trial = 0; trial < 20; ++trial) {
        Cyclotomic z(24);
        for (unsigned k = 0; k < euler_phi(24); ++k)
            z += Cyclotomic::zeta_power(24, k).scaled(Rational(coin(rng)));
        CHECK(z.conj().conj() == z);
        CHECK(is_real(z + z.conj()));
        CHECK(is_real(z * z.conj()));
    }
}

TEST_CASE("is_real") {
    CHECK_FALSE(is_real(Cyclotomic::zeta_power(4, 1)));
    CHECK(is_real(Cyclotomic::zeta_power(12, 1) + Cyclotomic::zeta_power(12, 11)));
    CHECK(is_real(Cyclotomic(9, Rational(-3, 2))));
}

TEST_CASE("lift preserves the embedded value") {
    // zeta_6 lifted to order 12 is zeta_12^2
    CHECK(Cyclotomic::zeta_power(6, 1).lift(12) == Cyclotomic::zeta_power(12, 2));
    const Cyclotomic z =
        Cyclotomic::zeta_power(6, 1).scaled(Rational(3, 2)) + Cyclotomic(6, Rational(1));
    const Complex before = z.to_complex(192);
    const Complex after = z.lift(24).to_complex(192);
    CHECK((before - after).abs() < Real::pow2(-180, 64));
}

TEST_CASE("numeric embedding") {
    // zeta_8 -> (sqrt2/2)(1 + i) at 128 bits
    const Complex z8 = Cyclotomic::zeta_power(8, 1).to_complex(128);
    Real expected(192);
    mpfr_sqrt_ui(expected.raw(), 2, MPFR_RNDN);
    mpfr_div_2ui(expected.raw(), expected.raw(), 1, MPFR_RNDN);
    CHECK(abs(z8.re - expected) < Real::pow2(-120, 64));
    CHECK(abs(z8.im - expected) < Real::pow2(-120, 64));

    CHECK(Cyclotomic(5, Rational(1)).to_complex(128).re == Real(1L, 64));
    CHECK((Cyclotomic::zeta_power(3, 1) + Cyclotomic::zeta_power(3, 2))
              .to_complex(128)
              .re.to_double() == doctest::Approx(-1.0));

    // multiplicativity of the embedding at 256 bits
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coin(-3, 3);
    for (int trial = 0; trial < 10; ++trial) {
        Cyclotomic z(24), w(24);
        for (unsigned k = 0; k < euler_phi(24); ++k) {
            z += Cyclotomic::zeta_power(24, k).scaled(Rational(coin(rng)));
            w += Cyclotomic::zeta_power(24, k).scaled(Rational(coin(rng)));
        }
        const Complex lhs = (z * w).to_complex(256);
        const Complex rhs = z.to_complex(256) * w.to_complex(256);
        CHECK((lhs - rhs).abs() < Real::pow2(-216, 64));
        if (is_real(z + z.conj()))
            CHECK(im_magnitude((z + z.conj()).to_complex(256)) < Real::pow2(-200, 64));
    }
}
