#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support/taylor.hpp"
#include "trigexact/bernoulli_euler.hpp"
#include "trigexact/poly.hpp"

using namespace trigexact;

TEST_CASE("small Bernoulli and Euler polynomials match the textbook forms") {
    CHECK(bernoulli_poly(0) == Poly::monomial(0));
    CHECK(bernoulli_poly(1) ==
          Poly::monomial(1) - Poly::monomial(0, Rational(1, 2)));
    CHECK(bernoulli_poly(2).str() == "x^2 - x + 1/6");
    CHECK(bernoulli_poly(3).str() == "x^3 - 3/2*x^2 + 1/2*x");

    CHECK(euler_poly(0) == Poly::monomial(0));
    CHECK(euler_poly(1) == Poly::monomial(1) - Poly::monomial(0, Rational(1, 2)));
    CHECK(euler_poly(2).str() == "x^2 - x");
}

TEST_CASE("generators agree with the generating-function Taylor oracle") {
    const auto B = testsupport::taylor_bernoulli(30);
    const auto E = testsupport::taylor_euler(30);
    for (unsigned n = 0; n <= 30; ++n) {
        CAPTURE(n);
        CHECK(bernoulli_poly(n) == B[n]);
        CHECK(euler_poly(n) == E[n]);
    }
}

TEST_CASE("difference equation B_n(x+1) - B_n(x) = n x^(n-1)") {
    const Rational grid[] = {Rational(0),      Rational(1),     Rational(1, 2),
                             Rational(-1, 2),  Rational(1, 3),  Rational(-2, 3),
                             Rational(5, 7),   Rational(-3)};
    for (unsigned n = 1; n <= 30; ++n) {
        const Poly& Bn = bernoulli_poly(n);
        for (const Rational& x : grid) {
            CAPTURE(n);
            CHECK(Bn.eval(x + Rational(1)) - Bn.eval(x) ==
                  Rational(long(n)) * Rational::pow(x, long(n) - 1));
        }
    }
}

TEST_CASE("reflection: B_n(1-x) = (-1)^n B_n(x), same for E_n") {
    const Poly one_minus_x = Poly::monomial(0) - Poly::monomial(1);
    for (unsigned n = 0; n <= 30; ++n) {
        CAPTURE(n);
        const Rational sign(n % 2 == 0 ? 1 : -1);
        CHECK(bernoulli_poly(n).compose(one_minus_x) ==
              bernoulli_poly(n).scaled(sign));
        CHECK(euler_poly(n).compose(one_minus_x) == euler_poly(n).scaled(sign));
    }
}

TEST_CASE("special points: odd B_n vanish at 1/2; E_n(0) = -E_n(1)") {
    for (unsigned n = 1; n <= 29; n += 2) {
        CAPTURE(n);
        CHECK(bernoulli_poly(n).eval(Rational(1, 2)) == Rational(0));
    }
    for (unsigned n = 1; n <= 29; ++n) {
        CAPTURE(n);
        CHECK(euler_poly(n).eval(Rational(0)) == -euler_poly(n).eval(Rational(1)));
    }
}

TEST_CASE("zeta special values at nonpositive integers") {
    CHECK(zeta_neg(1, Rational(1, 2)) == Rational(0));
    CHECK(zeta_neg(2, Rational(1)) == Rational(-1, 12));
    CHECK(zeta_neg(2, Rational(1, 4)) == Rational(1, 96));

    CHECK(zeta_star_neg(0, Rational(1)) == Rational(1, 2));
    CHECK(zeta_star_neg(0, Rational(22, 7)) == Rational(1, 2)); // E_0 = 1
    CHECK(zeta_star_neg(1, Rational(1, 6)) == Rational(-1, 6));
    CHECK(zeta_star_neg(1, Rational(1, 2)) == Rational(0));
}

TEST_CASE("zeta value maps reject arguments outside the supported domain") {
    CHECK_THROWS_AS(zeta_neg(0, Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(zeta_neg(2, Rational(0)), std::domain_error);
    CHECK_THROWS_AS(zeta_neg(2, Rational(-1, 2)), std::domain_error);
    CHECK_THROWS_AS(zeta_star_neg(1, Rational(0)), std::domain_error);
    CHECK_THROWS_AS(zeta_star_neg(1, Rational(-3)), std::domain_error);
}

TEST_CASE("binomial helper") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(30, 15) == mpz_class("155117520"));
    CHECK(binomial(4, 7) == 0);
}
