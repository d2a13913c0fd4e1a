#ifndef TRIGEXACT_POLY_HPP
#define TRIGEXACT_POLY_HPP

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "trigexact/rational.hpp"

namespace trigexact {

/// Dense univariate polynomial with exact rational coefficients.
/// coeff(k) is the coefficient of x^k; the zero polynomial has an empty
/// coefficient vector and degree() == -1.
class Poly {
public:
    Poly() = default;

    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

    static Poly one() { return Poly({Rational(1)}); }

    static Poly monomial(int k, const Rational& coeff = Rational(1));

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    const Rational& coeff(int k) const;
    std::span<const Rational> coeffs() const { return c_; }

    /// Exact Horner evaluation. Empty polynomial evaluates to 0.
    Rational eval(const Rational& x) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly scaled(const Rational& s) const;

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;

    /// this(inner(x)), by Horner over polynomials.
    Poly compose(const Poly& inner) const;

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return c_ != o.c_; }

    /// Degree-descending human form, e.g. "x^2 - x + 1/6".
    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> c_;
};

} // namespace trigexact

#endif
