#ifndef TRIGEXACT_CYCLOTOMIC_HPP
#define TRIGEXACT_CYCLOTOMIC_HPP

#include <vector>

#include "trigexact/poly.hpp"
#include "trigexact/rational.hpp"
#include "trigexact/real.hpp"

namespace trigexact {

/// n-th cyclotomic polynomial, exact and cached. phi(n) = its degree.
const Poly& cyclotomic_poly(unsigned n);
unsigned euler_phi(unsigned n);

class Cyclotomic;

/// True iff z equals its own conjugate, i.e. z lies in the real subfield.
/// Exact check on canonical coordinates, no numerics involved.
bool is_real(const Cyclotomic& z);

/// Element of the cyclotomic field Q(zeta_m), stored in the canonical basis
/// 1, zeta, ..., zeta^(phi(m)-1) after reduction modulo the m-th cyclotomic
/// polynomial. Equality of elements is equality of canonical coordinates.
class Cyclotomic {
public:
    /// Zero element of Q(zeta_m).
    explicit Cyclotomic(unsigned m);

    /// Rational constant embedded in Q(zeta_m).
    Cyclotomic(unsigned m, const Rational& value);

    /// zeta_m^j (j taken mod m), reduced to the canonical basis.
    static Cyclotomic zeta_power(unsigned m, long j);

    unsigned order() const { return m_; }

    /// Canonical coordinate of zeta^k, 0 <= k < phi(m).
    const Rational& coord(unsigned k) const;

    bool is_zero() const;

    /// True iff the element lies in Q (all coordinates beyond the constant
    /// vanish).
    bool is_rational() const;

    /// The constant coordinate; meaningful as the value only when
    /// is_rational() holds.
    const Rational& rational_part() const { return coord(0); }

    /// Complex conjugate: zeta^j -> zeta^(m-j).
    Cyclotomic conj() const;

    /// Image in Q(zeta_M) for m | M, via zeta_m = zeta_M^(M/m).
    Cyclotomic lift(unsigned big_order) const;

    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    Cyclotomic operator-() const;
    Cyclotomic scaled(const Rational& s) const;

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

    /// Numeric embedding zeta_m -> exp(2*pi*i/m) at the requested precision.
    Complex to_complex(mpfr_prec_t bits) const;

private:
    unsigned m_;
    std::vector<Rational> c_; // length phi(m_)

    void check_order(const Cyclotomic& o) const;
};

inline bool is_real(const Cyclotomic& z) { return z == z.conj(); }

} // namespace trigexact

#endif
