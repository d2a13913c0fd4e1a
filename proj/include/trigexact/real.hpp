#ifndef TRIGEXACT_REAL_HPP
#define TRIGEXACT_REAL_HPP

#include <mpfr.h>

#include <string>

#include "trigexact/rational.hpp"

namespace trigexact {

/// Arbitrary-precision real on top of mpfr_t. Each value carries its own
/// precision in bits; binary operations compute at the larger of the two
/// operand precisions. Comparisons are exact on the stored values.
class Real {
public:
    explicit Real(mpfr_prec_t prec = 128) {
        mpfr_init2(x_, prec);
        mpfr_set_zero(x_, 1);
    }

    Real(long v, mpfr_prec_t prec) {
        mpfr_init2(x_, prec);
        mpfr_set_si(x_, v, MPFR_RNDN);
    }

    Real(double v, mpfr_prec_t prec) {
        mpfr_init2(x_, prec);
        mpfr_set_d(x_, v, MPFR_RNDN);
    }

    Real(const Rational& q, mpfr_prec_t prec) {
        mpfr_init2(x_, prec);
        mpfr_set_q(x_, q.mpq().get_mpq_t(), MPFR_RNDN);
    }

    Real(const Real& o) {
        mpfr_init2(x_, mpfr_get_prec(o.x_));
        mpfr_set(x_, o.x_, MPFR_RNDN);
    }

    Real(Real&& o) noexcept {
        mpfr_init2(x_, mpfr_get_prec(o.x_));
        mpfr_swap(x_, o.x_);
    }

    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(x_, mpfr_get_prec(o.x_));
            mpfr_set(x_, o.x_, MPFR_RNDN);
        }
        return *this;
    }

    Real& operator=(Real&& o) noexcept {
        if (this != &o) mpfr_swap(x_, o.x_);
        return *this;
    }

    ~Real() { mpfr_clear(x_); }

    mpfr_prec_t prec() const { return mpfr_get_prec(x_); }
    mpfr_ptr raw() { return x_; }
    mpfr_srcptr raw() const { return x_; }

    static Real pi(mpfr_prec_t prec) {
        Real r(prec);
        mpfr_const_pi(r.x_, MPFR_RNDN);
        return r;
    }

    /// 2^e, exact.
    static Real pow2(long e, mpfr_prec_t prec = 64) {
        Real r(prec);
        mpfr_set_ui_2exp(r.x_, 1, e, MPFR_RNDN);
        return r;
    }

    bool is_zero() const { return mpfr_zero_p(x_) != 0; }
    int sign() const { return mpfr_sgn(x_); }
    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }

    /// Scientific form with the given number of significant digits.
    std::string str(int sig_digits = 40) const;

    friend Real operator+(const Real& a, const Real& b) { return binop(a, b, mpfr_add); }
    friend Real operator-(const Real& a, const Real& b) { return binop(a, b, mpfr_sub); }
    friend Real operator*(const Real& a, const Real& b) { return binop(a, b, mpfr_mul); }
    friend Real operator/(const Real& a, const Real& b) { return binop(a, b, mpfr_div); }

    Real operator-() const {
        Real r(prec());
        mpfr_neg(r.x_, x_, MPFR_RNDN);
        return r;
    }

    Real& operator+=(const Real& o) { mpfr_add(x_, x_, o.x_, MPFR_RNDN); return *this; }
    Real& operator-=(const Real& o) { mpfr_sub(x_, x_, o.x_, MPFR_RNDN); return *this; }
    Real& operator*=(const Real& o) { mpfr_mul(x_, x_, o.x_, MPFR_RNDN); return *this; }

    friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) == 0; }
    friend bool operator!=(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) != 0; }
    friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) < 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) <= 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) > 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) >= 0; }

private:
    using BinFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
    static Real binop(const Real& a, const Real& b, BinFn fn) {
        Real r(std::max(a.prec(), b.prec()));
        fn(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }

    mpfr_t x_;
};

inline Real abs(const Real& a) {
    Real r(a.prec());
    mpfr_abs(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

inline Real sqrt(const Real& a) {
    Real r(a.prec());
    mpfr_sqrt(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

inline Real pow_ui(const Real& a, unsigned long e) {
    Real r(a.prec());
    mpfr_pow_ui(r.raw(), a.raw(), e, MPFR_RNDN);
    return r;
}

inline Real ldexp2(const Real& a, long e) {
    Real r(a.prec());
    mpfr_mul_2si(r.raw(), a.raw(), e, MPFR_RNDN);
    return r;
}

inline void sin_cos(Real& s, Real& c, const Real& angle) {
    mpfr_sin_cos(s.raw(), c.raw(), angle.raw(), MPFR_RNDN);
}

#define TRIGEXACT_REAL_UNARY(name, mpfr_name)       \
    inline Real name(const Real& a) {               \
        Real r(a.prec());                           \
        mpfr_name(r.raw(), a.raw(), MPFR_RNDN);     \
        return r;                                   \
    }
TRIGEXACT_REAL_UNARY(cos, mpfr_cos)
TRIGEXACT_REAL_UNARY(sin, mpfr_sin)
TRIGEXACT_REAL_UNARY(tan, mpfr_tan)
TRIGEXACT_REAL_UNARY(sec, mpfr_sec)
TRIGEXACT_REAL_UNARY(csc, mpfr_csc)
TRIGEXACT_REAL_UNARY(cot, mpfr_cot)
#undef TRIGEXACT_REAL_UNARY

/// Minimal complex pair for numeric cross-checks; both parts share precision.
struct Complex {
    Real re, im;

    explicit Complex(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

    static Complex from_unit_angle(const Real& angle) {
        Complex z(angle.prec());
        sin_cos(z.im, z.re, angle);
        return z;
    }

    Complex operator+(const Complex& o) const { return {re + o.re, im + o.im}; }
    Complex operator-(const Complex& o) const { return {re - o.re, im - o.im}; }
    Complex operator*(const Complex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    Complex scaled(const Real& s) const { return {re * s, im * s}; }
    Complex conj() const { return {re, -im}; }

    Real abs() const { return sqrt(re * re + im * im); }
};

} // namespace trigexact

#endif
