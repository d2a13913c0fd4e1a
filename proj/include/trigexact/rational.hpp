#ifndef TRIGEXACT_RATIONAL_HPP
#define TRIGEXACT_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace trigexact {

/// Exact rational scalar on top of GMP's mpq_t.
///
/// Always held in canonical form: gcd(|num|, den) = 1 and den > 0. Every
/// constructor and arithmetic operator preserves this, so two Rationals are
/// equal iff their components are.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(unsigned long n) : v_(n) {}
    Rational(int n) : v_(static_cast<long>(n)) {}

    Rational(long num, long den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    explicit Rational(const mpz_class& n) : v_(n) {}

    explicit Rational(mpq_class q) : v_(std::move(q)) {
        if (v_.get_den() == 0) throw std::invalid_argument("Rational: zero denominator");
        v_.canonicalize();
    }

    /// Strict parse of "p", "+p", "-p", "p/q" (base 10, no whitespace).
    static Rational from_string(std::string_view s);

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    const mpq_class& mpq() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    mpz_class floor() const {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
        return q;
    }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    /// r^e for integer e; e < 0 requires r != 0.
    static Rational pow(const Rational& r, long e);

    friend Rational operator+(const Rational& a, const Rational& b) { return wrap(a.v_ + b.v_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return wrap(a.v_ - b.v_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return wrap(a.v_ * b.v_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return wrap(a.v_ / b.v_);
    }
    Rational operator-() const { return wrap(-v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    /// "p/q", or just "p" when the denominator is 1.
    std::string str() const { return v_.get_str(); }

    double to_double() const { return v_.get_d(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    static Rational wrap(mpq_class q) {
        Rational r;
        r.v_ = std::move(q); // GMP arithmetic keeps canonical form
        return r;
    }

    mpq_class v_;
};

} // namespace trigexact

#endif
