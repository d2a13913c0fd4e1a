#include "trigexact/rational.hpp"

#include <cctype>

namespace trigexact {

Rational Rational::from_string(std::string_view s) {
    const auto bad = [&] {
        throw std::invalid_argument("invalid rational literal: '" + std::string(s) + "'");
    };

    std::size_t i = 0;
    if (s.empty()) bad();
    const bool negative = s[i] == '-';
    if (s[i] == '+' || s[i] == '-') ++i;

    std::size_t num_begin = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == num_begin) bad();

    std::string_view den_part;
    if (i < s.size()) {
        if (s[i] != '/') bad();
        den_part = s.substr(i + 1);
        if (den_part.empty()) bad();
        for (char c : den_part)
            if (!std::isdigit(static_cast<unsigned char>(c))) bad();
    }

    mpz_class num(std::string(s.substr(num_begin, i - num_begin)));
    if (negative) num = -num;
    mpz_class den(1);
    if (!den_part.empty()) {
        den = mpz_class(std::string(den_part));
        if (den == 0) bad();
    }
    return Rational(num, den);
}

Rational Rational::pow(const Rational& r, long e) {
    if (e == 0) return Rational(1);
    const bool invert = e < 0;
    if (invert && r.is_zero()) throw std::domain_error("Rational::pow: 0 to negative power");
    const unsigned long ue = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), r.v_.get_num_mpz_t(), ue);
    mpz_pow_ui(d.get_mpz_t(), r.v_.get_den_mpz_t(), ue);
    return invert ? Rational(d, n) : Rational(n, d);
}

} // namespace trigexact
