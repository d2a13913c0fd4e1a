#include "trigexact/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace trigexact {

namespace {
const Rational kZero{};
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::monomial(int k, const Rational& coeff) {
    if (k < 0) throw std::invalid_argument("Poly::monomial: negative degree");
    if (coeff.is_zero()) return Poly{};
    std::vector<Rational> c(static_cast<std::size_t>(k) + 1);
    c.back() = coeff;
    return Poly(std::move(c));
}

const Rational& Poly::coeff(int k) const {
    if (k < 0 || k > degree()) return kZero;
    return c_[static_cast<std::size_t>(k)];
}

Rational Poly::eval(const Rational& x) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rational> c(std::max(c_.size(), o.c_.size()));
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] = coeff(static_cast<int>(k)) + o.coeff(static_cast<int>(k));
    return Poly(std::move(c));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<Rational> c(std::max(c_.size(), o.c_.size()));
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] = coeff(static_cast<int>(k)) - o.coeff(static_cast<int>(k));
    return Poly(std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly{};
    std::vector<Rational> c(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            c[i + j] += c_[i] * o.c_[j];
    }
    return Poly(std::move(c));
}

Poly Poly::operator-() const {
    std::vector<Rational> c(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) c[k] = -c_[k];
    return Poly(std::move(c));
}

Poly Poly::scaled(const Rational& s) const {
    if (s.is_zero()) return Poly{};
    std::vector<Rational> c(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) c[k] = c_[k] * s;
    return Poly(std::move(c));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("Poly::divmod: division by zero polynomial");
    Poly rem = *this;
    const int dd = divisor.degree();
    if (rem.degree() < dd) return {Poly{}, rem};
    std::vector<Rational> q(static_cast<std::size_t>(rem.degree() - dd) + 1);
    const Rational& lead = divisor.c_.back();
    while (rem.degree() >= dd) {
        const int shift = rem.degree() - dd;
        const Rational f = rem.c_.back() / lead;
        q[static_cast<std::size_t>(shift)] = f;
        for (int k = 0; k <= dd; ++k)
            rem.c_[static_cast<std::size_t>(k + shift)] -= f * divisor.c_[static_cast<std::size_t>(k)];
        rem.trim();
    }
    return {Poly(std::move(q)), rem};
}

Poly Poly::compose(const Poly& inner) const {
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * inner + Poly({*it});
    return acc;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = c_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        const Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        const bool unit = (a == Rational(1));
        if (k == 0) {
            os << a.str();
        } else {
            if (!unit) os << a.str() << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

} // namespace trigexact
