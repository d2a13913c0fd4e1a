#include "trigexact/trig_sum.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace trigexact {

namespace {

const Rational kHalf(1, 2);
const Rational kThird(1, 3);
const Rational kSixth(1, 6);

} // namespace

void TrigSum::accumulate(TrigKind kind, const Rational& t, const Rational& coeff) {
    auto key = std::make_pair(kind, t);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void TrigSum::add(TrigKind kind, const Rational& t_in, const Rational& coeff_in) {
    if (coeff_in.is_zero()) return;
    Rational t = t_in;
    Rational coeff = coeff_in;

    // Fold by the 2*pi period, then by cos(2pi - x) = cos(x) /
    // sin(2pi - x) = -sin(x), then by cos(pi - x) = -cos(x) /
    // sin(pi - x) = sin(x). Result: t in [0, 1/2].
    t -= Rational((t * kHalf).floor()) * Rational(2);
    if (t > Rational(1)) {
        t = Rational(2) - t;
        if (kind == TrigKind::Sin) coeff = -coeff;
    }
    if (t > kHalf) {
        t = Rational(1) - t;
        if (kind == TrigKind::Cos) coeff = -coeff;
    }

    // Angles with rational cos/sin collapse into the cos(0) bucket (Niven's
    // theorem: these are the only rational values at rational angles).
    if (kind == TrigKind::Sin) {
        if (t.is_zero()) return;                                    // sin 0 = 0
        if (t == kHalf) { accumulate(TrigKind::Cos, Rational(), coeff); return; }
        if (t == kSixth) { accumulate(TrigKind::Cos, Rational(), coeff * kHalf); return; }
    } else {
        if (t == kHalf) return;                                     // cos(pi/2) = 0
        if (t == kThird) { accumulate(TrigKind::Cos, Rational(), coeff * kHalf); return; }
    }
    accumulate(kind, t, coeff);
}

std::vector<TrigTerm> TrigSum::terms() const {
    std::vector<TrigTerm> out;
    out.reserve(terms_.size());
    for (const auto& [key, coeff] : terms_) {
        const auto& [kind, t] = key;
        out.push_back({coeff, kind, t.num().get_ui(), t.den().get_ui()});
    }
    return out;
}

TrigSum TrigSum::scaled(const Rational& s) const {
    TrigSum out;
    if (s.is_zero()) return out;
    for (const auto& [key, coeff] : terms_) out.terms_.emplace(key, coeff * s);
    return out;
}

Real TrigSum::to_real(mpfr_prec_t bits) const {
    const mpfr_prec_t work = bits + 64;
    const Real pi = Real::pi(work);
    Real acc(work);
    Real angle(work), value(work);
    for (const auto& [key, coeff] : terms_) {
        const auto& [kind, t] = key;
        mpfr_mul_q(angle.raw(), pi.raw(), t.mpq().get_mpq_t(), MPFR_RNDN);
        if (kind == TrigKind::Cos)
            mpfr_cos(value.raw(), angle.raw(), MPFR_RNDN);
        else
            mpfr_sin(value.raw(), angle.raw(), MPFR_RNDN);
        mpfr_mul_q(value.raw(), value.raw(), coeff.mpq().get_mpq_t(), MPFR_RNDN);
        acc += value;
    }
    Real out(bits);
    mpfr_set(out.raw(), acc.raw(), MPFR_RNDN);
    return out;
}

namespace {

std::string angle_str(unsigned long k, unsigned long d, const char* pi_name,
                      const char* join) {
    if (k == 0) return "0";
    std::ostringstream os;
    if (k != 1) os << k << join;
    os << pi_name;
    if (d != 1) os << "/" << d;
    return os.str();
}

std::string render(const std::vector<TrigTerm>& terms, const char* cos_name,
                   const char* sin_name, const char* pi_name, const char* times,
                   const char* angle_join) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& term : terms) {
        const Rational mag = term.coeff.abs();
        if (first) {
            if (term.coeff.sign() < 0) os << "-";
            first = false;
        } else {
            os << (term.coeff.sign() < 0 ? " - " : " + ");
        }
        if (mag != Rational(1)) os << mag.str() << times;
        os << (term.kind == TrigKind::Cos ? cos_name : sin_name) << "("
           << angle_str(term.k, term.d, pi_name, angle_join) << ")";
    }
    return os.str();
}

} // namespace

std::string TrigSum::str() const {
    return render(terms(), "cos", "sin", "pi", "*", "*");
}

std::string TrigSum::latex() const {
    return render(terms(), "\\cos", "\\sin", "\\pi", " ", "");
}

TrigSum to_trig_sum(const Cyclotomic& witness, unsigned q) {
    const unsigned m = witness.order();
    if (m != std::lcm(4u, 2 * q))
        throw std::invalid_argument("to_trig_sum: witness order does not match q");
    if (!(witness == witness.conj()))
        throw std::invalid_argument("to_trig_sum: witness is not real");
    TrigSum out;
    const unsigned phi = euler_phi(m);
    for (unsigned j = 0; j < phi; ++j) {
        const Rational& c = witness.coord(j);
        if (c.is_zero()) continue;
        // zeta^j contributes c*cos(2*pi*j/m); the sines cancel pairwise
        // because the element equals its own conjugate.
        out.add(TrigKind::Cos, Rational(2L * j, static_cast<long>(m)), c);
    }
    return out;
}

} // namespace trigexact
