#ifndef TRIGEXACT_TRIG_SUM_HPP
#define TRIGEXACT_TRIG_SUM_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "trigexact/cyclotomic.hpp"
#include "trigexact/rational.hpp"
#include "trigexact/real.hpp"

namespace trigexact {

enum class TrigKind { Cos, Sin };

/// One canonical term coeff * kind(pi*k/d), with k/d in lowest terms and
/// 0 <= k/d <= 1/2.
struct TrigTerm {
    Rational coeff;
    TrigKind kind;
    unsigned long k = 0;
    unsigned long d = 1;

    friend bool operator==(const TrigTerm&, const TrigTerm&) = default;
};

/// Finite sum of rational multiples of cos(pi*t) / sin(pi*t) at rational t,
/// kept in a canonical form so exact equality assertions are meaningful:
///   - angles are folded into [0, pi/2] by periodicity and trig symmetries,
///     with signs absorbed into the coefficients;
///   - angles whose cos/sin is rational (0, pi/6, pi/3, pi/2 as applicable)
///     are folded into the rational bucket, carried as a cos(0) term;
///   - equal angles combine, zero terms vanish;
///   - term order is cos before sin, then ascending angle.
class TrigSum {
public:
    /// Accumulate coeff * kind(pi * t) for any rational t.
    void add(TrigKind kind, const Rational& t, const Rational& coeff);

    bool empty() const { return terms_.empty(); }
    std::vector<TrigTerm> terms() const;

    TrigSum scaled(const Rational& s) const;

    /// Numeric value (without any external pi^n factor).
    Real to_real(mpfr_prec_t bits) const;

    /// e.g. "4*sin(pi/3)", "-cos(0) + 1/2*cos(pi/4)"; "0" when empty.
    std::string str() const;
    /// Same sum with \cos / \sin / \pi macros.
    std::string latex() const;

    friend bool operator==(const TrigSum& a, const TrigSum& b) {
        return a.terms_ == b.terms_;
    }

private:
    // Keyed by (kind, t); map order is the canonical term order.
    std::map<std::pair<TrigKind, Rational>, Rational> terms_;

    void accumulate(TrigKind kind, const Rational& t, const Rational& coeff);
};

/// Expansion of a real cyclotomic element into a cosine sum: z = sum_j c_j
/// zeta_m^j with z real equals sum_j c_j cos(2*pi*j/m) by pairing each power
/// with its conjugate. `q` names the theorem denominator the witness came
/// from; the witness order must be lcm(4, 2q).
TrigSum to_trig_sum(const Cyclotomic& witness, unsigned q);

} // namespace trigexact

#endif
