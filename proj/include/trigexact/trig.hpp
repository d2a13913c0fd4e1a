#ifndef TRIGEXACT_TRIG_HPP
#define TRIGEXACT_TRIG_HPP

#include <optional>
#include <string>
#include <string_view>

namespace trigexact {

enum class Trig { Cot, Csc, Tan, Sec };

constexpr std::string_view name(Trig fn) {
    switch (fn) {
        case Trig::Cot: return "cot";
        case Trig::Csc: return "csc";
        case Trig::Tan: return "tan";
        case Trig::Sec: return "sec";
    }
    return "?";
}

inline std::optional<Trig> trig_from_name(std::string_view s) {
    if (s == "cot") return Trig::Cot;
    if (s == "csc") return Trig::Csc;
    if (s == "tan") return Trig::Tan;
    if (s == "sec") return Trig::Sec;
    return std::nullopt;
}

/// cot/csc have poles at integers, tan/sec at half-integers.
constexpr bool pole_at_integers(Trig fn) {
    return fn == Trig::Cot || fn == Trig::Csc;
}

/// cot/tan have period 1; csc/sec have antiperiod 1 (f(x+1) = -f(x)).
constexpr bool antiperiodic(Trig fn) {
    return fn == Trig::Csc || fn == Trig::Sec;
}

} // namespace trigexact

#endif
