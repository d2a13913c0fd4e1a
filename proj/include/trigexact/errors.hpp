#ifndef TRIGEXACT_ERRORS_HPP
#define TRIGEXACT_ERRORS_HPP

#include <stdexcept>

namespace trigexact {

/// Thrown when an evaluation point lands on a pole of the requested function.
class pole_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Thrown when two cyclotomic numbers of different orders are combined.
/// Callers are expected to lift operands to a common order first; mixing
/// orders is a programming error, not a data error.
class order_mismatch_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace trigexact

#endif
