#include "trigexact/real.hpp"

#include <cstdlib>

namespace trigexact {

std::string Real::str(int sig_digits) const {
    char* buf = nullptr;
    // %Re prints one digit before the point, so sig_digits-1 after it.
    mpfr_asprintf(&buf, "%.*Re", sig_digits - 1, x_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

} // namespace trigexact
