#ifndef HRPKIT_PARSE_HPP
#define HRPKIT_PARSE_HPP

#include "hrpkit/intpoly.hpp"

#include <string>

namespace hrpkit {

// Comma-separated ascending integer coefficients, optional whitespace and
// leading signs (ASCII or U+2212).  Throws std::invalid_argument with the
// offending position; the zero polynomial is rejected.
IntPoly parse_poly(const std::string& text);

// Canonical round-trip form "c0,c1,...,cd" (no spaces).
std::string poly_to_string(const IntPoly& p);

} // namespace hrpkit

#endif
