#ifndef HRPKIT_FACTORIZE_HPP
#define HRPKIT_FACTORIZE_HPP

#include "hrpkit/intpoly.hpp"

#include <vector>

namespace hrpkit {

inline constexpr int kFactorDegreeLimit = 24;

// Factorization over Q: primitive irreducible factors with positive leading
// coefficients and multiplicities; the content is dropped.  Degree <= 24.
std::vector<std::pair<IntPoly, int>> factor_over_Q(const IntPoly& p);

bool is_irreducible(const IntPoly& p);

} // namespace hrpkit

#endif
