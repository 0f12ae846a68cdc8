#ifndef HRPKIT_CHEB_HPP
#define HRPKIT_CHEB_HPP

#include "hrpkit/intpoly.hpp"

namespace hrpkit {

/// Half coefficient vector (c_0, ..., c_{d/2}) of a reciprocal polynomial of
/// even degree d; c_0 is the leading (and trailing) coefficient.
struct HalfCoeffs {
    int d = 0; // even, positive
    std::vector<mpz_class> coeffs; // length d/2 + 1, coeffs[0] != 0

    HalfCoeffs() = default;
    HalfCoeffs(int degree, std::vector<mpz_class> half);
};

// Scaled Chebyshev polynomial T*_n with T*_n(x + 1/x) = x^n + x^-n (T*_0 = 1).
IntPoly cheb_star(int n);

// c_{d/2} x^{d/2} + sum_{j<d/2} c_j (x^j + x^{d-j})
IntPoly expand_reciprocal(const HalfCoeffs& h);

// g(y) = sum_j c_j T*_{d/2-j}(y); x^{d/2} g(x + 1/x) == expand_reciprocal(h)
IntPoly trace_poly(const HalfCoeffs& h);

// True iff expand_reciprocal(h) has all d roots on the unit circle, counted
// with multiplicity (g has d/2 real roots in the closed interval [-2, 2]).
bool all_roots_on_circle(const HalfCoeffs& h);

// Same test for an arbitrary even-degree reciprocal polynomial.
bool all_roots_on_circle(const IntPoly& p);

// Circle-root count (with multiplicity) of an inverse-closed polynomial with
// h* == h, no roots at +-1. Internal building block shared with schur_cohn.
int circle_pairs_of_reciprocal(const IntPoly& h);

} // namespace hrpkit

#endif
