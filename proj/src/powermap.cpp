#include "hrpkit/factorize.hpp"
#include "hrpkit/intpoly.hpp"
#include "hrpkit/roots.hpp"

#include <stdexcept>

namespace hrpkit {

IntPoly power_map_minpoly(const IntPoly& m, long n, const RootBox& root) {
    (void)root; // the minimal polynomial of alpha^n is the same for every root of m
    if (m.is_zero() || m.degree() < 1)
        throw std::domain_error("power_map_minpoly: degree >= 1 required");
    if (n < 1)
        throw std::domain_error("power_map_minpoly: n must be positive");
    IntPoly prod = power_product_poly(m, n);
    IntPoly sf = squarefree_part(prod);
    // select the irreducible factor vanishing on the orbit {alpha_j^n}:
    // m(y) | F(y^n) holds for exactly one factor F, checked by exact reduction.
    RatPoly ypow = rem(RatPoly(IntPoly::monomial(1, static_cast<std::size_t>(n))), m);
    for (const auto& [factor, mult] : factor_over_Q(sf)) {
        (void)mult;
        // evaluate F at y^n modulo m via Horner over Q[y]/(m)
        RatPoly acc;
        for (int j = factor.degree(); j >= 0; --j) {
            acc = rem(acc * ypow, m);
            acc = acc + RatPoly(IntPoly::constant(factor.cf(static_cast<std::size_t>(j))));
        }
        if (rem(acc, m).is_zero())
            return normalized_primitive(factor);
    }
    throw std::logic_error("power_map_minpoly: no factor matched the power orbit");
}

} // namespace hrpkit
