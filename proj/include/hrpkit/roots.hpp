#ifndef HRPKIT_ROOTS_HPP
#define HRPKIT_ROOTS_HPP

#include "hrpkit/interval.hpp"
#include "hrpkit/intpoly.hpp"

#include <vector>

namespace hrpkit {

/// Certified isolating rectangle for one distinct root.  Real roots carry the
/// degenerate box im_lo == im_hi == 0.  Certification: real boxes are proved
/// by exact Sturm counts, complex boxes by a Krawczyk interval-Newton test
/// (K(X) strictly inside X and 0 outside p'(X) imply a unique simple root).
class RootBox {
  public:
    mpq_class re_lo, re_hi, im_lo, im_hi;
    int multiplicity = 1;
    IntPoly source; // squarefree polynomial the certificate refers to

    bool is_real() const { return im_lo == 0 && im_hi == 0; }
    bool is_point() const { return re_lo == re_hi && im_lo == im_hi; }
    mpq_class re_mid() const { return (re_lo + re_hi) / 2; }
    mpq_class im_mid() const { return (im_lo + im_hi) / 2; }
    mpq_class width() const;

    CBox to_cbox(mpfr_prec_t prec) const;
};

/// Argument of a root in [0, 2*pi), with a certified error bound.
struct CertifiedArg {
    mpq_class value;
    mpq_class error_bound;

    mpq_class lo() const { return value - error_bound; }
    mpq_class hi() const { return value + error_bound; }
    FInterval to_interval(mpfr_prec_t prec) const {
        return FInterval::from_bounds_q(lo(), hi(), prec);
    }
};

// All distinct roots of p in certified pairwise-disjoint boxes of width
// <= 2^(-bits), with multiplicities from the squarefree decomposition.
std::vector<RootBox> isolate_roots(const IntPoly& p, long bits);

// The deg(p)/2 roots with positive imaginary part, sorted by ascending real
// part.  p must have no real roots.
std::vector<RootBox> upper_half_sorted(const IntPoly& p, long bits);

// Shrink a box until its width is <= 2^(-bits); the result is nested.
RootBox refine_box(const RootBox& box, long bits);

// Argument in [0, 2*pi) with error <= 2^(-bits).
CertifiedArg argument_of(const RootBox& r, long bits);

// 2*pi as a certified value with error <= 2^(-bits).
CertifiedArg two_pi_arg(long bits);

} // namespace hrpkit

#endif
