#ifndef HRPKIT_INTERVAL_HPP
#define HRPKIT_INTERVAL_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

#include "hrpkit/intpoly.hpp"

namespace hrpkit {

/// RAII wrapper around one mpfr_t value.
class Real {
  public:
    explicit Real(mpfr_prec_t prec = 64) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    Real(const Real& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, 2);
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        if (this != &o)
            mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    mpfr_ptr ptr() { return v_; }
    mpfr_srcptr ptr() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    mpq_class to_mpq() const; // exact (value must be finite)

    static Real from_mpq(const mpq_class& q, mpfr_prec_t prec, mpfr_rnd_t rnd);
    static Real from_mpz(const mpz_class& z, mpfr_prec_t prec, mpfr_rnd_t rnd);
    static Real from_double(double d, mpfr_prec_t prec);

    int cmp(const Real& o) const { return mpfr_cmp(v_, o.v_); }
    int sgn() const { return mpfr_sgn(v_); }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }

  private:
    mpfr_t v_;
};

/// Closed real interval [lo, hi] with outward-rounded arithmetic.
class FInterval {
  public:
    FInterval() = default;
    FInterval(Real lo, Real hi) : lo_(std::move(lo)), hi_(std::move(hi)) {}

    static FInterval point_q(const mpq_class& q, mpfr_prec_t prec);
    static FInterval point_z(const mpz_class& z, mpfr_prec_t prec);
    static FInterval from_bounds_q(const mpq_class& lo, const mpq_class& hi, mpfr_prec_t prec);
    static FInterval point(const Real& x);
    static FInterval zero(mpfr_prec_t prec);

    const Real& lo() const { return lo_; }
    const Real& hi() const { return hi_; }

    FInterval add(const FInterval& o, mpfr_prec_t prec) const;
    FInterval sub(const FInterval& o, mpfr_prec_t prec) const;
    FInterval mul(const FInterval& o, mpfr_prec_t prec) const;
    FInterval div(const FInterval& o, mpfr_prec_t prec) const; // o must not contain 0
    FInterval neg() const;
    FInterval square(mpfr_prec_t prec) const;  // lower bound clamped at 0 when 0 inside
    FInterval sqrt(mpfr_prec_t prec) const;    // lo must be >= 0
    FInterval abs(mpfr_prec_t prec) const;

    bool contains_zero() const;
    int sign() const; // -1 entirely negative, +1 entirely positive, 0 otherwise
    bool strictly_inside(const FInterval& outer) const;
    bool intersects(const FInterval& o) const;
    FInterval intersect(const FInterval& o, mpfr_prec_t prec) const;

    Real mid(mpfr_prec_t prec) const;
    Real width(mpfr_prec_t prec) const; // upper bound of hi - lo
    // true when width <= 2^e
    bool width_le_2exp(long e) const;

    mpq_class lo_q() const { return lo_.to_mpq(); }
    mpq_class hi_q() const { return hi_.to_mpq(); }

  private:
    Real lo_, hi_;
};

/// Axis-aligned complex rectangle.
struct CBox {
    FInterval re, im;

    static CBox point_q(const mpq_class& x, const mpq_class& y, mpfr_prec_t prec);
    static CBox from_bounds_q(const mpq_class& rlo, const mpq_class& rhi,
                              const mpq_class& ilo, const mpq_class& ihi, mpfr_prec_t prec);
    static CBox one(mpfr_prec_t prec);

    CBox add(const CBox& o, mpfr_prec_t prec) const;
    CBox sub(const CBox& o, mpfr_prec_t prec) const;
    CBox mul(const CBox& o, mpfr_prec_t prec) const;
    CBox conj() const;
    CBox neg() const;
    // z^e for e >= 0; with unimodular=true negative exponents use conjugation
    // (valid only when the box encloses a number of modulus exactly 1).
    CBox pow(long e, mpfr_prec_t prec, bool unimodular_inverse = false) const;

    FInterval abs2(mpfr_prec_t prec) const;
    FInterval abs(mpfr_prec_t prec) const;

    bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
    bool strictly_inside(const CBox& outer) const {
        return re.strictly_inside(outer.re) && im.strictly_inside(outer.im);
    }
    bool intersects(const CBox& o) const { return re.intersects(o.re) && im.intersects(o.im); }
};

/// Complex point arithmetic at a fixed precision (round-to-nearest); used for
/// heuristic iterations whose results are certified afterwards.
struct CPoint {
    Real re, im;

    explicit CPoint(mpfr_prec_t prec = 64) : re(prec), im(prec) {}
    static CPoint from_doubles(double x, double y, mpfr_prec_t prec);

    CPoint add(const CPoint& o, mpfr_prec_t prec) const;
    CPoint sub(const CPoint& o, mpfr_prec_t prec) const;
    CPoint mul(const CPoint& o, mpfr_prec_t prec) const;
    CPoint div(const CPoint& o, mpfr_prec_t prec) const;
    double abs_d() const;
};

// Interval Horner evaluation of p over X.
CBox eval_box(const IntPoly& p, const CBox& x, mpfr_prec_t prec);
// Point evaluation (round-to-nearest), for heuristic Newton steps.
CPoint eval_point(const IntPoly& p, const CPoint& z, mpfr_prec_t prec);

// Enclosure of pi and 2*pi.
FInterval pi_interval(mpfr_prec_t prec);
FInterval two_pi_interval(mpfr_prec_t prec);

// Enclosure of arg over a rectangle that excludes 0 and does not straddle the
// branch cut (the positive real axis).  Values in (-pi, pi].
FInterval arg_interval(const CBox& b, mpfr_prec_t prec);

// floor(C * x) when certified (floor of both endpoints agree).
std::optional<mpz_class> certified_floor_scaled(const FInterval& x, const mpz_class& c,
                                                mpfr_prec_t prec);

} // namespace hrpkit

#endif
