#include "hrpkit/interval.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hrpkit {

// --- Real ---------------------------------------------------------------------

mpq_class Real::to_mpq() const {
    if (!mpfr_number_p(v_))
        throw std::domain_error("Real::to_mpq: value not finite");
    if (mpfr_zero_p(v_))
        return mpq_class(0);
    mpz_class mant;
    mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), v_);
    mpq_class q(mant);
    if (e >= 0) {
        mpz_class p2;
        mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(e));
        q *= mpq_class(p2);
    } else {
        mpz_class p2;
        mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(-e));
        q /= mpq_class(p2);
    }
    return q;
}

Real Real::from_mpq(const mpq_class& q, mpfr_prec_t prec, mpfr_rnd_t rnd) {
    Real r(prec);
    mpfr_set_q(r.v_, q.get_mpq_t(), rnd);
    return r;
}

Real Real::from_mpz(const mpz_class& z, mpfr_prec_t prec, mpfr_rnd_t rnd) {
    Real r(prec);
    mpfr_set_z(r.v_, z.get_mpz_t(), rnd);
    return r;
}

Real Real::from_double(double d, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_d(r.v_, d, MPFR_RNDN);
    return r;
}

// --- FInterval ------------------------------------------------------------------

FInterval FInterval::point_q(const mpq_class& q, mpfr_prec_t prec) {
    return FInterval(Real::from_mpq(q, prec, MPFR_RNDD), Real::from_mpq(q, prec, MPFR_RNDU));
}

FInterval FInterval::point_z(const mpz_class& z, mpfr_prec_t prec) {
    return FInterval(Real::from_mpz(z, prec, MPFR_RNDD), Real::from_mpz(z, prec, MPFR_RNDU));
}

FInterval FInterval::from_bounds_q(const mpq_class& lo, const mpq_class& hi, mpfr_prec_t prec) {
    return FInterval(Real::from_mpq(lo, prec, MPFR_RNDD), Real::from_mpq(hi, prec, MPFR_RNDU));
}

FInterval FInterval::point(const Real& x) { return FInterval(x, x); }

FInterval FInterval::zero(mpfr_prec_t prec) {
    Real z(prec);
    return FInterval(z, z);
}

FInterval FInterval::add(const FInterval& o, mpfr_prec_t prec) const {
    Real l(prec), h(prec);
    mpfr_add(l.ptr(), lo_.ptr(), o.lo_.ptr(), MPFR_RNDD);
    mpfr_add(h.ptr(), hi_.ptr(), o.hi_.ptr(), MPFR_RNDU);
    return FInterval(std::move(l), std::move(h));
}

FInterval FInterval::sub(const FInterval& o, mpfr_prec_t prec) const {
    Real l(prec), h(prec);
    mpfr_sub(l.ptr(), lo_.ptr(), o.hi_.ptr(), MPFR_RNDD);
    mpfr_sub(h.ptr(), hi_.ptr(), o.lo_.ptr(), MPFR_RNDU);
    return FInterval(std::move(l), std::move(h));
}

FInterval FInterval::mul(const FInterval& o, mpfr_prec_t prec) const {
    mpfr_srcptr a[2] = {lo_.ptr(), hi_.ptr()};
    mpfr_srcptr b[2] = {o.lo_.ptr(), o.hi_.ptr()};
    Real l(prec), h(prec), t(prec);
    bool first = true;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            mpfr_mul(t.ptr(), a[i], b[j], MPFR_RNDD);
            if (first || mpfr_cmp(t.ptr(), l.ptr()) < 0)
                mpfr_set(l.ptr(), t.ptr(), MPFR_RNDD);
            mpfr_mul(t.ptr(), a[i], b[j], MPFR_RNDU);
            if (first || mpfr_cmp(t.ptr(), h.ptr()) > 0)
                mpfr_set(h.ptr(), t.ptr(), MPFR_RNDU);
            first = false;
        }
    return FInterval(std::move(l), std::move(h));
}

FInterval FInterval::div(const FInterval& o, mpfr_prec_t prec) const {
    if (o.contains_zero())
        throw std::domain_error("interval division by interval containing zero");
    mpfr_srcptr a[2] = {lo_.ptr(), hi_.ptr()};
    mpfr_srcptr b[2] = {o.lo_.ptr(), o.hi_.ptr()};
    Real l(prec), h(prec), t(prec);
    bool first = true;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            mpfr_div(t.ptr(), a[i], b[j], MPFR_RNDD);
            if (first || mpfr_cmp(t.ptr(), l.ptr()) < 0)
                mpfr_set(l.ptr(), t.ptr(), MPFR_RNDD);
            mpfr_div(t.ptr(), a[i], b[j], MPFR_RNDU);
            if (first || mpfr_cmp(t.ptr(), h.ptr()) > 0)
                mpfr_set(h.ptr(), t.ptr(), MPFR_RNDU);
            first = false;
        }
    return FInterval(std::move(l), std::move(h));
}

FInterval FInterval::neg() const {
    FInterval r;
    Real l = hi_, h = lo_;
    mpfr_neg(l.ptr(), l.ptr(), MPFR_RNDD);
    mpfr_neg(h.ptr(), h.ptr(), MPFR_RNDU);
    return FInterval(std::move(l), std::move(h));
}

FInterval FInterval::square(mpfr_prec_t prec) const {
    Real l(prec), h(prec), t(prec);
    if (contains_zero()) {
        mpfr_set_zero(l.ptr(), 1);
        mpfr_sqr(h.ptr(), lo_.ptr(), MPFR_RNDU);
        mpfr_sqr(t.ptr(), hi_.ptr(), MPFR_RNDU);
        if (mpfr_cmp(t.ptr(), h.ptr()) > 0)
            mpfr_set(h.ptr(), t.ptr(), MPFR_RNDU);
        return FInterval(std::move(l), std::move(h));
    }
    if (mpfr_sgn(lo_.ptr()) > 0) {
        mpfr_sqr(l.ptr(), lo_.ptr(), MPFR_RNDD);
        mpfr_sqr(h.ptr(), hi_.ptr(), MPFR_RNDU);
    } else {
        mpfr_sqr(l.ptr(), hi_.ptr(), MPFR_RNDD);
        mpfr_sqr(h.ptr(), lo_.ptr(), MPFR_RNDU);
    }
    return FInterval(std::move(l), std::move(h));
}

FInterval FInterval::sqrt(mpfr_prec_t prec) const {
    Real l(prec), h(prec);
    if (mpfr_sgn(lo_.ptr()) < 0)
        mpfr_set_zero(l.ptr(), 1);
    else
        mpfr_sqrt(l.ptr(), lo_.ptr(), MPFR_RNDD);
    mpfr_sqrt(h.ptr(), hi_.ptr(), MPFR_RNDU);
    return FInterval(std::move(l), std::move(h));
}

FInterval FInterval::abs(mpfr_prec_t prec) const {
    Real l(prec), h(prec), t(prec);
    if (contains_zero()) {
        mpfr_set_zero(l.ptr(), 1);
        mpfr_abs(h.ptr(), lo_.ptr(), MPFR_RNDU);
        mpfr_abs(t.ptr(), hi_.ptr(), MPFR_RNDU);
        if (mpfr_cmp(t.ptr(), h.ptr()) > 0)
            mpfr_set(h.ptr(), t.ptr(), MPFR_RNDU);
        return FInterval(std::move(l), std::move(h));
    }
    if (mpfr_sgn(lo_.ptr()) > 0)
        return *this;
    return neg();
}

bool FInterval::contains_zero() const {
    return mpfr_sgn(lo_.ptr()) <= 0 && mpfr_sgn(hi_.ptr()) >= 0;
}

int FInterval::sign() const {
    if (mpfr_sgn(lo_.ptr()) > 0)
        return 1;
    if (mpfr_sgn(hi_.ptr()) < 0)
        return -1;
    return 0;
}

bool FInterval::strictly_inside(const FInterval& outer) const {
    return mpfr_cmp(outer.lo_.ptr(), lo_.ptr()) < 0 && mpfr_cmp(hi_.ptr(), outer.hi_.ptr()) < 0;
}

bool FInterval::intersects(const FInterval& o) const {
    return !(mpfr_cmp(hi_.ptr(), o.lo_.ptr()) < 0 || mpfr_cmp(o.hi_.ptr(), lo_.ptr()) < 0);
}

FInterval FInterval::intersect(const FInterval& o, mpfr_prec_t prec) const {
    Real l(prec), h(prec);
    mpfr_set(l.ptr(), mpfr_cmp(lo_.ptr(), o.lo_.ptr()) >= 0 ? lo_.ptr() : o.lo_.ptr(), MPFR_RNDD);
    mpfr_set(h.ptr(), mpfr_cmp(hi_.ptr(), o.hi_.ptr()) <= 0 ? hi_.ptr() : o.hi_.ptr(), MPFR_RNDU);
    if (mpfr_cmp(l.ptr(), h.ptr()) > 0)
        throw std::domain_error("empty interval intersection");
    return FInterval(std::move(l), std::move(h));
}

Real FInterval::mid(mpfr_prec_t prec) const {
    Real m(prec);
    mpfr_add(m.ptr(), lo_.ptr(), hi_.ptr(), MPFR_RNDN);
    mpfr_div_2ui(m.ptr(), m.ptr(), 1, MPFR_RNDN);
    return m;
}

Real FInterval::width(mpfr_prec_t prec) const {
    Real w(prec);
    mpfr_sub(w.ptr(), hi_.ptr(), lo_.ptr(), MPFR_RNDU);
    return w;
}

bool FInterval::width_le_2exp(long e) const {
    Real w = width(64);
    if (mpfr_zero_p(w.ptr()) || mpfr_sgn(w.ptr()) < 0)
        return true;
    return mpfr_cmp_ui_2exp(w.ptr(), 1, e) <= 0;
}

// --- CBox -------------------------------------------------------------------------

CBox CBox::point_q(const mpq_class& x, const mpq_class& y, mpfr_prec_t prec) {
    return CBox{FInterval::point_q(x, prec), FInterval::point_q(y, prec)};
}

CBox CBox::from_bounds_q(const mpq_class& rlo, const mpq_class& rhi, const mpq_class& ilo,
                         const mpq_class& ihi, mpfr_prec_t prec) {
    return CBox{FInterval::from_bounds_q(rlo, rhi, prec), FInterval::from_bounds_q(ilo, ihi, prec)};
}

CBox CBox::one(mpfr_prec_t prec) {
    return CBox{FInterval::point_z(1, prec), FInterval::zero(prec)};
}

CBox CBox::add(const CBox& o, mpfr_prec_t prec) const {
    return CBox{re.add(o.re, prec), im.add(o.im, prec)};
}

CBox CBox::sub(const CBox& o, mpfr_prec_t prec) const {
    return CBox{re.sub(o.re, prec), im.sub(o.im, prec)};
}

CBox CBox::mul(const CBox& o, mpfr_prec_t prec) const {
    FInterval ac = re.mul(o.re, prec);
    FInterval bd = im.mul(o.im, prec);
    FInterval ad = re.mul(o.im, prec);
    FInterval bc = im.mul(o.re, prec);
    return CBox{ac.sub(bd, prec), ad.add(bc, prec)};
}

CBox CBox::conj() const { return CBox{re, im.neg()}; }

CBox CBox::neg() const { return CBox{re.neg(), im.neg()}; }

CBox CBox::pow(long e, mpfr_prec_t prec, bool unimodular_inverse) const {
    if (e == 0)
        return one(prec);
    CBox base = *this;
    if (e < 0) {
        if (!unimodular_inverse)
            throw std::domain_error("CBox::pow: negative exponent requires unimodular_inverse");
        base = conj();
        e = -e;
    }
    CBox acc = one(prec);
    CBox sq = base;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1)
            acc = acc.mul(sq, prec);
        k >>= 1;
        if (k)
            sq = sq.mul(sq, prec);
    }
    return acc;
}

FInterval CBox::abs2(mpfr_prec_t prec) const {
    return re.square(prec).add(im.square(prec), prec);
}

FInterval CBox::abs(mpfr_prec_t prec) const { return abs2(prec).sqrt(prec); }

// --- CPoint ------------------------------------------------------------------------

CPoint CPoint::from_doubles(double x, double y, mpfr_prec_t prec) {
    CPoint p(prec);
    p.re = Real::from_double(x, prec);
    p.im = Real::from_double(y, prec);
    return p;
}

CPoint CPoint::add(const CPoint& o, mpfr_prec_t prec) const {
    CPoint r(prec);
    mpfr_add(r.re.ptr(), re.ptr(), o.re.ptr(), MPFR_RNDN);
    mpfr_add(r.im.ptr(), im.ptr(), o.im.ptr(), MPFR_RNDN);
    return r;
}

CPoint CPoint::sub(const CPoint& o, mpfr_prec_t prec) const {
    CPoint r(prec);
    mpfr_sub(r.re.ptr(), re.ptr(), o.re.ptr(), MPFR_RNDN);
    mpfr_sub(r.im.ptr(), im.ptr(), o.im.ptr(), MPFR_RNDN);
    return r;
}

CPoint CPoint::mul(const CPoint& o, mpfr_prec_t prec) const {
    CPoint r(prec);
    Real t1(prec), t2(prec);
    mpfr_mul(t1.ptr(), re.ptr(), o.re.ptr(), MPFR_RNDN);
    mpfr_mul(t2.ptr(), im.ptr(), o.im.ptr(), MPFR_RNDN);
    mpfr_sub(r.re.ptr(), t1.ptr(), t2.ptr(), MPFR_RNDN);
    mpfr_mul(t1.ptr(), re.ptr(), o.im.ptr(), MPFR_RNDN);
    mpfr_mul(t2.ptr(), im.ptr(), o.re.ptr(), MPFR_RNDN);
    mpfr_add(r.im.ptr(), t1.ptr(), t2.ptr(), MPFR_RNDN);
    return r;
}

CPoint CPoint::div(const CPoint& o, mpfr_prec_t prec) const {
    CPoint r(prec);
    Real d(prec), t1(prec), t2(prec);
    mpfr_sqr(t1.ptr(), o.re.ptr(), MPFR_RNDN);
    mpfr_sqr(t2.ptr(), o.im.ptr(), MPFR_RNDN);
    mpfr_add(d.ptr(), t1.ptr(), t2.ptr(), MPFR_RNDN);
    mpfr_mul(t1.ptr(), re.ptr(), o.re.ptr(), MPFR_RNDN);
    mpfr_mul(t2.ptr(), im.ptr(), o.im.ptr(), MPFR_RNDN);
    mpfr_add(t1.ptr(), t1.ptr(), t2.ptr(), MPFR_RNDN);
    mpfr_div(r.re.ptr(), t1.ptr(), d.ptr(), MPFR_RNDN);
    mpfr_mul(t1.ptr(), im.ptr(), o.re.ptr(), MPFR_RNDN);
    mpfr_mul(t2.ptr(), re.ptr(), o.im.ptr(), MPFR_RNDN);
    mpfr_sub(t1.ptr(), t1.ptr(), t2.ptr(), MPFR_RNDN);
    mpfr_div(r.im.ptr(), t1.ptr(), d.ptr(), MPFR_RNDN);
    return r;
}

double CPoint::abs_d() const {
    double x = re.to_double(), y = im.to_double();
    return std::sqrt(x * x + y * y);
}

// --- polynomial evaluation -----------------------------------------------------------

CBox eval_box(const IntPoly& p, const CBox& x, mpfr_prec_t prec) {
    CBox acc{FInterval::zero(prec), FInterval::zero(prec)};
    for (int j = p.degree(); j >= 0; --j) {
        acc = acc.mul(x, prec);
        CBox cj{FInterval::point_z(p.cf(static_cast<std::size_t>(j)), prec), FInterval::zero(prec)};
        acc = acc.add(cj, prec);
    }
    return acc;
}

CPoint eval_point(const IntPoly& p, const CPoint& z, mpfr_prec_t prec) {
    CPoint acc(prec);
    for (int j = p.degree(); j >= 0; --j) {
        acc = acc.mul(z, prec);
        mpfr_add_z(acc.re.ptr(), acc.re.ptr(), p.cf(static_cast<std::size_t>(j)).get_mpz_t(),
                   MPFR_RNDN);
    }
    return acc;
}

// --- constants / arg / floors ----------------------------------------------------------

FInterval pi_interval(mpfr_prec_t prec) {
    Real l(prec), h(prec);
    mpfr_const_pi(l.ptr(), MPFR_RNDD);
    mpfr_const_pi(h.ptr(), MPFR_RNDU);
    return FInterval(std::move(l), std::move(h));
}

FInterval two_pi_interval(mpfr_prec_t prec) {
    FInterval p = pi_interval(prec);
    Real l = p.lo(), h = p.hi();
    mpfr_mul_2ui(l.ptr(), l.ptr(), 1, MPFR_RNDD);
    mpfr_mul_2ui(h.ptr(), h.ptr(), 1, MPFR_RNDU);
    return FInterval(std::move(l), std::move(h));
}

FInterval arg_interval(const CBox& b, mpfr_prec_t prec) {
    if (b.contains_zero())
        throw std::domain_error("arg_interval: box contains zero");
    // the branch cut check is the caller's responsibility; extrema of arg over a
    // rectangle away from the cut are attained at its corners
    mpfr_srcptr xs[2] = {b.re.lo().ptr(), b.re.hi().ptr()};
    mpfr_srcptr ys[2] = {b.im.lo().ptr(), b.im.hi().ptr()};
    Real l(prec), h(prec), t(prec);
    bool first = true;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            mpfr_atan2(t.ptr(), ys[j], xs[i], MPFR_RNDD);
            if (first || mpfr_cmp(t.ptr(), l.ptr()) < 0)
                mpfr_set(l.ptr(), t.ptr(), MPFR_RNDD);
            mpfr_atan2(t.ptr(), ys[j], xs[i], MPFR_RNDU);
            if (first || mpfr_cmp(t.ptr(), h.ptr()) > 0)
                mpfr_set(h.ptr(), t.ptr(), MPFR_RNDU);
            first = false;
        }
    return FInterval(std::move(l), std::move(h));
}

std::optional<mpz_class> certified_floor_scaled(const FInterval& x, const mpz_class& c,
                                                mpfr_prec_t prec) {
    Real a(prec), b(prec);
    mpfr_mul_z(a.ptr(), x.lo().ptr(), c.get_mpz_t(), MPFR_RNDD);
    mpfr_mul_z(b.ptr(), x.hi().ptr(), c.get_mpz_t(), MPFR_RNDU);
    mpz_class fa, fb;
    mpfr_get_z(fa.get_mpz_t(), a.ptr(), MPFR_RNDD);
    mpfr_get_z(fb.get_mpz_t(), b.ptr(), MPFR_RNDD);
    if (fa == fb)
        return fa;
    return std::nullopt;
}

} // namespace hrpkit
