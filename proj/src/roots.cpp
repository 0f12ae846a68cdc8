#include "hrpkit/roots.hpp"

#include "hrpkit/config.hpp"
#include "hrpkit/errors.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace hrpkit {

namespace {

mpq_class pow2_q(long e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
    return e >= 0 ? mpq_class(p) : mpq_class(1) / mpq_class(p);
}

// --- numeric first guesses (Aberth–Ehrlich) ---------------------------------

using CLD = std::complex<long double>;

std::vector<CLD> aberth_long_double(const IntPoly& p) {
    const int n = p.degree();
    std::vector<long double> c(static_cast<std::size_t>(n) + 1);
    // scale by the height so huge integer coefficients stay in range
    mpz_class h = p.height();
    for (int i = 0; i <= n; ++i) {
        mpq_class q(p.cf(static_cast<std::size_t>(i)), h);
        c[static_cast<std::size_t>(i)] = static_cast<long double>(q.get_d());
    }
    long double radius = 0;
    for (int i = 0; i < n; ++i)
        radius = std::max(radius, std::abs(c[static_cast<std::size_t>(i)] / c.back()));
    radius = 1 + radius;
    std::vector<CLD> z(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        long double ang = 2.0L * 3.14159265358979323846L * (k + 0.3L) / n + 0.42L;
        z[static_cast<std::size_t>(k)] = CLD(radius * 0.7L * std::cos(ang),
                                             radius * 0.7L * std::sin(ang));
    }
    auto eval = [&](CLD x, CLD* deriv) {
        CLD v = 0, d = 0;
        for (int j = n; j >= 0; --j) {
            d = d * x + v;
            v = v * x + c[static_cast<std::size_t>(j)];
        }
        *deriv = d;
        return v;
    };
    for (int iter = 0; iter < 400; ++iter) {
        long double worst = 0;
        for (int k = 0; k < n; ++k) {
            CLD d;
            CLD v = eval(z[static_cast<std::size_t>(k)], &d);
            if (d == CLD(0)) {
                z[static_cast<std::size_t>(k)] += CLD(1e-6L, 1e-6L);
                worst = 1;
                continue;
            }
            CLD w = v / d;
            CLD s = 0;
            for (int j = 0; j < n; ++j)
                if (j != k)
                    s += CLD(1) / (z[static_cast<std::size_t>(k)] - z[static_cast<std::size_t>(j)]);
            CLD corr = w / (CLD(1) - w * s);
            z[static_cast<std::size_t>(k)] -= corr;
            worst = std::max(worst, std::abs(corr) / (1 + std::abs(z[static_cast<std::size_t>(k)])));
        }
        if (worst < 1e-17L)
            break;
    }
    return z;
}

// --- Krawczyk certification ---------------------------------------------------

CBox point_box(const CPoint& z, mpfr_prec_t prec) {
    return CBox{FInterval::point(z.re), FInterval::point(z.im)};
}

// 1/c for a complex point, as a small rigorous box.
CBox inv_point_box(const CPoint& c, mpfr_prec_t prec) {
    CBox cb = point_box(c, prec);
    FInterval d = cb.abs2(prec);
    if (d.contains_zero())
        throw std::domain_error("inv_point_box: zero");
    return CBox{cb.re.div(d, prec), cb.im.neg().div(d, prec)};
}

bool krawczyk_contract(const IntPoly& f, const IntPoly& fd, const CBox& X, mpfr_prec_t prec,
                       CBox* refined) {
    CPoint m(prec);
    m.re = X.re.mid(prec);
    m.im = X.im.mid(prec);
    CBox mb = point_box(m, prec);
    CBox pm = eval_box(f, mb, prec);
    CPoint dm = eval_point(fd, m, prec);
    if (mpfr_zero_p(dm.re.ptr()) && mpfr_zero_p(dm.im.ptr()))
        return false;
    CBox ci;
    try {
        ci = inv_point_box(dm, prec);
    } catch (const std::domain_error&) {
        return false;
    }
    CBox PX = eval_box(fd, X, prec);
    if (PX.contains_zero())
        return false;
    CBox one = CBox::one(prec);
    CBox K = mb.sub(pm.mul(ci, prec), prec)
                 .add(one.sub(PX.mul(ci, prec), prec).mul(X.sub(mb, prec), prec), prec);
    if (!K.strictly_inside(X))
        return false;
    *refined = CBox{K.re.intersect(X.re, prec), K.im.intersect(X.im, prec)};
    return true;
}

// Magnitude exponent of a complex point (log2 scale); very negative when zero.
long cpoint_mag_exp(const CPoint& z, long zero_exp) {
    bool re0 = mpfr_zero_p(z.re.ptr()), im0 = mpfr_zero_p(z.im.ptr());
    if (re0 && im0)
        return zero_exp;
    long er = re0 ? zero_exp : mpfr_get_exp(z.re.ptr());
    long ei = im0 ? zero_exp : mpfr_get_exp(z.im.ptr());
    return std::max(er, ei);
}

// Attempt to certify a unique root of f near z; the box radius ladder starts
// at the Newton-residual scale, tracked in exponents so it cannot underflow.
bool certify_near(const IntPoly& f, const IntPoly& fd, const CPoint& z, mpfr_prec_t prec,
                  CBox* out) {
    CPoint pv = eval_point(f, z, prec);
    CPoint dv = eval_point(fd, z, prec);
    long e0 = -static_cast<long>(prec) + 8;
    if (!(mpfr_zero_p(dv.re.ptr()) && mpfr_zero_p(dv.im.ptr()))) {
        long ep = cpoint_mag_exp(pv, -static_cast<long>(prec) - 8);
        long ed = cpoint_mag_exp(dv, 0);
        e0 = std::max(ep - ed + 2, e0);
    }
    for (long k = 0; k < 60 && e0 + 2 * k <= 12; ++k) {
        Real r(prec);
        mpfr_set_ui_2exp(r.ptr(), 1, static_cast<mpfr_exp_t>(e0 + 2 * k), MPFR_RNDN);
        Real rlo(prec), rhi(prec), ilo(prec), ihi(prec);
        mpfr_sub(rlo.ptr(), z.re.ptr(), r.ptr(), MPFR_RNDD);
        mpfr_add(rhi.ptr(), z.re.ptr(), r.ptr(), MPFR_RNDU);
        mpfr_sub(ilo.ptr(), z.im.ptr(), r.ptr(), MPFR_RNDD);
        mpfr_add(ihi.ptr(), z.im.ptr(), r.ptr(), MPFR_RNDU);
        CBox X{FInterval(rlo, rhi), FInterval(ilo, ihi)};
        CBox K;
        if (krawczyk_contract(f, fd, X, prec, &K)) {
            *out = K;
            return true;
        }
    }
    return false;
}

CPoint newton_steps(const IntPoly& f, const IntPoly& fd, CPoint z, mpfr_prec_t prec, int steps) {
    for (int i = 0; i < steps; ++i) {
        CPoint pv = eval_point(f, z, prec);
        CPoint dv = eval_point(fd, z, prec);
        if (mpfr_zero_p(dv.re.ptr()) && mpfr_zero_p(dv.im.ptr()))
            return z;
        z = z.sub(pv.div(dv, prec), prec);
    }
    return z;
}

RootBox box_from_cbox(const CBox& X, int mult, const IntPoly& src) {
    RootBox b;
    b.re_lo = X.re.lo_q();
    b.re_hi = X.re.hi_q();
    b.im_lo = X.im.lo_q();
    b.im_hi = X.im.hi_q();
    b.multiplicity = mult;
    b.source = src;
    return b;
}

// --- exact real-root isolation (Sturm bisection) --------------------------------

void isolate_real_roots(const IntPoly& f, long bits, int mult, std::vector<RootBox>& out) {
    SturmChain chain(f);
    mpq_class bound = real_root_bound(f);
    mpz_class bz = bound.get_num() / bound.get_den() + 1;
    mpq_class lo = mpq_class(-bz), hi = mpq_class(bz);
    mpq_class target = pow2_q(-bits);

    auto emit = [&](const mpq_class& a, const mpq_class& b) {
        RootBox box;
        box.re_lo = a;
        box.re_hi = b;
        box.im_lo = 0;
        box.im_hi = 0;
        box.multiplicity = mult;
        box.source = f;
        out.push_back(std::move(box));
    };

    struct Seg {
        mpq_class a, b;
        int count;
    };
    std::vector<Seg> stack{{lo, hi, chain.count_open(lo, hi)}};
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        if (s.count == 0)
            continue;
        if (s.count == 1 && (s.b - s.a) <= target) {
            emit(s.a, s.b);
            continue;
        }
        mpq_class m = (s.a + s.b) / 2;
        if (has_real_root_at(f, m)) {
            emit(m, m);
            // shrink a punctured neighborhood of m containing no other root
            mpq_class eps = (s.b - s.a) / 1024;
            mpq_class ml, mr;
            while (true) {
                ml = m - eps;
                mr = m + eps;
                if (!has_real_root_at(f, ml) && !has_real_root_at(f, mr) &&
                    chain.count_open(ml, mr) == 1)
                    break;
                eps /= 2;
            }
            int left = chain.count_open(s.a, ml);
            int right = chain.count_open(mr, s.b);
            if (left > 0)
                stack.push_back({s.a, ml, left});
            if (right > 0)
                stack.push_back({mr, s.b, right});
            continue;
        }
        int left = chain.count_open(s.a, m);
        int right = chain.count_open(m, s.b);
        if (left > 0)
            stack.push_back({s.a, m, left});
        if (right > 0)
            stack.push_back({m, s.b, right});
    }
}

// --- complex roots of one squarefree factor ---------------------------------------

bool boxes_disjoint(const RootBox& a, const RootBox& b) {
    bool re_sep = a.re_hi < b.re_lo || b.re_hi < a.re_lo;
    bool im_sep = a.im_hi < b.im_lo || b.im_hi < a.im_lo;
    return re_sep || im_sep;
}

void isolate_squarefree(const IntPoly& f, long bits, int mult, std::vector<RootBox>& out) {
    const int n = f.degree();
    if (n <= 0)
        return;
    if (n == 1) {
        mpq_class root(-f.cf(0), f.cf(1));
        root.canonicalize();
        RootBox b;
        b.re_lo = b.re_hi = root;
        b.im_lo = b.im_hi = 0;
        b.multiplicity = mult;
        b.source = f;
        out.push_back(std::move(b));
        return;
    }

    std::vector<RootBox> real_boxes;
    isolate_real_roots(f, bits, mult, real_boxes);
    const int pairs = (n - static_cast<int>(real_boxes.size())) / 2;

    std::vector<RootBox> cplx;
    IntPoly fd = f.derivative();
    long prec = std::max<long>(default_start_bits(), bits + 64);
    const long ceiling = precision_ceiling_bits();
    while (true) {
        cplx.clear();
        bool ok = true;
        auto approx = aberth_long_double(f);
        std::vector<CLD> upper;
        for (const auto& z : approx)
            if (z.imag() > 1e-9L)
                upper.push_back(z);
        if (static_cast<int>(upper.size()) != pairs)
            ok = false;
        if (ok) {
            for (const auto& z : upper) {
                CPoint zp = CPoint::from_doubles(static_cast<double>(z.real()),
                                                 static_cast<double>(z.imag()), prec);
                zp = newton_steps(f, fd, zp, prec, 12);
                CBox box;
                if (!certify_near(f, fd, zp, prec, &box) || box.im.sign() <= 0) {
                    ok = false;
                    break;
                }
                cplx.push_back(box_from_cbox(box, mult, f));
            }
        }
        if (ok) {
            // shrink to the requested width and check pairwise disjointness
            for (auto& b : cplx)
                b = refine_box(b, bits);
            bool disjoint = true;
            for (std::size_t i = 0; i < cplx.size() && disjoint; ++i)
                for (std::size_t j = i + 1; j < cplx.size() && disjoint; ++j)
                    if (!boxes_disjoint(cplx[i], cplx[j]))
                        disjoint = false;
            if (disjoint)
                break;
        }
        prec *= 2;
        bits += 32;
        if (prec > ceiling)
            throw precision_error("isolate_roots: certification failed below precision ceiling");
    }

    for (auto& b : real_boxes)
        out.push_back(std::move(b));
    for (const auto& b : cplx) {
        RootBox low = b;
        std::swap(low.im_lo, low.im_hi);
        low.im_lo = -low.im_lo;
        low.im_hi = -low.im_hi;
        out.push_back(b);
        out.push_back(std::move(low));
    }
}

} // namespace

mpq_class RootBox::width() const {
    mpq_class w = re_hi - re_lo;
    mpq_class h = im_hi - im_lo;
    return w > h ? w : h;
}

CBox RootBox::to_cbox(mpfr_prec_t prec) const {
    return CBox::from_bounds_q(re_lo, re_hi, im_lo, im_hi, prec);
}

std::vector<RootBox> isolate_roots(const IntPoly& p, long bits) {
    if (p.is_zero())
        throw std::domain_error("isolate_roots: zero polynomial");
    if (p.degree() < 1)
        return {};
    std::vector<RootBox> out;
    auto sf = squarefree_decomposition(p);
    for (const auto& [f, mult] : sf)
        isolate_squarefree(f, bits, mult, out);
    // boxes from different squarefree factors isolate distinct roots; refine
    // until globally disjoint
    bool again = true;
    long extra = bits;
    while (again) {
        again = false;
        for (std::size_t i = 0; i < out.size() && !again; ++i)
            for (std::size_t j = i + 1; j < out.size() && !again; ++j)
                if (!boxes_disjoint(out[i], out[j]))
                    again = true;
        if (again) {
            extra *= 2;
            if (extra > precision_ceiling_bits())
                throw precision_error("isolate_roots: cannot separate boxes");
            for (auto& b : out)
                b = refine_box(b, extra);
        }
    }
    return out;
}

RootBox refine_box(const RootBox& box, long bits) {
    mpq_class target = pow2_q(-bits);
    if (box.width() <= target)
        return box;
    const IntPoly& f = box.source;
    if (box.is_real()) {
        // exact bisection on the real segment; endpoints stay root-free
        SturmChain chain(f);
        mpq_class a = box.re_lo, b = box.re_hi;
        while (b - a > target) {
            mpq_class m = (a + b) / 2;
            if (has_real_root_at(f, m)) {
                a = m;
                b = m;
                break;
            }
            if (chain.count_open(a, m) == 1)
                b = m;
            else
                a = m;
        }
        RootBox r = box;
        r.re_lo = a;
        r.re_hi = b;
        return r;
    }
    IntPoly fd = f.derivative();
    const long ceiling = precision_ceiling_bits();
    RootBox cur = box;
    long slack = 64;
    while (cur.width() > target) {
        // work at roughly twice the current accuracy; Newton doubles per step
        mpq_class w = cur.width();
        long acc = 4;
        if (w > 0) {
            long nb = static_cast<long>(mpz_sizeinbase(w.get_num().get_mpz_t(), 2));
            long db = static_cast<long>(mpz_sizeinbase(w.get_den().get_mpz_t(), 2));
            acc = std::max<long>(4, db - nb);
        }
        long prec = std::min(bits + 64, 2 * acc + slack);
        if (prec < acc + 64)
            prec = acc + 64;
        CBox X = cur.to_cbox(prec);
        CPoint z(prec);
        z.re = X.re.mid(prec);
        z.im = X.im.mid(prec);
        z = newton_steps(f, fd, z, prec, 2);
        CBox K;
        bool ok = certify_near(f, fd, z, prec, &K);
        if (ok) {
            // keep nestedness: the certified box and the original both contain
            // the root, so the intersection does too
            try {
                CBox inter{K.re.intersect(X.re, prec), K.im.intersect(X.im, prec)};
                RootBox nb = box_from_cbox(inter, cur.multiplicity, f);
                if (nb.width() < cur.width())
                    cur = std::move(nb);
                else
                    ok = false;
            } catch (const std::domain_error&) {
                ok = false;
            }
        }
        if (!ok) {
            slack *= 2;
            if (slack > ceiling)
                throw precision_error("refine_box: precision ceiling reached");
        }
    }
    return cur;
}

std::vector<RootBox> upper_half_sorted(const IntPoly& p, long bits) {
    if (p.is_zero() || p.degree() < 1)
        throw std::domain_error("upper_half_sorted: degree >= 1 required");
    if (sturm_count_all(p) > 0)
        throw std::domain_error("upper_half_sorted: polynomial has a real root");
    auto boxes = isolate_roots(p, bits);
    std::vector<RootBox> upper;
    for (auto& b : boxes)
        if (b.im_lo > 0)
            upper.push_back(std::move(b));
    // refine until the real parts are separated, then sort ascending
    long extra = bits;
    bool again = true;
    while (again) {
        again = false;
        for (std::size_t i = 0; i < upper.size() && !again; ++i)
            for (std::size_t j = i + 1; j < upper.size() && !again; ++j) {
                bool overlap = !(upper[i].re_hi < upper[j].re_lo || upper[j].re_hi < upper[i].re_lo);
                if (overlap)
                    again = true;
            }
        if (again) {
            extra *= 2;
            if (extra > precision_ceiling_bits())
                // distinct upper-half roots of a squarefree polynomial sharing a
                // real part: order by imaginary part as a deterministic tie-break
                break;
            for (auto& b : upper)
                b = refine_box(b, extra);
        }
    }
    std::sort(upper.begin(), upper.end(), [](const RootBox& a, const RootBox& b) {
        if (a.re_hi < b.re_lo)
            return true;
        if (b.re_hi < a.re_lo)
            return false;
        return a.im_lo < b.im_lo;
    });
    return upper;
}

CertifiedArg argument_of(const RootBox& r, long bits) {
    if (r.re_lo <= 0 && 0 <= r.re_hi && r.im_lo <= 0 && 0 <= r.im_hi)
        throw std::domain_error("argument_of: box contains zero");
    long prec = std::max<long>(default_start_bits(), bits + 32);
    if (r.is_real()) {
        if (r.re_lo > 0)
            return CertifiedArg{mpq_class(0), mpq_class(0)};
        FInterval pi = pi_interval(prec);
        mpq_class lo = pi.lo_q(), hi = pi.hi_q();
        return CertifiedArg{(lo + hi) / 2, (hi - lo) / 2};
    }
    RootBox cur = r;
    const long ceiling = precision_ceiling_bits();
    long want = bits + 8;
    while (true) {
        CBox X = cur.to_cbox(prec);
        bool lower_half = cur.im_hi < 0;
        FInterval a = arg_interval(X, prec);
        mpq_class lo = a.lo_q(), hi = a.hi_q();
        if (lower_half) {
            FInterval tp = two_pi_interval(prec);
            lo += tp.lo_q();
            hi += tp.hi_q();
        }
        mpq_class err = (hi - lo) / 2;
        if (err <= pow2_q(-bits))
            return CertifiedArg{(lo + hi) / 2, err};
        want *= 2;
        prec = std::max(prec * 2, want + 64);
        if (prec > ceiling)
            throw precision_error("argument_of: precision ceiling reached");
        cur = refine_box(cur, want);
    }
}

CertifiedArg two_pi_arg(long bits) {
    long prec = bits + 32;
    FInterval tp = two_pi_interval(prec);
    mpq_class lo = tp.lo_q(), hi = tp.hi_q();
    return CertifiedArg{(lo + hi) / 2, (hi - lo) / 2};
}

} // namespace hrpkit
