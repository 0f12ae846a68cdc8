#include "hrpkit/cheb.hpp"
#include "hrpkit/intpoly.hpp"
#include "hrpkit/roots.hpp"

#include <stdexcept>

namespace hrpkit {

namespace {

// Schur–Cohn chain on a circle-free polynomial.  Returns the number of roots
// inside the unit circle, or -1 when a step degenerates (|c_0| == |lc|) and
// the chain cannot decide.
int schur_cohn_chain_inside(const IntPoly& q0) {
    if (q0.degree() <= 0)
        return 0;
    const int n = q0.degree();
    IntPoly cur = primitive_part(q0);
    int negatives = 0;
    int product_sign = 1;
    for (int step = 0; step < n; ++step) {
        if (cur.degree() != n - step)
            return -1; // early degree drop; bail out to the certified fallback
        const mpz_class c0 = cur.cf(0);
        const mpz_class cn = cur.lc();
        mpz_class delta = c0 * c0 - cn * cn;
        if (delta == 0)
            return -1;
        product_sign *= sgn(delta) > 0 ? 1 : -1;
        if (product_sign < 0)
            ++negatives;
        if (cur.degree() == 1)
            break;
        IntPoly t = cur * c0 - cur.reversed() * cn;
        if (t.is_zero())
            return -1;
        cur = primitive_part(t);
    }
    return negatives;
}

// Certified fallback: count roots strictly inside via root isolation.
int inside_by_isolation(const IntPoly& q) {
    if (q.degree() <= 0)
        return 0;
    int inside = 0;
    auto boxes = isolate_roots(q, 32);
    for (auto& b : boxes) {
        RootBox cur = b;
        long bits = 64;
        while (true) {
            mpq_class lo2 = 0, hi2 = 0;
            // min/max of |z|^2 over the box corners (re, im extremes)
            mpq_class re_min_abs =
                (cur.re_lo <= 0 && 0 <= cur.re_hi) ? mpq_class(0)
                                                   : std::min(abs(cur.re_lo), abs(cur.re_hi));
            mpq_class im_min_abs =
                (cur.im_lo <= 0 && 0 <= cur.im_hi) ? mpq_class(0)
                                                   : std::min(abs(cur.im_lo), abs(cur.im_hi));
            mpq_class re_max_abs = std::max(abs(cur.re_lo), abs(cur.re_hi));
            mpq_class im_max_abs = std::max(abs(cur.im_lo), abs(cur.im_hi));
            lo2 = re_min_abs * re_min_abs + im_min_abs * im_min_abs;
            hi2 = re_max_abs * re_max_abs + im_max_abs * im_max_abs;
            if (hi2 < 1) {
                inside += cur.multiplicity;
                break;
            }
            if (lo2 > 1)
                break;
            bits *= 2;
            cur = refine_box(cur, bits); // no root on the circle, so this decides
        }
    }
    return inside;
}

struct FactorCounts {
    int on = 0;
    int inside = 0;
};

FactorCounts analyze_squarefree(const IntPoly& f) {
    FactorCounts fc;
    IntPoly g = poly_gcd(f, reciprocal_adjoint(f));
    IntPoly h = g;
    int unit_roots = 0;
    for (const mpq_class pt : {mpq_class(1), mpq_class(-1)}) {
        if (h.degree() > 0 && has_real_root_at(h, pt)) {
            IntPoly lin{std::vector<mpz_class>{-pt.get_num(), pt.get_den()}};
            h = primitive_part(exact_div(h * lin.lc(), lin));
            ++unit_roots;
        }
    }
    int pairs_on = 0;
    if (h.degree() > 0) {
        if (h.lc() < 0)
            h = -h;
        pairs_on = circle_pairs_of_reciprocal(h);
    }
    fc.on = unit_roots + 2 * pairs_on;
    // the inverse-closed part g splits its off-circle roots into (z, 1/z)
    // pairs, one inside and one outside each
    int g_off_pairs = (g.degree() - fc.on) / 2;
    IntPoly q = primitive_part(exact_div(f * g.lc(), g));
    int q_inside = schur_cohn_chain_inside(q);
    if (q_inside < 0)
        q_inside = inside_by_isolation(q);
    fc.inside = g_off_pairs + q_inside;
    return fc;
}

} // namespace

CirclePartition schur_cohn_partition(const IntPoly& p) {
    if (p.is_zero())
        throw std::domain_error("schur_cohn_partition: zero polynomial");
    CirclePartition part;
    if (p.degree() == 0)
        return part;
    for (const auto& [f, mult] : squarefree_decomposition(p)) {
        if (f.degree() < 1)
            continue;
        FactorCounts fc = analyze_squarefree(f);
        part.on_circle += mult * fc.on;
        part.inside += mult * fc.inside;
        part.outside += mult * (f.degree() - fc.on - fc.inside);
    }
    return part;
}

} // namespace hrpkit
