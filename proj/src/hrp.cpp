#include "hrpkit/hrp.hpp"

#include "hrpkit/config.hpp"
#include "hrpkit/errors.hpp"
#include "hrpkit/factorize.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace hrpkit {

namespace {

std::string canonical_key(const IntPoly& b, const IntPoly& p) {
    RatPoly r = rem(RatPoly(b), p);
    std::ostringstream os;
    for (int j = 0; j <= r.degree(); ++j)
        os << r.cf(static_cast<std::size_t>(j)).get_str() << ';';
    return os.str();
}

} // namespace

bool expansion_evaluates_to(const DigitExpansion& e, const IntPoly& value) {
    IntPoly dpoly{std::vector<mpz_class>(e.digits)};
    return rem(RatPoly(dpoly - value), e.base).is_zero();
}

HrpStatus classify_hrp(const IntPoly& p, const RootBox& root, const MdepConfig& cfg) {
    (void)root; // the classification depends only on the conjugate set
    if (p.is_zero() || p.degree() < 1)
        throw std::domain_error("classify_hrp: degree >= 1 required");
    IntPoly pn = normalized_primitive(p);
    if (!is_irreducible(pn))
        throw std::domain_error("classify_hrp: polynomial must be irreducible");
    CirclePartition part = schur_cohn_partition(pn);
    const int d = pn.degree();
    HrpStatus st;
    if (part.on_circle == d) {
        if (pn.lc() == 1) {
            st.kind = HrpKind::RootOfUnity;
            st.verdict = HrpVerdict::HRP_proven;
            return st;
        }
        st.kind = HrpKind::UnitCircle;
        ConjugateSystem sys(pn, 64);
        DependenceReport rep = analyze_dependences(sys, cfg, false);
        st.m_alpha = rep.m_alpha;
        st.verdict = (rep.m_alpha >= d / 2 - 1 || rep.m_alpha == 1) ? HrpVerdict::HRP_proven
                                                                    : HrpVerdict::Unknown;
        st.report = std::move(rep);
        return st;
    }
    if (part.outside == d) {
        st.kind = HrpKind::Expanding;
        st.verdict = HrpVerdict::HRP_proven;
        return st;
    }
    st.kind = HrpKind::Mixed_NoHRP;
    st.verdict = HrpVerdict::NoHRP;
    return st;
}

IntPoly construct_dominant(const IntPoly& p, long k, bool strict, long n_ceiling) {
    if (p.is_zero() || p.degree() < 1)
        throw std::domain_error("construct_dominant: degree >= 1 required");
    if (k < 0)
        throw std::domain_error("construct_dominant: k must be non-negative");
    IntPoly pn = normalized_primitive(p);
    if (auto n = cyclotomic_order(pn)) {
        if (strict)
            throw std::domain_error(
                "construct_dominant: roots of unity admit no strictly dominant multiple");
        // x^{2N+k} + (B-1) x^{N+k} - B x^k with B = 2
        IntPoly r = IntPoly::monomial(1, static_cast<std::size_t>(2 * *n + k)) +
                    IntPoly::monomial(1, static_cast<std::size_t>(*n + k)) +
                    IntPoly::monomial(-2, static_cast<std::size_t>(k));
        return r;
    }
    CirclePartition part = schur_cohn_partition(pn);
    if (part.on_circle > 0)
        throw std::domain_error(
            "construct_dominant: a conjugate lies on the unit circle and alpha is not a root "
            "of unity; no dominant-term multiple exists");
    const long l = part.inside;
    if (l > k)
        throw std::domain_error("construct_dominant: k must be at least the inside-root count");

    auto dominant_at = [&](const IntPoly& s, long idx) {
        mpz_class rest = 0;
        for (int j = 0; j <= s.degree(); ++j)
            if (j != idx)
                rest += abs(s.cf(static_cast<std::size_t>(j)));
        const mpz_class& me = s.cf(static_cast<std::size_t>(idx));
        return strict ? abs(me) > rest : abs(me) >= rest;
    };

    for (long n = 1; n <= n_ceiling; ++n) {
        if (l > 0 && l * n > k)
            throw limit_error(
                "construct_dominant: no admissible power keeps the dominant index at k");
        IntPoly s = normalized_primitive(power_product_poly(pn, n));
        if (dominant_at(s, l)) {
            IntPoly r = s.compose_power(static_cast<std::size_t>(n));
            return r.shifted_up(static_cast<std::size_t>(k - l * n));
        }
    }
    throw limit_error("construct_dominant: power search ceiling reached");
}

DigitExpansion reduce_expanding(const IntPoly& p, const RootBox& root, const IntPoly& value,
                                ReduceStats* stats) {
    IntPoly pn = normalized_primitive(p);
    {
        CirclePartition part = schur_cohn_partition(pn);
        if (part.outside != pn.degree())
            throw std::domain_error("reduce_expanding: polynomial is not expanding");
    }
    IntPoly c = construct_dominant(pn, 0, true);
    const mpz_class c0 = c.cf(0);
    const mpz_class bound = abs(c0) - 1;
    const int dc = c.degree();
    const int sgn_c0 = sgn(c0);

    std::vector<mpz_class> a(value.coeffs());
    std::vector<mpz_class> digits;
    ReduceStats local;
    while (!a.empty()) {
        while (!a.empty() && a.back() == 0)
            a.pop_back();
        if (a.empty())
            break;
        mpz_class a0 = a.empty() ? mpz_class(0) : a[0];
        if (abs(a0) <= bound) {
            digits.push_back(a0);
            a.erase(a.begin());
            continue;
        }
        mpz_class l1_before = 0;
        for (const auto& v : a)
            l1_before += abs(v);
        // |A_0| = q |c_0| + eps, digit = sgn(A_0) eps, absorb q |c_0| through
        // c_0 = -(c_1 alpha + ... + c_d alpha^d)
        mpz_class q, eps;
        mpz_class absa0 = abs(a0);
        mpz_class absc0 = abs(c0);
        mpz_fdiv_qr(q.get_mpz_t(), eps.get_mpz_t(), absa0.get_mpz_t(), absc0.get_mpz_t());
        const int sgn_a0 = sgn(a0);
        const int s = sgn_c0 * sgn_a0;
        if (a.size() < static_cast<std::size_t>(dc) + 1)
            a.resize(static_cast<std::size_t>(dc) + 1, mpz_class(0));
        for (int j = 1; j <= dc; ++j)
            a[static_cast<std::size_t>(j)] -= s * q * c.cf(static_cast<std::size_t>(j));
        digits.push_back(mpz_class(sgn_a0 * eps));
        a.erase(a.begin());
        ++local.substitutions;
        mpz_class l1_after = 0;
        for (const auto& v : a)
            l1_after += abs(v);
        if (!(l1_after < l1_before))
            local.l1_monotone = false;
    }
    while (!digits.empty() && digits.back() == 0)
        digits.pop_back();
    DigitExpansion e{std::move(digits), bound, pn, root};
    if (!expansion_evaluates_to(e, value))
        throw std::logic_error("reduce_expanding: round-trip verification failed");
    if (!local.l1_monotone)
        throw std::logic_error("reduce_expanding: L1 norm failed to decrease");
    if (stats)
        *stats = local;
    return e;
}

DigitExpansion reduce_root_of_unity(long n, const IntPoly& value) {
    if (n <= 0)
        throw std::domain_error("reduce_root_of_unity: order must be positive");
    mpz_class total = 0;
    for (const auto& v : value.coeffs())
        total += abs(v);
    mpz_class last_pos = total * n + std::max(value.degree(), 0);
    if (last_pos > 50000000)
        throw limit_error("reduce_root_of_unity: expansion too long");
    std::vector<mpz_class> digits(value.is_zero() ? 0 : last_pos.get_ui() + 1, mpz_class(0));
    mpz_class shift = 0; // sum of |a_l| for l < j
    for (int j = 0; j <= value.degree(); ++j) {
        const mpz_class& aj = value.cf(static_cast<std::size_t>(j));
        if (aj == 0)
            continue;
        mpz_class absaj = abs(aj);
        int sign = sgn(aj);
        for (mpz_class k = 1; k <= absaj; ++k) {
            mpz_class pos = mpz_class(j) + (shift + k) * n;
            digits[pos.get_ui()] = sign;
        }
        shift += absaj;
    }
    while (!digits.empty() && digits.back() == 0)
        digits.pop_back();
    DigitExpansion e{std::move(digits), mpz_class(1), cyclotomic_poly(n), std::nullopt};
    if (!expansion_evaluates_to(e, value))
        throw std::logic_error("reduce_root_of_unity: round-trip verification failed");
    return e;
}

namespace {

// upper bounds of |B(alpha_j)| on the upper-half conjugates
std::vector<double> embedding_moduli(ConjugateSystem& sys, const IntPoly& b, long prec) {
    std::vector<double> out(sys.count());
    for (std::size_t j = 0; j < sys.count(); ++j) {
        CBox x = sys.box(j, prec - 32).to_cbox(static_cast<mpfr_prec_t>(prec));
        FInterval m = eval_box(b, x, static_cast<mpfr_prec_t>(prec)).abs(
            static_cast<mpfr_prec_t>(prec));
        out[j] = m.hi().to_double();
    }
    return out;
}

// arguments of B(alpha_j) * alpha_j^{-ell}
bool aligned_within(ConjugateSystem& sys, const IntPoly& b, long ell, long prec) {
    const double limit = 2 * 3.14159265358979323846 / 5;
    for (std::size_t j = 0; j < sys.count(); ++j) {
        CBox x = sys.box(j, prec - 32).to_cbox(static_cast<mpfr_prec_t>(prec));
        CBox v = eval_box(b, x, static_cast<mpfr_prec_t>(prec));
        CBox shifted = v.mul(x.pow(-ell, static_cast<mpfr_prec_t>(prec), true),
                             static_cast<mpfr_prec_t>(prec));
        if (shifted.contains_zero())
            return false;
        double re = shifted.re.mid(64).to_double();
        double im = shifted.im.mid(64).to_double();
        if (std::abs(std::atan2(im, re)) > limit)
            return false;
    }
    return true;
}

} // namespace

std::optional<DigitExpansion> reduce_unit_circle(const IntPoly& p, const RootBox& root,
                                                 const IntPoly& value, const UnitCircleConfig& cfg,
                                                 ReduceStats* stats) {
    IntPoly pn = normalized_primitive(p);
    const int d = pn.degree();
    {
        CirclePartition part = schur_cohn_partition(pn);
        if (part.on_circle != d || pn.lc() < 2)
            throw std::domain_error("reduce_unit_circle: not a unit-circle case");
    }
    const mpz_class c = pn.cf(0);
    ConjugateSystem sys(pn, 64);

    // Theorem coverage: m = d/2, d/2 - 1, or 1; beyond that only when asked.
    {
        MdepConfig mcfg;
        DependenceReport rep = analyze_dependences(sys, mcfg, false);
        const int m = rep.m_alpha;
        if (!(m >= d / 2 - 1 || m == 1) && !cfg.attempt_beyond_theorem)
            return std::nullopt;
    }

    long khat = cfg.khat;
    const long prec = std::max<long>(96, cfg.precision_bits);
    std::vector<mpz_class> digits;
    std::unordered_map<std::string, IntPoly> visited;
    IntPoly b = value;
    ReduceStats local;
    bool done = false;

    auto small_step = [&](const mpz_class& digit) {
        // (B - digit)/alpha with c_0 = -(c_1 alpha + ... + c_d alpha^d)
        mpz_class t = (b.cf(0) - digit) / c;
        std::vector<mpz_class> nb(static_cast<std::size_t>(std::max(b.degree(), d)), mpz_class(0));
        for (int j = 1; j <= b.degree(); ++j)
            nb[static_cast<std::size_t>(j - 1)] = b.cf(static_cast<std::size_t>(j));
        for (int j = 1; j <= d; ++j)
            nb[static_cast<std::size_t>(j - 1)] -= t * pn.cf(static_cast<std::size_t>(j));
        digits.push_back(digit);
        b = IntPoly(std::move(nb));
        ++local.steps;
    };

    while (local.steps < cfg.max_steps) {
        if (b.is_zero()) {
            done = true;
            local.terminated_by_cycle = false;
            break;
        }
        std::string key = canonical_key(b, pn);
        auto it = visited.find(key);
        if (it != visited.end()) {
            // tail: value = prefix + B alpha^N with B seen before
            const IntPoly& tail = it->second;
            std::size_t off = digits.size();
            digits.resize(off + static_cast<std::size_t>(tail.degree()) + 1, mpz_class(0));
            for (int j = 0; j <= tail.degree(); ++j)
                digits[off + static_cast<std::size_t>(j)] = tail.cf(static_cast<std::size_t>(j));
            done = true;
            local.terminated_by_cycle = true;
            break;
        }
        visited.emplace(std::move(key), b);

        mpz_class radius = (43 * mpz_class(khat) + 10) * c;
        auto mods = embedding_moduli(sys, b, prec);
        double maxmod = 0;
        for (double v : mods)
            maxmod = std::max(maxmod, v);
        bool big = maxmod > radius.get_d();
        if (!big) {
            mpz_class eps;
            mpz_fdiv_r(eps.get_mpz_t(), b.cf(0).get_mpz_t(), c.get_mpz_t());
            small_step(eps);
            continue;
        }
        long found_ell = -1;
        while (found_ell < 0) {
            for (long ell = 0; ell <= khat; ++ell) {
                if (aligned_within(sys, b, ell, prec)) {
                    found_ell = ell;
                    break;
                }
            }
            if (found_ell < 0) {
                khat *= 2;
                if (khat > cfg.khat_max) {
                    if (stats)
                        *stats = local;
                    return std::nullopt;
                }
            }
        }
        for (long s = 0; s < found_ell; ++s) {
            mpz_class eps;
            mpz_fdiv_r(eps.get_mpz_t(), b.cf(0).get_mpz_t(), c.get_mpz_t());
            small_step(eps);
        }
        mpz_class lo = 5 * mpz_class(khat) * c;
        mpz_class rem5;
        mpz_fdiv_r(rem5.get_mpz_t(), mpz_class(b.cf(0) - lo).get_mpz_t(), c.get_mpz_t());
        mpz_class dstar = lo + rem5;
        small_step(dstar);
        ++local.big_steps;
    }
    local.khat_used = khat;
    if (!done) {
        if (stats)
            *stats = local;
        return std::nullopt;
    }
    while (!digits.empty() && digits.back() == 0)
        digits.pop_back();
    mpz_class bound = (5 * mpz_class(khat) + 1) * c;
    for (const auto& v : digits)
        if (abs(v) > bound)
            bound = abs(v);
    DigitExpansion e{std::move(digits), bound, pn, root};
    if (!expansion_evaluates_to(e, value))
        throw std::logic_error("reduce_unit_circle: round-trip verification failed");
    if (stats)
        *stats = local;
    return e;
}

} // namespace hrpkit
