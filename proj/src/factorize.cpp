#include "hrpkit/factorize.hpp"

#include "hrpkit/config.hpp"
#include "hrpkit/errors.hpp"
#include "hrpkit/interval.hpp"
#include "hrpkit/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace hrpkit {

namespace {

// A conjugation-closed root cluster: one real root box, or an upper-half box
// standing for the pair (z, conj z).
struct RootUnit {
    RootBox box;
    int degree; // 1 or 2
};

// Interval coefficients of lc * prod over selected units, via incremental
// multiplication of exact linear/quadratic interval factors.
std::vector<FInterval> candidate_coeffs(const std::vector<RootUnit>& units,
                                        const std::vector<int>& pick, const mpz_class& lead,
                                        mpfr_prec_t prec) {
    std::vector<FInterval> acc{FInterval::point_z(lead, prec)};
    auto mul_linear = [&](const FInterval& a0) {
        // multiply by (x + a0)
        std::vector<FInterval> nxt(acc.size() + 1, FInterval::zero(prec));
        for (std::size_t i = 0; i < acc.size(); ++i) {
            nxt[i + 1] = nxt[i + 1].add(acc[i], prec);
            nxt[i] = nxt[i].add(acc[i].mul(a0, prec), prec);
        }
        acc = std::move(nxt);
    };
    auto mul_quadratic = [&](const FInterval& b, const FInterval& c) {
        // multiply by (x^2 + b x + c)
        std::vector<FInterval> nxt(acc.size() + 2, FInterval::zero(prec));
        for (std::size_t i = 0; i < acc.size(); ++i) {
            nxt[i + 2] = nxt[i + 2].add(acc[i], prec);
            nxt[i + 1] = nxt[i + 1].add(acc[i].mul(b, prec), prec);
            nxt[i] = nxt[i].add(acc[i].mul(c, prec), prec);
        }
        acc = std::move(nxt);
    };
    for (int idx : pick) {
        const RootUnit& u = units[static_cast<std::size_t>(idx)];
        if (u.degree == 1) {
            FInterval re = FInterval::from_bounds_q(u.box.re_lo, u.box.re_hi, prec);
            mul_linear(re.neg());
        } else {
            // (x - z)(x - conj z) = x^2 - 2 Re(z) x + |z|^2
            CBox zb = u.box.to_cbox(prec);
            FInterval b = zb.re.add(zb.re, prec).neg();
            FInterval c = zb.abs2(prec);
            mul_quadratic(b, c);
        }
    }
    return acc;
}

// The unique integer in a narrow interval, if any.
std::optional<mpz_class> integer_in(const FInterval& iv) {
    Real l = iv.lo(), h = iv.hi();
    mpz_class fl, fh;
    mpfr_get_z(fl.get_mpz_t(), l.ptr(), MPFR_RNDU); // ceil(lo)
    mpfr_get_z(fh.get_mpz_t(), h.ptr(), MPFR_RNDD); // floor(hi)
    if (fl > fh)
        return std::nullopt;
    if (fl != fh)
        return std::nullopt; // interval too wide to commit
    return fl;
}

std::vector<std::pair<IntPoly, int>> factor_squarefree(const IntPoly& fin) {
    std::vector<std::pair<IntPoly, int>> out;
    IntPoly f = normalized_primitive(fin);
    if (f.degree() == 1) {
        out.emplace_back(f, 1);
        return out;
    }

    long bits = 48;
    const long ceiling = precision_ceiling_bits();
    while (true) {
        auto boxes = isolate_roots(f, bits);
        std::vector<RootUnit> units;
        for (auto& b : boxes) {
            if (b.is_real())
                units.push_back({b, 1});
            else if (b.im_lo > 0)
                units.push_back({b, 2});
        }
        std::sort(units.begin(), units.end(), [](const RootUnit& a, const RootUnit& b) {
            if (a.box.re_lo != b.box.re_lo)
                return a.box.re_lo < b.box.re_lo;
            return a.box.im_lo < b.box.im_lo;
        });
        const int nu = static_cast<int>(units.size());
        if (nu > 24)
            throw limit_error("factor_over_Q: too many root clusters");
        mpfr_prec_t prec = static_cast<mpfr_prec_t>(std::max<long>(96, bits + 32));

        // enumerate conjugation-closed subsets by total degree, smallest first
        auto mask_degree = [&](unsigned long mask) {
            int d = 0;
            for (int i = 0; i < nu; ++i)
                if (mask & (1UL << i))
                    d += units[static_cast<std::size_t>(i)].degree;
            return d;
        };
        std::vector<unsigned long> subsets;
        subsets.reserve((1UL << nu) - 2);
        for (unsigned long mask = 1; mask + 1 < (1UL << nu); ++mask)
            if (mask_degree(mask) <= f.degree() / 2)
                subsets.push_back(mask);
        std::stable_sort(subsets.begin(), subsets.end(),
                         [&](unsigned long a, unsigned long b) {
                             return mask_degree(a) < mask_degree(b);
                         });

        bool too_wide = false;
        for (unsigned long mask : subsets) {
            std::vector<int> pick;
            for (int i = 0; i < nu; ++i)
                if (mask & (1UL << i))
                    pick.push_back(i);
            int dsub = mask_degree(mask);
            auto coeffs = candidate_coeffs(units, pick, f.lc(), prec);
            std::vector<mpz_class> cand(coeffs.size());
            bool ok = true;
            for (std::size_t i = 0; i < coeffs.size(); ++i) {
                if (!coeffs[i].width_le_2exp(-3)) { // demand width < 1/4
                    too_wide = true;
                    ok = false;
                    break;
                }
                auto z = integer_in(coeffs[i]);
                if (!z) {
                    ok = false;
                    break;
                }
                cand[i] = *z;
            }
            if (too_wide)
                break;
            if (!ok)
                continue;
            IntPoly candidate(std::move(cand));
            if (candidate.is_zero() || candidate.degree() != dsub)
                continue;
            IntPoly prim = normalized_primitive(candidate);
            if (prim.degree() < 1)
                continue;
            if (divides(prim, f)) {
                IntPoly rest = normalized_primitive(exact_div(f, prim));
                auto left = factor_squarefree(prim);
                auto right = factor_squarefree(rest);
                for (auto& e : left)
                    out.push_back(std::move(e));
                for (auto& e : right)
                    out.push_back(std::move(e));
                return out;
            }
        }
        if (!too_wide) {
            out.emplace_back(f, 1);
            return out;
        }
        bits *= 2;
        if (bits > ceiling)
            throw precision_error("factor_over_Q: precision ceiling reached");
    }
}

} // namespace

std::vector<std::pair<IntPoly, int>> factor_over_Q(const IntPoly& p) {
    if (p.is_zero() || p.degree() < 1)
        throw std::domain_error("factor_over_Q: degree >= 1 required");
    if (p.degree() > kFactorDegreeLimit)
        throw limit_error("factor_over_Q: degree above supported limit");
    std::vector<std::pair<IntPoly, int>> out;
    for (const auto& [f, mult] : squarefree_decomposition(p)) {
        if (f.degree() < 1)
            continue;
        for (auto& [irr, one] : factor_squarefree(f))
            out.emplace_back(std::move(irr), mult * one);
    }
    // canonical order and merging
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree())
            return a.first.degree() < b.first.degree();
        return a.first.coeffs() < b.first.coeffs();
    });
    std::vector<std::pair<IntPoly, int>> merged;
    for (auto& e : out) {
        if (!merged.empty() && merged.back().first == e.first)
            merged.back().second += e.second;
        else
            merged.push_back(std::move(e));
    }
    return merged;
}

bool is_irreducible(const IntPoly& p) {
    if (p.is_zero() || p.degree() < 1)
        return false;
    auto f = factor_over_Q(p);
    return f.size() == 1 && f[0].second == 1 && f[0].first.degree() == p.degree();
}

} // namespace hrpkit
