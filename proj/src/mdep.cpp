#include "hrpkit/mdep.hpp"

#include "hrpkit/config.hpp"
#include "hrpkit/errors.hpp"
#include "hrpkit/factorize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hrpkit {

namespace {


long ceil_log2_z(const mpz_class& c) {
    // smallest L with c <= 2^L
    std::size_t bits = mpz_sizeinbase(c.get_mpz_t(), 2);
    mpz_class p2;
    mpz_ui_pow_ui(p2.get_mpz_t(), 2, bits - 1);
    return static_cast<long>(p2 == c ? bits - 1 : bits);
}

long euler_phi_l(long n) {
    long r = n, m = n;
    for (long q = 2; q * q <= m; ++q) {
        if (m % q == 0) {
            r -= r / q;
            while (m % q == 0)
                m /= q;
        }
    }
    if (m > 1)
        r -= r / m;
    return r;
}

} // namespace

// --- ConjugateSystem ------------------------------------------------------------

ConjugateSystem::ConjugateSystem(const IntPoly& p, long bits) : p_(p) {
    roots_ = upper_half_sorted(p, bits);
    args_.resize(roots_.size());
    arg_bits_.assign(roots_.size(), -1);
}

const CertifiedArg& ConjugateSystem::argument(std::size_t j, long bits) {
    if (arg_bits_[j] < bits) {
        args_[j] = argument_of(roots_[j], bits);
        arg_bits_[j] = bits;
    }
    return args_[j];
}

const RootBox& ConjugateSystem::box(std::size_t j, long bits) {
    mpq_class target(1);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>(bits));
    target /= mpq_class(den);
    if (roots_[j].width() > target)
        roots_[j] = refine_box(roots_[j], bits); // cached args stay valid: boxes only shrink
    return roots_[j];
}

namespace {

// --- zeta handling ----------------------------------------------------------------

// Rigorous box around exp(2 pi i a/n) via Lipschitz-1 bounds on sin and cos.
CBox zeta_box(long a, long n, mpfr_prec_t prec) {
    FInterval tp = two_pi_interval(prec);
    FInterval frac = FInterval::point_q(mpq_class(a, n), prec);
    FInterval ang = tp.mul(frac, prec);
    Real mid = ang.mid(prec);
    Real w = ang.width(prec);
    Real c_lo(prec), c_hi(prec), s_lo(prec), s_hi(prec);
    mpfr_cos(c_lo.ptr(), mid.ptr(), MPFR_RNDD);
    mpfr_cos(c_hi.ptr(), mid.ptr(), MPFR_RNDU);
    mpfr_sin(s_lo.ptr(), mid.ptr(), MPFR_RNDD);
    mpfr_sin(s_hi.ptr(), mid.ptr(), MPFR_RNDU);
    mpfr_sub(c_lo.ptr(), c_lo.ptr(), w.ptr(), MPFR_RNDD);
    mpfr_add(c_hi.ptr(), c_hi.ptr(), w.ptr(), MPFR_RNDU);
    mpfr_sub(s_lo.ptr(), s_lo.ptr(), w.ptr(), MPFR_RNDD);
    mpfr_add(s_hi.ptr(), s_hi.ptr(), w.ptr(), MPFR_RNDU);
    return CBox{FInterval(std::move(c_lo), std::move(c_hi)),
                FInterval(std::move(s_lo), std::move(s_hi))};
}

struct ZetaCandidate {
    long order = 1;
    long power = 0;
};

// Certified argument sum of the candidate, as exact rational bounds.
std::pair<mpq_class, mpq_class> arg_sum_bounds(ConjugateSystem& sys, const std::vector<long>& k,
                                               long bits) {
    mpq_class lo = 0, hi = 0;
    for (std::size_t j = 0; j < k.size(); ++j) {
        if (k[j] == 0)
            continue;
        const CertifiedArg& a = sys.argument(j, bits);
        if (k[j] > 0) {
            lo += mpq_class(k[j]) * a.lo();
            hi += mpq_class(k[j]) * a.hi();
        } else {
            lo += mpq_class(k[j]) * a.hi();
            hi += mpq_class(k[j]) * a.lo();
        }
    }
    return {lo, hi};
}

// Nearest exp(2 pi i a/n) with n below the order bound.
ZetaCandidate detect_zeta(ConjugateSystem& sys, const std::vector<long>& k, long order_bound) {
    auto [s_lo, s_hi] = arg_sum_bounds(sys, k, 96);
    CertifiedArg tp = two_pi_arg(104);
    double x = mpq_class((s_lo + s_hi) / 2).get_d() / tp.value.get_d();
    double frac = x - std::floor(x);
    long best_n = 1, best_a = 0;
    double best_err = 2;
    for (long n = 1; n <= order_bound; ++n) {
        long a = std::lround(frac * static_cast<double>(n));
        double err = std::abs(frac - static_cast<double>(a) / static_cast<double>(n));
        if (err < best_err - 1e-15) {
            best_err = err;
            best_n = n;
            best_a = ((a % n) + n) % n;
        }
    }
    if (best_a == 0)
        return ZetaCandidate{1, 0};
    long g = std::gcd(best_a, best_n);
    return ZetaCandidate{best_n / g, best_a / g};
}

mpz_class tower_degree_bound(int d, int t) {
    mpz_class b = 1;
    for (int i = 0; i < t; ++i) {
        long f = d - 2 * i;
        if (f < 1)
            f = 1;
        b *= f;
    }
    return b;
}

std::optional<long> certified_integer_between(const mpq_class& lo, const mpq_class& hi) {
    mpz_class fl, fh;
    mpq_class l = lo, h = hi;
    mpz_cdiv_q(fl.get_mpz_t(), l.get_num().get_mpz_t(), l.get_den().get_mpz_t());
    mpz_fdiv_q(fh.get_mpz_t(), h.get_num().get_mpz_t(), h.get_den().get_mpz_t());
    if (fl == fh && fl.fits_slong_p())
        return fl.get_si();
    return std::nullopt;
}

} // namespace

std::optional<Relation> verify_relation_with_system(ConjugateSystem& sys,
                                                    const std::vector<long>& candidate,
                                                    const MdepConfig& cfg,
                                                    std::string* rejection_note) {
    const std::size_t m = sys.count();
    if (candidate.size() != m)
        throw std::domain_error("verify_relation: exponent count mismatch");
    bool nonzero = false;
    for (long k : candidate)
        if (k != 0)
            nonzero = true;
    if (!nonzero)
        throw std::domain_error("verify_relation: candidate must be nonzero");

    ZetaCandidate zc = detect_zeta(sys, candidate, cfg.cofactor_order_bound);

    // Separation bound: eta' = prod_+ alpha^k - zeta prod_- alpha^{-k} lies in a
    // field of degree at most D = phi(n) * prod_{i<t}(d - 2i); c^M eta' is an
    // algebraic integer whose conjugates all have modulus <= 2, so a nonzero
    // eta satisfies |eta| = |eta'| >= 2 (2 c^M)^{-D}.
    const int d = sys.poly().degree();
    int t = 0;
    long spos = 0, sneg = 0;
    for (long k : candidate) {
        if (k != 0)
            ++t;
        if (k > 0)
            spos += k;
        else
            sneg -= k;
    }
    const long big_m = std::max(spos, sneg);
    mpz_class c = abs(sys.poly().lc());
    mpz_class dt = tower_degree_bound(d, t) * euler_phi_l(zc.order);
    const long log2c = ceil_log2_z(c);
    mpz_class e_needed = dt * (1 + big_m * log2c);
    if (std::getenv("HRPKIT_TRACE_VERIFY")) {
        std::ostringstream os;
        os << "verify k=(";
        for (std::size_t j = 0; j < candidate.size(); ++j)
            os << (j ? "," : "") << candidate[j];
        os << ") zeta=" << zc.power << "/" << zc.order << " e_needed=" << e_needed.get_str();
        std::cerr << os.str() << std::endl;
    }
    if (e_needed + 512 > precision_ceiling_bits())
        throw precision_error("verify_relation: separation bound exceeds precision ceiling");
    const long sep_exp = 1 - e_needed.get_si(); // |eta| >= 2^sep_exp when nonzero

    long prec = 256;
    const long proof_prec = -sep_exp + 192;
    while (true) {
        const mpfr_prec_t wp = static_cast<mpfr_prec_t>(prec);
        CBox beta = CBox::one(wp);
        for (std::size_t j = 0; j < m; ++j) {
            if (candidate[j] == 0)
                continue;
            CBox base = sys.box(j, prec - 32).to_cbox(wp);
            beta = beta.mul(base.pow(candidate[j], wp, true), wp);
        }
        CBox zb = zeta_box(zc.power, zc.order, wp);
        FInterval dist = beta.sub(zb, wp).abs(wp);
        if (dist.sign() > 0) {
            if (rejection_note) {
                std::ostringstream os;
                os << "rejected: |prod^k - zeta(" << zc.power << "/" << zc.order
                   << ")| >= " << dist.lo().to_double() << " certified at " << prec << " bits";
                *rejection_note = os.str();
            }
            return std::nullopt;
        }
        Real sep(64);
        mpfr_set_ui_2exp(sep.ptr(), 1, static_cast<mpfr_exp_t>(sep_exp), MPFR_RNDD);
        if (mpfr_cmp(dist.hi().ptr(), sep.ptr()) < 0) {
            Relation rel;
            rel.exponents = candidate;
            rel.cofactor = RootOfUnity{zc.order, zc.power};
            // certify t in sum k_j theta_j + 2 pi t = 2 pi a/n
            long abits = 96;
            while (true) {
                auto [s_lo, s_hi] = arg_sum_bounds(sys, candidate, abits);
                CertifiedArg tp = two_pi_arg(abits + 8);
                mpq_class n_lo = mpq_class(zc.power, zc.order) * tp.lo() - s_hi;
                mpq_class n_hi = mpq_class(zc.power, zc.order) * tp.hi() - s_lo;
                mpq_class t_lo = std::min(std::min(n_lo / tp.lo(), n_lo / tp.hi()),
                                          std::min(n_hi / tp.lo(), n_hi / tp.hi()));
                mpq_class t_hi = std::max(std::max(n_lo / tp.lo(), n_lo / tp.hi()),
                                          std::max(n_hi / tp.lo(), n_hi / tp.hi()));
                auto tv = certified_integer_between(t_lo, t_hi);
                if (tv) {
                    rel.two_pi_multiple = *tv;
                    break;
                }
                abits *= 2;
                if (abits > precision_ceiling_bits())
                    throw precision_error("verify_relation: 2 pi multiple not certified");
            }
            return rel;
        }
        // a false candidate almost always refutes by 1024 bits; a true one
        // needs the full separation precision, so jump straight to it
        if (prec < proof_prec)
            prec = (prec < 1024 && proof_prec > 1024) ? 1024 : proof_prec;
        else
            prec *= 2;
        if (prec > precision_ceiling_bits())
            throw precision_error("verify_relation: precision ceiling reached");
    }
}

std::optional<Relation> verify_relation_exact(const IntPoly& p, const std::vector<long>& candidate,
                                              const MdepConfig& cfg) {
    ConjugateSystem sys(p, 64);
    return verify_relation_with_system(sys, candidate, cfg, nullptr);
}

// --- saturation -------------------------------------------------------------------

namespace {

using LVec = std::vector<mpz_class>;

// Basis of {x in Z^m : q x in span_Z(rows) for some q >= 1} via a Smith-style
// diagonalization tracking the inverse of the column transform.
std::vector<LVec> saturate_lattice(std::vector<LVec> a, std::size_t m) {
    const std::size_t r = a.size();
    std::vector<LVec> w(m, LVec(m, mpz_class(0)));
    for (std::size_t i = 0; i < m; ++i)
        w[i][i] = 1;

    std::size_t rank = 0;
    for (std::size_t tcol = 0; tcol < std::min(r, m); ++tcol) {
        bool have_pivot = false;
        while (true) {
            std::size_t pi = tcol, pj = tcol;
            mpz_class best = 0;
            for (std::size_t i = tcol; i < r; ++i)
                for (std::size_t j = tcol; j < m; ++j)
                    if (a[i][j] != 0 && (best == 0 || abs(a[i][j]) < best)) {
                        best = abs(a[i][j]);
                        pi = i;
                        pj = j;
                    }
            if (best == 0)
                break;
            have_pivot = true;
            std::swap(a[tcol], a[pi]);
            if (pj != tcol) {
                for (std::size_t i = 0; i < r; ++i)
                    std::swap(a[i][tcol], a[i][pj]);
                std::swap(w[tcol], w[pj]);
            }
            bool clean = true;
            for (std::size_t i = tcol + 1; i < r; ++i) {
                if (a[i][tcol] == 0)
                    continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a[i][tcol].get_mpz_t(), a[tcol][tcol].get_mpz_t());
                if (q != 0)
                    for (std::size_t jj = tcol; jj < m; ++jj)
                        a[i][jj] -= q * a[tcol][jj];
                if (a[i][tcol] != 0)
                    clean = false;
            }
            for (std::size_t j = tcol + 1; j < m; ++j) {
                if (a[tcol][j] == 0)
                    continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a[tcol][j].get_mpz_t(), a[tcol][tcol].get_mpz_t());
                if (q != 0) {
                    for (std::size_t i = 0; i < r; ++i)
                        a[i][j] -= q * a[i][tcol];
                    for (std::size_t l = 0; l < m; ++l)
                        w[tcol][l] += q * w[j][l]; // col_j -= q col_t
                }
                if (a[tcol][j] != 0)
                    clean = false;
            }
            if (clean)
                break;
        }
        if (!have_pivot)
            break;
        ++rank;
    }
    return std::vector<LVec>(w.begin(), w.begin() + static_cast<long>(rank));
}

std::vector<long> to_long_vec(const LVec& v) {
    std::vector<long> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].fits_slong_p())
            throw limit_error("relation exponent out of range");
        out[i] = v[i].get_si();
    }
    return out;
}

// One LLL + verification pass over the active coordinates; returns a verified
// full-length exponent vector or nullopt (heuristic independence).
std::optional<std::vector<long>> find_verified_relation(ConjugateSystem& sys,
                                                        const std::vector<std::size_t>& active,
                                                        const MdepConfig& cfg,
                                                        std::vector<std::string>& diags) {
    if (active.empty())
        return std::nullopt;
    long max_bits = 16;
    for (const auto& c : cfg.schedule.c_values)
        max_bits =
            std::max<long>(max_bits, static_cast<long>(mpz_sizeinbase(c.get_mpz_t(), 2)) + 16);

    const int d = sys.poly().degree();
    const long log2c = ceil_log2_z(abs(sys.poly().lc()));
    auto cost_estimate = [&](int support, long big_m) {
        mpz_class e = tower_degree_bound(d, support) * (1 + big_m * log2c);
        return e;
    };
    // candidates too expensive for the first pass, retried afterwards
    struct Deferred {
        std::vector<long> exps;
        mpz_class cost;
        std::string cstr;
    };
    std::vector<Deferred> deferred;
    const mpz_class kBudget = 1 << 18;

    for (const mpz_class& c : cfg.schedule.c_values) {
        std::vector<CertifiedArg> args;
        args.reserve(active.size());
        for (std::size_t j : active)
            args.push_back(sys.argument(j, max_bits));
        CertifiedArg tp = two_pi_arg(max_bits);
        LatticeBasis basis = build_dependence_lattice(args, tp, c);
        LllResult red = lll_reduce(basis);
        mpz_class thr2 = candidate_threshold(active.size(), c, cfg.schedule.waldschmidt_b);
        thr2 *= thr2;

        // every anomalously short reduced vector is a candidate; verify the
        // cheap ones (small support, small exponents) first
        struct Cand {
            std::vector<long> exps;
            int support;
            long l1;
        };
        std::vector<Cand> cands;
        for (std::size_t row = 0; row < red.reduced.rows.size(); ++row) {
            mpz_class n2 = 0;
            for (const auto& v : red.reduced.rows[row])
                n2 += v * v;
            if (n2 > thr2)
                continue;
            std::vector<long> exps(sys.count(), 0);
            bool fits = true;
            long l1 = 0, gcd_all = 0;
            int support = 0;
            for (std::size_t i = 0; i < active.size(); ++i) {
                const mpz_class& v = red.transform[row][i];
                if (!v.fits_slong_p()) {
                    fits = false;
                    break;
                }
                exps[active[i]] = v.get_si();
                l1 += std::abs(v.get_si());
                gcd_all = std::gcd(gcd_all, std::abs(v.get_si()));
                if (v != 0)
                    ++support;
            }
            if (!fits || gcd_all == 0)
                continue;
            if (gcd_all > 1) {
                for (auto& e : exps)
                    e /= gcd_all;
                l1 /= gcd_all;
            }
            if (l1 > 200) {
                std::ostringstream os;
                os << "C=" << c.get_str() << ": candidate with L1 norm " << l1
                   << " skipped (implausible relation)";
                diags.push_back(os.str());
                continue;
            }
            cands.push_back(Cand{std::move(exps), support, l1});
        }
        // generators of small support often appear only as half-sums of the
        // reduced rows (u-v and u+v short, u and v not): enrich with pairwise
        // combinations before ranking
        {
            auto primitive_of = [&](std::vector<long> v) -> std::optional<Cand> {
                long g = 0, l1 = 0;
                int support = 0;
                for (long x : v)
                    g = std::gcd(g, std::abs(x));
                if (g == 0)
                    return std::nullopt;
                for (auto& x : v) {
                    x /= g;
                    l1 += std::abs(x);
                    if (x != 0)
                        ++support;
                }
                if (l1 > 200)
                    return std::nullopt;
                return Cand{std::move(v), support, l1};
            };
            const std::size_t base = cands.size();
            for (std::size_t i = 0; i < base; ++i) {
                for (std::size_t j = i + 1; j < base; ++j) {
                    std::vector<long> sum(sys.count()), dif(sys.count());
                    for (std::size_t t2 = 0; t2 < sys.count(); ++t2) {
                        sum[t2] = cands[i].exps[t2] + cands[j].exps[t2];
                        dif[t2] = cands[i].exps[t2] - cands[j].exps[t2];
                    }
                    if (auto cs = primitive_of(std::move(sum)))
                        cands.push_back(std::move(*cs));
                    if (auto cd = primitive_of(std::move(dif)))
                        cands.push_back(std::move(*cd));
                }
            }
        }
        for (auto& cand : cands) {
            for (long x : cand.exps) {
                if (x != 0) {
                    if (x < 0)
                        for (auto& e : cand.exps)
                            e = -e;
                    break;
                }
            }
        }
        std::stable_sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
            if (a.support != b.support)
                return a.support < b.support;
            if (a.l1 != b.l1)
                return a.l1 < b.l1;
            return a.exps < b.exps;
        });
        cands.erase(std::unique(cands.begin(), cands.end(),
                                [](const Cand& a, const Cand& b) { return a.exps == b.exps; }),
                    cands.end());
        for (Cand& cand : cands) {
            long spos = 0, sneg = 0;
            for (long e : cand.exps) {
                if (e > 0)
                    spos += e;
                else
                    sneg -= e;
            }
            mpz_class cost = cost_estimate(cand.support, std::max(spos, sneg));
            if (cost > kBudget) {
                deferred.push_back(Deferred{std::move(cand.exps), cost, c.get_str()});
                continue;
            }
            std::string note;
            try {
                auto rel = verify_relation_with_system(sys, cand.exps, cfg, &note);
                if (rel)
                    return cand.exps;
            } catch (const precision_error& pe) {
                note = pe.what();
            }
            std::ostringstream os;
            os << "C=" << c.get_str() << ": " << note;
            diags.push_back(os.str());
        }
    }

    // second pass: expensive candidates, cheapest first, deduplicated
    std::sort(deferred.begin(), deferred.end(),
              [](const Deferred& a, const Deferred& b) { return a.cost < b.cost; });
    std::vector<std::vector<long>> seen;
    for (const Deferred& dc : deferred) {
        if (dc.cost > cfg.verify_cost_cap_bits) {
            std::ostringstream os;
            os << "C=" << dc.cstr << ": candidate skipped, separation precision "
               << dc.cost.get_str() << " bits exceeds the verification cost cap";
            diags.push_back(os.str());
            break; // sorted ascending: the rest are at least as expensive
        }
        if (std::find(seen.begin(), seen.end(), dc.exps) != seen.end())
            continue;
        seen.push_back(dc.exps);
        std::string note;
        try {
            auto rel = verify_relation_with_system(sys, dc.exps, cfg, &note);
            if (rel)
                return dc.exps;
        } catch (const precision_error& pe) {
            note = pe.what();
        }
        std::ostringstream os;
        os << "C=" << dc.cstr << ": " << note;
        diags.push_back(os.str());
    }
    return std::nullopt;
}

std::vector<Relation> canonical_relation_basis(ConjugateSystem& sys,
                                               const std::vector<std::vector<long>>& found,
                                               const MdepConfig& cfg,
                                               std::vector<std::string>& diags) {
    std::vector<Relation> out;
    if (found.empty())
        return out;
    const std::size_t m = sys.count();
    std::vector<LVec> rows;
    rows.reserve(found.size());
    for (const auto& f : found) {
        LVec r(m);
        for (std::size_t i = 0; i < m; ++i)
            r[i] = f[i];
        rows.push_back(std::move(r));
    }
    std::vector<LVec> sat = saturate_lattice(rows, m);
    LatticeBasis sb;
    sb.rows = sat;
    LllResult red = lll_reduce(sb);
    std::vector<LVec> basis = red.reduced.rows;
    for (auto& row : basis) {
        for (const auto& v : row) {
            if (v != 0) {
                if (v < 0)
                    for (auto& x : row)
                        x = -x;
                break;
            }
        }
    }
    std::sort(basis.begin(), basis.end(), [](const LVec& a, const LVec& b) {
        mpz_class na = 0, nb = 0;
        for (const auto& v : a)
            na += v * v;
        for (const auto& v : b)
            nb += v * v;
        if (na != nb)
            return na < nb;
        return a < b;
    });
    for (const auto& row : basis) {
        std::string note;
        try {
            auto rel = verify_relation_with_system(sys, to_long_vec(row), cfg, &note);
            if (rel) {
                out.push_back(std::move(*rel));
                continue;
            }
        } catch (const precision_error& pe) {
            note = pe.what();
        }
        diags.push_back("saturated basis vector failed verification: " + note);
    }
    return out;
}

std::optional<std::pair<long, IntPoly>> scan_power_reducibility(ConjugateSystem& sys,
                                                                const MdepConfig& cfg,
                                                                std::vector<std::string>& diags) {
    const std::size_t m = sys.count();
    std::optional<long> best;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            std::vector<std::size_t> active{i, j};
            auto k = find_verified_relation(sys, active, cfg, diags);
            if (!k)
                continue;
            long a = (*k)[i], b = (*k)[j];
            long g = std::gcd(std::abs(a), std::abs(b));
            if (g == 0)
                continue;
            a /= g;
            b /= g;
            if (std::abs(a) != std::abs(b)) {
                diags.push_back("pair relation with unequal exponent magnitudes (unexpected)");
                continue;
            }
            std::vector<long> prim(m, 0);
            prim[i] = a;
            prim[j] = b;
            std::string note;
            std::optional<Relation> rel;
            try {
                rel = verify_relation_with_system(sys, prim, cfg, &note);
            } catch (const precision_error& pe) {
                note = pe.what();
            }
            if (!rel) {
                diags.push_back("primitive pair relation failed verification: " + note);
                continue;
            }
            long bpair = rel->cofactor.order * std::abs(a);
            if (!best || bpair < *best)
                best = bpair;
        }
    }
    if (!best)
        return std::nullopt;
    IntPoly reduced = power_map_minpoly(sys.poly(), *best, sys.roots()[0]);
    if (reduced.degree() >= sys.poly().degree())
        throw std::logic_error("power_reducibility: power map did not reduce the degree");
    return std::make_pair(*best, reduced);
}

} // namespace

DependenceReport analyze_dependences(ConjugateSystem& sys, const MdepConfig& cfg,
                                     bool want_power_reducibility) {
    DependenceReport rep;
    const std::size_t m = sys.count();
    std::vector<std::size_t> active(m);
    std::iota(active.begin(), active.end(), 0);
    std::vector<std::vector<long>> found;
    while (!active.empty()) {
        auto k = find_verified_relation(sys, active, cfg, rep.diagnostics);
        if (!k)
            break;
        // pivot: smallest nonzero exponent magnitude among active coordinates
        std::size_t pivot = active[0];
        long bestmag = 0;
        for (std::size_t j : active) {
            long mag = std::abs((*k)[j]);
            if (mag != 0 && (bestmag == 0 || mag < bestmag)) {
                bestmag = mag;
                pivot = j;
            }
        }
        found.push_back(std::move(*k));
        active.erase(std::find(active.begin(), active.end(), pivot));
    }
    rep.m_alpha = static_cast<int>(m - found.size());
    rep.relations = canonical_relation_basis(sys, found, cfg, rep.diagnostics);
    rep.independence_mode =
        cfg.schedule.b_supplied ? IndependenceMode::certified : IndependenceMode::heuristic;
    if (want_power_reducibility && !found.empty())
        rep.power_reducible = scan_power_reducibility(sys, cfg, rep.diagnostics);
    return rep;
}

namespace {

void check_mdep_preconditions(const IntPoly& p) {
    if (p.is_zero() || p.degree() < 2)
        throw std::domain_error("mdep: degree >= 2 required");
    if (!is_reciprocal(normalized_primitive(p)))
        throw std::domain_error("mdep: polynomial is not reciprocal");
    CirclePartition part = schur_cohn_partition(p);
    if (part.inside != 0 || part.outside != 0)
        throw std::domain_error("mdep: not all roots lie on the unit circle");
    if (!is_irreducible(p))
        throw std::domain_error("mdep: polynomial is not irreducible");
}

DependenceReport cyclotomic_report(const IntPoly& p, long n) {
    DependenceReport rep;
    rep.m_alpha = 0;
    rep.independence_mode = IndependenceMode::certified;
    if (p.degree() < 2 || n <= 2)
        return rep;
    // upper-half conjugates are zeta_n^{a_j}; each alone is a relation
    ConjugateSystem sys(p, 64);
    for (std::size_t j = 0; j < sys.count(); ++j) {
        const CertifiedArg& a = sys.argument(j, 96);
        // theta_j = 2 pi a_j / n exactly
        CertifiedArg tp = two_pi_arg(104);
        mpq_class lo = a.lo() * n / tp.hi();
        mpq_class hi = a.hi() * n / tp.lo();
        mpz_class fl, fh;
        mpq_class l2 = lo + mpq_class(1, 2), h2 = hi + mpq_class(1, 2);
        mpz_fdiv_q(fl.get_mpz_t(), l2.get_num().get_mpz_t(), l2.get_den().get_mpz_t());
        mpz_fdiv_q(fh.get_mpz_t(), h2.get_num().get_mpz_t(), h2.get_den().get_mpz_t());
        long aj = fl == fh ? fl.get_si() : 0;
        Relation rel;
        rel.exponents.assign(sys.count(), 0);
        rel.exponents[j] = 1;
        long g = std::gcd(aj, n);
        rel.cofactor = RootOfUnity{n / g, aj / g};
        rel.two_pi_multiple = 0;
        rep.relations.push_back(std::move(rel));
    }
    return rep;
}

} // namespace

std::vector<Relation> relation_lattice(const IntPoly& p, const MdepConfig& cfg) {
    check_mdep_preconditions(p);
    if (auto n = cyclotomic_order(normalized_primitive(p)))
        return cyclotomic_report(normalized_primitive(p), *n).relations;
    ConjugateSystem sys(p, 64);
    return analyze_dependences(sys, cfg, false).relations;
}

DependenceReport m_alpha(const IntPoly& p, const MdepConfig& cfg) {
    check_mdep_preconditions(p);
    if (auto n = cyclotomic_order(normalized_primitive(p)))
        return cyclotomic_report(normalized_primitive(p), *n);
    ConjugateSystem sys(p, 64);
    return analyze_dependences(sys, cfg, true);
}

std::optional<std::pair<long, IntPoly>> power_reducibility(const IntPoly& p,
                                                           const MdepConfig& cfg) {
    check_mdep_preconditions(p);
    if (cyclotomic_order(normalized_primitive(p)))
        throw std::domain_error("power_reducibility: cyclotomic input");
    ConjugateSystem sys(p, 64);
    std::vector<std::string> diags;
    return scan_power_reducibility(sys, cfg, diags);
}

} // namespace hrpkit
