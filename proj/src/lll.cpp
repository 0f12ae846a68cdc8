#include "hrpkit/lll.hpp"

#include "hrpkit/config.hpp"
#include "hrpkit/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace hrpkit {

namespace {

using Vec = std::vector<mpz_class>;

mpq_class dot_qz(const Vec& a, const std::vector<mpq_class>& b) {
    mpq_class s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += mpq_class(a[i]) * b[i];
    return s;
}

mpz_class dot_zz(const Vec& a, const Vec& b) {
    mpz_class s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

mpz_class round_q(const mpq_class& q) {
    // nearest integer, ties toward even are unnecessary; half rounds up
    mpz_class num = q.get_num(), den = q.get_den();
    mpz_class twice = 2 * num + den;
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), twice.get_mpz_t(), mpz_class(2 * den).get_mpz_t());
    return r;
}

struct GramSchmidt {
    std::vector<std::vector<mpq_class>> star; // b*_i
    std::vector<std::vector<mpq_class>> mu;   // mu[i][j], j < i
    std::vector<mpq_class> norm2;             // |b*_i|^2

    void compute(const std::vector<Vec>& b) {
        const std::size_t n = b.size();
        const std::size_t d = b.empty() ? 0 : b[0].size();
        star.assign(n, std::vector<mpq_class>(d));
        mu.assign(n, std::vector<mpq_class>(n));
        norm2.assign(n, mpq_class(0));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < d; ++k)
                star[i][k] = mpq_class(b[i][k]);
            for (std::size_t j = 0; j < i; ++j) {
                if (norm2[j] == 0)
                    throw std::domain_error("lll: dependent rows");
                mpq_class m = dot_qz(b[i], star[j]) / norm2[j];
                mu[i][j] = m;
                for (std::size_t k = 0; k < d; ++k)
                    star[i][k] -= m * star[j][k];
            }
            mpq_class s = 0;
            for (std::size_t k = 0; k < d; ++k)
                s += star[i][k] * star[i][k];
            norm2[i] = s;
        }
        for (std::size_t i = 0; i < n; ++i)
            if (norm2[i] == 0)
                throw std::domain_error("lll: dependent rows");
    }
};

} // namespace

mpz_class gram_determinant(const LatticeBasis& b) {
    const std::size_t n = b.size();
    std::vector<std::vector<mpz_class>> g(n, std::vector<mpz_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            g[i][j] = dot_zz(b.rows[i], b.rows[j]);
    // Bareiss
    mpz_class sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (g[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && g[p][k] == 0)
                ++p;
            if (p == n)
                return 0;
            std::swap(g[k], g[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class t = g[i][j] * g[k][k] - g[i][k] * g[k][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                g[i][j] = t;
            }
            g[i][k] = 0;
        }
        prev = g[k][k];
    }
    return n == 0 ? mpz_class(1) : sign * g[n - 1][n - 1];
}

LllResult lll_reduce(const LatticeBasis& basis, const mpq_class& delta) {
    if (!(delta > mpq_class(1, 4) && delta < 1))
        throw std::domain_error("lll_reduce: delta must be in (1/4, 1)");
    const std::size_t n = basis.size();
    if (n == 0)
        return {basis, {}};
    for (const auto& r : basis.rows)
        if (r.size() != basis.dim())
            throw std::domain_error("lll_reduce: ragged rows");

    std::vector<Vec> b = basis.rows;
    std::vector<Vec> u(n, Vec(n, mpz_class(0)));
    for (std::size_t i = 0; i < n; ++i)
        u[i][i] = 1;

    // all-integer LLL: lam[i][j] = mu_ij * d[j+1], d[i+1] = det(Gram_i), d[0] = 1
    std::vector<mpz_class> d(n + 1);
    d[0] = 1;
    std::vector<Vec> lam(n, Vec(n, mpz_class(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            mpz_class t = dot_zz(b[i], b[j]);
            for (std::size_t s = 0; s < j; ++s) {
                t = d[s + 1] * t - lam[i][s] * lam[j][s];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), d[s].get_mpz_t());
            }
            if (j < i)
                lam[i][j] = t;
            else {
                d[i + 1] = t;
                if (d[i + 1] <= 0)
                    throw std::domain_error("lll: dependent rows");
            }
        }
    }

    const mpz_class dnum = delta.get_num(), dden = delta.get_den();

    auto red = [&](std::size_t k, std::size_t l) {
        if (2 * abs(lam[k][l]) <= d[l + 1])
            return;
        // q = nearest integer to lam[k][l] / d[l+1]
        mpz_class q, twice = 2 * lam[k][l] + d[l + 1];
        mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), mpz_class(2 * d[l + 1]).get_mpz_t());
        for (std::size_t t = 0; t < b[k].size(); ++t)
            b[k][t] -= q * b[l][t];
        for (std::size_t t = 0; t < n; ++t)
            u[k][t] -= q * u[l][t];
        lam[k][l] -= q * d[l + 1];
        for (std::size_t i = 0; i < l; ++i)
            lam[k][i] -= q * lam[l][i];
    };

    std::size_t k = 1;
    while (k < n) {
        red(k, k - 1);
        // Lovasz: d[k+1] d[k-1] + lam^2 >= delta d[k]^2
        mpz_class lhs = dden * (d[k + 1] * d[k - 1] + lam[k][k - 1] * lam[k][k - 1]);
        mpz_class rhs = dnum * d[k] * d[k];
        if (lhs >= rhs) {
            for (std::size_t l = k - 1; l-- > 0;)
                red(k, l);
            ++k;
        } else {
            std::swap(b[k], b[k - 1]);
            std::swap(u[k], u[k - 1]);
            for (std::size_t j = 0; j + 1 < k; ++j)
                std::swap(lam[k][j], lam[k - 1][j]);
            mpz_class lamkk = lam[k][k - 1];
            mpz_class bnew = d[k - 1] * d[k + 1] + lamkk * lamkk;
            mpz_divexact(bnew.get_mpz_t(), bnew.get_mpz_t(), d[k].get_mpz_t());
            for (std::size_t i = k + 1; i < n; ++i) {
                mpz_class t = lam[i][k];
                lam[i][k] = d[k + 1] * lam[i][k - 1] - lamkk * t;
                mpz_divexact(lam[i][k].get_mpz_t(), lam[i][k].get_mpz_t(), d[k].get_mpz_t());
                lam[i][k - 1] = bnew * t + lamkk * lam[i][k];
                mpz_divexact(lam[i][k - 1].get_mpz_t(), lam[i][k - 1].get_mpz_t(),
                             d[k + 1].get_mpz_t());
            }
            d[k] = bnew;
            k = k > 1 ? k - 1 : 1;
        }
    }

    LllResult res;
    res.reduced.rows = std::move(b);
    res.transform = std::move(u);
    if (!verify_reduced(res.reduced, delta))
        throw std::logic_error("lll_reduce: output failed verification");
    return res;
}

bool verify_reduced(const LatticeBasis& basis, const mpq_class& delta) {
    GramSchmidt gs;
    try {
        gs.compute(basis.rows);
    } catch (const std::domain_error&) {
        return false;
    }
    const std::size_t n = basis.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (2 * abs(gs.mu[i][j].get_num()) > gs.mu[i][j].get_den())
                return false;
    for (std::size_t k = 1; k < n; ++k) {
        mpq_class rhs = (delta - gs.mu[k][k - 1] * gs.mu[k][k - 1]) * gs.norm2[k - 1];
        if (gs.norm2[k] < rhs)
            return false;
    }
    return true;
}

LatticeBasis build_dependence_lattice(const std::vector<CertifiedArg>& args,
                                      const CertifiedArg& two_pi, const mpz_class& c) {
    const std::size_t m = args.size();
    auto floor_scaled = [&](const CertifiedArg& a) -> mpz_class {
        if (!(a.error_bound * 2 * c < 1))
            throw precision_error("build_dependence_lattice: argument too coarse for floor");
        mpq_class lo = a.lo() * mpq_class(c);
        mpq_class hi = a.hi() * mpq_class(c);
        mpz_class flo, fhi;
        mpz_fdiv_q(flo.get_mpz_t(), lo.get_num().get_mpz_t(), lo.get_den().get_mpz_t());
        mpz_fdiv_q(fhi.get_mpz_t(), hi.get_num().get_mpz_t(), hi.get_den().get_mpz_t());
        if (flo != fhi)
            throw precision_error("build_dependence_lattice: floor not certified");
        return flo;
    };
    LatticeBasis basis;
    basis.rows.assign(m + 1, Vec(m + 1, mpz_class(0)));
    for (std::size_t i = 0; i < m; ++i) {
        basis.rows[i][i] = 1;
        basis.rows[i][m] = floor_scaled(args[i]);
    }
    basis.rows[m][m] = floor_scaled(two_pi);
    return basis;
}

RelationSearchSchedule RelationSearchSchedule::defaults() {
    RelationSearchSchedule s;
    mpz_class c10;
    mpz_ui_pow_ui(c10.get_mpz_t(), 10, 10);
    s.c_values.push_back(c10);
    mpz_ui_pow_ui(c10.get_mpz_t(), 10, 20);
    s.c_values.push_back(c10);
    mpz_ui_pow_ui(c10.get_mpz_t(), 10, 40);
    s.c_values.push_back(c10);
    return s;
}

mpz_class candidate_threshold(std::size_t m, const mpz_class& c, const mpz_class& b) {
    // de Weger style bound: 2^(m/2) sqrt(m^2 + 5m + 4) * B  (rounded up)
    mpz_class de_weger;
    {
        mpz_class q(m * m + 5 * m + 4);
        mpz_class root;
        mpz_sqrt(root.get_mpz_t(), q.get_mpz_t());
        root += 1;
        mpz_class p2;
        mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>((m + 1) / 2));
        de_weger = p2 * root * b;
    }
    // geometric bound: floor(2 pi C)^(1/(m+1)) / 2^m
    mpz_class geo;
    {
        mpz_class det = (c * 6283185308L) / 1000000000L; // ~ floor(2 pi C), upper-ish
        mpz_class root;
        mpz_root(root.get_mpz_t(), det.get_mpz_t(), static_cast<unsigned long>(m + 1));
        mpz_class p2;
        mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(m));
        geo = root / p2;
        if (geo < 16)
            geo = 16;
    }
    return de_weger < geo ? de_weger : geo;
}

std::optional<RelationCandidate> search_relation_args(const std::vector<CertifiedArg>& args,
                                                      const RelationSearchSchedule& schedule) {
    const std::size_t m = args.size();
    for (const mpz_class& c : schedule.c_values) {
        // arguments must be sharp enough for certified floors
        long need_bits = static_cast<long>(mpz_sizeinbase(c.get_mpz_t(), 2)) + 8;
        std::vector<CertifiedArg> sharp = args;
        CertifiedArg tp = two_pi_arg(need_bits);
        bool ok = true;
        for (const auto& a : sharp)
            if (!(a.error_bound * 2 * c < 1))
                ok = false;
        if (!ok)
            throw precision_error("search_relation: arguments too coarse for schedule");
        LatticeBasis basis = build_dependence_lattice(sharp, tp, c);
        LllResult red = lll_reduce(basis);
        // squared norm of the first reduced vector vs threshold^2
        mpz_class n2 = dot_zz(red.reduced.rows[0], red.reduced.rows[0]);
        mpz_class thr = candidate_threshold(m, c, schedule.waldschmidt_b);
        if (n2 <= thr * thr)
            return RelationCandidate{red.transform[0], c};
    }
    return std::nullopt;
}

std::optional<RelationCandidate> search_relation(const std::vector<RootBox>& roots,
                                                 const RelationSearchSchedule& schedule) {
    long max_bits = 16;
    for (const auto& c : schedule.c_values)
        max_bits = std::max<long>(max_bits, static_cast<long>(mpz_sizeinbase(c.get_mpz_t(), 2)) + 16);
    std::vector<CertifiedArg> args;
    args.reserve(roots.size());
    for (const auto& r : roots)
        args.push_back(argument_of(r, max_bits));
    return search_relation_args(args, schedule);
}

} // namespace hrpkit
