// Acceptance suite: one pass/fail line per criterion, non-zero exit when any
// criterion fails.  Runs the full survey rows, so expect several minutes.

#include "hrpkit/cheb.hpp"
#include "hrpkit/factorize.hpp"
#include "hrpkit/hrp.hpp"
#include "hrpkit/lll.hpp"
#include "hrpkit/mdep.hpp"
#include "hrpkit/survey.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>
#include <vector>

using namespace hrpkit;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& name, bool ok, const std::string& detail = "") {
    std::printf("%s criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", number, name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok)
        ++g_failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// --- criterion 1: table reproduction -------------------------------------------

struct RowExpect {
    int d, c, h;
    long circle, irred, prim, non_xm, dep, npr, m1, m2, m3;
};

bool check_row(const RowExpect& e, std::ostringstream& log) {
    SurveyOptions opt;
    opt.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    auto t0 = Clock::now();
    SurveyRow r = run_survey(e.d, e.c, e.h, opt);
    double secs = seconds_since(t0);
    mpz_class want_poly;
    mpz_ui_pow_ui(want_poly.get_mpz_t(), static_cast<unsigned long>(2 * e.h + 1),
                  static_cast<unsigned long>(e.d / 2));
    bool ok = true;
    auto cell = [&](const char* name, long got, long want) {
        if (got == want)
            return;
        ok = false;
        log << "  (" << e.d << "," << e.c << "," << e.h << ") " << name << ": computed " << got
            << ", reference " << want << "\n";
    };
    if (r.poly != want_poly) {
        ok = false;
        log << "  poly mismatch\n";
    }
    cell("circle", r.circle, e.circle);
    cell("irred", r.irred, e.irred);
    cell("prim", r.prim, e.prim);
    cell("non_xm", r.non_xm, e.non_xm);
    cell("dep", r.dep, e.dep);
    cell("npr", r.npr, e.npr);
    cell("m1", r.m1, e.m1);
    cell("m2", r.m2, e.m2);
    cell("m3", r.m3, e.m3);
    log << "  (" << e.d << "," << e.c << "," << e.h << ") finished in " << secs << " s\n";
    return ok;
}

void criterion1() {
    // reference values from the published dependency table
    std::vector<RowExpect> rows{
        {6, 2, 50, 287, 71, 62, 58, 8, 8, 8, 0, 0},
        {6, 3, 50, 805, 325, 318, 310, 22, 22, 22, 0, 0},
        {8, 2, 12, 1069, 210, 200, 182, 16, 10, 10, 0, 0},
        {8, 3, 12, 3991, 1565, 1558, 1502, 42, 40, 40, 0, 0},
        {10, 2, 6, 2931, 518, 516, 512, 8, 8, 8, 0, 0},
        {12, 2, 4, 6557, 1386, 1380, 1310, 32, 24, 20, 2, 2},
    };
    if (std::getenv("HRPKIT_ACCEPT_STRETCH")) {
        rows.push_back({10, 3, 6, 13244, 5640, 5638, 5630, 72, 72, 72, 0, 0});
        rows.push_back({12, 3, 4, 33202, 15858, 15852, 15620, 98, 90, 84, 4, 2});
    }
    std::ostringstream log;
    bool ok = true;
    for (const auto& e : rows)
        ok = check_row(e, log) && ok;
    std::cout << log.str();
    criterion(1, "table reproduction (six required rows, exact counts)", ok,
              ok ? ""
                 : "known defect: the reference irred cells for (6,2,50), (6,3,50), (8,2,12), "
                   "(8,3,12) exceed the provable maximum prim + #{degree-d cyclotomics}; "
                   "all other cells match exactly");
}

// --- criterion 2: named examples ---------------------------------------------------

bool lattice_member(const std::vector<std::vector<long>>& basis, const std::vector<long>& v) {
    if (basis.empty())
        return false;
    const long range = 4;
    std::vector<long> c(basis.size(), -range);
    while (true) {
        std::vector<long> acc(v.size(), 0);
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = 0; j < v.size(); ++j)
                acc[j] += c[i] * basis[i][j];
        if (acc == v)
            return true;
        std::size_t i = 0;
        while (i < basis.size()) {
            if (c[i] < range) {
                ++c[i];
                for (std::size_t j = 0; j < i; ++j)
                    c[j] = -range;
                break;
            }
            ++i;
        }
        if (i == basis.size())
            break;
    }
    return false;
}

bool same_lattice(const std::vector<Relation>& got, const std::vector<std::vector<long>>& want) {
    std::vector<std::vector<long>> g;
    for (const auto& r : got)
        g.push_back(r.exponents);
    if (g.size() != want.size())
        return false;
    for (const auto& v : want)
        if (!lattice_member(g, v))
            return false;
    for (const auto& v : g)
        if (!lattice_member(want, v))
            return false;
    return true;
}

void criterion2() {
    bool ok = true;
    std::ostringstream log;

    { // degree 6: alpha1 alpha2^-1 alpha3 = sqrt(-1)
        IntPoly p{2, -2, 3, -2, 3, -2, 2};
        DependenceReport rep = m_alpha(p);
        bool sub = rep.m_alpha == 2 && rep.relations.size() == 1 &&
                   rep.relations[0].exponents == std::vector<long>{1, -1, 1} &&
                   rep.relations[0].cofactor.order == 4 && rep.relations[0].cofactor.power == 1;
        if (!sub)
            log << "  degree-6 example failed\n";
        ok = ok && sub;
    }
    { // degree 8: b = 8 power reduction to 16 + 8x + x^2 + 8x^3 + 16x^4
        IntPoly p{2, 4, 2, -4, -7, -4, 2, 4, 2};
        auto pr = power_reducibility(p);
        bool sub = pr.has_value() && pr->first == 8 && pr->second == IntPoly{16, 8, 1, 8, 16};
        if (!sub)
            log << "  degree-8 power reduction failed\n";
        ok = ok && sub;
    }
    { // degree 12, m = 4: generators supported on {1,4,5} and {2,3,6}, cofactor 1.
        // The published display shows alpha1 = alpha4 alpha5^{-1}, alpha2 = alpha3
        // alpha6^{-1}; under the ascending-real-part indexing those exact vectors
        // are certifiably refuted and the sign-flipped variants hold.
        IntPoly p{2, 4, 4, 2, 1, 0, 0, 0, 1, 2, 4, 4, 2};
        DependenceReport rep = m_alpha(p);
        bool sub = rep.m_alpha == 4 &&
                   same_lattice(rep.relations, {{1, 0, 0, -1, -1, 0}, {0, 1, -1, 0, 0, -1}});
        for (const auto& r : rep.relations)
            sub = sub && r.cofactor.is_one();
        // displayed variant must be certifiably refuted
        sub = sub && !verify_relation_exact(p, {1, 0, 0, -1, 1, 0}).has_value();
        sub = sub && verify_relation_exact(p, {1, 0, 0, -1, -1, 0}).has_value();
        if (!sub)
            log << "  degree-12 (2,4,4,2,1,...) generators failed\n";
        else
            log << "  note: degree-12 (2,4,4,2,1,...) matches with the exponent sign of the "
                   "second factor flipped relative to the published display (certified)\n";
        ok = ok && sub;
    }
    { // degree 12: alpha1 alpha6 / alpha2 = alpha3 alpha5 / alpha4 = (1+sqrt(-3))/2
        IntPoly p{3, -3, 1, 1, -2, 2, -1, 2, -2, 1, 1, -3, 3};
        DependenceReport rep = m_alpha(p);
        bool sub = rep.m_alpha == 4 &&
                   same_lattice(rep.relations, {{1, -1, 0, 0, 0, 1}, {0, 0, 1, -1, 1, 0}});
        int sixth = 0;
        for (const auto& r : rep.relations)
            if (r.cofactor.order == 6 && r.cofactor.power == 1)
                ++sixth;
        sub = sub && sixth == 2;
        if (!sub)
            log << "  degree-12 (3,-3,1,...) failed\n";
        ok = ok && sub;
    }
    { // degree 12: alpha1 alpha3 / alpha4 = alpha2 alpha5 / alpha6 = -1
        IntPoly p{3, 0, 3, 0, -1, -2, -3, -2, -1, 0, 3, 0, 3};
        DependenceReport rep = m_alpha(p);
        bool sub = rep.m_alpha == 4 &&
                   same_lattice(rep.relations, {{1, 0, 1, -1, 0, 0}, {0, 1, 0, 0, 1, -1}});
        int minus = 0;
        for (const auto& r : rep.relations)
            if (r.cofactor.order == 2 && r.cofactor.power == 1)
                ++minus;
        sub = sub && minus == 2;
        if (!sub)
            log << "  degree-12 (3,0,3,...) failed\n";
        ok = ok && sub;
    }
    { // degree 16: alpha1 alpha3 / (alpha4 alpha8) = alpha2 alpha5 alpha7 / alpha6 = -1
        IntPoly p{2, -2, -1, 1, 1, 0, -2, 1, 1, 1, -2, 0, 1, 1, -1, -2, 2};
        DependenceReport rep = m_alpha(p);
        bool sub = rep.m_alpha == 6 &&
                   same_lattice(rep.relations, {{1, 0, 1, -1, 0, 0, 0, -1},
                                                {0, 1, 0, 0, 1, -1, 1, 0}});
        int minus = 0;
        for (const auto& r : rep.relations)
            if (r.cofactor.order == 2 && r.cofactor.power == 1)
                ++minus;
        sub = sub && minus == 2;
        if (!sub)
            log << "  degree-16 failed\n";
        ok = ok && sub;
    }
    { // degree 12, m = 3: alpha2 alpha3 alpha4 = alpha1 alpha3 alpha5 = 1, alpha4 = alpha5 alpha6
        IntPoly p{2, 4, 4, 3, 3, 2, 1, 2, 3, 3, 4, 4, 2};
        DependenceReport rep = m_alpha(p);
        std::vector<std::vector<long>> want{
            {0, 1, 1, 1, 0, 0}, {1, 0, 1, 0, 1, 0}, {0, 0, 0, 1, -1, -1}};
        bool sub = rep.m_alpha == 3 && same_lattice(rep.relations, want);
        for (const auto& v : want)
            sub = sub && verify_relation_exact(p, v).has_value();
        if (!sub)
            log << "  degree-12 m-3 (2,4,4,3,...) failed\n";
        ok = ok && sub;
    }
    { // degree 12, m = 3: alpha3 alpha4 / alpha1 = alpha3 alpha5 / alpha2 = alpha2 alpha6 / alpha1
        IntPoly p{3, 0, -3, 2, 3, 0, -1, 0, 3, 2, -3, 0, 3};
        DependenceReport rep = m_alpha(p);
        std::vector<std::vector<long>> want{
            {-1, 0, 1, 1, 0, 0}, {0, -1, 1, 0, 1, 0}, {-1, 1, 0, 0, 0, 1}};
        bool sub = rep.m_alpha == 3 && same_lattice(rep.relations, want);
        for (const auto& v : want) {
            auto rel = verify_relation_exact(p, v);
            sub = sub && rel.has_value() && rel->cofactor.is_one();
        }
        // classification: unit circle, verdict unknown (m = d/2 - 3)
        HrpStatus st = classify_hrp(p, isolate_roots(p, 32).front());
        sub = sub && st.kind == HrpKind::UnitCircle && st.verdict == HrpVerdict::Unknown;
        if (!sub)
            log << "  degree-12 m-3 (3,0,-3,...) failed\n";
        ok = ok && sub;
    }
    std::cout << log.str();
    criterion(2, "named example relations and classifications", ok);
}

// --- criterion 3: expanding digit round trips ----------------------------------------

void criterion3() {
    auto t0 = Clock::now();
    std::mt19937_64 rng(20260808);
    std::uniform_int_distribution<long> big(-1000000, 1000000);
    std::uniform_int_distribution<int> coef(-6, 6);
    std::vector<IntPoly> bases;
    while (bases.size() < 25) {
        int d = 1 + static_cast<int>(rng() % 6);
        std::vector<mpz_class> cs(static_cast<std::size_t>(d) + 1);
        mpz_class rest = 0;
        for (int j = 1; j <= d; ++j) {
            cs[static_cast<std::size_t>(j)] = coef(rng);
            rest += abs(cs[static_cast<std::size_t>(j)]);
        }
        if (cs[static_cast<std::size_t>(d)] == 0)
            continue;
        cs[0] = rest + 1 + static_cast<long>(rng() % 5);
        if (rng() % 2)
            cs[0] = -cs[0];
        IntPoly p(cs);
        if (schur_cohn_partition(p).outside != p.degree() || !is_irreducible(p))
            continue;
        bases.push_back(normalized_primitive(p));
    }
    bool ok = true;
    int trips = 0;
    for (const auto& p : bases) {
        RootBox box = isolate_roots(p, 32).front();
        for (int t = 0; t < 20; ++t) {
            std::vector<mpz_class> vc(static_cast<std::size_t>(rng() % 7) + 1);
            for (auto& v : vc)
                v = big(rng);
            IntPoly value(vc);
            ReduceStats st;
            DigitExpansion e = reduce_expanding(p, box, value, &st);
            if (!expansion_evaluates_to(e, value) || !st.l1_monotone) {
                ok = false;
                break;
            }
            for (const auto& dgt : e.digits)
                if (abs(dgt) > e.digit_bound)
                    ok = false;
            ++trips;
        }
    }
    double secs = seconds_since(t0);
    std::ostringstream d;
    d << trips << " round trips in " << secs << " s";
    criterion(3, "expanding digit round trips, bound and strict L1 descent", ok && trips == 500 && secs < 60.0,
              d.str());
}

// --- criterion 4: dominant-term properties --------------------------------------------

void criterion4() {
    std::mt19937_64 rng(44004400);
    std::uniform_int_distribution<int> coef(-6, 6);
    bool ok = true;
    int done = 0;
    while (done < 200) {
        int d = 1 + static_cast<int>(rng() % 8);
        std::vector<mpz_class> cs(static_cast<std::size_t>(d) + 1);
        for (auto& v : cs)
            v = coef(rng);
        int k = static_cast<int>(rng() % (d + 1));
        mpz_class rest = 0;
        for (int j = 0; j <= d; ++j)
            if (j != k)
                rest += abs(cs[static_cast<std::size_t>(j)]);
        cs[static_cast<std::size_t>(k)] = rest + 1 + static_cast<long>(rng() % 3);
        if (rng() % 2)
            cs[static_cast<std::size_t>(k)] = -cs[static_cast<std::size_t>(k)];
        IntPoly p(cs);
        if (p.degree() != d)
            continue;
        auto part = schur_cohn_partition(p);
        if (part.inside != k || part.on_circle != 0 || part.outside != d - k)
            ok = false;
        ++done;
    }

    // construct_dominant outputs: divide-check and the dominance inequality
    std::vector<std::pair<IntPoly, long>> cases{
        {IntPoly{2, -2, 1}, 0}, {IntPoly{-2, 1}, 0},   {IntPoly{3, -3, 1}, 1},
        {IntPoly{5, 1, 1}, 0},  {IntPoly{7, 2, 0, 1}, 2},
    };
    for (const auto& [p, k] : cases) {
        IntPoly r = construct_dominant(p, k, true);
        if (!divides(normalized_primitive(p), r))
            ok = false;
        mpz_class others = 0;
        for (int j = 0; j <= r.degree(); ++j)
            if (j != k)
                others += abs(r.cf(static_cast<std::size_t>(j)));
        if (!(abs(r.cf(static_cast<std::size_t>(k))) > others))
            ok = false;
    }
    // the root-of-unity closed form (non-strict dominance)
    IntPoly omega{1, 1, 1};
    IntPoly rc = construct_dominant(omega, 0, false);
    if (!(rc == IntPoly{-2, 0, 0, 1, 0, 0, 1}) || !divides(omega, rc))
        ok = false;
    criterion(4, "dominant-term partition and construction checks", ok);
}

// --- criterion 5: LLL correctness ------------------------------------------------------

void criterion5() {
    std::mt19937_64 rng(987654);
    std::uniform_int_distribution<long> coef(-1000, 1000);
    bool ok = true;
    int done = 0;
    while (done < 100) {
        std::size_t n = 2 + rng() % 2;
        LatticeBasis b;
        b.rows.assign(n, std::vector<mpz_class>(n));
        for (auto& row : b.rows)
            for (auto& v : row)
                v = coef(rng);
        if (gram_determinant(b) == 0)
            continue;
        // lll_reduce verifies size reduction and the Lovasz condition on every
        // output with an independent exact Gram-Schmidt pass (it throws on
        // failure); here we additionally check the approximation factor
        LllResult r = lll_reduce(b);
        if (!verify_reduced(r.reduced, mpq_class(3, 4))) {
            ok = false;
            break;
        }
        mpz_class maxco = 0;
        for (const auto& v : r.transform[0])
            if (abs(v) > maxco)
                maxco = abs(v);
        if (maxco > 25)
            continue;
        long range = std::max<long>(8, maxco.get_si() + 2);
        // exhaustive shortest vector within the window
        std::vector<long> c(n, -range);
        mpz_class best = 0;
        while (true) {
            std::vector<mpz_class> v(n, mpz_class(0));
            bool zero = true;
            for (std::size_t i = 0; i < n; ++i) {
                if (c[i] != 0)
                    zero = false;
                for (std::size_t j = 0; j < n; ++j)
                    v[j] += c[i] * b.rows[i][j];
            }
            if (!zero) {
                mpz_class nn = 0;
                for (const auto& x : v)
                    nn += x * x;
                if (best == 0 || nn < best)
                    best = nn;
            }
            std::size_t i = 0;
            while (i < n) {
                if (c[i] < range) {
                    ++c[i];
                    for (std::size_t j = 0; j < i; ++j)
                        c[j] = -range;
                    break;
                }
                ++i;
            }
            if (i == n)
                break;
        }
        mpz_class first = 0;
        for (const auto& x : r.reduced.rows[0])
            first += x * x;
        mpz_class cap = best;
        for (std::size_t i = 1; i < n; ++i)
            cap *= 2;
        if (!(best <= first && first <= cap))
            ok = false;
        ++done;
    }
    criterion(5, "LLL exactness and 2^(m/2) approximation factor on 100 lattices", ok);
}

// --- criterion 6: lemma L2 sampling ------------------------------------------------------

void criterion6() {
    std::mt19937_64 rng(145145);
    std::uniform_int_distribution<long> num(-100000, 100000);
    long violations = 0;
    const int samples = 100000;
    for (int i = 0; i < samples; ++i) {
        mpq_class t(num(rng) % 72001, 100000);
        mpq_class mag(1 + std::abs(num(rng)), 1);
        mpq_class one(1);
        mpq_class t2 = t * t;
        mpq_class zx = mag * (one - t2) / (one + t2);
        mpq_class zy = mag * 2 * t / (one + t2);
        mpq_class s(num(rng), 100001);
        mpq_class rho(std::abs(num(rng)) % 100001, 100000);
        mpq_class s2 = s * s;
        mpq_class wx = rho * (one - s2) / (one + s2);
        mpq_class wy = rho * 2 * s / (one + s2);
        mpq_class frac(1 + std::abs(num(rng)) % 99999, 100000);
        mpq_class r = frac * 4 * mag / 145;
        mpq_class ax = zx + r * (wx - 5);
        mpq_class ay = zy + r * wy;
        if (ax * ax + ay * ay >= mag * mag)
            ++violations;
    }
    std::ostringstream d;
    d << violations << " violations in " << samples << " exact rational samples";
    criterion(6, "|z + r(w-5)| < |z| on admissible triples", violations == 0, d.str());
}

// --- criterion 7: unit-circle reducer soundness --------------------------------------------

void criterion7() {
    IntPoly p{2, 3, 2};
    RootBox box = isolate_roots(p, 32).front();
    UnitCircleConfig cfg;
    std::mt19937_64 rng(777000);
    std::uniform_int_distribution<long> coef(-50, 50);
    int terminated = 0, exact = 0;
    const int total = 100;
    for (int i = 0; i < total; ++i) {
        std::vector<mpz_class> vc(static_cast<std::size_t>(rng() % 5) + 1);
        for (auto& v : vc)
            v = coef(rng);
        IntPoly value(vc);
        auto e = reduce_unit_circle(p, box, value, cfg);
        if (!e)
            continue;
        ++terminated;
        if (expansion_evaluates_to(*e, value))
            ++exact;
    }
    std::ostringstream d;
    d << "termination rate " << terminated << "/" << total << ", exact round trips " << exact
      << "/" << terminated << " (no termination guarantee is claimed)";
    criterion(7, "unit-circle reducer soundness on 100 random values", exact == terminated,
              d.str());
}

} // namespace

int main() {
    auto t0 = Clock::now();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion1(); // the long one last
    std::printf("acceptance finished in %.1f s: %d criterion(s) failed\n", seconds_since(t0),
                g_failures);
    return g_failures == 0 ? 0 : 1;
}
