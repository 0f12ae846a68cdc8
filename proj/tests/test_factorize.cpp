#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hrpkit/factorize.hpp"
#include "hrpkit/roots.hpp"

#include <random>

using namespace hrpkit;

namespace {

long brute_bound_for_degree(int d) { return d >= 3 ? 8 : (d == 2 ? 15 : 40); }

// brute-force factor search: enumerate all integer divisors of degree <= 3
// within a coefficient window, entirely independent of the clustering path
bool has_small_factor_bruteforce(const IntPoly& p) {
    const int dmax = std::min(3, p.degree() - 1);
    for (int d = 1; d <= dmax; ++d) {
        const long bound = brute_bound_for_degree(d);
        std::vector<long> c(static_cast<std::size_t>(d) + 1, -bound);
        while (true) {
            IntPoly cand{std::vector<mpz_class>(c.begin(), c.end())};
            if (cand.degree() == d && divides(cand, p))
                return true;
            int i = 0;
            while (i <= d) {
                if (c[static_cast<std::size_t>(i)] < bound) {
                    ++c[static_cast<std::size_t>(i)];
                    for (int j = 0; j < i; ++j)
                        c[static_cast<std::size_t>(j)] = -bound;
                    break;
                }
                ++i;
            }
            if (i > d)
                break;
        }
    }
    return false;
}

} // namespace

TEST_CASE("sophie germain quartic") {
    auto f = factor_over_Q(IntPoly{4, 0, 0, 0, 1});
    REQUIRE(f.size() == 2);
    CHECK(f[0].first == IntPoly{2, -2, 1});
    CHECK(f[1].first == IntPoly{2, 2, 1});
    CHECK(f[0].second == 1);
    CHECK(f[1].second == 1);
}

TEST_CASE("irreducibility checks") {
    CHECK(is_irreducible(IntPoly{2, 3, 2}));
    CHECK(is_irreducible(IntPoly{2, -2, 3, -2, 3, -2, 2}));
    CHECK(!is_irreducible(IntPoly{4, 0, 0, 0, 1}));
    CHECK(!is_irreducible(IntPoly{1, 2, 1}));
    // content does not affect irreducibility over Q
    CHECK(is_irreducible(IntPoly{2, 0, 2}));
}

TEST_CASE("factors multiply back to the input") {
    std::mt19937_64 rng(1311);
    std::uniform_int_distribution<int> coef(-6, 6);
    for (int trial = 0; trial < 120; ++trial) {
        std::vector<mpz_class> cs(static_cast<std::size_t>(1 + rng() % 6) + 1);
        for (auto& v : cs)
            v = coef(rng);
        IntPoly p(cs);
        if (p.is_zero() || p.degree() < 1)
            continue;
        auto factors = factor_over_Q(p);
        IntPoly prod{1};
        for (const auto& [f, m] : factors) {
            CHECK(f.lc() > 0);
            CHECK(content_and_primitive(f).first == 1);
            for (int i = 0; i < m; ++i)
                prod = prod * f;
        }
        // equality up to the rational content
        auto [cp, pp] = content_and_primitive(p);
        IntPoly want = pp.lc() > 0 ? pp : -pp;
        CHECK(prod == want);
    }
}

TEST_CASE("agreement with the brute-force small-factor search") {
    std::mt19937_64 rng(9001);
    std::uniform_int_distribution<int> coef(-3, 3);
    int done = 0;
    while (done < 200) {
        std::vector<mpz_class> cs(static_cast<std::size_t>(2 + rng() % 5) + 1);
        for (auto& v : cs)
            v = coef(rng);
        IntPoly p(cs);
        if (p.is_zero() || p.degree() < 2)
            continue;
        bool brute = has_small_factor_bruteforce(p);
        auto fs = factor_over_Q(p);
        int degsum = 0;
        bool mine_window = false; // a proper irreducible factor inside the window
        bool reducible = fs.size() > 1 || fs[0].second > 1 || fs[0].first.degree() < p.degree();
        for (const auto& [f, m] : fs) {
            degsum += f.degree() * m;
            if (f.degree() <= 3 && f.degree() < p.degree() &&
                f.height() <= brute_bound_for_degree(f.degree()))
                mine_window = true;
        }
        CHECK(degsum == p.degree());
        if (brute)
            CHECK(reducible);
        if (mine_window)
            CHECK(brute);
        ++done;
    }
}
