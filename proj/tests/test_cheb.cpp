#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hrpkit/cheb.hpp"
#include "hrpkit/roots.hpp"

#include <random>

using namespace hrpkit;

TEST_CASE("scaled chebyshev basis") {
    CHECK(cheb_star(0) == IntPoly{1});
    CHECK(cheb_star(1) == IntPoly{0, 1});
    CHECK(cheb_star(2) == IntPoly{-2, 0, 1});
    CHECK(cheb_star(3) == IntPoly{0, -3, 0, 1});

    // T*_n(x + 1/x) = x^n + x^-n for n >= 1: check as the polynomial identity
    // x^n T*_n(x + 1/x) == x^2n + 1 via rational evaluation at sample points
    for (int n = 1; n <= 8; ++n) {
        IntPoly t = cheb_star(n);
        for (long num = 1; num <= 5; ++num) {
            mpq_class x(num, 3);
            mpq_class lhs = t.eval_q(x + 1 / x);
            mpq_class xn = 1, xmn = 1;
            for (int i = 0; i < n; ++i) {
                xn *= x;
                xmn /= x;
            }
            CHECK(lhs == xn + xmn);
        }
    }
}

TEST_CASE("expand and trace") {
    HalfCoeffs h1(2, {2, 3});
    CHECK(expand_reciprocal(h1) == IntPoly{2, 3, 2});
    CHECK(trace_poly(h1) == IntPoly{3, 2});

    HalfCoeffs h2(2, {1, -1});
    CHECK(expand_reciprocal(h2) == IntPoly{1, -1, 1});
    CHECK(trace_poly(h2) == IntPoly{-1, 1});

    HalfCoeffs h3(6, {2, -2, 3, -2});
    CHECK(expand_reciprocal(h3) == IntPoly{2, -2, 3, -2, 3, -2, 2});
}

TEST_CASE("trace identity on random half coefficient vectors") {
    // x^{d/2} g(x + 1/x) == p(x), checked exactly at rational points
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> coef(-9, 9);
    for (int trial = 0; trial < 1000; ++trial) {
        int m = 1 + static_cast<int>(rng() % 4);
        std::vector<mpz_class> half(static_cast<std::size_t>(m) + 1);
        half[0] = 1 + static_cast<long>(rng() % 9);
        for (int j = 1; j <= m; ++j)
            half[static_cast<std::size_t>(j)] = coef(rng);
        HalfCoeffs h(2 * m, half);
        IntPoly p = expand_reciprocal(h);
        IntPoly g = trace_poly(h);
        CHECK(is_reciprocal(p));
        mpq_class x(3, 2);
        mpq_class xm = 1;
        for (int i = 0; i < m; ++i)
            xm *= x;
        CHECK(xm * g.eval_q(x + 1 / x) == p.eval_q(x));
        mpq_class y(-5, 7);
        mpq_class ym = 1;
        for (int i = 0; i < m; ++i)
            ym *= y;
        CHECK(ym * g.eval_q(y + 1 / y) == p.eval_q(y));
    }
}

TEST_CASE("all roots on circle") {
    CHECK(all_roots_on_circle(HalfCoeffs(2, {2, 3})));
    CHECK(!all_roots_on_circle(HalfCoeffs(2, {2, 5}))); // (2x+1)(x+2)
    CHECK(all_roots_on_circle(HalfCoeffs(6, {2, -2, 3, -2})));
    // endpoint roots x = +-1 count: (x+1)^2 has half coeffs (1, 2)... degree 2
    CHECK(all_roots_on_circle(HalfCoeffs(2, {1, 2})));
}

TEST_CASE("circle test agrees with certified root isolation") {
    std::mt19937_64 rng(555);
    std::uniform_int_distribution<int> coef(-4, 4);
    int done = 0;
    while (done < 500) {
        int m = 1 + static_cast<int>(rng() % 4);
        std::vector<mpz_class> half(static_cast<std::size_t>(m) + 1);
        half[0] = 1 + static_cast<long>(rng() % 3);
        for (int j = 1; j <= m; ++j)
            half[static_cast<std::size_t>(j)] = coef(rng);
        HalfCoeffs h(2 * m, half);
        IntPoly p = expand_reciprocal(h);
        bool claimed = all_roots_on_circle(h);
        // oracle: every isolated box must straddle the circle (corner moduli
        // on both sides) after refinement; a decided inside/outside box
        // falsifies the claim
        bool all_straddle = true;
        for (auto& b : isolate_roots(p, 30)) {
            RootBox cur = b;
            for (int round = 0; round < 8; ++round) {
                mpq_class re_min = (cur.re_lo <= 0 && 0 <= cur.re_hi)
                                       ? mpq_class(0)
                                       : std::min(abs(cur.re_lo), abs(cur.re_hi));
                mpq_class im_min = (cur.im_lo <= 0 && 0 <= cur.im_hi)
                                       ? mpq_class(0)
                                       : std::min(abs(cur.im_lo), abs(cur.im_hi));
                mpq_class re_max = std::max(abs(cur.re_lo), abs(cur.re_hi));
                mpq_class im_max = std::max(abs(cur.im_lo), abs(cur.im_hi));
                mpq_class lo2 = re_min * re_min + im_min * im_min;
                mpq_class hi2 = re_max * re_max + im_max * im_max;
                if (hi2 < 1 || lo2 > 1) {
                    all_straddle = false;
                    break;
                }
                if (round < 7)
                    cur = refine_box(cur, 40 + 40 * round);
            }
            if (!all_straddle)
                break;
        }
        if (claimed)
            CHECK(all_straddle);
        if (!all_straddle)
            CHECK(!claimed);
        ++done;
    }
}
