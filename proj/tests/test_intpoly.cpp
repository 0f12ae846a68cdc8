#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hrpkit/intpoly.hpp"
#include "hrpkit/roots.hpp"

#include <random>

using namespace hrpkit;

TEST_CASE("content and primitive part") {
    IntPoly p{2, 4, 6};
    auto [c, prim] = content_and_primitive(p);
    CHECK(c == 2);
    CHECK(prim == IntPoly{1, 2, 3});

    IntPoly deg6{2, -2, 3, -2, 3, -2, 2};
    auto [c6, p6] = content_and_primitive(deg6);
    CHECK(c6 == 1);
    CHECK(p6 == deg6);

    auto [c5, p5] = content_and_primitive(IntPoly{5});
    CHECK(c5 == 5);
    CHECK(p5 == IntPoly{1});

    CHECK_THROWS_AS(content_and_primitive(IntPoly()), std::domain_error);

    // sign convention: primitive keeps the sign of the leading coefficient
    auto [cn, pn] = content_and_primitive(IntPoly{-2, -4});
    CHECK(cn == 2);
    CHECK(pn == IntPoly{-1, -2});
}

TEST_CASE("reciprocal adjoint") {
    CHECK(reciprocal_adjoint(IntPoly{2, 3, 2}) == IntPoly{2, 3, 2});
    CHECK(is_reciprocal(IntPoly{2, 3, 2}));

    IntPoly fib{-1, -1, 1}; // x^2 - x - 1
    CHECK(reciprocal_adjoint(fib) == IntPoly{1, -1, -1});
    CHECK(!is_reciprocal(fib));

    IntPoly deg8{2, 4, 2, -4, -7, -4, 2, 4, 2};
    CHECK(reciprocal_adjoint(deg8) == deg8);
    CHECK(is_reciprocal(deg8));

    CHECK_THROWS_AS(reciprocal_adjoint(IntPoly()), std::domain_error);
}

TEST_CASE("sturm counting on (lo, hi]") {
    // y^2 - 2 on [-2, 2]: 2 roots
    CHECK(sturm_count_real_roots(IntPoly{-2, 0, 1}, -2, 2) == 2);
    // y^2 - 5 on [-2, 2]: none
    CHECK(sturm_count_real_roots(IntPoly{-5, 0, 1}, -2, 2) == 0);
    // y^3 - 3y on [-2, 2]: roots 0, +-sqrt(3)
    CHECK(sturm_count_real_roots(IntPoly{0, -3, 0, 1}, -2, 2) == 3);

    // endpoint conventions
    IntPoly lin{-2, 1}; // x - 2
    CHECK(sturm_count_real_roots(lin, 0, 2) == 1); // root at hi included
    CHECK(sturm_count_real_roots(lin, 2, 3) == 0); // root at lo excluded
    CHECK(has_real_root_at(lin, 2));
    CHECK(!has_real_root_at(lin, 1));
}

TEST_CASE("sturm counts distinct roots against a dense sign-change oracle") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<int> coef(-8, 8);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<mpz_class> cs(static_cast<std::size_t>(2 + trial % 5) + 1);
        for (auto& v : cs)
            v = coef(rng);
        IntPoly p(cs);
        if (p.is_zero() || p.degree() < 1)
            continue;
        IntPoly sf = squarefree_part(p);
        // oracle: sign changes of the squarefree part on a fine rational mesh
        mpq_class lo = -10, hi = 10;
        int mesh_roots = 0;
        const int steps = 4000;
        mpq_class step = (hi - lo) / steps;
        int prev = sf.sign_at(lo);
        mpq_class x = lo;
        for (int i = 1; i <= steps; ++i) {
            x += step;
            int s = sf.sign_at(x);
            if (s == 0) {
                ++mesh_roots;
                prev = -prev; // crossing through an exact root
                continue;
            }
            if (prev != 0 && s != prev)
                ++mesh_roots;
            prev = s;
        }
        int counted = sturm_count_real_roots(p, lo, hi);
        // mesh may merge close roots; Sturm is exact, so it can only see more
        CHECK(counted >= mesh_roots);
        CHECK(counted <= p.degree());
        // cross-check against certified isolation
        int isolated_real = 0;
        for (const auto& b : isolate_roots(p, 20))
            if (b.is_real())
                ++isolated_real;
        CHECK(counted == isolated_real);
    }
}

TEST_CASE("squarefree decomposition") {
    IntPoly a{1, -1};  // 1 - x ... careful: (y-1)^2 (y+2)
    IntPoly ym1{-1, 1};
    IntPoly yp2{2, 1};
    IntPoly p = ym1 * ym1 * yp2;
    auto dec = squarefree_decomposition(p);
    REQUIRE(dec.size() == 2);
    bool saw1 = false, saw2 = false;
    for (const auto& [f, m] : dec) {
        if (m == 2) {
            CHECK(f == ym1);
            saw2 = true;
        }
        if (m == 1) {
            CHECK(f == yp2);
            saw1 = true;
        }
    }
    CHECK(saw1);
    CHECK(saw2);

    auto d2 = squarefree_decomposition(IntPoly{-2, 0, 1});
    REQUIRE(d2.size() == 1);
    CHECK(d2[0].second == 1);

    // y^4 - 4y^2 + 4 = (y^2 - 2)^2
    auto d3 = squarefree_decomposition(IntPoly{4, 0, -4, 0, 1});
    REQUIRE(d3.size() == 1);
    CHECK(d3[0].first == IntPoly{-2, 0, 1});
    CHECK(d3[0].second == 2);
}

TEST_CASE("squarefree product reconstructs the primitive part") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (int trial = 0; trial < 40; ++trial) {
        IntPoly p{1};
        int factors = 1 + static_cast<int>(rng() % 3);
        for (int f = 0; f < factors; ++f) {
            std::vector<mpz_class> cs(2 + rng() % 2);
            for (auto& v : cs)
                v = coef(rng);
            IntPoly q(cs);
            if (q.is_zero() || q.degree() < 1) {
                --f;
                continue;
            }
            int mult = 1 + static_cast<int>(rng() % 2);
            for (int i = 0; i < mult; ++i)
                p = p * q;
        }
        if (p.degree() < 1)
            continue;
        auto dec = squarefree_decomposition(p);
        IntPoly prod{1};
        for (const auto& [f, m] : dec)
            for (int i = 0; i < m; ++i)
                prod = prod * f;
        IntPoly target = primitive_part(p);
        bool eq = prod == target || prod == -target;
        CHECK(eq);
    }
}

TEST_CASE("resultant is zero iff common factor, against root products") {
    CHECK(resultant(IntPoly{-2, 0, 1}, IntPoly{-3, 0, 1}) != 0);
    IntPoly common = IntPoly{1, 1} * IntPoly{-3, 1};
    CHECK(resultant(common, IntPoly{1, 1}) == 0);

    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<int> coef(-4, 4);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<mpz_class> ca(2 + rng() % 3), cb(2 + rng() % 3);
        for (auto& v : ca)
            v = coef(rng);
        for (auto& v : cb)
            v = coef(rng);
        IntPoly a(ca), b(cb);
        if (a.degree() < 1 || b.degree() < 1)
            continue;
        bool has_common = poly_gcd(a, b).degree() > 0;
        CHECK((resultant(a, b) == 0) == has_common);
    }
}

TEST_CASE("schur-cohn partition") {
    auto p1 = schur_cohn_partition(IntPoly{-1, -1, 1}); // x^2-x-1
    CHECK(p1.inside == 1);
    CHECK(p1.on_circle == 0);
    CHECK(p1.outside == 1);

    auto p2 = schur_cohn_partition(IntPoly{1, 0, 1}); // x^2+1
    CHECK(p2.inside == 0);
    CHECK(p2.on_circle == 2);
    CHECK(p2.outside == 0);

    auto p3 = schur_cohn_partition(IntPoly{3, -3, 1}); // x^2-3x+3, |roots| = sqrt 3
    CHECK(p3.inside == 0);
    CHECK(p3.on_circle == 0);
    CHECK(p3.outside == 2);

    // multiplicity: (x^2+1)^2 (x-2)
    IntPoly q = IntPoly{1, 0, 1} * IntPoly{1, 0, 1} * IntPoly{-2, 1};
    auto p4 = schur_cohn_partition(q);
    CHECK(p4.inside == 0);
    CHECK(p4.on_circle == 4);
    CHECK(p4.outside == 1);
}

TEST_CASE("schur-cohn agrees with certified isolation on random polynomials") {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<int> coef(-9, 9);
    int done = 0;
    while (done < 200) {
        std::vector<mpz_class> cs(static_cast<std::size_t>(2 + rng() % 7) + 1);
        for (auto& v : cs)
            v = coef(rng);
        IntPoly p(cs);
        if (p.is_zero() || p.degree() < 1)
            continue;
        auto part = schur_cohn_partition(p);
        CHECK(part.inside + part.on_circle + part.outside == p.degree());
        // certified isolation oracle: refine each box until |z| vs 1 is decided
        // (positive-distance check; skip polynomials with a root too close to
        // the circle for a quick decision)
        int inside = 0, on = 0, outside = 0;
        bool decided = true;
        for (auto& b : isolate_roots(p, 40)) {
            RootBox cur = b;
            int verdict = 0;
            for (int rounds = 0; rounds < 6; ++rounds) {
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
                if (hi2 < 1) {
                    verdict = -1;
                    break;
                }
                if (lo2 > 1) {
                    verdict = 1;
                    break;
                }
                cur = refine_box(cur, 60 + 50 * rounds);
            }
            if (verdict < 0)
                inside += cur.multiplicity;
            else if (verdict > 0)
                outside += cur.multiplicity;
            else {
                // could not separate from the circle quickly: either truly on the
                // circle or extremely close; use the exact partition to decide
                decided = false;
            }
        }
        if (decided) {
            CHECK(part.inside == inside);
            CHECK(part.outside == outside);
            CHECK(part.on_circle == p.degree() - inside - outside);
        }
        ++done;
    }
}

TEST_CASE("strictly dominant k-th term forces the (k, 0, d-k) partition") {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<int> coef(-6, 6);
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
            continue; // leading coefficient vanished
        auto part = schur_cohn_partition(p);
        CHECK(part.inside == k);
        CHECK(part.on_circle == 0);
        CHECK(part.outside == d - k);
        ++done;
    }
}

TEST_CASE("detect composed power") {
    auto r1 = detect_composed_power(IntPoly{4, 0, 0, 0, 1}); // x^4 + 4
    REQUIRE(r1.has_value());
    CHECK(r1->first == 4);
    CHECK(r1->second == IntPoly{4, 1});

    auto r2 = detect_composed_power(IntPoly{3, 0, 0, 2, 0, 0, 1}); // x^6+2x^3+3
    REQUIRE(r2.has_value());
    CHECK(r2->first == 3);
    CHECK(r2->second == IntPoly{3, 2, 1});

    CHECK(!detect_composed_power(IntPoly{16, 8, 1, 8, 16}).has_value());
    CHECK(!detect_composed_power(IntPoly{5}).has_value());
}

TEST_CASE("cyclotomic recognition") {
    CHECK(cyclotomic_order(IntPoly{1, 1, 1}) == 3);
    CHECK(cyclotomic_order(IntPoly{1, 0, 1}) == 4);
    CHECK(cyclotomic_order(IntPoly{-1, 1}) == 1);
    CHECK(cyclotomic_order(IntPoly{1, 1}) == 2);
    CHECK(cyclotomic_order(IntPoly{1, -1, 1}) == 6);
    CHECK(!cyclotomic_order(IntPoly{-1, -1, 1}).has_value());
    CHECK(!cyclotomic_order(IntPoly{2, 3, 2}).has_value());
}

TEST_CASE("power product polynomial") {
    // x^2 - 2x + 2 has roots 1 +- i; squares are +-2i: product poly x^2 + 4
    IntPoly p{2, -2, 1};
    IntPoly q = normalized_primitive(power_product_poly(p, 2));
    CHECK(q == IntPoly{4, 0, 1});
}

TEST_CASE("power map minimal polynomial") {
    // (1+i)^2 = 2i has minimal polynomial x^2 + 4
    IntPoly p{2, -2, 1};
    RootBox root = isolate_roots(p, 20).front();
    CHECK(power_map_minpoly(p, 2, root) == IntPoly{4, 0, 1});

    // alpha^2 = -2 for alpha = sqrt(-2): minimal polynomial x + 2
    IntPoly q{2, 0, 1};
    RootBox rq = isolate_roots(q, 20).front();
    CHECK(power_map_minpoly(q, 2, rq) == IntPoly{2, 1});

    // the degree-8 unimodular example: alpha^8 satisfies 16 + 8x + x^2 + 8x^3 + 16x^4
    IntPoly e8{2, 4, 2, -4, -7, -4, 2, 4, 2};
    RootBox r8 = isolate_roots(e8, 20).front();
    CHECK(power_map_minpoly(e8, 8, r8) == IntPoly{16, 8, 1, 8, 16});
}

TEST_CASE("algebraic integer detection through the element resultant") {
    // alpha = (1+i) with minimal polynomial x^2-2x+2: alpha is an algebraic integer
    CHECK(is_algebraic_integer_element(IntPoly{2, -2, 1}, IntPoly{0, 1}));
    // alpha = root of 2x^2+3x+2 is not an algebraic integer, but 2*alpha is
    CHECK(!is_algebraic_integer_element(IntPoly{2, 3, 2}, IntPoly{0, 1}));
    CHECK(is_algebraic_integer_element(IntPoly{2, 3, 2}, IntPoly{0, 2}));
}
