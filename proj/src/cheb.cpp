#include "hrpkit/cheb.hpp"

#include <stdexcept>

namespace hrpkit {

HalfCoeffs::HalfCoeffs(int degree, std::vector<mpz_class> half)
    : d(degree), coeffs(std::move(half)) {
    if (d <= 0 || d % 2 != 0)
        throw std::domain_error("HalfCoeffs: degree must be even and positive");
    if (coeffs.size() != static_cast<std::size_t>(d / 2 + 1))
        throw std::domain_error("HalfCoeffs: need d/2 + 1 coefficients");
    if (coeffs[0] == 0)
        throw std::domain_error("HalfCoeffs: leading coefficient must be nonzero");
}

IntPoly cheb_star(int n) {
    if (n < 0)
        throw std::domain_error("cheb_star: n must be non-negative");
    if (n == 0)
        return IntPoly{1}; // by convention; the recurrence itself starts from 2
    // x^n + x^-n = (x + 1/x)(x^{n-1} + x^{1-n}) - (x^{n-2} + x^{2-n})
    IntPoly prev{2};
    IntPoly cur{0, 1};
    const IntPoly y{0, 1};
    for (int k = 2; k <= n; ++k) {
        IntPoly nxt = y * cur - prev;
        prev = std::move(cur);
        cur = std::move(nxt);
    }
    return cur;
}

IntPoly expand_reciprocal(const HalfCoeffs& h) {
    const int m = h.d / 2;
    std::vector<mpz_class> c(static_cast<std::size_t>(h.d) + 1, mpz_class(0));
    c[static_cast<std::size_t>(m)] = h.coeffs[static_cast<std::size_t>(m)];
    for (int j = 0; j < m; ++j) {
        c[static_cast<std::size_t>(j)] += h.coeffs[static_cast<std::size_t>(j)];
        c[static_cast<std::size_t>(h.d - j)] += h.coeffs[static_cast<std::size_t>(j)];
    }
    return IntPoly(std::move(c));
}

IntPoly trace_poly(const HalfCoeffs& h) {
    const int m = h.d / 2;
    IntPoly g;
    for (int j = 0; j <= m; ++j)
        g = g + cheb_star(m - j) * h.coeffs[static_cast<std::size_t>(j)];
    return g;
}

namespace {

// Real roots of g in closed [-2, 2], counted with multiplicity.
int multiplicity_weighted_count(const IntPoly& g) {
    int total = 0;
    for (const auto& [factor, mult] : squarefree_decomposition(g)) {
        if (factor.degree() < 1)
            continue;
        int cnt = sturm_count_open(factor, mpq_class(-2), mpq_class(2));
        if (has_real_root_at(factor, mpq_class(-2)))
            ++cnt;
        if (has_real_root_at(factor, mpq_class(2)))
            ++cnt;
        total += mult * cnt;
    }
    return total;
}

} // namespace

bool all_roots_on_circle(const HalfCoeffs& h) {
    IntPoly g = trace_poly(h);
    return multiplicity_weighted_count(g) == h.d / 2;
}

int circle_pairs_of_reciprocal(const IntPoly& h) {
    if (h.is_zero())
        throw std::domain_error("zero polynomial");
    if (h.degree() == 0)
        return 0;
    if (h.degree() % 2 != 0 || !is_reciprocal(h))
        throw std::domain_error("circle_pairs_of_reciprocal: input must be reciprocal of even degree");
    const int m = h.degree() / 2;
    std::vector<mpz_class> half(h.coeffs().begin(), h.coeffs().begin() + m + 1);
    HalfCoeffs hc(h.degree(), std::move(half));
    IntPoly g = trace_poly(hc);
    int total = 0;
    for (const auto& [factor, mult] : squarefree_decomposition(g)) {
        if (factor.degree() < 1)
            continue;
        total += mult * sturm_count_open(factor, mpq_class(-2), mpq_class(2));
    }
    return total;
}

bool all_roots_on_circle(const IntPoly& p) {
    if (p.is_zero())
        throw std::domain_error("zero polynomial");
    if (p.degree() == 0)
        return true;
    auto part = schur_cohn_partition(p);
    return part.inside == 0 && part.outside == 0;
}

} // namespace hrpkit
