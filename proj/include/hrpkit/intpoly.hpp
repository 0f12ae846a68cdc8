#ifndef HRPKIT_INTPOLY_HPP
#define HRPKIT_INTPOLY_HPP

#include <gmpxx.h>

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hrpkit {

using RatScalar = mpq_class; // always canonicalized, denominator >= 1

/// Dense integer polynomial, coefficients ascending (index j holds the
/// coefficient of x^j).  Normalized: the leading coefficient is nonzero,
/// the zero polynomial has an empty coefficient vector.
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { normalize(); }
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly zero() { return IntPoly(); }
    static IntPoly constant(const mpz_class& v);
    static IntPoly monomial(const mpz_class& v, std::size_t j);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<mpz_class>& coeffs() const { return c_; }
    const mpz_class& cf(std::size_t j) const; // 0 beyond the degree
    const mpz_class& lc() const;              // leading coefficient, poly must be nonzero

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const mpz_class& k) const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    IntPoly derivative() const;
    IntPoly shifted_up(std::size_t k) const;   // multiply by x^k
    IntPoly compose_power(std::size_t n) const; // p(x^n), n >= 1
    IntPoly reversed() const;                   // x^deg * p(1/x)

    mpz_class eval_z(const mpz_class& x) const;
    mpq_class eval_q(const mpq_class& x) const;
    int sign_at(const mpq_class& x) const;

    mpz_class coeff_abs_sum() const;
    mpz_class height() const; // max |c_j|

    std::string to_string() const; // canonical "c0,c1,...,cd"

  private:
    void normalize();
    std::vector<mpz_class> c_;
};

/// Rational polynomial used for intermediate results (Sturm chains,
/// reduction modulo a non-monic minimal polynomial).
class RatPoly {
  public:
    RatPoly() = default;
    explicit RatPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { normalize(); }
    explicit RatPoly(const IntPoly& p);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<mpq_class>& coeffs() const { return c_; }
    const mpq_class& cf(std::size_t j) const;
    const mpq_class& lc() const;

    RatPoly operator-() const;
    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly operator*(const mpq_class& k) const;
    bool operator==(const RatPoly& o) const { return c_ == o.c_; }

    mpq_class eval(const mpq_class& x) const;

    // Clears denominators and content; returns (primitive integer poly, positive scale)
    // with poly == primitive * scale. Sign of coefficients is preserved.
    std::pair<IntPoly, mpq_class> primitive_and_scale() const;

  private:
    void normalize();
    std::vector<mpq_class> c_;
};

// division with remainder over Q: a = q*b + r, deg r < deg b
std::pair<RatPoly, RatPoly> divrem(const RatPoly& a, const RatPoly& b);
RatPoly rem(const RatPoly& a, const IntPoly& mod);

// exact division in Z[x]; throws std::domain_error when not exact
IntPoly exact_div(const IntPoly& a, const IntPoly& b);
bool divides(const IntPoly& b, const IntPoly& a); // b | a over Q

// --- structure predicates and decompositions -------------------------------

std::pair<mpz_class, IntPoly> content_and_primitive(const IntPoly& p);
IntPoly primitive_part(const IntPoly& p);          // keeps the sign of p's lc
IntPoly normalized_primitive(const IntPoly& p);    // primitive with positive lc

IntPoly reciprocal_adjoint(const IntPoly& p); // p*(x) = x^deg(p) p(1/x)
bool is_reciprocal(const IntPoly& p);

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b); // primitive, positive lc

mpz_class resultant(const IntPoly& f, const IntPoly& g);

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p);
IntPoly squarefree_part(const IntPoly& p);

/// Precomputed Sturm chain of a squarefree polynomial, for repeated counting.
class SturmChain {
  public:
    explicit SturmChain(const IntPoly& squarefree);
    int variations_at(const mpq_class& x) const;
    // distinct roots in the open interval (a, b); a and b must not be roots
    int count_open(const mpq_class& a, const mpq_class& b) const;
    const IntPoly& poly() const { return chain_.front(); }

  private:
    std::vector<IntPoly> chain_;
};

// Number of distinct real roots of p in (lo, hi].
int sturm_count_real_roots(const IntPoly& p, const mpq_class& lo, const mpq_class& hi);
// Distinct real roots in the open interval (lo, hi).
int sturm_count_open(const IntPoly& p, const mpq_class& lo, const mpq_class& hi);
// Exact test for a root at a rational point (for closed-interval callers).
bool has_real_root_at(const IntPoly& p, const mpq_class& x);
// Total number of distinct real roots.
int sturm_count_all(const IntPoly& p);

struct CirclePartition {
    int inside = 0;
    int on_circle = 0;
    int outside = 0;
};
// Root location with respect to the unit circle, counted with multiplicity.
CirclePartition schur_cohn_partition(const IntPoly& p);

// Largest m >= 2 with p(x) = g(x^m), if any.
std::optional<std::pair<int, IntPoly>> detect_composed_power(const IntPoly& p);

// Order n when p is the n-th cyclotomic polynomial, otherwise nullopt.
std::optional<long> cyclotomic_order(const IntPoly& p);
IntPoly cyclotomic_poly(long n);

// lc(p)^n * prod_j (x - alpha_j^n) over all roots of p, as an integer polynomial.
IntPoly power_product_poly(const IntPoly& p, long n);

// Characteristic polynomial of B(alpha): prod_j (x - B(alpha_j)), rational.
RatPoly char_poly_of_element(const IntPoly& p, const IntPoly& b);
bool is_algebraic_integer_element(const IntPoly& p, const IntPoly& b);

class RootBox; // roots.hpp

// Minimal polynomial of alpha^n for the root alpha of the irreducible
// primitive polynomial m designated by `root`.  Primitive, positive lc.
IntPoly power_map_minpoly(const IntPoly& m, long n, const RootBox& root);

// A Cauchy-style bound M with all real roots of p in (-M, M).
mpq_class real_root_bound(const IntPoly& p);

} // namespace hrpkit

#endif
