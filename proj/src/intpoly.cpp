#include "hrpkit/intpoly.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hrpkit {

namespace {
const mpz_class kZero = 0;
const mpq_class kZeroQ = 0;
} // namespace

// --- IntPoly ----------------------------------------------------------------

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs)
        c_.emplace_back(v);
    normalize();
}

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

IntPoly IntPoly::constant(const mpz_class& v) {
    IntPoly p;
    if (v != 0)
        p.c_.push_back(v);
    return p;
}

IntPoly IntPoly::monomial(const mpz_class& v, std::size_t j) {
    IntPoly p;
    if (v != 0) {
        p.c_.assign(j + 1, kZero);
        p.c_[j] = v;
    }
    return p;
}

const mpz_class& IntPoly::cf(std::size_t j) const {
    return j < c_.size() ? c_[j] : kZero;
}

const mpz_class& IntPoly::lc() const {
    if (c_.empty())
        throw std::domain_error("lc of zero polynomial");
    return c_.back();
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& v : r.c_)
        v = -v;
    return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()), kZero);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = cf(i) + o.cf(i);
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()), kZero);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = cf(i) - o.cf(i);
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero())
        return IntPoly();
    std::vector<mpz_class> r(c_.size() + o.c_.size() - 1, kZero);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const mpz_class& k) const {
    if (k == 0)
        return IntPoly();
    IntPoly r = *this;
    for (auto& v : r.c_)
        v *= k;
    return r;
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1)
        return IntPoly();
    std::vector<mpz_class> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        r[i - 1] = c_[i] * mpz_class(static_cast<long>(i));
    return IntPoly(std::move(r));
}

IntPoly IntPoly::shifted_up(std::size_t k) const {
    if (is_zero() || k == 0)
        return *this;
    std::vector<mpz_class> r(c_.size() + k, kZero);
    for (std::size_t i = 0; i < c_.size(); ++i)
        r[i + k] = c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::compose_power(std::size_t n) const {
    if (n == 0)
        throw std::domain_error("compose_power: n must be positive");
    if (is_zero() || n == 1)
        return *this;
    std::vector<mpz_class> r((c_.size() - 1) * n + 1, kZero);
    for (std::size_t i = 0; i < c_.size(); ++i)
        r[i * n] = c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::reversed() const {
    std::vector<mpz_class> r(c_.rbegin(), c_.rend());
    return IntPoly(std::move(r));
}

mpz_class IntPoly::eval_z(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

mpq_class IntPoly::eval_q(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + mpq_class(*it);
    return acc;
}

int IntPoly::sign_at(const mpq_class& x) const {
    mpq_class v = eval_q(x);
    return sgn(v);
}

mpz_class IntPoly::coeff_abs_sum() const {
    mpz_class s = 0;
    for (const auto& v : c_)
        s += abs(v);
    return s;
}

mpz_class IntPoly::height() const {
    mpz_class h = 0;
    for (const auto& v : c_)
        if (abs(v) > h)
            h = abs(v);
    return h;
}

std::string IntPoly::to_string() const {
    if (is_zero())
        return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i)
            os << ',';
        os << c_[i].get_str();
    }
    return os.str();
}

// --- RatPoly ----------------------------------------------------------------

RatPoly::RatPoly(const IntPoly& p) {
    c_.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs())
        c_.emplace_back(v);
}

void RatPoly::normalize() {
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

const mpq_class& RatPoly::cf(std::size_t j) const {
    return j < c_.size() ? c_[j] : kZeroQ;
}

const mpq_class& RatPoly::lc() const {
    if (c_.empty())
        throw std::domain_error("lc of zero polynomial");
    return c_.back();
}

RatPoly RatPoly::operator-() const {
    RatPoly r = *this;
    for (auto& v : r.c_)
        v = -v;
    return r;
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    std::vector<mpq_class> r(std::max(c_.size(), o.c_.size()), kZeroQ);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = cf(i) + o.cf(i);
    return RatPoly(std::move(r));
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
    std::vector<mpq_class> r(std::max(c_.size(), o.c_.size()), kZeroQ);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = cf(i) - o.cf(i);
    return RatPoly(std::move(r));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
    if (is_zero() || o.is_zero())
        return RatPoly();
    std::vector<mpq_class> r(c_.size() + o.c_.size() - 1, kZeroQ);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] += c_[i] * o.c_[j];
    return RatPoly(std::move(r));
}

RatPoly RatPoly::operator*(const mpq_class& k) const {
    if (k == 0)
        return RatPoly();
    RatPoly r = *this;
    for (auto& v : r.c_)
        v *= k;
    return r;
}

mpq_class RatPoly::eval(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

std::pair<IntPoly, mpq_class> RatPoly::primitive_and_scale() const {
    if (is_zero())
        return {IntPoly(), mpq_class(1)};
    mpz_class den = 1;
    for (const auto& v : c_)
        den = lcm(den, v.get_den());
    std::vector<mpz_class> w(c_.size());
    mpz_class cont = 0;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        mpq_class scaled = c_[i] * mpq_class(den);
        w[i] = scaled.get_num();
        cont = gcd(cont, w[i]);
    }
    for (auto& v : w)
        v /= cont;
    // poly == primitive * (cont/den), both positive
    return {IntPoly(std::move(w)), mpq_class(cont, den)};
}

std::pair<RatPoly, RatPoly> divrem(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero())
        throw std::domain_error("division by zero polynomial");
    std::vector<mpq_class> r(a.coeffs());
    int db = b.degree();
    int dq = a.degree() - db;
    if (dq < 0)
        return {RatPoly(), a};
    std::vector<mpq_class> q(static_cast<std::size_t>(dq) + 1, kZeroQ);
    for (int i = dq; i >= 0; --i) {
        if (static_cast<std::size_t>(i + db) >= r.size() || r[i + db] == 0)
            continue;
        mpq_class f = r[i + db] / b.lc();
        q[i] = f;
        for (int j = 0; j <= db; ++j)
            r[i + j] -= f * b.cf(j);
    }
    return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

RatPoly rem(const RatPoly& a, const IntPoly& mod) {
    return divrem(a, RatPoly(mod)).second;
}

bool divides(const IntPoly& b, const IntPoly& a) {
    if (b.is_zero())
        return a.is_zero();
    return divrem(RatPoly(a), RatPoly(b)).second.is_zero();
}

IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
    auto [q, r] = divrem(RatPoly(a), RatPoly(b));
    if (!r.is_zero())
        throw std::domain_error("exact_div: division is not exact");
    std::vector<mpz_class> w(q.coeffs().size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        const mpq_class& v = q.cf(i);
        if (v.get_den() != 1)
            throw std::domain_error("exact_div: quotient is not integral");
        w[i] = v.get_num();
    }
    return IntPoly(std::move(w));
}

// --- content / primitive / adjoint -------------------------------------------

std::pair<mpz_class, IntPoly> content_and_primitive(const IntPoly& p) {
    if (p.is_zero())
        throw std::domain_error("content of zero polynomial");
    mpz_class cont = 0;
    for (const auto& v : p.coeffs())
        cont = gcd(cont, v);
    std::vector<mpz_class> w(p.coeffs());
    for (auto& v : w)
        v /= cont;
    return {cont, IntPoly(std::move(w))};
}

IntPoly primitive_part(const IntPoly& p) {
    return content_and_primitive(p).second;
}

IntPoly normalized_primitive(const IntPoly& p) {
    IntPoly q = primitive_part(p);
    if (q.lc() < 0)
        q = -q;
    return q;
}

IntPoly reciprocal_adjoint(const IntPoly& p) {
    if (p.is_zero())
        throw std::domain_error("reciprocal adjoint of zero polynomial");
    return p.reversed();
}

bool is_reciprocal(const IntPoly& p) {
    return !p.is_zero() && reciprocal_adjoint(p) == p;
}

// --- gcd ----------------------------------------------------------------------

namespace {

// -(a mod b) scaled to a primitive integer polynomial by a positive factor.
// Positive scaling keeps signs faithful, which the Sturm chain needs.
IntPoly neg_rem_primitive(const IntPoly& a, const IntPoly& b) {
    RatPoly r = divrem(RatPoly(a), RatPoly(b)).second;
    if (r.is_zero())
        return IntPoly();
    return (-r).primitive_and_scale().first;
}

} // namespace

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() && b.is_zero())
        return IntPoly();
    if (a.is_zero())
        return normalized_primitive(b);
    if (b.is_zero())
        return normalized_primitive(a);
    IntPoly x = primitive_part(a);
    IntPoly y = primitive_part(b);
    if (x.degree() < y.degree())
        std::swap(x, y);
    while (!y.is_zero()) {
        IntPoly r = neg_rem_primitive(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    if (x.lc() < 0)
        x = -x;
    return x;
}

// --- resultant (Sylvester matrix, fraction-free Bareiss) -----------------------

namespace {

mpz_class bareiss_det(std::vector<std::vector<mpz_class>> m) {
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    mpz_class sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0)
                ++p;
            if (p == n)
                return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = t;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

} // namespace

mpz_class resultant(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero())
        return 0;
    int m = f.degree(), n = g.degree();
    if (m == 0) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), f.lc().get_mpz_t(), static_cast<unsigned long>(n));
        return r;
    }
    if (n == 0) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), g.lc().get_mpz_t(), static_cast<unsigned long>(m));
        return r;
    }
    const std::size_t sz = static_cast<std::size_t>(m + n);
    std::vector<std::vector<mpz_class>> s(sz, std::vector<mpz_class>(sz, kZero));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j)
            s[i][i + j] = f.cf(static_cast<std::size_t>(m - j));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j)
            s[n + i][i + j] = g.cf(static_cast<std::size_t>(n - j));
    return bareiss_det(std::move(s));
}

// --- squarefree decomposition (Yun) --------------------------------------------

namespace {

RatPoly rat_derivative(const RatPoly& f) {
    if (f.degree() < 1)
        return RatPoly();
    std::vector<mpq_class> d(static_cast<std::size_t>(f.degree()));
    for (std::size_t t = 1; t < f.coeffs().size(); ++t)
        d[t - 1] = f.cf(t) * mpq_class(static_cast<long>(t));
    return RatPoly(std::move(d));
}

} // namespace

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p) {
    if (p.is_zero())
        throw std::domain_error("squarefree decomposition of zero polynomial");
    std::vector<std::pair<IntPoly, int>> out;
    if (p.degree() == 0)
        return out;
    IntPoly f = primitive_part(p);
    IntPoly g = poly_gcd(f, f.derivative());
    if (g.degree() == 0) {
        out.emplace_back(normalized_primitive(f), 1);
        return out;
    }
    // Yun's algorithm over Q with exact divisions.
    RatPoly fq(f), gq(g);
    RatPoly w = divrem(fq, gq).first;
    RatPoly y = divrem(rat_derivative(fq), gq).first;
    RatPoly z = y - rat_derivative(w);
    int i = 1;
    while (w.degree() > 0) {
        IntPoly h = poly_gcd(w.primitive_and_scale().first, z.primitive_and_scale().first);
        if (h.degree() > 0)
            out.emplace_back(normalized_primitive(h), i);
        RatPoly hq(h);
        w = divrem(w, hq).first;
        z = divrem(z, hq).first - rat_derivative(w);
        ++i;
    }
    return out;
}

IntPoly squarefree_part(const IntPoly& p) {
    IntPoly f = primitive_part(p);
    IntPoly g = poly_gcd(f, f.derivative());
    if (g.degree() == 0)
        return normalized_primitive(f);
    return normalized_primitive(primitive_part(exact_div(f * g.lc(), g)));
}

// --- Sturm ----------------------------------------------------------------------

SturmChain::SturmChain(const IntPoly& squarefree) {
    chain_.push_back(primitive_part(squarefree));
    IntPoly d = squarefree.derivative();
    if (d.is_zero())
        return;
    chain_.push_back(primitive_part(d));
    while (chain_.back().degree() >= 0) {
        const IntPoly& a = chain_[chain_.size() - 2];
        const IntPoly& b = chain_.back();
        IntPoly nxt = neg_rem_primitive(a, b);
        if (nxt.is_zero())
            break;
        chain_.push_back(std::move(nxt));
        if (chain_.back().degree() == 0)
            break;
    }
}

int SturmChain::variations_at(const mpq_class& x) const {
    int var = 0;
    int prev = 0;
    for (const auto& q : chain_) {
        int s = q.sign_at(x);
        if (s == 0)
            continue;
        if (prev != 0 && s != prev)
            ++var;
        prev = s;
    }
    return var;
}

int SturmChain::count_open(const mpq_class& a, const mpq_class& b) const {
    return variations_at(a) - variations_at(b);
}

namespace {

// Removes a rational root (x - num/den ~ den*x - num) from squarefree p.
IntPoly deflate_rational_root(const IntPoly& p, const mpq_class& x) {
    IntPoly lin{std::vector<mpz_class>{-x.get_num(), x.get_den()}};
    return exact_div(p * lin.lc(), lin) * mpz_class(1);
}

} // namespace

bool has_real_root_at(const IntPoly& p, const mpq_class& x) {
    if (p.is_zero())
        throw std::domain_error("zero polynomial");
    return p.sign_at(x) == 0;
}

int sturm_count_open(const IntPoly& p, const mpq_class& lo, const mpq_class& hi) {
    if (p.is_zero())
        throw std::domain_error("zero polynomial");
    if (!(lo < hi))
        throw std::domain_error("empty interval");
    IntPoly f = squarefree_part(p);
    if (f.degree() <= 0)
        return 0;
    if (f.sign_at(lo) == 0)
        f = primitive_part(deflate_rational_root(f, lo));
    if (f.degree() > 0 && f.sign_at(hi) == 0)
        f = primitive_part(deflate_rational_root(f, hi));
    if (f.degree() <= 0)
        return 0;
    SturmChain chain(f);
    return chain.count_open(lo, hi);
}

int sturm_count_real_roots(const IntPoly& p, const mpq_class& lo, const mpq_class& hi) {
    return sturm_count_open(p, lo, hi) + (has_real_root_at(p, hi) ? 1 : 0);
}

mpq_class real_root_bound(const IntPoly& p) {
    if (p.is_zero() || p.degree() == 0)
        return 1;
    mpq_class m = 0;
    mpq_class lead = abs(mpq_class(p.lc()));
    for (int i = 0; i < p.degree(); ++i) {
        mpq_class t = abs(mpq_class(p.cf(static_cast<std::size_t>(i)))) / lead;
        if (t > m)
            m = t;
    }
    return m + 2;
}

int sturm_count_all(const IntPoly& p) {
    mpq_class b = real_root_bound(p);
    return sturm_count_real_roots(p, -b, b);
}

// --- composed power -------------------------------------------------------------

std::optional<std::pair<int, IntPoly>> detect_composed_power(const IntPoly& p) {
    if (p.is_zero() || p.degree() <= 0)
        return std::nullopt;
    long g = 0;
    for (std::size_t j = 1; j < p.coeffs().size(); ++j)
        if (p.cf(j) != 0)
            g = std::gcd(g, static_cast<long>(j));
    if (g < 2)
        return std::nullopt;
    std::vector<mpz_class> w(static_cast<std::size_t>(p.degree() / g) + 1, kZero);
    for (std::size_t j = 0; j < w.size(); ++j)
        w[j] = p.cf(j * static_cast<std::size_t>(g));
    return std::make_pair(static_cast<int>(g), IntPoly(std::move(w)));
}

// --- cyclotomic -------------------------------------------------------------------

namespace {

long euler_phi(long n) {
    long r = n;
    for (long q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            r -= r / q;
            while (n % q == 0)
                n /= q;
        }
    }
    if (n > 1)
        r -= r / n;
    return r;
}

} // namespace

namespace {

IntPoly cyclotomic_poly_unlocked(long n, std::map<long, IntPoly>& cache) {
    auto it = cache.find(n);
    if (it != cache.end())
        return it->second;
    if (n <= 0)
        throw std::domain_error("cyclotomic_poly: n must be positive");
    IntPoly num = IntPoly::monomial(1, static_cast<std::size_t>(n)) - IntPoly{1};
    for (long d = 1; d < n; ++d)
        if (n % d == 0)
            num = exact_div(num, cyclotomic_poly_unlocked(d, cache));
    cache[n] = num;
    return num;
}

} // namespace

IntPoly cyclotomic_poly(long n) {
    static std::mutex mtx;
    static std::map<long, IntPoly> cache;
    std::lock_guard<std::mutex> lock(mtx);
    return cyclotomic_poly_unlocked(n, cache);
}

std::optional<long> cyclotomic_order(const IntPoly& p) {
    if (p.is_zero() || p.degree() < 1)
        return std::nullopt;
    if (p.lc() != 1)
        return std::nullopt;
    long d = p.degree();
    long bound = std::max<long>(6, 4 * d * d);
    for (long n = 1; n <= bound; ++n) {
        if (euler_phi(n) != d)
            continue;
        if (p == cyclotomic_poly(n))
            return n;
    }
    return std::nullopt;
}

// --- power product / element characteristic polynomial ----------------------------

namespace {

// Lagrange interpolation through integer points (exact).
RatPoly interpolate(const std::vector<mpz_class>& xs, const std::vector<mpq_class>& ys) {
    RatPoly acc;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        RatPoly basis{std::vector<mpq_class>{mpq_class(1)}};
        mpq_class denom = 1;
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i)
                continue;
            basis = basis * RatPoly{std::vector<mpq_class>{mpq_class(-xs[j]), mpq_class(1)}};
            denom *= mpq_class(xs[i] - xs[j]);
        }
        acc = acc + basis * (ys[i] / denom);
    }
    return acc;
}

std::vector<mpz_class> interpolation_points(std::size_t n) {
    std::vector<mpz_class> xs;
    xs.reserve(n);
    long v = 0;
    while (xs.size() < n) {
        xs.emplace_back(v);
        if (v > 0)
            v = -v;
        else
            v = -v + 1;
    }
    return xs;
}

} // namespace

IntPoly power_product_poly(const IntPoly& p, long n) {
    if (p.is_zero() || p.degree() < 1)
        throw std::domain_error("power_product_poly: degree >= 1 required");
    if (n < 1)
        throw std::domain_error("power_product_poly: n must be positive");
    const int d = p.degree();
    // lc^n prod (x - a_j^n) = Res_y(p(y), x - y^n); evaluate at d+1 points and interpolate.
    // Reduce y^n modulo p once (pseudo style, over Q).
    RatPoly ypow = rem(RatPoly(IntPoly::monomial(1, static_cast<std::size_t>(n))), p);
    auto xs = interpolation_points(static_cast<std::size_t>(d) + 1);
    std::vector<mpq_class> ys(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        // Res_y(p, t - y^n) = lc(p)^(n - deg r) * Res_y(p, r),  r = t - y^n mod p
        RatPoly r = RatPoly{std::vector<mpq_class>{mpq_class(xs[i])}} - ypow;
        auto [rint, scale] = r.primitive_and_scale();
        if (rint.is_zero()) {
            ys[i] = 0;
            continue;
        }
        mpz_class res = resultant(p, rint);
        // Res(p, scale * rint) = scale^deg(p) * Res(p, rint),
        // Res(p, t - y^n) = lc(p)^(n - deg r) * Res(p, r).
        mpz_class snum, sden, lp;
        mpz_pow_ui(snum.get_mpz_t(), scale.get_num().get_mpz_t(), static_cast<unsigned long>(d));
        mpz_pow_ui(sden.get_mpz_t(), scale.get_den().get_mpz_t(), static_cast<unsigned long>(d));
        long e = n - rint.degree();
        mpz_pow_ui(lp.get_mpz_t(), p.lc().get_mpz_t(), static_cast<unsigned long>(e));
        ys[i] = mpq_class(lp) * (mpq_class(snum) / mpq_class(sden)) * mpq_class(res);
    }
    RatPoly r = interpolate(xs, ys);
    std::vector<mpz_class> w(r.coeffs().size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (r.cf(i).get_den() != 1)
            throw std::logic_error("power_product_poly: non-integral interpolation");
        w[i] = r.cf(i).get_num();
    }
    return IntPoly(std::move(w));
}

RatPoly char_poly_of_element(const IntPoly& p, const IntPoly& b) {
    if (p.is_zero() || p.degree() < 1)
        throw std::domain_error("char_poly_of_element: degree >= 1 required");
    const int d = p.degree();
    RatPoly bred = rem(RatPoly(b), p);
    auto xs = interpolation_points(static_cast<std::size_t>(d) + 1);
    std::vector<mpq_class> ys(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        // prod_j (t - B(alpha_j)) = prod_j r(alpha_j) = Res(p, r) / lc(p)^deg(r)
        RatPoly r = RatPoly{std::vector<mpq_class>{mpq_class(xs[i])}} - bred;
        auto [rint, scale] = r.primitive_and_scale();
        if (rint.is_zero()) {
            ys[i] = 0;
            continue;
        }
        mpz_class res = resultant(p, rint);
        mpz_class snum, sden, lp;
        mpz_pow_ui(snum.get_mpz_t(), scale.get_num().get_mpz_t(), static_cast<unsigned long>(d));
        mpz_pow_ui(sden.get_mpz_t(), scale.get_den().get_mpz_t(), static_cast<unsigned long>(d));
        mpz_pow_ui(lp.get_mpz_t(), p.lc().get_mpz_t(),
                   static_cast<unsigned long>(rint.degree()));
        ys[i] = (mpq_class(snum) / mpq_class(sden)) * mpq_class(res) / mpq_class(lp);
    }
    return interpolate(xs, ys);
}

bool is_algebraic_integer_element(const IntPoly& p, const IntPoly& b) {
    RatPoly cp = char_poly_of_element(p, b);
    for (const auto& v : cp.coeffs())
        if (v.get_den() != 1)
            return false;
    return true;
}

} // namespace hrpkit
