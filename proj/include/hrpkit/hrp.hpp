#ifndef HRPKIT_HRP_HPP
#define HRPKIT_HRP_HPP

#include "hrpkit/intpoly.hpp"
#include "hrpkit/mdep.hpp"
#include "hrpkit/roots.hpp"

#include <optional>
#include <vector>

namespace hrpkit {

enum class HrpKind { RootOfUnity, Expanding, UnitCircle, Mixed_NoHRP };
enum class HrpVerdict { HRP_proven, Unknown, NoHRP };

struct HrpStatus {
    HrpKind kind = HrpKind::Mixed_NoHRP;
    HrpVerdict verdict = HrpVerdict::NoHRP;
    int m_alpha = 0; // meaningful for the unit-circle case
    std::optional<DependenceReport> report;
};

/// Digit string over the finite alphabet {-digit_bound..digit_bound};
/// digits[j] is the coefficient of alpha^j and the represented element
/// re-evaluates exactly modulo the base minimal polynomial.
struct DigitExpansion {
    std::vector<mpz_class> digits;
    mpz_class digit_bound;
    IntPoly base;
    std::optional<RootBox> root;
};

struct UnitCircleConfig {
    long khat = 8;            // heuristic stand-in for the Kronecker constant
    long khat_max = 1 << 14;  // doubling-on-failure ceiling
    long max_steps = 100000;
    long precision_bits = 96;
    bool attempt_beyond_theorem = false; // try m <= d/2 - 2 inputs (no termination claim)

    mpz_class big_digit_lo(const mpz_class& c) const { return 5 * mpz_class(khat) * c; }
    mpz_class big_digit_hi(const mpz_class& c) const { return (5 * mpz_class(khat) + 1) * c; }
    mpz_class remainder_radius(const mpz_class& c) const {
        return (43 * mpz_class(khat) + 10) * c;
    }
};

struct ReduceStats {
    long substitutions = 0;       // carry steps taken in the expanding reducer
    bool l1_monotone = true;      // strict L1 decrease held at every substitution
    long steps = 0;               // T-map steps in the unit-circle reducer
    long big_steps = 0;
    long khat_used = 0;
    bool terminated_by_cycle = false;
};

// Theorem-1 classification of an irreducible primitive polynomial.
HrpStatus classify_hrp(const IntPoly& p, const RootBox& root,
                       const MdepConfig& cfg = MdepConfig::defaults());

// Integer polynomial with alpha as a root and a k-th (strictly) dominant term.
IntPoly construct_dominant(const IntPoly& p, long k, bool strict, long n_ceiling = 1L << 16);

// Digit expansion of value(alpha) over {0,+-1,...,+-(|c_0|-1)} for expanding alpha.
DigitExpansion reduce_expanding(const IntPoly& p, const RootBox& root, const IntPoly& value,
                                ReduceStats* stats = nullptr);

// {0,+-1} expansion for a primitive n-th root of unity.
DigitExpansion reduce_root_of_unity(long n, const IntPoly& value);

// Heuristic unit-circle reduction; nullopt when the step or khat budget runs out.
std::optional<DigitExpansion> reduce_unit_circle(const IntPoly& p, const RootBox& root,
                                                 const IntPoly& value, const UnitCircleConfig& cfg,
                                                 ReduceStats* stats = nullptr);

// Exact re-evaluation check: sum digits[j] x^j == value (mod base).
bool expansion_evaluates_to(const DigitExpansion& e, const IntPoly& value);

} // namespace hrpkit

#endif
