#ifndef HRPKIT_MDEP_HPP
#define HRPKIT_MDEP_HPP

#include "hrpkit/intpoly.hpp"
#include "hrpkit/lll.hpp"
#include "hrpkit/roots.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hrpkit {

/// zeta = exp(2 pi i power / order), 0 <= power < order, gcd(power, order) = 1.
struct RootOfUnity {
    long order = 1;
    long power = 0;

    bool is_one() const { return order == 1; }
};

/// A verified multiplicative dependence among the upper-half conjugates
/// alpha_1..alpha_m (sorted by real part):
///   prod_j alpha_j^{k_j} = zeta,  sum_j k_j theta_j + 2 pi t = 2 pi power/order.
struct Relation {
    std::vector<long> exponents;
    long two_pi_multiple = 0;
    RootOfUnity cofactor;
};

enum class IndependenceMode { certified, heuristic };

struct DependenceReport {
    int m_alpha = 0;
    std::vector<Relation> relations; // saturated, LLL-reduced, sign-normalized basis
    std::optional<std::pair<long, IntPoly>> power_reducible;
    IndependenceMode independence_mode = IndependenceMode::heuristic;
    std::vector<std::string> diagnostics;
};

struct MdepConfig {
    RelationSearchSchedule schedule = RelationSearchSchedule::defaults();
    long cofactor_order_bound = 120;
    // candidates whose separation-bound precision exceeds this are skipped
    // with a diagnostic instead of being proved (they would take hours)
    long verify_cost_cap_bits = 1L << 24;

    static MdepConfig defaults() { return MdepConfig{}; }
};

// Exact decision of prod alpha_j^{k_j} = zeta.  Returns the verified Relation
// or nullopt with a certified nonzero separation witness (candidate false).
std::optional<Relation> verify_relation_exact(const IntPoly& p, const std::vector<long>& candidate,
                                              const MdepConfig& cfg = MdepConfig::defaults());

// Basis of the lattice of verified relations among (alpha_1..alpha_{d/2}, 2pi).
std::vector<Relation> relation_lattice(const IntPoly& p,
                                       const MdepConfig& cfg = MdepConfig::defaults());

// m(alpha) plus the full report.
DependenceReport m_alpha(const IntPoly& p, const MdepConfig& cfg = MdepConfig::defaults());

// Smallest b with deg(alpha^b) < deg(alpha) and the reduced minimal polynomial.
std::optional<std::pair<long, IntPoly>> power_reducibility(
    const IntPoly& p, const MdepConfig& cfg = MdepConfig::defaults());

// Shared working state so survey-scale callers can reuse isolated roots.
class ConjugateSystem {
  public:
    ConjugateSystem(const IntPoly& p, long bits);

    const IntPoly& poly() const { return p_; }
    const std::vector<RootBox>& roots() const { return roots_; }
    std::size_t count() const { return roots_.size(); }

    // argument with error <= 2^-bits, cached and refined on demand
    const CertifiedArg& argument(std::size_t j, long bits);
    // root box refined to the requested width
    const RootBox& box(std::size_t j, long bits);

  private:
    IntPoly p_;
    std::vector<RootBox> roots_;
    std::vector<CertifiedArg> args_;
    std::vector<long> arg_bits_;
};

std::optional<Relation> verify_relation_with_system(ConjugateSystem& sys,
                                                    const std::vector<long>& candidate,
                                                    const MdepConfig& cfg,
                                                    std::string* rejection_note = nullptr);

DependenceReport analyze_dependences(ConjugateSystem& sys, const MdepConfig& cfg,
                                     bool want_power_reducibility);

} // namespace hrpkit

#endif
