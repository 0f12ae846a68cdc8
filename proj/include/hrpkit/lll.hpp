#ifndef HRPKIT_LLL_HPP
#define HRPKIT_LLL_HPP

#include "hrpkit/intpoly.hpp"
#include "hrpkit/roots.hpp"

#include <optional>
#include <vector>

namespace hrpkit {

/// Integer lattice basis, rows of equal dimension, linearly independent.
struct LatticeBasis {
    std::vector<std::vector<mpz_class>> rows;

    std::size_t dim() const { return rows.empty() ? 0 : rows[0].size(); }
    std::size_t size() const { return rows.size(); }
};

struct LllResult {
    LatticeBasis reduced;
    // transform[i] expresses reduced.rows[i] in the input rows (unimodular).
    std::vector<std::vector<mpz_class>> transform;
};

// Exact delta-LLL reduction with rational Gram-Schmidt; verifies size
// reduction and the Lovasz condition on the output.  1/4 < delta < 1.
LllResult lll_reduce(const LatticeBasis& b, const mpq_class& delta = mpq_class(3, 4));

// Post-hoc check with an independent exact Gram-Schmidt pass.
bool verify_reduced(const LatticeBasis& b, const mpq_class& delta);

// Gram determinant (exact); 0 iff the rows are dependent.
mpz_class gram_determinant(const LatticeBasis& b);

// The dependence lattice: rows (e_i | floor(C*theta_i)) for i = 1..m and
// (0 | floor(C*theta_{m+1})) with theta_{m+1} = 2*pi.
LatticeBasis build_dependence_lattice(const std::vector<CertifiedArg>& args,
                                      const CertifiedArg& two_pi, const mpz_class& c);

struct RelationSearchSchedule {
    std::vector<mpz_class> c_values; // escalation ladder
    mpz_class waldschmidt_b = mpz_class(10000000000L); // configurable stand-in
    bool b_supplied = false;

    static RelationSearchSchedule defaults();
};

struct RelationCandidate {
    std::vector<mpz_class> coeffs; // k_1..k_m, k_{m+1} (the 2*pi multiple)
    mpz_class c_used;
};

// LLL search for a multiplicative dependence among unimodular upper-half
// roots.  Returns an unverified candidate, or nullopt when every C in the
// schedule leaves the first reduced vector above the certification threshold
// (heuristic independence).
std::optional<RelationCandidate> search_relation(const std::vector<RootBox>& roots,
                                                 const RelationSearchSchedule& schedule);

// Same search on precomputed arguments.
std::optional<RelationCandidate> search_relation_args(const std::vector<CertifiedArg>& args,
                                                      const RelationSearchSchedule& schedule);

// Threshold separating plausible relation vectors from generic lattice noise:
// min of the de Weger style bound 2^(m/2) sqrt(m^2+5m+4) B and the geometric
// bound floor(2 pi C)^(1/(m+1)) / 2^m.
mpz_class candidate_threshold(std::size_t m, const mpz_class& c, const mpz_class& b);

} // namespace hrpkit

#endif
