#ifndef AGCLCP_AGCODE_HPP
#define AGCLCP_AGCODE_HPP

#include "agclcp/codes.hpp"
#include "agclcp/curve.hpp"
#include "agclcp/rrspace.hpp"

#include <optional>
#include <string>
#include <vector>

namespace agclcp {

/// Evaluation-code data: curve, divisor G and the ordered evaluation
/// points D. Construction requires supp(G) ∩ D = ∅ and distinct points;
/// the degree window 2g-2 < deg(G) < n is reported, not enforced.
struct AgCodeSpec {
    Curve curve;
    Divisor G;
    std::vector<Point> D;

    AgCodeSpec(Curve c, Divisor g, std::vector<Point> d);
};

/// Generator rows as evaluated: rr_basis(G) row i evaluated at D.
Matrix evaluation_matrix(const AgCodeSpec& spec);

/// C_L(D, G), canonicalized.
LinearCode evaluation_code(const AgCodeSpec& spec);

/// C_Ω(D, G), realized as the linear-algebra dual of C_L(D, G).
LinearCode omega_code(const AgCodeSpec& spec);

bool degree_window_ok(const AgCodeSpec& spec);

struct HypothesisCheck {
    std::string name;
    bool holds;
    std::string detail;
};

/// Outcome of an LCP criterion: the theorem's hypothesis checklist next
/// to the ground-truth rank test, so discrepancies in worked examples
/// surface as data rather than failures.
struct LcpReport {
    size_t n = 0;
    size_t k_C = 0;
    size_t k_D = 0;
    bool is_lcp = false;
    bool hypotheses_hold = false;
    std::vector<HypothesisCheck> checklist;
    std::optional<size_t> security_parameter;
    std::vector<std::string> notes;
};

/// Genus-0 criterion: l(G)+l(H) = n, degree windows, deg gcd(G,H) = -1.
LcpReport check_genus0_lcp(const AgCodeSpec& specG, const AgCodeSpec& specH,
                           uint64_t distance_budget = kDefaultDistanceBudget);

/// Genus>=1 criterion: l(G)+l(H) = n, degree windows, gcd(G,H)
/// non-special of degree g-1 and lmd(G,H)-D non-special. Degree-0
/// non-speciality on an elliptic curve is decided by the principal test.
LcpReport check_genus1_lcp(const AgCodeSpec& specG, const AgCodeSpec& specH,
                           uint64_t distance_budget = kDefaultDistanceBudget);

struct EllipticLcpResult {
    AgCodeSpec specG;
    AgCodeSpec specH;
    LcpReport report;
};

/// Weierstrass-family construction on E_{1,b,c}: picks s x-components
/// besides alpha0, sets D = sum of the point pairs over them,
/// G = rO + rP-, H = (2s-r)O - rP- with P- the larger-y point over
/// alpha0. Requires 0 < r < s and P- not r-torsion; alphas may pin the
/// component choice explicitly (default: lowest indices first).
EllipticLcpResult construct_elliptic_lcp(const Curve& curve, const FieldElement& alpha0,
                                         long long r, long long s,
                                         const std::vector<FieldElement>& alphas = {},
                                         uint64_t distance_budget = kDefaultDistanceBudget);

struct ScaledPairResult {
    std::vector<FieldElement> a;
    LcpReport report;
};

/// Scaled-pair construction from a function h: a = (h(P_1),...,h(P_n)),
/// candidate pair (C, aC). Preconditions (k = n/2, degree window, the
/// evaluation vector not all-0/all-1, h L(G) ∩ L(G) = 0) are reported
/// per item in the checklist; the rank verdict is always computed.
ScaledPairResult construct_scaled_pair(const AgCodeSpec& spec, const CurveFunction& h,
                                       uint64_t distance_budget = kDefaultDistanceBudget);

/// Bounded search for an h usable with construct_scaled_pair: affine
/// lines and products of two of them (pole order at most 6 at infinity).
CurveFunction find_scaling_function(const AgCodeSpec& spec);

/// MDS scaling construction: requires q >= 3, l(G)+l(H) = n and
/// C_L(D,H) MDS; returns a in (F_q*)^n with (aC_L(D,G), C_L(D,H)) an
/// LCP. Searches lambda_i over the pivot coordinates of the
/// intersection, values != 1 first; a failed search is reported, never
/// silently ignored.
ScaledPairResult construct_mds_scaled_pair(const AgCodeSpec& specG, const AgCodeSpec& specH,
                                           uint64_t distance_budget = kDefaultDistanceBudget);

struct DualityEvidence {
    bool same_parameters = false;
    bool same_weight_enumerator = false;
    std::optional<bool> both_mds; // genus-0 claim only
    EquivalenceVerdict equivalence{EquivalenceVerdict::Kind::unknown, std::nullopt, ""};
    std::string verdict; // "equivalent" | "supported" | "refuted"
};

/// Evidence that C_L(D,H) and C_L(D,G)⊥ are equivalent, for a verified
/// LCP pair: parameter and weight-enumerator comparison plus the bounded
/// witness search.
DualityEvidence duality_evidence(const AgCodeSpec& specG, const AgCodeSpec& specH,
                                 uint64_t equiv_budget = kDefaultEquivBudget,
                                 uint64_t distance_budget = kDefaultDistanceBudget);

} // namespace agclcp

#endif
