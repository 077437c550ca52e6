#ifndef AGCLCP_CODES_HPP
#define AGCLCP_CODES_HPP

#include "agclcp/linalg.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace agclcp {

/// Raised when an enumeration would exceed its budget. Never downgraded
/// to an approximation; callers either raise the budget or report the
/// quantity as not computed.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr uint64_t kDefaultDistanceBudget = uint64_t(1) << 24;
inline constexpr uint64_t kDefaultEquivBudget = 10'000'000;

/// A linear [n, k] code, identified by the RREF canonical form of its
/// generator matrix. Two codes are equal iff their canonical matrices
/// are identical.
class LinearCode {
public:
    /// Code spanned by the rows of m; rank and canonical form are
    /// computed here.
    static LinearCode from_rows(const Matrix& m);
    /// The zero code of length n.
    static LinearCode zero_code(FieldPtr field, size_t n);

    size_t length() const { return gen_.cols(); }
    size_t dim() const { return gen_.rows(); }
    const Matrix& gen() const { return gen_; }
    const FieldPtr& field() const { return gen_.field(); }

    bool contains(const std::vector<FieldElement>& v) const;
    bool operator==(const LinearCode& o) const { return gen_ == o.gen_; }
    bool operator!=(const LinearCode& o) const { return !(*this == o); }

private:
    explicit LinearCode(Matrix gen) : gen_(std::move(gen)) {}
    Matrix gen_; // canonical RREF, k x n
};

struct WeightEnumerator {
    /// counts[w] = number of codewords of Hamming weight w; counts[0] = 1.
    std::vector<uint64_t> counts;
    bool operator==(const WeightEnumerator& o) const { return counts == o.counts; }
};

LinearCode dual(const LinearCode& c);

/// dim(C ∩ C⊥), computed as k - rank(G G^T) and cross-checked against
/// n - rank([G; G⊥]); the two must agree.
size_t hull_dimension(const LinearCode& c);

/// Exact minimum distance by full message enumeration. Requires k >= 1
/// and q^k within budget (throws BudgetExceeded otherwise).
size_t min_distance(const LinearCode& c, uint64_t budget = kDefaultDistanceBudget);

bool is_mds(const LinearCode& c, uint64_t budget = kDefaultDistanceBudget);

/// True iff C ⊕ D = F_q^n: dimensions sum to n and the stacked
/// generators have full rank.
bool is_lcp_pair(const LinearCode& c, const LinearCode& d);

/// min{d(C), d(D⊥)} for an LCP pair.
size_t security_parameter(const LinearCode& c, const LinearCode& d,
                          uint64_t budget = kDefaultDistanceBudget);

/// Componentwise scaling aC. Zero entries are permitted (the dimension
/// may drop); with invertible a the dimension is preserved and
/// (aC)⊥ = a⁻¹C⊥.
LinearCode scale(const LinearCode& c, const std::vector<FieldElement>& a);

/// σ(C) = {(c_σ(1), ..., c_σ(n))}, σ a 0-based permutation.
LinearCode permute(const LinearCode& c, const std::vector<size_t>& sigma);

WeightEnumerator weight_enumerator(const LinearCode& c,
                                   uint64_t budget = kDefaultDistanceBudget);

struct EquivalenceWitness {
    std::vector<size_t> sigma;       // permutation, 0-based
    std::vector<FieldElement> a;     // nonzero scalars
};

/// Three-valued equivalence report: monomial equivalence is exponential,
/// so a definite "equivalent" always carries an explicit (σ, a) witness
/// and "unknown" means the search space exceeded the budget.
struct EquivalenceVerdict {
    enum class Kind { equivalent, refuted, unknown };
    Kind kind;
    std::optional<EquivalenceWitness> witness;
    std::string reason;
};

/// Refutes via weight enumerators; searches exhaustively for a witness
/// when n! (q-1)^n fits the budget.
EquivalenceVerdict equivalence_evidence(const LinearCode& c, const LinearCode& cprime,
                                        uint64_t search_budget = kDefaultEquivBudget,
                                        uint64_t distance_budget = kDefaultDistanceBudget);

/// Calls fn(codeword) for every nonzero codeword; enumeration order is
/// deterministic. Throws BudgetExceeded if q^k > budget.
void for_each_codeword(const LinearCode& c, uint64_t budget,
                       const std::function<void(const std::vector<FieldElement>&)>& fn);

} // namespace agclcp

#endif
