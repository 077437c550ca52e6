#include "agclcp/codes.hpp"

#include <algorithm>
#include <numeric>

namespace agclcp {

namespace {

// q^k if it fits within limit, otherwise limit+1.
uint64_t pow_capped(uint64_t q, size_t k, uint64_t limit) {
    uint64_t r = 1;
    for (size_t i = 0; i < k; ++i) {
        if (r > limit / q) return limit + 1;
        r *= q;
    }
    return r;
}

} // namespace

LinearCode LinearCode::from_rows(const Matrix& m) {
    return LinearCode(rref(m).mat);
}

LinearCode LinearCode::zero_code(FieldPtr field, size_t n) {
    return LinearCode(Matrix(std::move(field), 0, n));
}

bool LinearCode::contains(const std::vector<FieldElement>& v) const {
    return row_space_contains(gen_, v);
}

LinearCode dual(const LinearCode& c) {
    return LinearCode::from_rows(nullspace_basis(c.gen()));
}

size_t hull_dimension(const LinearCode& c) {
    size_t k = c.dim();
    size_t n = c.length();
    size_t gram_rank = rank(mat_mul(c.gen(), transpose(c.gen())));
    size_t via_gram = k - gram_rank;
    size_t via_sum = n - rank(stack(c.gen(), dual(c).gen()));
    if (via_gram != via_sum)
        throw std::logic_error("hull dimension formulas disagree");
    return via_gram;
}

namespace {

// Depth-first message enumeration on raw element indices; scaled rows
// are precomputed so the inner loop is additions only.
void enumerate_raw(const LinearCode& c, uint64_t budget,
                   const std::function<void(const uint32_t*)>& fn) {
    const size_t k = c.dim();
    const size_t n = c.length();
    const Field* f = c.field().get();
    const uint32_t q = (uint32_t)f->q();
    if (pow_capped(q, k, budget) > budget)
        throw BudgetExceeded("codeword enumeration too large: q^k exceeds budget");
    if (k == 0) return;

    std::vector<uint32_t> srows((size_t)k * q * n);
    for (size_t i = 0; i < k; ++i)
        for (uint32_t d = 0; d < q; ++d)
            for (size_t j = 0; j < n; ++j)
                srows[(i * q + d) * n + j] = f->mul_idx(d, c.gen().at(i, j).index());

    std::vector<uint32_t> partial((k + 1) * n, 0);
    std::vector<uint32_t> digit(k, 0);
    size_t level = 0;
    while (true) {
        if (level == k) {
            bool nonzero = false;
            for (uint32_t d : digit)
                if (d) { nonzero = true; break; }
            if (nonzero) fn(&partial[k * n]);
            while (level > 0 && digit[level - 1] + 1 == q) { digit[level - 1] = 0; --level; }
            if (level == 0) return;
            ++digit[level - 1];
            --level;
            continue;
        }
        const uint32_t* src = &partial[level * n];
        uint32_t* dst = &partial[(level + 1) * n];
        const uint32_t d = digit[level];
        if (d == 0) {
            std::copy(src, src + n, dst);
        } else {
            const uint32_t* row = &srows[(level * q + d) * n];
            for (size_t j = 0; j < n; ++j) dst[j] = f->add_idx(src[j], row[j]);
        }
        ++level;
    }
}

} // namespace

void for_each_codeword(const LinearCode& c, uint64_t budget,
                       const std::function<void(const std::vector<FieldElement>&)>& fn) {
    const Field* f = c.field().get();
    const size_t n = c.length();
    std::vector<FieldElement> w(n, f->zero());
    enumerate_raw(c, budget, [&](const uint32_t* idx) {
        for (size_t j = 0; j < n; ++j) w[j] = FieldElement(f, idx[j]);
        fn(w);
    });
}

size_t min_distance(const LinearCode& c, uint64_t budget) {
    if (c.dim() == 0)
        throw std::domain_error("minimum distance undefined for a dimension-0 code");
    const size_t n = c.length();
    size_t best = n + 1;
    enumerate_raw(c, budget, [&](const uint32_t* w) {
        size_t wt = 0;
        for (size_t j = 0; j < n; ++j)
            if (w[j]) ++wt;
        if (wt < best) best = wt;
    });
    return best;
}

bool is_mds(const LinearCode& c, uint64_t budget) {
    return min_distance(c, budget) == c.length() - c.dim() + 1;
}

bool is_lcp_pair(const LinearCode& c, const LinearCode& d) {
    if (c.field().get() != d.field().get() || c.length() != d.length())
        throw std::invalid_argument("LCP test needs codes of equal length over one field");
    if (c.dim() + d.dim() != c.length()) return false;
    return rank(stack(c.gen(), d.gen())) == c.length();
}

size_t security_parameter(const LinearCode& c, const LinearCode& d, uint64_t budget) {
    if (!is_lcp_pair(c, d))
        throw std::invalid_argument("security parameter requires an LCP pair");
    return std::min(min_distance(c, budget), min_distance(dual(d), budget));
}

LinearCode scale(const LinearCode& c, const std::vector<FieldElement>& a) {
    if (a.size() != c.length())
        throw std::invalid_argument("scaling vector length mismatch");
    Matrix m = c.gen();
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            m.at(i, j) *= a[j];
    return LinearCode::from_rows(m);
}

LinearCode permute(const LinearCode& c, const std::vector<size_t>& sigma) {
    size_t n = c.length();
    if (sigma.size() != n) throw std::invalid_argument("permutation length mismatch");
    std::vector<bool> seen(n, false);
    for (size_t s : sigma) {
        if (s >= n || seen[s]) throw std::invalid_argument("not a permutation");
        seen[s] = true;
    }
    Matrix m(c.field(), c.dim(), n);
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < n; ++j)
            m.at(i, j) = c.gen().at(i, sigma[j]);
    return LinearCode::from_rows(m);
}

WeightEnumerator weight_enumerator(const LinearCode& c, uint64_t budget) {
    WeightEnumerator we;
    const size_t n = c.length();
    we.counts.assign(n + 1, 0);
    we.counts[0] = 1;
    enumerate_raw(c, budget, [&](const uint32_t* w) {
        size_t wt = 0;
        for (size_t j = 0; j < n; ++j)
            if (w[j]) ++wt;
        ++we.counts[wt];
    });
    return we;
}

EquivalenceVerdict equivalence_evidence(const LinearCode& c, const LinearCode& cprime,
                                        uint64_t search_budget, uint64_t distance_budget) {
    if (c.field().get() != cprime.field().get() || c.length() != cprime.length())
        throw std::invalid_argument("equivalence needs codes of equal length over one field");
    if (c.dim() != cprime.dim())
        return {EquivalenceVerdict::Kind::refuted, std::nullopt, "dimensions differ"};

    try {
        if (!(weight_enumerator(c, distance_budget) == weight_enumerator(cprime, distance_budget)))
            return {EquivalenceVerdict::Kind::refuted, std::nullopt, "weight enumerators differ"};
    } catch (const BudgetExceeded&) {
        return {EquivalenceVerdict::Kind::unknown, std::nullopt,
                "weight enumerators exceed the distance budget"};
    }

    const size_t n = c.length();
    const Field* f = c.field().get();
    const uint64_t qm1 = (uint64_t)f->q() - 1;
    uint64_t total = pow_capped(qm1, n, search_budget);
    for (size_t i = 2; i <= n && total <= search_budget; ++i) {
        if (total > search_budget / i) { total = search_budget + 1; break; }
        total *= i;
    }
    if (total > search_budget)
        return {EquivalenceVerdict::Kind::unknown, std::nullopt,
                "n! (q-1)^n exceeds the search budget"};

    std::vector<size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        std::vector<uint32_t> digits(n, 1); // indices into nonzero elements
        while (true) {
            std::vector<FieldElement> a;
            a.reserve(n);
            for (uint32_t d : digits) a.push_back(f->element(d));
            if (permute(scale(c, a), sigma) == cprime)
                return {EquivalenceVerdict::Kind::equivalent,
                        EquivalenceWitness{sigma, a}, "witness found"};
            size_t pos = n;
            while (pos > 0 && digits[pos - 1] == qm1) { digits[pos - 1] = 1; --pos; }
            if (pos == 0) break;
            ++digits[pos - 1];
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    return {EquivalenceVerdict::Kind::refuted, std::nullopt, "search space exhausted"};
}

} // namespace agclcp
