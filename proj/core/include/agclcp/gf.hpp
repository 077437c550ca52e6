#ifndef AGCLCP_GF_HPP
#define AGCLCP_GF_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace agclcp {

class Field;
class FieldElement;
using FieldPtr = std::shared_ptr<const Field>;

/// Exact arithmetic in GF(p^m), q = p^m <= 2^16.
///
/// Elements are encoded by an index in [0, q): the base-p digits of the
/// index, little-endian, are the coefficients of the residue polynomial.
/// Index 0 is the zero element and index 1 is one.
///
/// Fields are interned: make() returns the same instance for the same
/// (p, m, modulus), so element operations can compare field identity by
/// pointer. Instances are immutable and safe to share across threads.
class Field {
public:
    /// Field with the built-in modulus for (p, m). The table pins
    /// w^2+w+1 for GF(4), w^3+w+1 for GF(8), w^2+1 for GF(9) and
    /// w^4+w+1 for GF(16); prime fields use the variable itself.
    /// Throws std::invalid_argument for composite p or a (p, m) pair
    /// without a table entry.
    static FieldPtr make(int p, int m);

    /// Field with an explicitly supplied modulus (little-endian
    /// coefficients, length m+1, monic). Irreducibility is verified by
    /// trial division; reducible moduli are rejected.
    static FieldPtr make(int p, int m, const std::vector<int>& modulus);

    int p() const { return p_; }
    int m() const { return m_; }
    int q() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }

    FieldElement zero() const;
    FieldElement one() const;
    /// A fixed primitive element of order q-1: the residue class of the
    /// variable when that class is primitive (true for the GF(4), GF(8)
    /// and GF(16) table moduli), otherwise the least element index of
    /// multiplicative order q-1.
    FieldElement generator() const;
    FieldElement element(uint32_t index) const;
    /// All q elements in ascending index order.
    std::vector<FieldElement> elements() const;

    /// Accepts "0", "1", "w", "w^k", polynomial forms such as "w+1" or
    /// "2w^2+w+1", and bare integers (reduced mod p, as constants).
    FieldElement parse(const std::string& text) const;
    /// Canonical text: "0", "1", then "w"/"w^k" for extension fields and
    /// plain decimal for prime fields.
    std::string to_string(const FieldElement& x) const;

    uint32_t add_idx(uint32_t a, uint32_t b) const;
    uint32_t sub_idx(uint32_t a, uint32_t b) const;
    uint32_t neg_idx(uint32_t a) const;
    uint32_t mul_idx(uint32_t a, uint32_t b) const;
    uint32_t inv_idx(uint32_t a) const;
    uint32_t pow_idx(uint32_t a, long long e) const;
    /// Image of an integer scalar under Z -> GF(q) (n mod p times one).
    uint32_t scalar_idx(long long n) const;
    /// Log base generator; a must be nonzero.
    uint32_t log_idx(uint32_t a) const;

private:
    Field(int p, int m, std::vector<int> modulus);

    int p_;
    int m_;
    int q_;
    std::vector<int> modulus_;
    uint32_t generator_;
    std::vector<uint32_t> exp_;   // exp_[k] = generator^k, k in [0, q-1)
    std::vector<uint32_t> log_;   // log_[exp_[k]] = k
    std::vector<uint32_t> addtab_; // q*q add table when small enough, else empty

    uint32_t raw_mul(uint32_t a, uint32_t b) const; // table-free, used at setup
    uint32_t raw_pow(uint32_t a, uint64_t e) const;
};

/// A value of GF(p^m). Plain value type; 'field' is a non-owning pointer
/// into the intern table, which keeps every constructed field alive.
class FieldElement {
public:
    FieldElement() : field_(nullptr), idx_(0) {}
    FieldElement(const Field* field, uint32_t idx) : field_(field), idx_(idx) {}

    const Field& field() const { return *field_; }
    const Field* field_ptr() const { return field_; }
    uint32_t index() const { return idx_; }
    bool is_zero() const { return idx_ == 0; }
    bool is_one() const { return idx_ == 1; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
    FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }

    /// Multiplicative inverse; throws std::domain_error on zero.
    FieldElement inv() const;
    /// x^e with e any integer; pow(0, 0) = 1, pow(0, e>0) = 0,
    /// negative e inverts first.
    FieldElement pow(long long e) const;

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    std::string str() const { return field_->to_string(*this); }

private:
    const Field* field_;
    uint32_t idx_;
};

/// Throws std::invalid_argument unless a and b live in the same field.
void require_same_field(const FieldElement& a, const FieldElement& b);

} // namespace agclcp

#endif
