#ifndef AGCLCP_LINALG_HPP
#define AGCLCP_LINALG_HPP

#include "agclcp/gf.hpp"

#include <cstddef>
#include <vector>

namespace agclcp {

/// Dense row-major matrix over one GF(q). Rows may be zero (codes of
/// dimension 0 keep their length and field through the empty matrix).
class Matrix {
public:
    Matrix(FieldPtr field, size_t rows, size_t cols);
    Matrix(FieldPtr field, size_t rows, size_t cols, std::vector<FieldElement> entries);

    static Matrix identity(FieldPtr field, size_t n);
    static Matrix from_rows(FieldPtr field, const std::vector<std::vector<FieldElement>>& rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const FieldPtr& field() const { return field_; }

    FieldElement& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const FieldElement& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

    std::vector<FieldElement> row(size_t r) const;

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    std::string str() const;

private:
    FieldPtr field_;
    size_t rows_;
    size_t cols_;
    std::vector<FieldElement> a_;
};

struct RrefResult {
    Matrix mat;
    size_t rank;
    std::vector<size_t> pivots;
};

/// Reduced row echelon form (pivots normalized to 1, cleared above and
/// below); zero rows dropped from the result.
RrefResult rref(const Matrix& m);

/// Rows span the right kernel {x : M x^T = 0}; returned in RREF, with
/// cols - rank(M) rows.
Matrix nullspace_basis(const Matrix& m);

Matrix stack(const Matrix& a, const Matrix& b);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);

size_t rank(const Matrix& m);
bool row_space_contains(const Matrix& m, const std::vector<FieldElement>& v);
bool row_space_equal(const Matrix& a, const Matrix& b);

FieldElement dot(const std::vector<FieldElement>& a, const std::vector<FieldElement>& b);

} // namespace agclcp

#endif
