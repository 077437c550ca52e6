#include "agclcp/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace agclcp {

Matrix::Matrix(FieldPtr field, size_t rows, size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols),
      a_(rows * cols, FieldElement(field_.get(), 0)) {}

Matrix::Matrix(FieldPtr field, size_t rows, size_t cols, std::vector<FieldElement> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows_ * cols_)
        throw std::invalid_argument("entry count does not match matrix shape");
    for (const auto& x : a_)
        if (x.field_ptr() != field_.get())
            throw std::invalid_argument("matrix entry from a different field");
}

Matrix Matrix::identity(FieldPtr field, size_t n) {
    Matrix m(field, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = field->one();
    return m;
}

Matrix Matrix::from_rows(FieldPtr field, const std::vector<std::vector<FieldElement>>& rows) {
    if (rows.empty()) throw std::invalid_argument("from_rows needs at least one row");
    size_t cols = rows[0].size();
    std::vector<FieldElement> entries;
    entries.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols) throw std::invalid_argument("ragged rows");
        entries.insert(entries.end(), r.begin(), r.end());
    }
    return Matrix(std::move(field), rows.size(), cols, std::move(entries));
}

std::vector<FieldElement> Matrix::row(size_t r) const {
    return std::vector<FieldElement>(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_);
}

bool Matrix::operator==(const Matrix& o) const {
    if (field_.get() != o.field_.get() || rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < a_.size(); ++i)
        if (a_[i].index() != o.a_[i].index()) return false;
    return true;
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (size_t r = 0; r < rows_; ++r) {
        os << "[";
        for (size_t c = 0; c < cols_; ++c)
            os << (c ? " " : "") << at(r, c).str();
        os << "]";
        if (r + 1 < rows_) os << "\n";
    }
    return os.str();
}

RrefResult rref(const Matrix& m) {
    Matrix w = m;
    size_t r = 0;
    std::vector<size_t> pivots;
    for (size_t c = 0; c < w.cols() && r < w.rows(); ++c) {
        size_t pivot = r;
        while (pivot < w.rows() && w.at(pivot, c).is_zero()) ++pivot;
        if (pivot == w.rows()) continue;
        if (pivot != r)
            for (size_t j = 0; j < w.cols(); ++j) std::swap(w.at(r, j), w.at(pivot, j));
        FieldElement inv = w.at(r, c).inv();
        for (size_t j = c; j < w.cols(); ++j) w.at(r, j) *= inv;
        for (size_t i = 0; i < w.rows(); ++i) {
            if (i == r || w.at(i, c).is_zero()) continue;
            FieldElement factor = w.at(i, c);
            for (size_t j = c; j < w.cols(); ++j)
                w.at(i, j) -= factor * w.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix out(w.field(), r, w.cols());
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < w.cols(); ++j) out.at(i, j) = w.at(i, j);
    return RrefResult{std::move(out), r, std::move(pivots)};
}

Matrix nullspace_basis(const Matrix& m) {
    RrefResult rr = rref(m);
    size_t n = m.cols();
    const FieldPtr& fp = m.field();
    std::vector<bool> is_pivot(n, false);
    for (size_t c : rr.pivots) is_pivot[c] = true;
    std::vector<size_t> free_cols;
    for (size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    Matrix basis(fp, free_cols.size(), n);
    for (size_t k = 0; k < free_cols.size(); ++k) {
        size_t fc = free_cols[k];
        basis.at(k, fc) = fp->one();
        for (size_t i = 0; i < rr.rank; ++i)
            basis.at(k, rr.pivots[i]) = -rr.mat.at(i, fc);
    }
    // Rows are already independent; normalize to RREF for a canonical basis.
    return rref(basis).mat;
}

Matrix stack(const Matrix& a, const Matrix& b) {
    if (a.field().get() != b.field().get() || a.cols() != b.cols())
        throw std::invalid_argument("stack: shape or field mismatch");
    Matrix out(a.field(), a.rows() + b.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    for (size_t i = 0; i < b.rows(); ++i)
        for (size_t j = 0; j < b.cols(); ++j) out.at(a.rows() + i, j) = b.at(i, j);
    return out;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (a.field().get() != b.field().get() || a.cols() != b.rows())
        throw std::invalid_argument("mat_mul: shape or field mismatch");
    Matrix out(a.field(), a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (size_t j = 0; j < b.cols(); ++j)
                out.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return out;
}

Matrix transpose(const Matrix& m) {
    Matrix out(m.field(), m.cols(), m.rows());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) out.at(j, i) = m.at(i, j);
    return out;
}

size_t rank(const Matrix& m) { return rref(m).rank; }

bool row_space_contains(const Matrix& m, const std::vector<FieldElement>& v) {
    if (v.size() != m.cols()) throw std::invalid_argument("vector length mismatch");
    Matrix ext(m.field(), m.rows() + 1, m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) ext.at(i, j) = m.at(i, j);
    for (size_t j = 0; j < m.cols(); ++j) ext.at(m.rows(), j) = v[j];
    return rank(ext) == rank(m);
}

bool row_space_equal(const Matrix& a, const Matrix& b) {
    if (a.field().get() != b.field().get() || a.cols() != b.cols()) return false;
    return rref(a).mat == rref(b).mat;
}

FieldElement dot(const std::vector<FieldElement>& a, const std::vector<FieldElement>& b) {
    if (a.size() != b.size() || a.empty())
        throw std::invalid_argument("dot: length mismatch");
    FieldElement s = a[0].field().zero();
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

} // namespace agclcp
