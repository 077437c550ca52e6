#ifndef AGCLCP_RRSPACE_HPP
#define AGCLCP_RRSPACE_HPP

#include "agclcp/curve.hpp"
#include "agclcp/linalg.hpp"

#include <map>
#include <utility>
#include <vector>

namespace agclcp {

/// Polynomial on the curve, reduced modulo the curve equation so the
/// y-degree is at most 1: p0(x) + p1(x) y. On the projective line the
/// y part is identically zero.
class BivarPoly {
public:
    explicit BivarPoly(Curve curve);
    BivarPoly(Curve curve, std::vector<FieldElement> p0, std::vector<FieldElement> p1);

    static BivarPoly zero(const Curve& c);
    static BivarPoly constant(const Curve& c, const FieldElement& e);
    static BivarPoly x(const Curve& c);
    static BivarPoly y(const Curve& c);

    const Curve& curve() const { return curve_; }
    const std::vector<FieldElement>& p0() const { return p0_; }
    const std::vector<FieldElement>& p1() const { return p1_; }
    bool is_zero() const { return p0_.empty() && p1_.empty(); }
    bool is_univariate() const { return p1_.empty(); }

    BivarPoly operator+(const BivarPoly& o) const;
    BivarPoly operator-(const BivarPoly& o) const;
    BivarPoly operator-() const;
    BivarPoly operator*(const BivarPoly& o) const; // reduces y^2 via the curve
    BivarPoly scaled(const FieldElement& s) const;

    bool operator==(const BivarPoly& o) const;
    bool operator!=(const BivarPoly& o) const { return !(*this == o); }

    FieldElement eval_affine(const FieldElement& x, const FieldElement& y) const;
    /// Coefficients keyed by (i, j) exponents, j <= 1.
    std::map<std::pair<int, int>, FieldElement> coeff_map() const;

    std::string str() const;

private:
    Curve curve_;
    std::vector<FieldElement> p0_, p1_; // little-endian in x, trimmed
};

/// An element of the function field, kept as a reduced fraction: the
/// denominator is rationalized to a monic univariate polynomial in x and
/// common univariate content is cancelled. The zero function is num = 0,
/// den = 1.
class CurveFunction {
public:
    static CurveFunction zero(const Curve& c);
    static CurveFunction one(const Curve& c);
    static CurveFunction constant(const Curve& c, const FieldElement& e);
    static CurveFunction x(const Curve& c);
    static CurveFunction y(const Curve& c);
    static CurveFunction from_fraction(BivarPoly num, BivarPoly den);

    const Curve& curve() const { return num_.curve(); }
    const BivarPoly& num() const { return num_; }
    const BivarPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    CurveFunction operator+(const CurveFunction& o) const;
    CurveFunction operator-(const CurveFunction& o) const;
    CurveFunction operator-() const;
    CurveFunction operator*(const CurveFunction& o) const;
    CurveFunction operator/(const CurveFunction& o) const;

    /// Equality as functions (cross-multiplied).
    bool operator==(const CurveFunction& o) const;
    bool operator!=(const CurveFunction& o) const { return !(*this == o); }

    std::string str() const;

private:
    CurveFunction(BivarPoly num, BivarPoly den)
        : num_(std::move(num)), den_(std::move(den)) {}
    BivarPoly num_, den_;
};

struct LocalExpansion {
    enum class Uniformizer { x_shift, y_shift, x_over_y, inv_x };
    Point point;
    Uniformizer tag;
    long long valuation;                // index of the leading coefficient
    std::vector<FieldElement> coeffs;   // c_v, c_{v+1}, ..., `order` terms
    long long order;
};

/// Value of f at p; requires v_p(f) >= 0. Where numerator and
/// denominator both vanish the value is the ratio of leading local
/// expansion coefficients.
FieldElement evaluate(const CurveFunction& f, const Point& p);

/// Exact discrete valuation v_p(f); f must be nonzero. At the elliptic
/// infinity point the valuation of a reduced polynomial is
/// -max(2i + 3j) over its monomials.
long long valuation(const CurveFunction& f, const Point& p);

/// Power series expansion of f in the canonical uniformizer at p:
/// t = x - x_p where the y-partial 2y + a is nonzero, t = y - y_p
/// otherwise, t = x/y at elliptic infinity and t = 1/x at the line's.
LocalExpansion local_expand(const CurveFunction& f, const Point& p, long long order);

/// Basis of the Riemann-Roch space L(G), deterministic (RREF-normalized
/// coordinates over the ambient monomial space).
std::vector<CurveFunction> rr_basis(const Curve& c, const Divisor& g);

long long ell(const Curve& c, const Divisor& g);
/// i(G) = l(G) - deg(G) - 1 + genus.
long long index_of_speciality(const Curve& c, const Divisor& g);
bool is_nonspecial(const Curve& c, const Divisor& g);

/// Divisor of a nonzero function, summed over rational points only;
/// throws if the valuations do not sum to zero (the function would have
/// zeros or poles at non-rational places).
Divisor principal_divisor(const Curve& c, const CurveFunction& f);

/// Rows = coefficient vectors of the given functions after clearing
/// denominators to a common one; rank equals the dimension of their
/// span in the function field.
Matrix function_coeff_matrix(const Curve& c, const std::vector<CurveFunction>& fs);

} // namespace agclcp

#endif
