#ifndef AGCLCP_CURVE_HPP
#define AGCLCP_CURVE_HPP

#include "agclcp/gf.hpp"

#include <map>
#include <vector>

namespace agclcp {

/// The projective line, or an elliptic curve y^2 + a y = x^3 + b x + c
/// in the Weierstrass shape used throughout; elliptic curves are checked
/// nonsingular at construction (discriminant -64 b^3 - 27 (a^2+4c)^2,
/// which in characteristic 2 forces a != 0).
class Curve {
public:
    enum class Kind { projective_line, elliptic };

    static Curve line(FieldPtr field);
    static Curve elliptic(FieldPtr field, FieldElement a, FieldElement b, FieldElement c);

    Kind kind() const { return kind_; }
    bool is_line() const { return kind_ == Kind::projective_line; }
    bool is_elliptic() const { return kind_ == Kind::elliptic; }
    int genus() const { return is_line() ? 0 : 1; }
    const FieldPtr& field() const { return field_; }
    FieldElement a() const { return a_; }
    FieldElement b() const { return b_; }
    FieldElement c() const { return c_; }

    bool operator==(const Curve& o) const;
    bool operator!=(const Curve& o) const { return !(*this == o); }

private:
    Curve(Kind kind, FieldPtr field, FieldElement a, FieldElement b, FieldElement c)
        : kind_(kind), field_(std::move(field)), a_(a), b_(b), c_(c) {}
    Kind kind_;
    FieldPtr field_;
    FieldElement a_, b_, c_;
};

/// A rational point in normalized projective coordinates: affine points
/// have z = 1; the elliptic point at infinity is (0:1:0) and the line's
/// is (1:0:0). Equality is coordinate equality.
struct Point {
    FieldElement x, y, z;

    bool is_infinity() const { return z.is_zero(); }
    bool operator==(const Point& o) const {
        return x.index() == o.x.index() && y.index() == o.y.index() && z.index() == o.z.index();
    }
    bool operator!=(const Point& o) const { return !(*this == o); }
    /// Infinity sorts first, then (x index, y index).
    bool operator<(const Point& o) const {
        bool ia = is_infinity(), ib = o.is_infinity();
        if (ia != ib) return ia;
        if (x.index() != o.x.index()) return x.index() < o.x.index();
        return y.index() < o.y.index();
    }
    std::string str() const;
};

Point infinity_point(const Curve& c);
Point affine_point(const Curve& c, FieldElement x, FieldElement y);
bool on_curve(const Curve& c, const Point& p);

/// All rational points: infinity first, then affine points ordered by
/// (x index, y index). Found by exhaustive enumeration.
std::vector<Point> rational_points(const Curve& c);

Point point_add(const Curve& c, const Point& p, const Point& q);
Point point_neg(const Curve& c, const Point& p);
Point scalar_mul(const Curve& c, long long r, const Point& p);
/// P ∈ E[r], i.e. [r]P = O.
bool in_torsion(const Curve& c, const Point& p, long long r);

/// Formal Z-combination of rational points; zero multiplicities are
/// never stored.
class Divisor {
public:
    explicit Divisor(Curve curve) : curve_(std::move(curve)) {}

    const Curve& curve() const { return curve_; }
    const std::map<Point, long long>& coeffs() const { return coeffs_; }

    long long mult(const Point& p) const;
    /// Adds m * p; asserts the point lies on the curve.
    Divisor& add(const Point& p, long long m);

    bool empty() const { return coeffs_.empty(); }
    std::string str() const;

    bool operator==(const Divisor& o) const;
    bool operator!=(const Divisor& o) const { return !(*this == o); }

private:
    Curve curve_;
    std::map<Point, long long> coeffs_;
};

Divisor div_add(const Divisor& a, const Divisor& b);
Divisor div_sub(const Divisor& a, const Divisor& b);
Divisor div_neg(const Divisor& a);
long long div_degree(const Divisor& a);
std::vector<Point> div_support(const Divisor& a);

/// Pointwise minimum of multiplicities over the union of supports.
Divisor div_gcd(const Divisor& a, const Divisor& b);
/// Pointwise maximum of multiplicities over the union of supports.
Divisor div_lmd(const Divisor& a, const Divisor& b);

/// Exact principality test. On the line every degree-0 divisor is
/// principal; on an elliptic curve a degree-0 divisor is principal iff
/// the group-law sum of [m_P]P is the identity.
bool is_principal(const Curve& c, const Divisor& d);

} // namespace agclcp

#endif
