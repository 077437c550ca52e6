#include "agclcp/curve.hpp"

#include <sstream>
#include <stdexcept>

namespace agclcp {

Curve Curve::line(FieldPtr field) {
    FieldElement z = field->zero();
    return Curve(Kind::projective_line, std::move(field), z, z, z);
}

Curve Curve::elliptic(FieldPtr field, FieldElement a, FieldElement b, FieldElement c) {
    if (a.field_ptr() != field.get() || b.field_ptr() != field.get() || c.field_ptr() != field.get())
        throw std::invalid_argument("curve coefficients must live in the curve's field");
    auto scalar = [&](long long n) { return FieldElement(field.get(), field->scalar_idx(n)); };
    FieldElement disc = scalar(-64) * b.pow(3) - scalar(27) * (a * a + scalar(4) * c).pow(2);
    if (disc.is_zero())
        throw std::invalid_argument("singular curve: discriminant vanishes");
    return Curve(Kind::elliptic, std::move(field), a, b, c);
}

bool Curve::operator==(const Curve& o) const {
    return kind_ == o.kind_ && field_.get() == o.field_.get() &&
           a_.index() == o.a_.index() && b_.index() == o.b_.index() && c_.index() == o.c_.index();
}

std::string Point::str() const {
    return "(" + x.str() + ":" + y.str() + ":" + z.str() + ")";
}

Point infinity_point(const Curve& c) {
    const Field* f = c.field().get();
    if (c.is_line()) return Point{f->one(), f->zero(), f->zero()};
    return Point{f->zero(), f->one(), f->zero()};
}

Point affine_point(const Curve& c, FieldElement x, FieldElement y) {
    Point p{x, y, c.field()->one()};
    if (!on_curve(c, p))
        throw std::invalid_argument("point " + p.str() + " is not on the curve");
    return p;
}

bool on_curve(const Curve& c, const Point& p) {
    if (p.is_infinity()) return p == infinity_point(c);
    if (!p.z.is_one()) return false;
    if (c.is_line()) return p.y.is_zero();
    FieldElement lhs = p.y * p.y + c.a() * p.y;
    FieldElement rhs = p.x * p.x * p.x + c.b() * p.x + c.c();
    return lhs == rhs;
}

std::vector<Point> rational_points(const Curve& c) {
    const Field* f = c.field().get();
    std::vector<Point> pts;
    pts.push_back(infinity_point(c));
    if (c.is_line()) {
        for (auto x : f->elements()) pts.push_back(Point{x, f->zero(), f->one()});
        return pts;
    }
    for (auto x : f->elements()) {
        FieldElement rhs = x * x * x + c.b() * x + c.c();
        for (auto y : f->elements())
            if (y * y + c.a() * y == rhs) pts.push_back(Point{x, y, f->one()});
    }
    return pts;
}

Point point_neg(const Curve& c, const Point& p) {
    if (!c.is_elliptic()) throw std::invalid_argument("group law requires an elliptic curve");
    if (p.is_infinity()) return p;
    return Point{p.x, -p.y - c.a(), p.z};
}

Point point_add(const Curve& c, const Point& p, const Point& q) {
    if (!c.is_elliptic()) throw std::invalid_argument("group law requires an elliptic curve");
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;
    if (q == point_neg(c, p)) return infinity_point(c);

    const Field* f = c.field().get();
    auto scalar = [&](long long n) { return FieldElement(f, f->scalar_idx(n)); };
    FieldElement lambda = f->zero();
    if (p.x == q.x) {
        // tangent; the denominator 2y + a is nonzero since q != -p
        lambda = (scalar(3) * p.x * p.x + c.b()) / (scalar(2) * p.y + c.a());
    } else {
        lambda = (q.y - p.y) / (q.x - p.x);
    }
    FieldElement nu = p.y - lambda * p.x;
    FieldElement x3 = lambda * lambda - p.x - q.x;
    FieldElement y3 = -(lambda * x3 + nu) - c.a();
    return Point{x3, y3, f->one()};
}

Point scalar_mul(const Curve& c, long long r, const Point& p) {
    if (!c.is_elliptic()) throw std::invalid_argument("group law requires an elliptic curve");
    Point base = p;
    if (r < 0) { base = point_neg(c, p); r = -r; }
    Point acc = infinity_point(c);
    while (r) {
        if (r & 1) acc = point_add(c, acc, base);
        base = point_add(c, base, base);
        r >>= 1;
    }
    return acc;
}

bool in_torsion(const Curve& c, const Point& p, long long r) {
    if (r < 1) throw std::invalid_argument("torsion order must be >= 1");
    return scalar_mul(c, r, p).is_infinity();
}

long long Divisor::mult(const Point& p) const {
    auto it = coeffs_.find(p);
    return it == coeffs_.end() ? 0 : it->second;
}

Divisor& Divisor::add(const Point& p, long long m) {
    if (!on_curve(curve_, p))
        throw std::invalid_argument("divisor point " + p.str() + " is not on the curve");
    if (m == 0) return *this;
    auto it = coeffs_.find(p);
    if (it == coeffs_.end()) {
        coeffs_.emplace(p, m);
    } else {
        it->second += m;
        if (it->second == 0) coeffs_.erase(it);
    }
    return *this;
}

bool Divisor::operator==(const Divisor& o) const {
    if (curve_ != o.curve_ || coeffs_.size() != o.coeffs_.size()) return false;
    auto it = coeffs_.begin();
    auto jt = o.coeffs_.begin();
    for (; it != coeffs_.end(); ++it, ++jt)
        if (it->first != jt->first || it->second != jt->second) return false;
    return true;
}

std::string Divisor::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, m] : coeffs_) {
        if (!first) os << (m > 0 ? " + " : " - ");
        else if (m < 0) os << "-";
        long long am = m > 0 ? m : -m;
        if (am != 1) os << am << "*";
        os << p.str();
        first = false;
    }
    return os.str();
}

namespace {

void require_same_curve(const Divisor& a, const Divisor& b) {
    if (a.curve() != b.curve())
        throw std::invalid_argument("divisors live on different curves");
}

} // namespace

Divisor div_add(const Divisor& a, const Divisor& b) {
    require_same_curve(a, b);
    Divisor r = a;
    for (const auto& [p, m] : b.coeffs()) r.add(p, m);
    return r;
}

Divisor div_sub(const Divisor& a, const Divisor& b) {
    require_same_curve(a, b);
    Divisor r = a;
    for (const auto& [p, m] : b.coeffs()) r.add(p, -m);
    return r;
}

Divisor div_neg(const Divisor& a) {
    Divisor r(a.curve());
    for (const auto& [p, m] : a.coeffs()) r.add(p, -m);
    return r;
}

long long div_degree(const Divisor& a) {
    long long d = 0;
    for (const auto& [p, m] : a.coeffs()) d += m;
    return d;
}

std::vector<Point> div_support(const Divisor& a) {
    std::vector<Point> s;
    for (const auto& [p, m] : a.coeffs()) s.push_back(p);
    return s;
}

Divisor div_gcd(const Divisor& a, const Divisor& b) {
    require_same_curve(a, b);
    Divisor r(a.curve());
    for (const auto& [p, m] : a.coeffs())
        r.add(p, std::min(m, b.mult(p)));
    for (const auto& [p, m] : b.coeffs())
        if (a.mult(p) == 0) r.add(p, std::min((long long)0, m));
    return r;
}

Divisor div_lmd(const Divisor& a, const Divisor& b) {
    require_same_curve(a, b);
    Divisor r(a.curve());
    for (const auto& [p, m] : a.coeffs())
        r.add(p, std::max(m, b.mult(p)));
    for (const auto& [p, m] : b.coeffs())
        if (a.mult(p) == 0) r.add(p, std::max((long long)0, m));
    return r;
}

bool is_principal(const Curve& c, const Divisor& d) {
    if (d.curve() != c) throw std::invalid_argument("divisor is not on this curve");
    if (div_degree(d) != 0) return false;
    if (c.is_line()) return true;
    Point sum = infinity_point(c);
    for (const auto& [p, m] : d.coeffs())
        sum = point_add(c, sum, scalar_mul(c, m, p));
    return sum.is_infinity();
}

} // namespace agclcp
