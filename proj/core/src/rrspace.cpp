#include "agclcp/rrspace.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace agclcp {

namespace {

// ---------------------------------------------------------------------
// Univariate helpers: little-endian coefficient vectors, trimmed.
// ---------------------------------------------------------------------

using Uni = std::vector<FieldElement>;

void uni_trim(Uni& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

int uni_deg(const Uni& a) { return (int)a.size() - 1; }

Uni uni_add(const Uni& a, const Uni& b) {
    Uni r = a.size() >= b.size() ? a : b;
    const Uni& s = a.size() >= b.size() ? b : a;
    for (size_t i = 0; i < s.size(); ++i) r[i] += s[i];
    uni_trim(r);
    return r;
}

Uni uni_neg(const Uni& a) {
    Uni r = a;
    for (auto& c : r) c = -c;
    return r;
}

Uni uni_sub(const Uni& a, const Uni& b) { return uni_add(a, uni_neg(b)); }

Uni uni_mul(const Uni& a, const Uni& b) {
    if (a.empty() || b.empty()) return {};
    Uni r(a.size() + b.size() - 1, a[0].field().zero());
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    }
    uni_trim(r);
    return r;
}

Uni uni_scale(const Uni& a, const FieldElement& s) {
    if (s.is_zero()) return {};
    Uni r = a;
    for (auto& c : r) c *= s;
    return r;
}

FieldElement uni_eval(const Uni& a, const FieldElement& x) {
    FieldElement s = x.field().zero();
    for (size_t i = a.size(); i-- > 0;) s = s * x + a[i];
    return s;
}

// Quotient and remainder; b nonzero.
std::pair<Uni, Uni> uni_divmod(Uni a, const Uni& b) {
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    const Field* f = b[0].field_ptr();
    uni_trim(a);
    if (uni_deg(a) < uni_deg(b)) return {Uni{}, a};
    Uni q(a.size() - b.size() + 1, FieldElement(f, 0));
    FieldElement lead_inv = b.back().inv();
    while (uni_deg(a) >= uni_deg(b)) {
        size_t shift = a.size() - b.size();
        FieldElement factor = a.back() * lead_inv;
        q[shift] = factor;
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= factor * b[i];
        uni_trim(a);
        if (a.empty()) break;
    }
    uni_trim(q);
    return {q, a};
}

Uni uni_div_exact(const Uni& a, const Uni& b) {
    auto [q, r] = uni_divmod(a, b);
    if (!r.empty()) throw std::logic_error("inexact polynomial division");
    return q;
}

Uni uni_monic(const Uni& a) {
    if (a.empty()) return a;
    return uni_scale(a, a.back().inv());
}

Uni uni_gcd(Uni a, Uni b) {
    uni_trim(a);
    uni_trim(b);
    while (!b.empty()) {
        Uni r = uni_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return uni_monic(a);
}

// ---------------------------------------------------------------------
// Power series of a fixed length L: coefficients of t^0 .. t^{L-1},
// exact modulo t^L.
// ---------------------------------------------------------------------

using PS = std::vector<FieldElement>;

PS ps_zero(const Field* f, size_t L) { return PS(L, FieldElement(f, 0)); }

PS ps_add(const PS& a, const PS& b) {
    PS r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

PS ps_scale(const PS& a, const FieldElement& s) {
    PS r = a;
    for (auto& c : r) c *= s;
    return r;
}

PS ps_mul(const PS& a, const PS& b) {
    const size_t L = a.size();
    PS r = ps_zero(a.empty() ? nullptr : a[0].field_ptr(), L);
    for (size_t i = 0; i < L; ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; i + j < L; ++j)
            r[i + j] += a[i] * b[j];
    }
    return r;
}

// Multiply by t^k (k >= 0).
PS ps_shift(const PS& a, size_t k) {
    PS r = ps_zero(a[0].field_ptr(), a.size());
    for (size_t i = 0; i + k < a.size(); ++i) r[i + k] = a[i];
    return r;
}

// Inverse of a unit power series (a[0] != 0).
PS ps_inv(const PS& a) {
    const size_t L = a.size();
    PS r = ps_zero(a[0].field_ptr(), L);
    FieldElement inv0 = a[0].inv();
    r[0] = inv0;
    for (size_t n = 1; n < L; ++n) {
        FieldElement s = a[0].field().zero();
        for (size_t i = 1; i <= n; ++i) s += a[i] * r[n - i];
        r[n] = -s * inv0;
    }
    return r;
}

size_t ps_first_nonzero(const PS& a) {
    for (size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero()) return i;
    return a.size();
}

// ---------------------------------------------------------------------
// Local coordinates: series for x and y in the canonical uniformizer.
// ---------------------------------------------------------------------

struct LocalCoords {
    LocalExpansion::Uniformizer tag;
    // Affine points: xs, ys are plain power series for x(t), y(t).
    // Infinity: x = t^{-2} u and y = t^{-3} u share one unit series u
    // (elliptic), and x = t^{-1} on the line.
    PS xs, ys;
    PS unit; // infinity only
};

LocalCoords local_coords(const Curve& cv, const Point& p, size_t L) {
    const Field* f = cv.field().get();
    auto scalar = [&](long long n) { return FieldElement(f, f->scalar_idx(n)); };
    LocalCoords lc;

    if (cv.is_line()) {
        if (p.is_infinity()) {
            lc.tag = LocalExpansion::Uniformizer::inv_x;
            lc.unit = ps_zero(f, L);
            lc.unit[0] = f->one(); // t * x = 1 exactly
        } else {
            lc.tag = LocalExpansion::Uniformizer::x_shift;
            lc.xs = ps_zero(f, L);
            lc.xs[0] = p.x;
            if (L > 1) lc.xs[1] = f->one();
        }
        return lc;
    }

    if (p.is_infinity()) {
        lc.tag = LocalExpansion::Uniformizer::x_over_y;
        // Solve w = t^3 + b t w^2 + c w^3 - a w^2 for w = 1/y; each pass
        // gains at least three correct orders.
        size_t LL = L + 6;
        PS w = ps_zero(f, LL);
        if (LL > 3) w[3] = f->one();
        PS t3 = ps_zero(f, LL);
        if (LL > 3) t3[3] = f->one();
        for (size_t pass = 0; pass < LL / 3 + 2; ++pass) {
            PS w2 = ps_mul(w, w);
            PS w3 = ps_mul(w2, w);
            PS rhs = t3;
            rhs = ps_add(rhs, ps_shift(ps_scale(w2, cv.b()), 1));
            rhs = ps_add(rhs, ps_scale(w3, cv.c()));
            rhs = ps_add(rhs, ps_scale(w2, -cv.a()));
            w = rhs;
        }
        // w = t^3 * u with u a unit; x = t^{-2}/u', y = t^{-3}/u' for u' = ...
        PS u(w.begin() + 3, w.begin() + 3 + L);
        if (u[0].is_zero()) throw std::logic_error("degenerate expansion at infinity");
        lc.unit = ps_inv(u); // y = t^{-3} * unit, x = t^{-2} * unit
        return lc;
    }

    FieldElement dFdy = scalar(2) * p.y + cv.a();
    if (!dFdy.is_zero()) {
        lc.tag = LocalExpansion::Uniformizer::x_shift;
        lc.xs = ps_zero(f, L);
        lc.xs[0] = p.x;
        if (L > 1) lc.xs[1] = f->one();
        lc.ys = ps_zero(f, L);
        lc.ys[0] = p.y;
        FieldElement dinv = dFdy.inv();
        for (size_t k = 1; k < L; ++k) {
            PS x2 = ps_mul(lc.xs, lc.xs);
            PS x3 = ps_mul(x2, lc.xs);
            PS e = ps_add(ps_mul(lc.ys, lc.ys), ps_scale(lc.ys, cv.a()));
            e = ps_add(e, ps_scale(x3, -f->one()));
            e = ps_add(e, ps_scale(lc.xs, -cv.b()));
            e[0] -= cv.c();
            lc.ys[k] = -e[k] * dinv;
        }
    } else {
        FieldElement dFdx = scalar(3) * p.x * p.x + cv.b();
        if (dFdx.is_zero()) throw std::logic_error("singular point in expansion");
        lc.tag = LocalExpansion::Uniformizer::y_shift;
        lc.ys = ps_zero(f, L);
        lc.ys[0] = p.y;
        if (L > 1) lc.ys[1] = f->one();
        lc.xs = ps_zero(f, L);
        lc.xs[0] = p.x;
        FieldElement dinv = dFdx.inv();
        for (size_t k = 1; k < L; ++k) {
            PS x2 = ps_mul(lc.xs, lc.xs);
            PS x3 = ps_mul(x2, lc.xs);
            PS e = ps_add(ps_mul(lc.ys, lc.ys), ps_scale(lc.ys, cv.a()));
            e = ps_add(e, ps_scale(x3, -f->one()));
            e = ps_add(e, ps_scale(lc.xs, -cv.b()));
            e[0] -= cv.c();
            lc.xs[k] = e[k] * dinv;
        }
    }
    return lc;
}

// Largest pole order the polynomial can have at the infinity place.
long long pole_bound(const BivarPoly& g) {
    long long b = 0;
    if (g.curve().is_line()) {
        b = uni_deg(g.p0());
    } else {
        if (!g.p0().empty()) b = std::max(b, 2LL * uni_deg(g.p0()));
        if (!g.p1().empty()) b = std::max(b, 2LL * uni_deg(g.p1()) + 3);
    }
    return b;
}

// Expansion of a nonzero polynomial at p: pair (lo, series), exact for
// exponents lo .. lo+L-1.
std::pair<long long, PS> poly_expand(const BivarPoly& g, const Point& p, size_t L) {
    const Curve& cv = g.curve();
    const Field* f = cv.field().get();
    LocalCoords lc = local_coords(cv, p, L);

    if (!p.is_infinity()) {
        PS s0 = ps_zero(f, L);
        for (size_t i = g.p0().size(); i-- > 0;) {
            s0 = ps_mul(s0, lc.xs);
            s0[0] += g.p0()[i];
        }
        if (g.p1().empty()) return {0, s0};
        PS s1 = ps_zero(f, L);
        for (size_t i = g.p1().size(); i-- > 0;) {
            s1 = ps_mul(s1, lc.xs);
            s1[0] += g.p1()[i];
        }
        return {0, ps_add(s0, ps_mul(s1, lc.ys))};
    }

    long long b = pole_bound(g);
    PS res = ps_zero(f, L);
    if (cv.is_line()) {
        for (size_t i = 0; i < g.p0().size(); ++i) {
            size_t e = (size_t)(b - (long long)i);
            if (e < L) res[e] += g.p0()[i];
        }
        return {-b, res};
    }
    // x^i y^j = t^{-(2i+3j)} * unit^{i+j}
    PS upow = ps_zero(f, L);
    upow[0] = f->one();
    for (size_t i = 0; i < std::max(g.p0().size(), g.p1().size()); ++i) {
        if (i < g.p0().size() && !g.p0()[i].is_zero()) {
            long long e = b - 2 * (long long)i;
            if (e < (long long)L) res = ps_add(res, ps_shift(ps_scale(upow, g.p0()[i]), (size_t)e));
        }
        if (i < g.p1().size() && !g.p1()[i].is_zero()) {
            PS term = ps_mul(upow, lc.unit);
            long long e = b - (2 * (long long)i + 3);
            if (e < (long long)L) res = ps_add(res, ps_shift(ps_scale(term, g.p1()[i]), (size_t)e));
        }
        upow = ps_mul(upow, lc.unit);
    }
    return {-b, res};
}

long long poly_valuation(const BivarPoly& g, const Point& p) {
    if (g.is_zero()) throw std::domain_error("valuation of the zero polynomial");
    if (p.is_infinity()) {
        if (g.curve().is_line()) return -(long long)uni_deg(g.p0());
        // pole orders of the monomials are pairwise distinct, so the
        // smallest valuation survives with no cancellation
        long long b = -1;
        for (size_t i = 0; i < g.p0().size(); ++i)
            if (!g.p0()[i].is_zero()) b = std::max(b, 2 * (long long)i);
        for (size_t i = 0; i < g.p1().size(); ++i)
            if (!g.p1()[i].is_zero()) b = std::max(b, 2 * (long long)i + 3);
        return -b;
    }
    if (!g.eval_affine(p.x, p.y).is_zero()) return 0;
    size_t L = (size_t)pole_bound(g) + 2;
    auto [lo, ps] = poly_expand(g, p, L);
    size_t k = ps_first_nonzero(ps);
    if (k == ps.size()) throw std::logic_error("polynomial vanishes beyond its pole bound");
    return lo + (long long)k;
}

} // namespace

// ---------------------------------------------------------------------
// BivarPoly
// ---------------------------------------------------------------------

BivarPoly::BivarPoly(Curve curve) : curve_(std::move(curve)) {}

BivarPoly::BivarPoly(Curve curve, std::vector<FieldElement> p0, std::vector<FieldElement> p1)
    : curve_(std::move(curve)), p0_(std::move(p0)), p1_(std::move(p1)) {
    if (curve_.is_line() && !p1_.empty())
        throw std::invalid_argument("no y coordinate on the projective line");
    uni_trim(p0_);
    uni_trim(p1_);
}

BivarPoly BivarPoly::zero(const Curve& c) { return BivarPoly(c); }

BivarPoly BivarPoly::constant(const Curve& c, const FieldElement& e) {
    BivarPoly r(c);
    if (!e.is_zero()) r.p0_ = {e};
    return r;
}

BivarPoly BivarPoly::x(const Curve& c) {
    BivarPoly r(c);
    r.p0_ = {c.field()->zero(), c.field()->one()};
    return r;
}

BivarPoly BivarPoly::y(const Curve& c) {
    if (c.is_line()) throw std::invalid_argument("no y coordinate on the projective line");
    BivarPoly r(c);
    r.p1_ = {c.field()->one()};
    return r;
}

BivarPoly BivarPoly::operator+(const BivarPoly& o) const {
    if (curve_ != o.curve_) throw std::invalid_argument("polynomials on different curves");
    BivarPoly r(curve_);
    r.p0_ = uni_add(p0_, o.p0_);
    r.p1_ = uni_add(p1_, o.p1_);
    return r;
}

BivarPoly BivarPoly::operator-() const {
    BivarPoly r(curve_);
    r.p0_ = uni_neg(p0_);
    r.p1_ = uni_neg(p1_);
    return r;
}

BivarPoly BivarPoly::operator-(const BivarPoly& o) const { return *this + (-o); }

BivarPoly BivarPoly::operator*(const BivarPoly& o) const {
    if (curve_ != o.curve_) throw std::invalid_argument("polynomials on different curves");
    BivarPoly r(curve_);
    Uni a0b0 = uni_mul(p0_, o.p0_);
    Uni cross = uni_add(uni_mul(p0_, o.p1_), uni_mul(p1_, o.p0_));
    Uni a1b1 = uni_mul(p1_, o.p1_);
    if (a1b1.empty()) {
        r.p0_ = a0b0;
        r.p1_ = cross;
        return r;
    }
    // reduce y^2 = x^3 + b x + c - a y
    const Field* f = curve_.field().get();
    Uni rhs = {curve_.c(), curve_.b(), f->zero(), f->one()};
    uni_trim(rhs);
    r.p0_ = uni_add(a0b0, uni_mul(a1b1, rhs));
    r.p1_ = uni_sub(cross, uni_scale(a1b1, curve_.a()));
    return r;
}

BivarPoly BivarPoly::scaled(const FieldElement& s) const {
    BivarPoly r(curve_);
    r.p0_ = uni_scale(p0_, s);
    r.p1_ = uni_scale(p1_, s);
    return r;
}

bool BivarPoly::operator==(const BivarPoly& o) const {
    if (curve_ != o.curve_ || p0_.size() != o.p0_.size() || p1_.size() != o.p1_.size())
        return false;
    for (size_t i = 0; i < p0_.size(); ++i)
        if (p0_[i].index() != o.p0_[i].index()) return false;
    for (size_t i = 0; i < p1_.size(); ++i)
        if (p1_[i].index() != o.p1_[i].index()) return false;
    return true;
}

FieldElement BivarPoly::eval_affine(const FieldElement& x, const FieldElement& y) const {
    return uni_eval(p0_, x) + uni_eval(p1_, x) * y;
}

std::map<std::pair<int, int>, FieldElement> BivarPoly::coeff_map() const {
    std::map<std::pair<int, int>, FieldElement> m;
    for (size_t i = 0; i < p0_.size(); ++i)
        if (!p0_[i].is_zero()) m[{(int)i, 0}] = p0_[i];
    for (size_t i = 0; i < p1_.size(); ++i)
        if (!p1_[i].is_zero()) m[{(int)i, 1}] = p1_[i];
    return m;
}

std::string BivarPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    auto term = [&](const FieldElement& c, int i, int j) {
        if (!first) os << " + ";
        first = false;
        std::vector<std::string> parts;
        if (!c.is_one() || (i == 0 && j == 0)) parts.push_back(c.str());
        if (i > 0) parts.push_back(i > 1 ? "x^" + std::to_string(i) : "x");
        if (j > 0) parts.push_back("y");
        for (size_t k = 0; k < parts.size(); ++k) os << (k ? "*" : "") << parts[k];
    };
    for (size_t i = 0; i < p0_.size(); ++i)
        if (!p0_[i].is_zero()) term(p0_[i], (int)i, 0);
    for (size_t i = 0; i < p1_.size(); ++i)
        if (!p1_[i].is_zero()) term(p1_[i], (int)i, 1);
    return os.str();
}

// ---------------------------------------------------------------------
// CurveFunction
// ---------------------------------------------------------------------

CurveFunction CurveFunction::zero(const Curve& c) {
    return CurveFunction(BivarPoly::zero(c), BivarPoly::constant(c, c.field()->one()));
}

CurveFunction CurveFunction::one(const Curve& c) {
    return constant(c, c.field()->one());
}

CurveFunction CurveFunction::constant(const Curve& c, const FieldElement& e) {
    return from_fraction(BivarPoly::constant(c, e), BivarPoly::constant(c, c.field()->one()));
}

CurveFunction CurveFunction::x(const Curve& c) {
    return from_fraction(BivarPoly::x(c), BivarPoly::constant(c, c.field()->one()));
}

CurveFunction CurveFunction::y(const Curve& c) {
    return from_fraction(BivarPoly::y(c), BivarPoly::constant(c, c.field()->one()));
}

CurveFunction CurveFunction::from_fraction(BivarPoly num, BivarPoly den) {
    if (num.curve() != den.curve())
        throw std::invalid_argument("numerator and denominator on different curves");
    if (den.is_zero()) throw std::domain_error("zero denominator");
    const Curve& cv = num.curve();
    const Field* f = cv.field().get();
    if (num.is_zero())
        return CurveFunction(BivarPoly::zero(cv), BivarPoly::constant(cv, f->one()));

    // Rationalize: multiply by the y-conjugate so the denominator is a
    // univariate polynomial in x.
    if (!den.p1().empty()) {
        BivarPoly conj(cv, uni_sub(den.p0(), uni_scale(den.p1(), cv.a())), uni_neg(den.p1()));
        num = num * conj;
        den = den * conj;
        if (!den.p1().empty()) throw std::logic_error("rationalization failed");
    }

    Uni d = den.p0();
    Uni content = uni_gcd(uni_gcd(num.p0(), num.p1()), d);
    if (uni_deg(content) > 0) {
        Uni n0 = num.p0().empty() ? Uni{} : uni_div_exact(num.p0(), content);
        Uni n1 = num.p1().empty() ? Uni{} : uni_div_exact(num.p1(), content);
        num = BivarPoly(cv, n0, n1);
        d = uni_div_exact(d, content);
    }
    FieldElement lead = d.back();
    if (!lead.is_one()) {
        FieldElement inv = lead.inv();
        d = uni_scale(d, inv);
        num = num.scaled(inv);
    }
    return CurveFunction(std::move(num), BivarPoly(cv, d, {}));
}

CurveFunction CurveFunction::operator+(const CurveFunction& o) const {
    return from_fraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

CurveFunction CurveFunction::operator-() const {
    return CurveFunction(-num_, den_);
}

CurveFunction CurveFunction::operator-(const CurveFunction& o) const { return *this + (-o); }

CurveFunction CurveFunction::operator*(const CurveFunction& o) const {
    return from_fraction(num_ * o.num_, den_ * o.den_);
}

CurveFunction CurveFunction::operator/(const CurveFunction& o) const {
    if (o.is_zero()) throw std::domain_error("division by the zero function");
    return from_fraction(num_ * o.den_, den_ * o.num_);
}

bool CurveFunction::operator==(const CurveFunction& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

std::string CurveFunction::str() const {
    if (is_zero()) return "0";
    std::string n = num_.str();
    if (den_.p0().size() == 1 && den_.p0()[0].is_one()) return n;
    return "(" + n + ")/(" + den_.str() + ")";
}

// ---------------------------------------------------------------------
// Evaluation, valuation, expansion
// ---------------------------------------------------------------------

long long valuation(const CurveFunction& f, const Point& p) {
    if (f.is_zero()) throw std::domain_error("valuation of the zero function");
    if (!on_curve(f.curve(), p)) throw std::invalid_argument("point not on the curve");
    return poly_valuation(f.num(), p) - poly_valuation(f.den(), p);
}

LocalExpansion local_expand(const CurveFunction& f, const Point& p, long long order) {
    if (order <= 0) throw std::invalid_argument("expansion order must be positive");
    if (f.is_zero()) throw std::domain_error("expansion of the zero function");
    if (!on_curve(f.curve(), p)) throw std::invalid_argument("point not on the curve");

    size_t L = (size_t)order + (size_t)pole_bound(f.num()) + (size_t)pole_bound(f.den()) + 6;
    auto [lo_n, pn] = poly_expand(f.num(), p, L);
    auto [lo_d, pd] = poly_expand(f.den(), p, L);
    size_t kn = ps_first_nonzero(pn);
    size_t kd = ps_first_nonzero(pd);
    if (kn == pn.size() || kd == pd.size())
        throw std::logic_error("expansion vanished beyond its pole bound");

    PS un(pn.begin() + kn, pn.end());
    PS ud(pd.begin() + kd, pd.end());
    un.resize(std::min(un.size(), ud.size()));
    ud.resize(un.size());
    PS q = ps_mul(un, ps_inv(ud));

    LocalExpansion e;
    e.point = p;
    e.tag = local_coords(f.curve(), p, 1).tag;
    e.valuation = (lo_n + (long long)kn) - (lo_d + (long long)kd);
    e.order = order;
    e.coeffs.assign(q.begin(), q.begin() + std::min((size_t)order, q.size()));
    e.coeffs.resize((size_t)order, f.curve().field()->zero());
    return e;
}

FieldElement evaluate(const CurveFunction& f, const Point& p) {
    const Field* fld = f.curve().field().get();
    if (f.is_zero()) return fld->zero();
    if (!on_curve(f.curve(), p)) throw std::invalid_argument("point not on the curve");
    if (!p.is_infinity()) {
        FieldElement dv = f.den().eval_affine(p.x, p.y);
        if (!dv.is_zero()) return f.num().eval_affine(p.x, p.y) / dv;
    }
    long long v = valuation(f, p);
    if (v < 0)
        throw std::domain_error("pole at " + p.str());
    if (v > 0) return fld->zero();
    return local_expand(f, p, 1).coeffs[0];
}

// ---------------------------------------------------------------------
// Riemann-Roch bases
// ---------------------------------------------------------------------

namespace {

std::vector<CurveFunction> rr_basis_line(const Curve& cv, const Divisor& g) {
    const Field* f = cv.field().get();
    long long jmax = div_degree(g);
    if (jmax < 0) return {};

    Uni above = {f->one()}; // forces zeros at negative-multiplicity points
    Uni below = {f->one()}; // poles allowed at positive-multiplicity points
    for (const auto& [p, m] : g.coeffs()) {
        if (p.is_infinity()) continue;
        Uni lin = {-p.x, f->one()};
        for (long long i = 0; i < (m > 0 ? m : -m); ++i) {
            if (m > 0) below = uni_mul(below, lin);
            else above = uni_mul(above, lin);
        }
    }
    std::vector<CurveFunction> basis;
    Uni xpow = {f->one()};
    for (long long j = 0; j <= jmax; ++j) {
        basis.push_back(CurveFunction::from_fraction(
            BivarPoly(cv, uni_mul(xpow, above), {}), BivarPoly(cv, below, {})));
        xpow.insert(xpow.begin(), f->zero());
    }
    return basis;
}

std::vector<CurveFunction> rr_basis_elliptic(const Curve& cv, const Divisor& g) {
    const Field* f = cv.field().get();
    const Point O = infinity_point(cv);

    // Denominator: vertical lines through the affine positive part.
    Uni h = {f->one()};
    long long affine_pos = 0;
    for (const auto& [p, m] : g.coeffs()) {
        if (p.is_infinity() || m <= 0) continue;
        Uni lin = {-p.x, f->one()};
        for (long long i = 0; i < m; ++i) h = uni_mul(h, lin);
        affine_pos += m;
    }
    BivarPoly hp(cv, h, {});

    long long mO = g.mult(O);
    long long N = std::max(mO, 0LL) + 2 * affine_pos;
    long long allowed = N - std::max(-mO, 0LL);
    if (allowed < 0) return {};

    // Ambient monomials x^i and x^i y by increasing pole order 2i, 2i+3.
    std::vector<std::pair<int, int>> monos;
    for (long long i = 0; 2 * i <= allowed; ++i) monos.push_back({(int)i, 0});
    for (long long i = 0; 2 * i + 3 <= allowed; ++i) monos.push_back({(int)i, 1});
    std::sort(monos.begin(), monos.end(), [](auto a, auto b) {
        return 2 * a.first + 3 * a.second < 2 * b.first + 3 * b.second;
    });

    std::set<Point> cond_points;
    for (const auto& [p, m] : g.coeffs())
        if (!p.is_infinity()) cond_points.insert(p);
    for (const auto& [p, m] : g.coeffs())
        if (!p.is_infinity() && m > 0) {
            cond_points.insert(p);
            cond_points.insert(point_neg(cv, p));
        }

    std::vector<std::vector<FieldElement>> rows;
    for (const Point& q : cond_points) {
        long long vh = poly_valuation(hp, q);
        long long need = vh - g.mult(q);
        if (need <= 0) continue;
        LocalCoords lc = local_coords(cv, q, (size_t)need);
        // expansion of every monomial at q, first `need` coefficients
        std::vector<PS> mexp(monos.size());
        PS xpow = ps_zero(f, (size_t)need);
        xpow[0] = f->one();
        std::map<int, PS> xpows;
        int maxi = 0;
        for (auto [i, j] : monos) maxi = std::max(maxi, i);
        for (int i = 0; i <= maxi; ++i) {
            xpows[i] = xpow;
            xpow = ps_mul(xpow, lc.xs);
        }
        for (size_t k = 0; k < monos.size(); ++k) {
            auto [i, j] = monos[k];
            mexp[k] = j ? ps_mul(xpows[i], lc.ys) : xpows[i];
        }
        for (long long t = 0; t < need; ++t) {
            std::vector<FieldElement> row;
            row.reserve(monos.size());
            for (size_t k = 0; k < monos.size(); ++k) row.push_back(mexp[k][(size_t)t]);
            rows.push_back(std::move(row));
        }
    }

    Matrix cond(cv.field(), rows.size(), monos.size());
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < monos.size(); ++c) cond.at(r, c) = rows[r][c];
    Matrix kernel = nullspace_basis(cond);

    std::vector<CurveFunction> basis;
    for (size_t r = 0; r < kernel.rows(); ++r) {
        Uni g0, g1;
        for (size_t c = 0; c < monos.size(); ++c) {
            const FieldElement& coef = kernel.at(r, c);
            if (coef.is_zero()) continue;
            auto [i, j] = monos[c];
            Uni& target = j ? g1 : g0;
            if ((size_t)i >= target.size()) target.resize(i + 1, f->zero());
            target[i] = coef;
        }
        basis.push_back(CurveFunction::from_fraction(BivarPoly(cv, g0, g1), hp));
    }
    return basis;
}

} // namespace

std::vector<CurveFunction> rr_basis(const Curve& c, const Divisor& g) {
    if (g.curve() != c) throw std::invalid_argument("divisor is not on this curve");
    if (g.empty()) return {CurveFunction::one(c)};
    return c.is_line() ? rr_basis_line(c, g) : rr_basis_elliptic(c, g);
}

long long ell(const Curve& c, const Divisor& g) {
    return (long long)rr_basis(c, g).size();
}

long long index_of_speciality(const Curve& c, const Divisor& g) {
    return ell(c, g) - div_degree(g) - 1 + c.genus();
}

bool is_nonspecial(const Curve& c, const Divisor& g) {
    return index_of_speciality(c, g) == 0;
}

Divisor principal_divisor(const Curve& c, const CurveFunction& f) {
    if (f.is_zero()) throw std::domain_error("divisor of the zero function");
    Divisor d(c);
    for (const Point& p : rational_points(c)) {
        long long v = valuation(f, p);
        if (v != 0) d.add(p, v);
    }
    if (div_degree(d) != 0)
        throw std::domain_error("function has zeros or poles at non-rational places");
    return d;
}

Matrix function_coeff_matrix(const Curve& c, const std::vector<CurveFunction>& fs) {
    std::vector<BivarPoly> cleared;
    cleared.reserve(fs.size());
    for (size_t i = 0; i < fs.size(); ++i) {
        if (fs[i].curve() != c) throw std::invalid_argument("function on a different curve");
        BivarPoly acc = fs[i].num();
        for (size_t j = 0; j < fs.size(); ++j)
            if (j != i) acc = acc * fs[j].den();
        cleared.push_back(acc);
    }
    std::set<std::pair<int, int>> monoset;
    for (const auto& p : cleared)
        for (const auto& [mono, coef] : p.coeff_map()) monoset.insert(mono);
    std::vector<std::pair<int, int>> monos(monoset.begin(), monoset.end());

    Matrix m(c.field(), cleared.size(), std::max<size_t>(monos.size(), 1));
    for (size_t r = 0; r < cleared.size(); ++r) {
        auto cm = cleared[r].coeff_map();
        for (size_t k = 0; k < monos.size(); ++k) {
            auto it = cm.find(monos[k]);
            if (it != cm.end()) m.at(r, k) = it->second;
        }
    }
    return m;
}

} // namespace agclcp
