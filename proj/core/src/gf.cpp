#include "agclcp/gf.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <stdexcept>

namespace agclcp {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; (long long)d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Dense little-endian polynomial over GF(p), trailing zeros trimmed.
using Poly = std::vector<int>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const Poly& a) { return (int)a.size() - 1; } // deg(0) = -1

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    trim(r);
    return r;
}

// Remainder of a mod b, b monic-normalizable (nonzero).
Poly poly_mod(Poly a, const Poly& b, int p) {
    trim(a);
    int db = deg(b);
    int lead_inv = 0;
    for (int t = 1; t < p; ++t)
        if (b[db] * t % p == 1) { lead_inv = t; break; }
    while (deg(a) >= db) {
        int shift = deg(a) - db;
        int factor = a[deg(a)] * lead_inv % p;
        for (int i = 0; i <= db; ++i) {
            int k = i + shift;
            a[k] = ((a[k] - factor * b[i]) % p + p) % p;
        }
        trim(a);
    }
    return a;
}

// Trial division by every monic polynomial of degree 1..m/2.
bool is_irreducible(const Poly& f, int p, int m) {
    for (int d = 1; 2 * d <= m; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long c = 0; c < count; ++c) {
            Poly g(d + 1, 0);
            long long v = c;
            for (int i = 0; i < d; ++i) { g[i] = (int)(v % p); v /= p; }
            g[d] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

std::vector<int> prime_factors(int n) {
    std::vector<int> fs;
    for (int d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

const std::map<std::pair<int, int>, std::vector<int>>& modulus_table() {
    static const std::map<std::pair<int, int>, std::vector<int>> table = {
        {{2, 2}, {1, 1, 1}},       // w^2 + w + 1
        {{2, 3}, {1, 1, 0, 1}},    // w^3 + w + 1
        {{3, 2}, {1, 0, 1}},       // w^2 + 1
        {{2, 4}, {1, 1, 0, 0, 1}}, // w^4 + w + 1
    };
    return table;
}

} // namespace

Field::Field(int p, int m, std::vector<int> modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)) {
    long long q = 1;
    for (int i = 0; i < m; ++i) q *= p;
    q_ = (int)q;

    // Generator: the residue class of the variable when primitive,
    // otherwise the least primitive index. GF(9) with modulus w^2+1 is
    // the one table field where the variable has order 4, not 8.
    auto order_ok = [&](uint32_t g) {
        if (q_ == 2) return g == 1u;
        if (g < 2) return false;
        for (int f : prime_factors(q_ - 1))
            if (raw_pow(g, (uint64_t)((q_ - 1) / f)) == 1) return false;
        return true;
    };
    if (q_ == 2) {
        generator_ = 1;
    } else if (m_ > 1 && order_ok((uint32_t)p_)) {
        generator_ = (uint32_t)p_; // the residue class of the variable
    } else {
        generator_ = 0;
        for (uint32_t g = 2; g < (uint32_t)q_; ++g)
            if (order_ok(g)) { generator_ = g; break; }
        if (generator_ == 0) throw std::logic_error("no primitive element found");
    }

    exp_.resize(q_ - 1);
    log_.assign(q_, 0);
    uint32_t acc = 1;
    for (int k = 0; k < q_ - 1; ++k) {
        exp_[k] = acc;
        log_[acc] = (uint32_t)k;
        acc = raw_mul(acc, generator_);
    }
    if (acc != 1) throw std::logic_error("generator order mismatch");

    if (p_ != 2 && q_ <= 1024) {
        addtab_.resize((size_t)q_ * q_);
        for (int a = 0; a < q_; ++a)
            for (int b = 0; b <= a; ++b) {
                uint32_t s = 0, mult = 1;
                int x = a, y = b;
                for (int i = 0; i < m_; ++i) {
                    s += mult * (uint32_t)((x % p_ + y % p_) % p_);
                    mult *= p_;
                    x /= p_;
                    y /= p_;
                }
                addtab_[(size_t)a * q_ + b] = s;
                addtab_[(size_t)b * q_ + a] = s;
            }
    }
}

uint32_t Field::raw_mul(uint32_t a, uint32_t b) const {
    Poly pa, pb;
    for (uint32_t x = a; x; x /= p_) pa.push_back((int)(x % p_));
    for (uint32_t x = b; x; x /= p_) pb.push_back((int)(x % p_));
    Poly r = poly_mod(poly_mul(pa, pb, p_), modulus_, p_);
    uint32_t idx = 0, mult = 1;
    for (int c : r) { idx += mult * (uint32_t)c; mult *= p_; }
    return idx;
}

uint32_t Field::raw_pow(uint32_t a, uint64_t e) const {
    uint32_t r = 1;
    while (e) {
        if (e & 1) r = raw_mul(r, a);
        a = raw_mul(a, a);
        e >>= 1;
    }
    return r;
}

FieldPtr Field::make(int p, int m) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime: " + std::to_string(p));
    if (m == 1) return make(p, 1, {0, 1});
    auto it = modulus_table().find({p, m});
    if (it == modulus_table().end())
        throw std::invalid_argument("no built-in modulus for GF(" + std::to_string(p) + "^" + std::to_string(m) + "); supply one explicitly");
    return make(p, m, it->second);
}

FieldPtr Field::make(int p, int m, const std::vector<int>& modulus) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime: " + std::to_string(p));
    if (m < 1) throw std::invalid_argument("extension degree must be >= 1");
    long long q = 1;
    for (int i = 0; i < m; ++i) {
        q *= p;
        if (q > 65536) throw std::invalid_argument("field size p^m exceeds 2^16");
    }
    std::vector<int> mod = modulus;
    for (int& c : mod) c = ((c % p) + p) % p;
    if ((int)mod.size() != m + 1 || mod[m] != 1)
        throw std::invalid_argument("modulus must be monic of degree m");
    if (m > 1 && !is_irreducible(mod, p, m))
        throw std::invalid_argument("modulus is reducible over GF(p)");

    static std::map<std::tuple<int, int, std::vector<int>>, FieldPtr> cache;
    static std::mutex cache_mutex;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto key = std::make_tuple(p, m, mod);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    FieldPtr f(new Field(p, m, mod));
    cache.emplace(key, f);
    return f;
}

FieldElement Field::zero() const { return FieldElement(this, 0); }
FieldElement Field::one() const { return FieldElement(this, 1); }
FieldElement Field::generator() const { return FieldElement(this, generator_); }

FieldElement Field::element(uint32_t index) const {
    if (index >= (uint32_t)q_) throw std::invalid_argument("element index out of range");
    return FieldElement(this, index);
}

std::vector<FieldElement> Field::elements() const {
    std::vector<FieldElement> out;
    out.reserve(q_);
    for (uint32_t i = 0; i < (uint32_t)q_; ++i) out.emplace_back(this, i);
    return out;
}

uint32_t Field::add_idx(uint32_t a, uint32_t b) const {
    if (p_ == 2) return a ^ b;
    if (!addtab_.empty()) return addtab_[(size_t)a * q_ + b];
    uint32_t s = 0, mult = 1;
    for (int i = 0; i < m_; ++i) {
        s += mult * (uint32_t)((a % p_ + b % p_) % p_);
        mult *= p_;
        a /= p_;
        b /= p_;
    }
    return s;
}

uint32_t Field::neg_idx(uint32_t a) const {
    if (p_ == 2) return a;
    uint32_t s = 0, mult = 1;
    for (int i = 0; i < m_; ++i) {
        s += mult * (uint32_t)((p_ - a % p_) % p_);
        mult *= p_;
        a /= p_;
    }
    return s;
}

uint32_t Field::sub_idx(uint32_t a, uint32_t b) const { return add_idx(a, neg_idx(b)); }

uint32_t Field::mul_idx(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    uint32_t k = log_[a] + log_[b];
    if (k >= (uint32_t)(q_ - 1)) k -= (uint32_t)(q_ - 1);
    return exp_[k];
}

uint32_t Field::inv_idx(uint32_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return exp_[(q_ - 1 - log_[a]) % (uint32_t)(q_ - 1)];
}

uint32_t Field::pow_idx(uint32_t a, long long e) const {
    if (a == 0) {
        if (e == 0) return 1;
        if (e > 0) return 0;
        throw std::domain_error("negative power of zero");
    }
    long long ord = q_ - 1;
    long long k = ((long long)log_[a] * (e % ord)) % ord;
    if (k < 0) k += ord;
    return exp_[k];
}

uint32_t Field::scalar_idx(long long n) const {
    long long r = n % p_;
    if (r < 0) r += p_;
    return (uint32_t)r;
}

uint32_t Field::log_idx(uint32_t a) const {
    if (a == 0) throw std::domain_error("log of zero");
    return log_[a];
}

FieldElement Field::parse(const std::string& text) const {
    std::string s;
    for (char c : text)
        if (!std::isspace((unsigned char)c) && c != '*') s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty field element");

    uint32_t acc = 0;
    size_t pos = 0;
    bool any = false;
    while (pos < s.size()) {
        if (s[pos] == '+') { ++pos; continue; }
        // term: [digits] ['w' ['^' digits]]
        long long coef = -1;
        size_t start = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        if (pos > start) coef = std::stoll(s.substr(start, pos - start));
        long long expo = 0;
        bool has_w = false;
        if (pos < s.size() && (s[pos] == 'w' || s[pos] == 'W')) {
            has_w = true;
            ++pos;
            expo = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                size_t es = pos;
                while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
                if (pos == es) throw std::invalid_argument("malformed exponent in: " + text);
                expo = std::stoll(s.substr(es, pos - es));
            }
        }
        if (coef < 0 && !has_w) throw std::invalid_argument("malformed field element: " + text);
        if (coef < 0) coef = 1;
        uint32_t term = scalar_idx(coef);
        if (has_w) term = mul_idx(term, pow_idx(generator_, expo));
        acc = add_idx(acc, term);
        any = true;
    }
    if (!any) throw std::invalid_argument("malformed field element: " + text);
    return FieldElement(this, acc);
}

std::string Field::to_string(const FieldElement& x) const {
    if (x.index() == 0) return "0";
    if (x.index() == 1) return "1";
    if (m_ == 1) return std::to_string(x.index());
    uint32_t k = log_[x.index()];
    if (k == 1) return "w";
    return "w^" + std::to_string(k);
}

void require_same_field(const FieldElement& a, const FieldElement& b) {
    if (a.field_ptr() != b.field_ptr())
        throw std::invalid_argument("mixed-field operands");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    require_same_field(*this, o);
    return FieldElement(field_, field_->add_idx(idx_, o.idx_));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    require_same_field(*this, o);
    return FieldElement(field_, field_->sub_idx(idx_, o.idx_));
}

FieldElement FieldElement::operator-() const {
    return FieldElement(field_, field_->neg_idx(idx_));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    require_same_field(*this, o);
    return FieldElement(field_, field_->mul_idx(idx_, o.idx_));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    require_same_field(*this, o);
    return FieldElement(field_, field_->mul_idx(idx_, field_->inv_idx(o.idx_)));
}

FieldElement FieldElement::inv() const {
    return FieldElement(field_, field_->inv_idx(idx_));
}

FieldElement FieldElement::pow(long long e) const {
    return FieldElement(field_, field_->pow_idx(idx_, e));
}

bool FieldElement::operator==(const FieldElement& o) const {
    require_same_field(*this, o);
    return idx_ == o.idx_;
}

} // namespace agclcp
