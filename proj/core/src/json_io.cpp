#include "agclcp/json_io.hpp"

#include <algorithm>
#include <set>

namespace agclcp {

Json field_to_json(const Field& f) {
    return Json{{"p", f.p()}, {"m", f.m()}, {"modulus", f.modulus()}};
}

FieldPtr field_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("m"))
        throw std::invalid_argument("field: expected {\"p\", \"m\", [\"modulus\"]}");
    int p = j.at("p").get<int>();
    int m = j.at("m").get<int>();
    if (j.contains("modulus"))
        return Field::make(p, m, j.at("modulus").get<std::vector<int>>());
    return Field::make(p, m);
}

Json element_to_json(const FieldElement& e) { return e.str(); }

FieldElement element_from_json(const Json& j, const Field& f) {
    if (j.is_number_integer()) return f.element(j.get<uint32_t>());
    if (j.is_string()) return f.parse(j.get<std::string>());
    throw std::invalid_argument("element: expected a string form or an integer index");
}

Json matrix_to_json(const Matrix& m) {
    Json entries = Json::array();
    for (size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (size_t c = 0; c < m.cols(); ++c) row.push_back(element_to_json(m.at(r, c)));
        entries.push_back(std::move(row));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Matrix matrix_from_json(const Json& j, FieldPtr field) {
    size_t rows = j.at("rows").get<size_t>();
    size_t cols = j.at("cols").get<size_t>();
    const Json& entries = j.at("entries");
    if (entries.size() != rows) throw std::invalid_argument("matrix: row count mismatch");
    std::vector<FieldElement> a;
    a.reserve(rows * cols);
    for (const auto& row : entries) {
        if (row.size() != cols) throw std::invalid_argument("matrix: column count mismatch");
        for (const auto& e : row) a.push_back(element_from_json(e, *field));
    }
    return Matrix(std::move(field), rows, cols, std::move(a));
}

Json code_to_json(const LinearCode& c) {
    return Json{{"field", field_to_json(*c.field())}, {"gen", matrix_to_json(c.gen())}};
}

LinearCode code_from_json(const Json& j) {
    FieldPtr f = field_from_json(j.at("field"));
    return LinearCode::from_rows(matrix_from_json(j.at("gen"), f));
}

Json curve_to_json(const Curve& c) {
    Json j;
    j["kind"] = c.is_line() ? "line" : "elliptic";
    j["field"] = field_to_json(*c.field());
    if (c.is_elliptic()) {
        j["a"] = element_to_json(c.a());
        j["b"] = element_to_json(c.b());
        j["c"] = element_to_json(c.c());
    }
    return j;
}

Curve curve_from_json(const Json& j) {
    FieldPtr f = field_from_json(j.at("field"));
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "line") return Curve::line(f);
    if (kind == "elliptic")
        return Curve::elliptic(f, element_from_json(j.at("a"), *f),
                               element_from_json(j.at("b"), *f),
                               element_from_json(j.at("c"), *f));
    throw std::invalid_argument("curve: kind must be \"line\" or \"elliptic\"");
}

Json point_to_json(const Point& p) {
    return Json::array({element_to_json(p.x), element_to_json(p.y), element_to_json(p.z)});
}

Point point_from_json(const Json& j, const Curve& c) {
    if (!j.is_array() || j.size() != 3)
        throw std::invalid_argument("point: expected [\"x\",\"y\",\"z\"]");
    const Field& f = *c.field();
    Point p{element_from_json(j[0], f), element_from_json(j[1], f), element_from_json(j[2], f)};
    if (p.is_infinity()) {
        if (p != infinity_point(c))
            throw std::invalid_argument("point " + p.str() + " is not the normalized infinity point");
        return p;
    }
    if (!p.z.is_one())
        throw std::invalid_argument("point " + p.str() + ": affine points must have z = 1");
    return affine_point(c, p.x, p.y);
}

Json divisor_to_json(const Divisor& d) {
    Json j = Json::array();
    for (const auto& [p, m] : d.coeffs())
        j.push_back(Json{{"point", point_to_json(p)}, {"mult", m}});
    return j;
}

Divisor divisor_from_json(const Json& j, const Curve& c) {
    if (!j.is_array()) throw std::invalid_argument("divisor: expected an array");
    Divisor d(c);
    for (const auto& item : j)
        d.add(point_from_json(item.at("point"), c), item.at("mult").get<long long>());
    return d;
}

namespace {

Json poly_to_json(const BivarPoly& p) {
    Json j = Json::object();
    for (const auto& [mono, coef] : p.coeff_map()) {
        std::string key = std::to_string(mono.first) + "," + std::to_string(mono.second);
        j[key] = element_to_json(coef);
    }
    return j;
}

BivarPoly poly_from_json(const Json& j, const Curve& c) {
    const Field* f = c.field().get();
    std::vector<FieldElement> p0, p1;
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& key = it.key();
        size_t comma = key.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("polynomial: keys must be \"i,j\"");
        int i = std::stoi(key.substr(0, comma));
        int jj = std::stoi(key.substr(comma + 1));
        if (i < 0 || jj < 0 || jj > 1)
            throw std::invalid_argument("polynomial: exponents need i >= 0 and j <= 1");
        auto& target = jj ? p1 : p0;
        if ((size_t)i >= target.size()) target.resize(i + 1, f->zero());
        target[i] = element_from_json(it.value(), *f);
    }
    return BivarPoly(c, std::move(p0), std::move(p1));
}

} // namespace

Json function_to_json(const CurveFunction& f) {
    return Json{{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}};
}

CurveFunction function_from_json(const Json& j, const Curve& c) {
    return CurveFunction::from_fraction(poly_from_json(j.at("num"), c),
                                        poly_from_json(j.at("den"), c));
}

PairSpec pair_spec_from_json(const Json& j) {
    Curve curve = curve_from_json(j.at("curve"));
    Divisor g = divisor_from_json(j.at("G"), curve);
    Divisor h = divisor_from_json(j.at("H"), curve);
    std::vector<Point> d;
    const Json& jd = j.at("D");
    if (jd.is_string() && jd.get<std::string>() == "auto") {
        for (const Point& p : rational_points(curve))
            if (g.mult(p) == 0 && h.mult(p) == 0) d.push_back(p);
    } else if (jd.is_array()) {
        for (const auto& item : jd) d.push_back(point_from_json(item, curve));
    } else {
        throw std::invalid_argument("D: expected a point list or \"auto\"");
    }
    return PairSpec{std::move(curve), std::move(g), std::move(h), std::move(d)};
}

Json pair_spec_to_json(const PairSpec& s) {
    Json d = Json::array();
    for (const Point& p : s.D) d.push_back(point_to_json(p));
    return Json{{"curve", curve_to_json(s.curve)},
                {"G", divisor_to_json(s.G)},
                {"H", divisor_to_json(s.H)},
                {"D", std::move(d)}};
}

Json lcp_report_to_json(const LcpReport& rep) {
    Json checklist = Json::array();
    for (const auto& item : rep.checklist)
        checklist.push_back(Json{{"name", item.name}, {"holds", item.holds}, {"detail", item.detail}});
    Json j{{"n", rep.n},
           {"k_C", rep.k_C},
           {"k_D", rep.k_D},
           {"is_lcp", rep.is_lcp},
           {"hypotheses_hold", rep.hypotheses_hold},
           {"checklist", std::move(checklist)}};
    if (rep.security_parameter)
        j["security_parameter"] = *rep.security_parameter;
    else
        j["security_parameter"] = nullptr;
    j["notes"] = rep.notes;
    return j;
}

Json code_params_to_json(const LinearCode& c, uint64_t distance_budget) {
    Json j{{"n", c.length()}, {"k", c.dim()}};
    if (c.dim() == 0) {
        j["d"] = nullptr;
        j["mds"] = nullptr;
        j["weight_enumerator"] = nullptr;
        j["note"] = "distance undefined for a dimension-0 code";
    } else {
        try {
            WeightEnumerator we = weight_enumerator(c, distance_budget);
            size_t d = 1;
            while (d <= c.length() && we.counts[d] == 0) ++d;
            j["d"] = d;
            j["mds"] = (d == c.length() - c.dim() + 1);
            j["weight_enumerator"] = we.counts;
        } catch (const BudgetExceeded&) {
            j["d"] = nullptr;
            j["mds"] = nullptr;
            j["weight_enumerator"] = nullptr;
            j["note"] = "not computed: distance budget exceeded";
        }
    }
    j["hull_dimension"] = hull_dimension(c);
    return j;
}

} // namespace agclcp
