#ifndef AGCLCP_JSON_IO_HPP
#define AGCLCP_JSON_IO_HPP

#include "agclcp/agcode.hpp"

#include <json.hpp>

namespace agclcp {

/// Reports use insertion-ordered JSON so identical inputs serialize to
/// identical bytes.
using Json = nlohmann::ordered_json;

// {"p": 2, "m": 2, "modulus": [1, 1, 1]} (little-endian coefficients;
// modulus may be omitted on input when the table has an entry)
Json field_to_json(const Field& f);
FieldPtr field_from_json(const Json& j);

// Elements serialize to their canonical string; input accepts the string
// forms or an integer index.
Json element_to_json(const FieldElement& e);
FieldElement element_from_json(const Json& j, const Field& f);

// {"rows": r, "cols": c, "entries": [[...], ...]}
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, FieldPtr field);

// {"field": {...}, "gen": matrix}; the generator matrix is the
// canonical RREF form
Json code_to_json(const LinearCode& c);
LinearCode code_from_json(const Json& j);

// {"kind": "elliptic", "field": {...}, "a": ..., "b": ..., "c": ...} or
// {"kind": "line", "field": {...}}
Json curve_to_json(const Curve& c);
Curve curve_from_json(const Json& j);

// ["x", "y", "z"]
Json point_to_json(const Point& p);
Point point_from_json(const Json& j, const Curve& c);

// [{"point": ["x","y","z"], "mult": -2}, ...]
Json divisor_to_json(const Divisor& d);
Divisor divisor_from_json(const Json& j, const Curve& c);

// {"num": {"i,j": "coeff", ...}, "den": {...}} with j <= 1
Json function_to_json(const CurveFunction& f);
CurveFunction function_from_json(const Json& j, const Curve& c);

/// A pair-construction spec: {"curve": ..., "G": divisor, "H": divisor,
/// "D": [points] | "auto"}. "auto" takes every rational point outside
/// supp(G) ∪ supp(H), in canonical order.
struct PairSpec {
    Curve curve;
    Divisor G;
    Divisor H;
    std::vector<Point> D;

    AgCodeSpec spec_G() const { return AgCodeSpec(curve, G, D); }
    AgCodeSpec spec_H() const { return AgCodeSpec(curve, H, D); }
};

PairSpec pair_spec_from_json(const Json& j);
Json pair_spec_to_json(const PairSpec& s);

Json lcp_report_to_json(const LcpReport& rep);

/// n, k, d, hull dimension, MDS flag and weight enumerator; quantities
/// beyond the distance budget or undefined for k = 0 are null, with the
/// reason recorded.
Json code_params_to_json(const LinearCode& c, uint64_t distance_budget);

} // namespace agclcp

#endif
