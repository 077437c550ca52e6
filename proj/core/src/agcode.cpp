#include "agclcp/agcode.hpp"

#include <algorithm>
#include <sstream>

namespace agclcp {

namespace {

// Non-speciality; on an elliptic curve a degree-0 divisor is
// non-special iff it is not principal, which avoids the basis solve.
bool nonspecial(const Curve& c, const Divisor& d) {
    if (c.is_elliptic() && div_degree(d) == 0) return !is_principal(c, d);
    return is_nonspecial(c, d);
}

void note_security(LcpReport& rep, const LinearCode& c, const LinearCode& d,
                   uint64_t budget) {
    if (!rep.is_lcp) return;
    try {
        rep.security_parameter = security_parameter(c, d, budget);
    } catch (const BudgetExceeded&) {
        rep.notes.push_back("security parameter not computed: distance budget exceeded");
    } catch (const std::domain_error&) {
        rep.notes.push_back("security parameter undefined: a component has dimension 0");
    }
}

void note_implication(LcpReport& rep, const std::string& theorem) {
    rep.hypotheses_hold = std::all_of(rep.checklist.begin(), rep.checklist.end(),
                                      [](const HypothesisCheck& h) { return h.holds; });
    if (rep.hypotheses_hold && !rep.is_lcp)
        rep.notes.push_back(theorem + ": hypotheses hold but the pair is not LCP");
}

void require_shared_setting(const AgCodeSpec& a, const AgCodeSpec& b) {
    if (a.curve != b.curve) throw std::invalid_argument("specs use different curves");
    if (a.D != b.D) throw std::invalid_argument("specs use different evaluation divisors D");
}

std::string degree_window_detail(const AgCodeSpec& spec) {
    std::ostringstream os;
    os << "2g-2 < " << div_degree(spec.G) << " < " << spec.D.size();
    return os.str();
}

} // namespace

AgCodeSpec::AgCodeSpec(Curve c, Divisor g, std::vector<Point> d)
    : curve(std::move(c)), G(std::move(g)), D(std::move(d)) {
    if (G.curve() != curve) throw std::invalid_argument("divisor is not on the given curve");
    for (size_t i = 0; i < D.size(); ++i) {
        if (!on_curve(curve, D[i]))
            throw std::invalid_argument("evaluation point " + D[i].str() + " is not on the curve");
        for (size_t j = i + 1; j < D.size(); ++j)
            if (D[i] == D[j])
                throw std::invalid_argument("evaluation point " + D[i].str() + " repeats in D");
        if (G.mult(D[i]) != 0)
            throw std::invalid_argument("supp(G) meets D at " + D[i].str());
    }
}

Matrix evaluation_matrix(const AgCodeSpec& spec) {
    std::vector<CurveFunction> basis = rr_basis(spec.curve, spec.G);
    Matrix m(spec.curve.field(), basis.size(), spec.D.size());
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < spec.D.size(); ++j)
            m.at(i, j) = evaluate(basis[i], spec.D[j]);
    return m;
}

LinearCode evaluation_code(const AgCodeSpec& spec) {
    return LinearCode::from_rows(evaluation_matrix(spec));
}

LinearCode omega_code(const AgCodeSpec& spec) {
    return dual(evaluation_code(spec));
}

bool degree_window_ok(const AgCodeSpec& spec) {
    long long d = div_degree(spec.G);
    return 2 * spec.curve.genus() - 2 < d && d < (long long)spec.D.size();
}

LcpReport check_genus0_lcp(const AgCodeSpec& specG, const AgCodeSpec& specH,
                           uint64_t distance_budget) {
    require_shared_setting(specG, specH);
    if (!specG.curve.is_line())
        throw std::invalid_argument("genus-0 criterion requires the projective line");

    LinearCode c = evaluation_code(specG);
    LinearCode d = evaluation_code(specH);
    LcpReport rep;
    rep.n = specG.D.size();
    rep.k_C = c.dim();
    rep.k_D = d.dim();
    rep.is_lcp = is_lcp_pair(c, d);

    long long gcd_deg = div_degree(div_gcd(specG.G, specH.G));
    rep.checklist = {
        {"ell_sum_equals_n", rep.k_C + rep.k_D == rep.n,
         std::to_string(rep.k_C) + " + " + std::to_string(rep.k_D) + " vs n = " + std::to_string(rep.n)},
        {"degree_window_G", degree_window_ok(specG), degree_window_detail(specG)},
        {"degree_window_H", degree_window_ok(specH), degree_window_detail(specH)},
        {"gcd_degree_is_genus_minus_1", gcd_deg == -1,
         "deg gcd(G,H) = " + std::to_string(gcd_deg)},
    };
    note_implication(rep, "genus-0 criterion");
    note_security(rep, c, d, distance_budget);
    return rep;
}

LcpReport check_genus1_lcp(const AgCodeSpec& specG, const AgCodeSpec& specH,
                           uint64_t distance_budget) {
    require_shared_setting(specG, specH);
    if (!specG.curve.is_elliptic())
        throw std::invalid_argument("this criterion requires an elliptic curve");
    const Curve& cv = specG.curve;

    LinearCode c = evaluation_code(specG);
    LinearCode d = evaluation_code(specH);
    LcpReport rep;
    rep.n = specG.D.size();
    rep.k_C = c.dim();
    rep.k_D = d.dim();
    rep.is_lcp = is_lcp_pair(c, d);

    Divisor g = div_gcd(specG.G, specH.G);
    Divisor l = div_lmd(specG.G, specH.G);
    Divisor dd(cv);
    for (const Point& p : specG.D) dd.add(p, 1);
    Divisor lmd_minus_d = div_sub(l, dd);

    bool gcd_ok = div_degree(g) == 0 && nonspecial(cv, g);
    bool lmd_ok = nonspecial(cv, lmd_minus_d);
    rep.checklist = {
        {"ell_sum_equals_n", rep.k_C + rep.k_D == rep.n,
         std::to_string(rep.k_C) + " + " + std::to_string(rep.k_D) + " vs n = " + std::to_string(rep.n)},
        {"degree_window_G", degree_window_ok(specG), degree_window_detail(specG)},
        {"degree_window_H", degree_window_ok(specH), degree_window_detail(specH)},
        {"gcd_nonspecial_degree_g_minus_1", gcd_ok,
         "deg gcd = " + std::to_string(div_degree(g))},
        {"lmd_minus_D_nonspecial", lmd_ok,
         "deg(lmd - D) = " + std::to_string(div_degree(lmd_minus_d))},
    };
    note_implication(rep, "genus-1 criterion");
    note_security(rep, c, d, distance_budget);
    return rep;
}

EllipticLcpResult construct_elliptic_lcp(const Curve& curve, const FieldElement& alpha0,
                                         long long r, long long s,
                                         const std::vector<FieldElement>& alphas,
                                         uint64_t distance_budget) {
    if (!curve.is_elliptic()) throw std::invalid_argument("construction requires an elliptic curve");
    if (!curve.a().is_one())
        throw std::invalid_argument("construction requires the family E_{1,b,c} (a = 1)");
    if (!(0 < r && r < s)) throw std::invalid_argument("need 0 < r < s");

    // Group affine points by x-component; with a = 1 every component must
    // carry exactly two points.
    std::map<uint32_t, std::vector<Point>> by_x;
    for (const Point& p : rational_points(curve))
        if (!p.is_infinity()) by_x[p.x.index()].push_back(p);
    auto pair_at = [&](const FieldElement& alpha) -> std::pair<Point, Point> {
        auto it = by_x.find(alpha.index());
        if (it == by_x.end())
            throw std::invalid_argument("no affine point with x = " + alpha.str());
        if (it->second.size() != 2)
            throw std::invalid_argument("x = " + alpha.str() + " does not carry exactly two points");
        return {it->second[0], it->second[1]}; // sorted by y index: P+, P-
    };

    Point p_minus0 = pair_at(alpha0).second;
    if (in_torsion(curve, p_minus0, r))
        throw std::invalid_argument("P- over alpha0 lies in E[" + std::to_string(r) + "]");

    std::vector<FieldElement> chosen = alphas;
    if (chosen.empty()) {
        for (const auto& [xi, pts] : by_x) {
            if (xi == alpha0.index()) continue;
            if ((long long)chosen.size() == s) break;
            chosen.push_back(FieldElement(curve.field().get(), xi));
        }
    }
    if ((long long)chosen.size() != s)
        throw std::invalid_argument("not enough x-components: need s = " + std::to_string(s));
    for (const auto& alpha : chosen)
        if (alpha.index() == alpha0.index())
            throw std::invalid_argument("alpha0 cannot appear among the D components");

    std::vector<Point> D;
    for (const auto& alpha : chosen) {
        auto [pp, pm] = pair_at(alpha);
        D.push_back(pp);
        D.push_back(pm);
    }

    Point O = infinity_point(curve);
    Divisor G(curve), H(curve);
    G.add(O, r).add(p_minus0, r);
    H.add(O, 2 * s - r).add(p_minus0, -r);

    AgCodeSpec specG(curve, G, D);
    AgCodeSpec specH(curve, H, D);

    LinearCode c = evaluation_code(specG);
    LinearCode d = evaluation_code(specH);
    LcpReport rep;
    rep.n = D.size();
    rep.k_C = c.dim();
    rep.k_D = d.dim();
    rep.is_lcp = is_lcp_pair(c, d);

    Divisor g = div_gcd(G, H);
    Divisor lmd = div_lmd(G, H);
    Divisor dd(curve);
    for (const Point& p : D) dd.add(p, 1);
    Divisor lmd_minus_d = div_sub(lmd, dd);

    rep.checklist = {
        {"dimension_sum_equals_n", rep.k_C + rep.k_D == rep.n,
         std::to_string(rep.k_C) + " + " + std::to_string(rep.k_D) + " vs n = " + std::to_string(rep.n)},
        {"degree_window_G", 0 < div_degree(G) && div_degree(G) < (long long)rep.n,
         "deg G = " + std::to_string(div_degree(G))},
        {"degree_window_H", 0 < div_degree(H) && div_degree(H) < (long long)rep.n,
         "deg H = " + std::to_string(div_degree(H))},
        {"gcd_degree0_not_principal",
         div_degree(g) == 0 && !is_principal(curve, g), "gcd = " + g.str()},
        {"lmd_minus_D_not_principal", !is_principal(curve, lmd_minus_d),
         "deg(lmd - D) = " + std::to_string(div_degree(lmd_minus_d))},
        {"torsion_ok", !in_torsion(curve, p_minus0, r),
         "[" + std::to_string(r) + "]P- != O"},
        {"r_range_ok", 0 < r && r < s, "r = " + std::to_string(r) + ", s = " + std::to_string(s)},
    };
    note_implication(rep, "elliptic construction");
    note_security(rep, c, d, distance_budget);
    return EllipticLcpResult{std::move(specG), std::move(specH), std::move(rep)};
}

ScaledPairResult construct_scaled_pair(const AgCodeSpec& spec, const CurveFunction& h,
                                       uint64_t distance_budget) {
    std::vector<CurveFunction> basis = rr_basis(spec.curve, spec.G);
    LinearCode c = evaluation_code(spec);
    size_t n = spec.D.size();

    std::vector<FieldElement> a;
    a.reserve(n);
    for (const Point& p : spec.D) a.push_back(evaluate(h, p)); // pole here is a hard error

    bool all_zero = std::all_of(a.begin(), a.end(), [](const FieldElement& e) { return e.is_zero(); });
    bool all_one = std::all_of(a.begin(), a.end(), [](const FieldElement& e) { return e.is_one(); });

    // h L(G) ∩ L(G) = {0} iff the stacked coefficient vectors of the two
    // bases are independent; this covers hf ∉ L(G) for every nonzero f.
    std::vector<CurveFunction> both = basis;
    for (const auto& fi : basis) both.push_back(h * fi);
    bool shifts = rank(function_coeff_matrix(spec.curve, both)) == 2 * basis.size();

    LinearCode ac = scale(c, a);
    LcpReport rep;
    rep.n = n;
    rep.k_C = c.dim();
    rep.k_D = ac.dim();
    rep.is_lcp = is_lcp_pair(c, ac);
    rep.checklist = {
        {"length_even_dim_half", n % 2 == 0 && c.dim() == n / 2,
         "[n, k] = [" + std::to_string(n) + ", " + std::to_string(c.dim()) + "]"},
        {"degree_window", degree_window_ok(spec), degree_window_detail(spec)},
        {"h_vector_not_all_zero", !all_zero, ""},
        {"h_vector_not_all_one", !all_one, ""},
        {"h_LG_meets_LG_trivially", shifts, "h f stays outside L(G) for every nonzero f in L(G)"},
    };
    note_implication(rep, "scaled-pair construction");
    if (rep.is_lcp) note_security(rep, c, ac, distance_budget);
    return ScaledPairResult{std::move(a), std::move(rep)};
}

CurveFunction find_scaling_function(const AgCodeSpec& spec) {
    const Curve& cv = spec.curve;
    const Field* f = cv.field().get();

    auto usable = [&](const CurveFunction& h) {
        try {
            ScaledPairResult r = construct_scaled_pair(spec, h, 1);
            for (const auto& item : r.report.checklist)
                if (item.name != "length_even_dim_half" && item.name != "degree_window" &&
                    !item.holds)
                    return false;
            return true;
        } catch (const std::exception&) {
            return false; // h has a pole on D
        }
    };

    // affine lines c0 + c1 x + c2 y, then products of two of them (pole
    // order at most 6 at infinity)
    std::vector<CurveFunction> lines;
    CurveFunction X = CurveFunction::x(cv);
    std::vector<FieldElement> y_coeffs = {f->zero()};
    if (cv.is_elliptic()) y_coeffs = f->elements();
    for (auto c1 : f->elements())
        for (auto c2 : y_coeffs) {
            if (c1.is_zero() && c2.is_zero()) continue;
            for (auto c0 : f->elements()) {
                CurveFunction h =
                    CurveFunction::constant(cv, c0) + X * CurveFunction::constant(cv, c1);
                if (cv.is_elliptic())
                    h = h + CurveFunction::y(cv) * CurveFunction::constant(cv, c2);
                if (usable(h)) return h;
                lines.push_back(std::move(h));
            }
        }
    for (size_t i = 0; i < lines.size(); ++i)
        for (size_t j = i; j < lines.size(); ++j) {
            CurveFunction h = lines[i] * lines[j];
            if (usable(h)) return h;
        }
    throw std::runtime_error("no scaling function found within the bounded search");
}

ScaledPairResult construct_mds_scaled_pair(const AgCodeSpec& specG, const AgCodeSpec& specH,
                                           uint64_t distance_budget) {
    require_shared_setting(specG, specH);
    const Field* f = specG.curve.field().get();
    if (f->q() < 3) throw std::invalid_argument("construction requires q >= 3");

    LinearCode c = evaluation_code(specG);
    LinearCode ch = evaluation_code(specH);
    size_t n = specG.D.size();
    if (c.dim() + ch.dim() != n)
        throw std::invalid_argument("l(G) + l(H) must equal n");
    if (!is_mds(ch, distance_budget))
        throw std::invalid_argument("C_L(D,H) is not MDS");

    LcpReport rep;
    rep.n = n;
    rep.k_D = ch.dim();

    std::vector<FieldElement> ones(n, f->one());
    auto finish = [&](std::vector<FieldElement> a, const std::string& how) {
        LinearCode ac = scale(c, a);
        rep.k_C = ac.dim();
        rep.is_lcp = is_lcp_pair(ac, ch);
        rep.checklist.push_back({"witness_found", true, how});
        note_implication(rep, "MDS scaling construction");
        note_security(rep, ac, ch, distance_budget);
        return ScaledPairResult{std::move(a), std::move(rep)};
    };

    if (is_lcp_pair(c, ch)) return finish(ones, "codes already intersect trivially; a = 1");

    // Intersection basis via the left kernel of the stacked generators.
    Matrix stacked = stack(c.gen(), ch.gen());
    Matrix left = nullspace_basis(transpose(stacked));
    Matrix inter(c.field(), left.rows(), n);
    for (size_t r = 0; r < left.rows(); ++r)
        for (size_t j = 0; j < n; ++j) {
            FieldElement s = f->zero();
            for (size_t i = 0; i < c.dim(); ++i)
                s += left.at(r, i) * c.gen().at(i, j);
            inter.at(r, j) = s;
        }
    RrefResult ir = rref(inter);
    size_t l = ir.rank;
    const std::vector<size_t>& piv = ir.pivots;

    // Scale the intersection pivot coordinates; lambda != 1 first, then
    // the rest of F_q*.
    auto try_diagonal = [&](bool allow_one) -> std::optional<std::vector<FieldElement>> {
        std::vector<uint32_t> digits(l, 0);
        std::vector<uint32_t> values;
        for (uint32_t v = 2; v < (uint32_t)f->q(); ++v) values.push_back(v);
        if (allow_one) values.insert(values.begin(), 1);
        while (true) {
            std::vector<FieldElement> a = ones;
            bool all_one = true;
            for (size_t i = 0; i < l; ++i) {
                a[piv[i]] = f->element(values[digits[i]]);
                if (!a[piv[i]].is_one()) all_one = false;
            }
            if (!all_one && rank(stack(scale(c, a).gen(), ch.gen())) == n)
                return a;
            size_t pos = l;
            while (pos > 0 && digits[pos - 1] + 1 == values.size()) { digits[pos - 1] = 0; --pos; }
            if (pos == 0) return std::nullopt;
            ++digits[pos - 1];
        }
    };

    if (auto a = try_diagonal(false))
        return finish(std::move(*a), "diagonal search, lambda != 1");
    if (auto a = try_diagonal(true))
        return finish(std::move(*a), "diagonal search over all of F_q*");

    // Exhaustive fallback over (F_q*)^n at small sizes.
    uint64_t space = 1;
    bool small = true;
    for (size_t i = 0; i < n && small; ++i) {
        space *= (uint64_t)f->q() - 1;
        if (space > 1'000'000) small = false;
    }
    if (small) {
        std::vector<uint32_t> digits(n, 1);
        while (true) {
            std::vector<FieldElement> a;
            a.reserve(n);
            for (uint32_t d : digits) a.push_back(f->element(d));
            if (rank(stack(scale(c, a).gen(), ch.gen())) == n)
                return finish(std::move(a), "exhaustive search over (F_q*)^n");
            size_t pos = n;
            while (pos > 0 && digits[pos - 1] + 1 == (uint32_t)f->q()) { digits[pos - 1] = 1; --pos; }
            if (pos == 0) break;
            ++digits[pos - 1];
        }
    }

    rep.k_C = c.dim();
    rep.is_lcp = false;
    rep.checklist.push_back({"witness_found", false, "no witness within the search space"});
    rep.notes.push_back("no scaling witness found; the pair is reported as-is");
    note_implication(rep, "MDS scaling construction");
    return ScaledPairResult{{}, std::move(rep)};
}

DualityEvidence duality_evidence(const AgCodeSpec& specG, const AgCodeSpec& specH,
                                 uint64_t equiv_budget, uint64_t distance_budget) {
    require_shared_setting(specG, specH);
    LinearCode c = evaluation_code(specG);
    LinearCode d = evaluation_code(specH);
    if (!is_lcp_pair(c, d))
        throw std::invalid_argument("duality evidence requires a verified LCP pair");

    LinearCode cdual = dual(c);
    DualityEvidence ev;
    ev.same_parameters = cdual.length() == d.length() && cdual.dim() == d.dim() &&
                         min_distance(cdual, distance_budget) == min_distance(d, distance_budget);
    ev.same_weight_enumerator =
        weight_enumerator(cdual, distance_budget) == weight_enumerator(d, distance_budget);
    if (specG.curve.is_line())
        ev.both_mds = is_mds(cdual, distance_budget) && is_mds(d, distance_budget);

    ev.equivalence = equivalence_evidence(cdual, d, equiv_budget, distance_budget);
    if (!ev.same_parameters || !ev.same_weight_enumerator ||
        ev.equivalence.kind == EquivalenceVerdict::Kind::refuted)
        ev.verdict = "refuted";
    else if (ev.equivalence.kind == EquivalenceVerdict::Kind::equivalent)
        ev.verdict = "equivalent";
    else
        ev.verdict = "supported";
    return ev;
}

} // namespace agclcp
