#include "agclcp/runner.hpp"

#include <sstream>

namespace agclcp {

namespace {

Json duality_to_json(const DualityEvidence& ev) {
    Json j{{"verdict", ev.verdict},
           {"same_parameters", ev.same_parameters},
           {"same_weight_enumerator", ev.same_weight_enumerator}};
    if (ev.both_mds)
        j["both_mds"] = *ev.both_mds;
    switch (ev.equivalence.kind) {
        case EquivalenceVerdict::Kind::equivalent: j["equivalence"] = "equivalent"; break;
        case EquivalenceVerdict::Kind::refuted: j["equivalence"] = "refuted"; break;
        case EquivalenceVerdict::Kind::unknown: j["equivalence"] = "unknown"; break;
    }
    j["equivalence_reason"] = ev.equivalence.reason;
    return j;
}

Json line_examples(const Budgets& budgets) {
    Json entries = Json::array();
    for (int q : {5, 7, 8}) {
        FieldPtr f = q == 8 ? Field::make(2, 3) : Field::make(q, 1);
        Curve cv = Curve::line(f);
        Point O = infinity_point(cv);
        Point Q = affine_point(cv, f->zero(), f->zero());
        std::vector<Point> D;
        for (const Point& p : rational_points(cv))
            if (!p.is_infinity() && !p.x.is_zero()) D.push_back(p);

        for (int s = 1; 2 * s <= q - 2; ++s) {
            Divisor G(cv), H(cv);
            G.add(O, q - s - 2).add(Q, -(s + 1));
            H.add(O, s).add(Q, s);
            AgCodeSpec specG(cv, G, D), specH(cv, H, D);
            LcpReport rep = check_genus0_lcp(specG, specH, budgets.distance);
            Json entry{{"name", "line q=" + std::to_string(q) + " s=" + std::to_string(s)},
                       {"label", "worked-example"},
                       {"spec", pair_spec_to_json(PairSpec{cv, G, H, D})},
                       {"report", lcp_report_to_json(rep)},
                       {"C", code_params_to_json(evaluation_code(specG), budgets.distance)},
                       {"H", code_params_to_json(evaluation_code(specH), budgets.distance)}};
            if (rep.is_lcp)
                entry["duality"] = duality_to_json(
                    duality_evidence(specG, specH, budgets.equiv, budgets.distance));
            entries.push_back(std::move(entry));
        }
    }
    return entries;
}

Json elliptic_f4_examples(const Budgets& budgets) {
    F4Fixture fx = f4_fixture();
    Divisor G(fx.curve), H(fx.curve);
    G.add(fx.O, 6).add(fx.Q, -2);
    H.add(fx.O, 2).add(fx.Q, 1);
    std::vector<Point> D(fx.P.begin() + 1, fx.P.end());
    AgCodeSpec specG(fx.curve, G, D), specH(fx.curve, H, D);
    LcpReport rep = check_genus1_lcp(specG, specH, budgets.distance);

    Json entries = Json::array();
    entries.push_back(Json{
        {"name", "elliptic-f4 G=6O-2Q H=2O+Q"},
        {"label", "worked-example"},
        {"spec", pair_spec_to_json(PairSpec{fx.curve, G, H, D})},
        {"report", lcp_report_to_json(rep)},
        {"C", code_params_to_json(evaluation_code(specG), budgets.distance)},
        {"H", code_params_to_json(evaluation_code(specH), budgets.distance)}});
    return entries;
}

Json elliptic_f8_examples(const Budgets& budgets) {
    F8Fixture fx = f8_fixture();
    const Field* f = fx.curve.field().get();
    FieldElement w = f->generator();
    std::vector<FieldElement> alphas;
    for (int i = 2; i <= 6; ++i) alphas.push_back(w.pow(i));

    Json entries = Json::array();
    EllipticLcpResult derived =
        construct_elliptic_lcp(fx.curve, w, 4, 5, alphas, budgets.distance);
    entries.push_back(Json{
        {"name", "elliptic-f8 r=4 s=5 H=6O-4P1-"},
        {"label", "theorem-derived"},
        {"spec", pair_spec_to_json(PairSpec{fx.curve, derived.specG.G, derived.specH.G, derived.specG.D})},
        {"report", lcp_report_to_json(derived.report)},
        {"C", code_params_to_json(evaluation_code(derived.specG), budgets.distance)},
        {"H", code_params_to_json(evaluation_code(derived.specH), budgets.distance)},
        {"notes", Json::array({"the worked example states s = 6 although D ranges over 5 conjugate pairs"})}});

    // Literal divisor H = 8O - 4P1^- as printed in the worked example.
    Divisor Hlit(fx.curve);
    Hlit.add(fx.O, 8).add(fx.minus[1], -4);
    AgCodeSpec specHlit(fx.curve, Hlit, derived.specG.D);
    LcpReport lit = check_genus1_lcp(derived.specG, specHlit, budgets.distance);
    entries.push_back(Json{
        {"name", "elliptic-f8 r=4 s=5 H=8O-4P1- (literal)"},
        {"label", "literal"},
        {"spec", pair_spec_to_json(PairSpec{fx.curve, derived.specG.G, Hlit, derived.specG.D})},
        {"report", lcp_report_to_json(lit)},
        {"C", code_params_to_json(evaluation_code(derived.specG), budgets.distance)},
        {"H", code_params_to_json(evaluation_code(specHlit), budgets.distance)},
        {"notes", Json::array({"l(G)+l(H) = 8+4 = 12 differs from n = 10; the dimension hypothesis fails"})}});
    return entries;
}

Json scaled_f4_examples(const Budgets& budgets) {
    F4Fixture fx = f4_fixture();
    const Field* f = fx.curve.field().get();
    Divisor G(fx.curve);
    G.add(fx.O, 2).add(fx.Q, 1);
    std::vector<Point> D(fx.P.begin() + 2, fx.P.end()); // P2 .. P7
    AgCodeSpec spec(fx.curve, G, D);

    // The printed basis {1, X/Z, (Y+Z)/X} and the two printed matrices.
    CurveFunction one = CurveFunction::one(fx.curve);
    CurveFunction x = CurveFunction::x(fx.curve);
    CurveFunction y1_over_x = (CurveFunction::y(fx.curve) + one) / x;
    std::vector<CurveFunction> printed_basis = {one, x, y1_over_x};

    Matrix basis_matrix(fx.curve.field(), 3, D.size());
    for (size_t i = 0; i < printed_basis.size(); ++i)
        for (size_t j = 0; j < D.size(); ++j)
            basis_matrix.at(i, j) = evaluate(printed_basis[i], D[j]);

    auto parse_matrix = [&](const std::vector<std::vector<std::string>>& rows) {
        Matrix m(fx.curve.field(), rows.size(), rows[0].size());
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < rows[i].size(); ++j)
                m.at(i, j) = f->parse(rows[i][j]);
        return m;
    };
    Matrix printed_m1 = parse_matrix({{"1", "1", "1", "1", "1", "1"},
                                    {"w", "w", "w^2", "w^2", "1", "1"},
                                    {"w", "1", "1", "w^2", "w^2", "w"}});
    Matrix printed_m2 = parse_matrix({{"1", "0", "0", "1", "w", "w^2"},
                                    {"w", "0", "0", "w^2", "w", "w^2"},
                                    {"w^2", "0", "0", "w^2", "1", "1"}});

    CurveFunction h = x + CurveFunction::y(fx.curve) + one;
    ScaledPairResult scaled = construct_scaled_pair(spec, h, budgets.distance);

    // Recompute the scaled matrix from the printed basis rows.
    Matrix recomputed_m2 = basis_matrix;
    for (size_t i = 0; i < recomputed_m2.rows(); ++i)
        for (size_t j = 0; j < recomputed_m2.cols(); ++j)
            recomputed_m2.at(i, j) = basis_matrix.at(i, j) * scaled.a[j];

    LinearCode c = evaluation_code(spec);
    size_t hull = hull_dimension(c);

    Json avec = Json::array();
    for (const auto& e : scaled.a) avec.push_back(e.str());

    Json mismatches = Json::array();
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 6; ++j)
            if (recomputed_m2.at(i, j) != printed_m2.at(i, j))
                mismatches.push_back(Json{{"row", i + 1},
                                          {"col", j + 1},
                                          {"printed", printed_m2.at(i, j).str()},
                                          {"recomputed", recomputed_m2.at(i, j).str()}});

    Json entry{
        {"name", "scaled-f4 G=2O+Q h=x+y+1"},
        {"label", "worked-example"},
        {"report", lcp_report_to_json(scaled.report)},
        {"a", avec},
        {"a_matches_printed", scaled.a == std::vector<FieldElement>{f->parse("1"), f->parse("0"),
                                                                    f->parse("0"), f->parse("1"),
                                                                    f->parse("w"), f->parse("w^2")}},
        {"printed_generator_matrix_row_space_matches",
         row_space_equal(evaluation_matrix(spec), printed_m1)},
        {"printed_basis_matches_entrywise", basis_matrix == printed_m1},
        {"hull_dimension_C", hull},
        {"printed_self_dual_claim_holds", hull == c.dim()},
        {"scaled_matrix_mismatches_vs_printed", mismatches},
        {"C", code_params_to_json(c, budgets.distance)},
        {"notes", Json::array(
            {"the worked example calls C_L(D,G) self-dual; the computed hull dimension decides the claim",
             "the printed scaled matrix is cross-checked entrywise; mismatches are listed"})}};
    return Json::array({std::move(entry)});
}

Json rs_examples(const Budgets& budgets) {
    FieldPtr f = Field::make(5, 1);
    Curve cv = Curve::line(f);
    Point O = infinity_point(cv);
    std::vector<Point> D;
    for (uint32_t i = 0; i < 4; ++i) D.push_back(affine_point(cv, f->element(i), f->zero()));

    Divisor G(cv);
    G.add(O, 1); // RS_2 = C_L(D, (k-1)O), k = 2
    // h(X) = prod (X - alpha_i) has h' = 4 (X - 4)^3 here, so the dual is
    // C_L(D, (h') + (n-k-1) O) = C_L(D, 3 P_4 - 2 O).
    Divisor H(cv);
    H.add(O, -2).add(affine_point(cv, f->element(4), f->zero()), 3);

    AgCodeSpec specG(cv, G, D), specH(cv, H, D);
    LinearCode rs2 = evaluation_code(specG);
    LinearCode rs2h = evaluation_code(specH);
    bool dual_realized = rs2h == dual(rs2);

    ScaledPairResult res = construct_mds_scaled_pair(specG, specH, budgets.distance);
    Json avec = Json::array();
    for (const auto& e : res.a) avec.push_back(e.str());

    Json entry{{"name", "rs q=5 n=4 k=2"},
               {"label", "worked-example"},
               {"spec", pair_spec_to_json(PairSpec{cv, G, H, D})},
               {"H_realizes_dual_of_C", dual_realized},
               {"witness_a", avec},
               {"report", lcp_report_to_json(res.report)},
               {"C", code_params_to_json(rs2, budgets.distance)},
               {"H", code_params_to_json(rs2h, budgets.distance)}};
    return Json::array({std::move(entry)});
}

} // namespace

F4Fixture f4_fixture() {
    FieldPtr f = Field::make(2, 2);
    Curve cv = Curve::elliptic(f, f->one(), f->zero(), f->zero());
    F4Fixture fx{cv, infinity_point(cv), affine_point(cv, f->zero(), f->zero()), {}};
    auto pt = [&](const char* x, const char* y) {
        return affine_point(cv, f->parse(x), f->parse(y));
    };
    fx.P = {fx.Q, // placeholder so P[i] matches the worked numbering from 1
            pt("0", "1"), pt("w", "w"), pt("w", "w^2"), pt("w^2", "w"),
            pt("w^2", "w^2"), pt("1", "w"), pt("1", "w^2")};
    return fx;
}

F8Fixture f8_fixture() {
    FieldPtr f = Field::make(2, 3);
    Curve cv = Curve::elliptic(f, f->one(), f->one(), f->one());
    F8Fixture fx{cv, infinity_point(cv), {}, {}};
    FieldElement w = f->generator();
    fx.plus.resize(7, fx.O);
    fx.minus.resize(7, fx.O);
    for (int i = 1; i <= 6; ++i) {
        FieldElement alpha = w.pow(i);
        std::vector<Point> pts;
        for (const Point& p : rational_points(cv))
            if (!p.is_infinity() && p.x == alpha) pts.push_back(p);
        if (pts.size() != 2)
            throw std::logic_error("expected two points over x = w^" + std::to_string(i));
        fx.plus[i] = pts[0];
        fx.minus[i] = pts[1];
    }
    return fx;
}

Json cmd_examples(const std::string& which, const Budgets& budgets) {
    Json entries = Json::array();
    auto append = [&](Json more) {
        for (auto& e : more) entries.push_back(std::move(e));
    };
    bool all = which == "all";
    if (all || which == "line") append(line_examples(budgets));
    if (all || which == "elliptic-f4") append(elliptic_f4_examples(budgets));
    if (all || which == "elliptic-f8") append(elliptic_f8_examples(budgets));
    if (all || which == "scaled-f4") append(scaled_f4_examples(budgets));
    if (all || which == "rs") append(rs_examples(budgets));
    if (entries.empty() && !all)
        throw std::invalid_argument(
            "unknown example \"" + which +
            "\"; expected line, elliptic-f4, elliptic-f8, scaled-f4, rs or all");
    return Json{{"command", "examples"}, {"which", which}, {"entries", std::move(entries)}};
}

Json cmd_check(const Json& spec, const Budgets& budgets) {
    PairSpec ps = pair_spec_from_json(spec);
    AgCodeSpec specG = ps.spec_G();
    AgCodeSpec specH = ps.spec_H();
    LcpReport rep = ps.curve.is_line() ? check_genus0_lcp(specG, specH, budgets.distance)
                                       : check_genus1_lcp(specG, specH, budgets.distance);
    return Json{{"command", "check"},
                {"input", pair_spec_to_json(ps)},
                {"report", lcp_report_to_json(rep)},
                {"C", code_params_to_json(evaluation_code(specG), budgets.distance)},
                {"H", code_params_to_json(evaluation_code(specH), budgets.distance)}};
}

Json cmd_params(const Json& spec, const Budgets& budgets) {
    PairSpec ps = pair_spec_from_json(spec);
    LinearCode c = evaluation_code(ps.spec_G());
    LinearCode d = evaluation_code(ps.spec_H());
    bool lcp = is_lcp_pair(c, d);
    Json j{{"command", "params"},
           {"is_lcp", lcp},
           {"C", code_params_to_json(c, budgets.distance)},
           {"D", code_params_to_json(d, budgets.distance)},
           {"C_dual", code_params_to_json(dual(c), budgets.distance)},
           {"D_dual", code_params_to_json(dual(d), budgets.distance)}};
    if (lcp) {
        try {
            j["security_parameter"] = security_parameter(c, d, budgets.distance);
        } catch (const BudgetExceeded&) {
            j["security_parameter"] = nullptr;
            j["note"] = "security parameter not computed: distance budget exceeded";
        } catch (const std::domain_error&) {
            j["security_parameter"] = nullptr;
            j["note"] = "security parameter undefined for a dimension-0 component";
        }
    } else {
        j["security_parameter"] = nullptr;
    }
    return j;
}

namespace {

void render_value(const Json& v, const std::string& indent, std::ostringstream& os);

void render_object(const Json& v, const std::string& indent, std::ostringstream& os) {
    for (auto it = v.begin(); it != v.end(); ++it) {
        os << indent << it.key() << ":";
        if (it.value().is_object() || (it.value().is_array() && !it.value().empty() &&
                                       (it.value()[0].is_object() || it.value()[0].is_array()))) {
            os << "\n";
            render_value(it.value(), indent + "  ", os);
        } else {
            os << " ";
            render_value(it.value(), "", os);
        }
    }
}

void render_value(const Json& v, const std::string& indent, std::ostringstream& os) {
    if (v.is_object()) {
        render_object(v, indent, os);
    } else if (v.is_array()) {
        bool scalars = true;
        for (const auto& e : v)
            if (e.is_object() || e.is_array()) scalars = false;
        if (scalars) {
            os << indent << v.dump() << "\n";
        } else {
            for (size_t i = 0; i < v.size(); ++i) {
                os << indent << "-\n";
                render_value(v[i], indent + "  ", os);
            }
        }
    } else {
        os << v.dump() << "\n";
    }
}

} // namespace

std::string render_text(const Json& report) {
    std::ostringstream os;
    render_value(report, "", os);
    return os.str();
}

} // namespace agclcp
