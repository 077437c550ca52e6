#ifndef AGCLCP_RUNNER_HPP
#define AGCLCP_RUNNER_HPP

#include "agclcp/json_io.hpp"

namespace agclcp {

struct Budgets {
    uint64_t distance = kDefaultDistanceBudget;
    uint64_t equiv = kDefaultEquivBudget;
};

/// Fixtures for the worked constructions: the genus-1 curve
/// Y^2 Z + Y Z^2 = X^3 over GF(4) with its nine named points, and
/// y^2 + y = x^3 + x + 1 over GF(8) with its thirteen.
struct F4Fixture {
    Curve curve;
    Point O, Q;
    std::vector<Point> P; // P[1] .. P[7] in the worked ordering
};
F4Fixture f4_fixture();

struct F8Fixture {
    Curve curve;
    Point O;
    std::vector<Point> plus, minus; // index 1..6 by power of the generator
};
F8Fixture f8_fixture();

/// Reproduces the worked constructions. `which` is one of line,
/// elliptic-f4, elliptic-f8, scaled-f4, rs, all. Output is a RunReport:
/// deterministic JSON, byte-identical across runs for equal inputs.
Json cmd_examples(const std::string& which, const Budgets& budgets = {});

/// Full hypothesis checklist, LCP verdict and parameters for a
/// user-supplied pair spec.
Json cmd_check(const Json& spec, const Budgets& budgets = {});

/// [n, k, d], hull dimensions, MDS flags and the security parameter for
/// the pair defined by the spec.
Json cmd_params(const Json& spec, const Budgets& budgets = {});

/// Human-readable rendering of a report.
std::string render_text(const Json& report);

} // namespace agclcp

#endif
