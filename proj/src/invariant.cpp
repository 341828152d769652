#include "kellipse/invariant.hpp"

#include "kellipse/combinatorics.hpp"

namespace kellipse {

long long genus_noether(int degree, const std::vector<SingularPoint>& census) {
    long long g = binomial(degree - 1, 2);
    for (const auto& p : census) g -= p.delta;
    if (g < 0) throw NonGenericError("genus_noether: negative genus (census or genericity failure)");
    return g;
}

long long genus_closed_form(int k) {
    if (k < 1) throw InvalidArgument("genus_closed_form: k must be >= 1");
    if (k <= 2) return 0;
    long long g = static_cast<long long>(k - 2) * (1LL << (k - 2)) + 1;
    if (k % 2 == 0) g -= binomial(k - 1, k / 2);
    return g;
}

long long dual_degree_plucker(long long genus, int degree, const std::vector<SingularPoint>& census) {
    long long d = 2 * (genus + degree - 1);
    for (const auto& p : census) d -= p.multiplicity - p.branches;
    return d;
}

long long dual_degree_closed_form(int k) {
    if (k < 1) throw InvalidArgument("dual_degree_closed_form: k must be >= 1");
    long long d = static_cast<long long>(k + 1) * (1LL << (k - 1));
    if (k % 2 == 0) d -= 2 * binomial(k, k / 2);
    return d;
}

CurveReport build_report(const EllipseConfig& cfg, int k_limit) {
    CurveReport report;
    report.config = cfg;
    report.k = cfg.k();

    CurvePoly cp = ellipse_polynomial(cfg, k_limit);
    DegreeCheck dc = degree_check(cp);
    report.degree = dc.computed;
    report.degree_formula = dc.formula;
    report.degree_match = dc.match;
    if (!dc.match) report.flags.push_back("degree differs from the generic formula (non-generic foci?)");

    Census census = build_census(cp, k_limit);
    report.census = census.points;
    report.flags.insert(report.flags.end(), census.flags.begin(), census.flags.end());
    report.affine_node_count = census.affine_node_count;
    report.affine_expected = report.k >= 3 ? expected_affine_count(report.k) : 0;
    report.count_match = report.affine_node_count == report.affine_expected;

    for (const auto& p : census.points) {
        if (p.kind != SingKind::circular_point) continue;
        CircularSummary s;
        s.which = p.exact_coords && (*p.exact_coords)[0].im.sign() > 0 ? +1 : -1;
        s.multiplicity = p.multiplicity;
        s.branches = p.branches;
        s.delta = p.delta;
        s.square_ok = true;
        s.distinct_tangents = true;
        report.circular.push_back(s);
    }

    report.genus_formula = genus_closed_form(report.k);
    report.dual_degree_formula = dual_degree_closed_form(report.k);
    try {
        long long g = genus_noether(report.degree, report.census);
        report.genus_census = g;
        report.genus_match = g == report.genus_formula;
        long long dd = dual_degree_plucker(g, report.degree, report.census);
        report.dual_degree_census = dd;
        report.dual_match = dd == report.dual_degree_formula;
    } catch (const Error& e) {
        report.flags.push_back(std::string("invariant computation failed: ") + e.what());
        report.genus_match = false;
        report.dual_match = false;
    }
    return report;
}

}  // namespace kellipse
