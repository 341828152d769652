#pragma once

#include <optional>

#include "kellipse/singular.hpp"

namespace kellipse {

/// C(d-1, 2) - sum of delta invariants over the census. Throws
/// NonGenericError when the result is negative (incomplete census or
/// non-generic configuration).
long long genus_noether(int degree, const std::vector<SingularPoint>& census);

/// (k-2) 2^(k-2) + 1 for odd k >= 3, (k-2) 2^(k-2) - C(k-1, k/2) + 1 for
/// even k; 0 for k <= 2.
long long genus_closed_form(int k);

/// 2 (g + d - 1) - sum (m_P - r_P): nodes contribute 0, each circular point
/// m_P / 2.
long long dual_degree_plucker(long long genus, int degree, const std::vector<SingularPoint>& census);

/// (k+1) 2^(k-1) for odd k, minus 2 C(k, k/2) for even k.
long long dual_degree_closed_form(int k);

struct CircularSummary {
    int which = 0;  // +1 or -1
    int multiplicity = 0;
    int branches = 0;
    long long delta = 0;
    bool square_ok = false;
    bool distinct_tangents = false;
};

struct CurveReport {
    EllipseConfig config;
    int k = 0;
    int degree = 0;
    int degree_formula = 0;
    bool degree_match = false;

    int affine_node_count = 0;
    long long affine_expected = 0;
    bool count_match = false;

    std::vector<CircularSummary> circular;
    std::vector<SingularPoint> census;
    std::vector<std::string> flags;

    std::optional<long long> genus_census;
    long long genus_formula = 0;
    bool genus_match = false;

    std::optional<long long> dual_degree_census;
    long long dual_degree_formula = 0;
    bool dual_match = false;

    /// The four quantitative cross-checks; `flags` may carry additional
    /// diagnostics about fine structure at infinity without failing these.
    bool all_match() const { return degree_match && count_match && genus_match && dual_match; }
};

/// Full pipeline: polynomial, census, genus and dual degree both ways.
/// Non-generic findings land in `flags`; the call does not throw on them.
CurveReport build_report(const EllipseConfig& cfg, int k_limit = 6);

}  // namespace kellipse
