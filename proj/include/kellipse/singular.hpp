#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "kellipse/curve.hpp"

namespace kellipse {

enum class SingKind { node, circular_point };

struct SingularPoint {
    std::array<std::complex<double>, 3> coords;  // projective, z = 1 when affine
    std::optional<std::array<GaussianRational, 3>> exact_coords;  // set for points at infinity
    int multiplicity = 0;
    int branches = 0;
    long long delta = 0;
    SingKind kind = SingKind::node;
    std::string provenance;
};

/// Multiplicity of the circular points [+-i : 1 : 0] on a generic k-ellipse:
/// 2^(k-1) for odd k, 2^(k-1) - C(k, k/2) for even k.
int circular_multiplicity(int k);
/// Same for the degenerate curve: half the above (k >= 2).
int circular_multiplicity_degenerate(int k);

struct CircularPointData {
    SingularPoint point;
    MultiPoly tangent_cone{VS_XZ};   // initial form in the y = 1 chart
    MultiPoly tangent_sqrt{VS_XZ};   // monic square root of the cone
    bool square_ok = false;
    bool distinct_tangents = false;
};

/// Tangent-cone analysis at [which * i : 1 : 0] (which = +1 or -1) in the
/// y = 1 chart, over exact Gaussian rationals. Throws NonGenericError when
/// the initial form is not a perfect square or tangents repeat.
CircularPointData circular_point_analysis(const CurvePoly& cp, int which);

struct InfinityFactorization {
    int power = 0;            // maximal s with (x^2+y^2)^s dividing p(x, y, 0)
    MultiPoly cofactor{VS_XY};
    bool quadratics_ok = true;  // even k: cofactor vanishes at the predicted points
    int quad_points_checked = 0;
};
InfinityFactorization infinity_line_factorization(const CurvePoly& cp);

struct PartitionIntersection {
    std::vector<int> subset;  // 0-based focus indices of the degenerate side
    CurvePoly degenerate_part;
    CurvePoly companion;
    std::vector<std::pair<std::complex<double>, std::complex<double>>> points;
    int expected = 0;
    bool shared_component = false;
};

/// All affine singularities via degenerate-j-ellipse / (k-j)-ellipse
/// intersections, one entry per focus subset J with 2 <= |J| <= k-1 in
/// colexicographic order. Resultant elimination in y, root clustering, then
/// y-matching and Newton polish on the pair of curves.
std::vector<PartitionIntersection> enumerate_affine_singularities(const EllipseConfig& cfg,
                                                                  int k_limit = 6);

struct SingularVerdict {
    bool singular;
    double residual;      // |p| at the point, on the normalized scale
    double grad_norm[3];  // |dp/dx|, |dp/dy|, |dp/dz|, normalized
    double tolerance;
};

/// Tests whether all three projective partials vanish at the point, with
/// tolerance tol * (1 + |pt|)^deg on coefficients normalized to unit scale.
SingularVerdict verify_singular(const CurvePoly& cp, const std::array<std::complex<double>, 3>& pt,
                                double tol = 1e-7);

/// True when the point is an ordinary node (nonzero discriminant of the
/// quadratic Taylor part); false for a single repeated tangent. Throws
/// NonGenericError when the whole degree-2 part vanishes.
bool classify_node(const CurvePoly& cp, std::complex<double> x, std::complex<double> y,
                   double tol = 1e-6);

/// Closed-form count of affine nodes of a generic k-ellipse (k >= 3).
long long expected_affine_count(int k);
/// Per-partition count d'_j d_(k-j) - 2 m'_j m_(k-j).
long long expected_partition_count(int j, int k);

struct Census {
    std::vector<SingularPoint> points;  // circular points first, then nodes
    std::vector<PartitionIntersection> partitions;
    std::vector<std::string> flags;     // non-generic findings, empty when clean
    int affine_node_count = 0;
};

/// Full singularity census with verification; non-generic findings are
/// collected as flags rather than thrown.
Census build_census(const CurvePoly& cp, int k_limit = 6);

}  // namespace kellipse
