#pragma once

#include "kellipse/lmi.hpp"

namespace kellipse {

struct PolarSample {
    double theta;    // direction angle
    double h;        // support value in that direction
    double px, py;   // primal argmax on the spectrahedron boundary
    double w1, w2;   // dual point u(theta) / h
};

/// Samples the boundary of the polar set in n uniformly spaced directions.
/// Requires the origin interior to the spectrahedron; throws NonGenericError
/// with a recentering hint otherwise.
std::vector<PolarSample> polar_boundary(const EllipseConfig& cfg, int n_samples = 360,
                                        double tol = 1e-6);

/// max over all (sample, point) pairs of w . x - 1; nonpositive (within
/// tolerance) when every primal point satisfies the polar inequalities.
double dual_inequality_check(const std::vector<PolarSample>& samples,
                             const std::vector<std::pair<double, double>>& primal_points);

/// Boundary fan of the spectrahedron around the foci centroid.
std::vector<std::pair<double, double>> sample_primal_boundary(const EllipseConfig& cfg, int n);

/// All consecutive-edge cross products share a sign (ordered by angle).
bool convex_polygon(const std::vector<std::pair<double, double>>& pts);

/// Distance from a point to a closed polygon boundary (segment metric).
double point_to_polygon_distance(std::pair<double, double> p,
                                 const std::vector<std::pair<double, double>>& poly);

/// Polar boundary of a finite point set (support = max over the vertices);
/// used to apply the sampler a second time for bipolar checks.
std::vector<std::pair<double, double>> polygon_polar_samples(
    const std::vector<std::pair<double, double>>& poly, int n_samples);

}  // namespace kellipse
