#pragma once

#include <utility>
#include <vector>

#include "kellipse/linalg.hpp"

namespace kellipse {

/// Foci and radius, all exact rationals.
struct EllipseConfig {
    std::vector<std::pair<Rational, Rational>> foci;
    Rational radius;

    int k() const { return static_cast<int>(foci.size()); }
    void validate() const;

    /// Sub-configuration picking the given 0-based focus indices.
    EllipseConfig subset(const std::vector<int>& indices, Rational new_radius) const;
    std::pair<double, double> centroid() const;
};

/// Symmetric affine pencil L(x, y) = x A + y B + C with rational entries.
struct MatrixPencil {
    size_t n = 0;
    Matrix<Rational> A, B, C;

    Matrix<Rational> at(const Rational& x, const Rational& y) const;
};

/// Float mirror of a pencil for repeated eigenvalue / determinant queries.
class FloatPencil {
  public:
    explicit FloatPencil(const MatrixPencil& p);

    int n() const { return n_; }
    void assemble(double x, double y, std::vector<double>& out) const;
    double lambda_min(double x, double y) const;
    double det(double x, double y) const;

  private:
    int n_;
    std::vector<double> a_, b_, c_;
};

enum class Region { interior, boundary, exterior };

struct MembershipVerdict {
    Region status;
    double lambda_min;
    double distance_sum;
};

/// L_k of the k-ellipse: r I + tensor sum of the per-focus 2x2 blocks.
MatrixPencil build_pencil(const EllipseConfig& cfg);

/// Random rational foci with small denominators, redrawn until no two
/// coincide and no three are collinear. Deterministic per seed.
std::vector<std::pair<Rational, Rational>> random_rational_foci(int k, unsigned long seed);

double distance_sum(const EllipseConfig& cfg, double x, double y);
double pencil_lambda_min(const MatrixPencil& p, double x, double y);

/// Verdict from the eigenvalue oracle, cross-checked against the distance
/// sum; throws InternalError if the two disagree beyond tolerance.
MembershipVerdict membership(const EllipseConfig& cfg, double x, double y, double tol = 1e-8);

struct SupportResult {
    double value;    // h(u) = max u . p over the spectrahedron
    double px, py;   // argmax boundary point
};

/// Boundary point of the spectrahedron along the ray from `from` at angle
/// theta (bisection on the ray parameter).
std::pair<double, double> boundary_point(const FloatPencil& fp, std::pair<double, double> from,
                                         double theta, double ray_tol = 1e-12);

/// Support function by coarse angular sampling plus golden-section
/// refinement. Throws NonGenericError when the interior is empty.
SupportResult support_function(const EllipseConfig& cfg, double ux, double uy, double tol = 1e-6);

}  // namespace kellipse
