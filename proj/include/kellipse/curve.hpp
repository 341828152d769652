#pragma once

#include <complex>

#include "kellipse/lmi.hpp"
#include "kellipse/multipoly.hpp"

namespace kellipse {

/// Exact defining polynomial of a (possibly degenerate) k-ellipse together
/// with its homogenization. `affine` is normalized to primitive integer
/// coefficients with a positive leading graded-lex coefficient; det_scale
/// records the rational relation to the raw pencil determinant:
///   regular:    affine   = det_scale * det L
///   degenerate: affine^2 = det_scale * det L(r = 0)
struct CurvePoly {
    MultiPoly affine{VS_XY};
    MultiPoly projective{VS_XYZ};
    int degree = 0;
    Rational det_scale{1};
    bool degenerate = false;
    EllipseConfig config;
};

/// det L_k by exact grid evaluation (fraction-free elimination) and tensor
/// interpolation, verified against a held-out grid point.
CurvePoly ellipse_polynomial(const EllipseConfig& cfg, int k_limit = 6);

/// Polynomial of the degenerate (r = 0) ellipse: the exact square root of
/// det L_k(r = 0). Requires radius 0 and k >= 2.
CurvePoly degenerate_polynomial(const EllipseConfig& cfg, int k_limit = 6);

/// Generic degree d_k: 2^k for odd k, 2^k - C(k, k/2) for even k.
int generic_degree(int k);
/// Generic degenerate degree d'_k = d_k / 2 (k >= 2).
int generic_degenerate_degree(int k);

struct DegreeCheck {
    int computed;
    int formula;
    bool match;
};
DegreeCheck degree_check(const CurvePoly& cp);

/// Product over all sign vectors s of (r z - sum_i s_i d_i), with d_i the
/// complex distance roots, divided by z^C(k, k/2) for even k. The full
/// product is independent of the square-root branches and equals the curve
/// polynomial up to the stored normalization. Throws InvalidArgument on
/// branch points (some focal distance vanishes).
std::complex<double> product_oracle(const EllipseConfig& cfg, std::complex<double> x,
                                    std::complex<double> y, std::complex<double> z);

}  // namespace kellipse
