#pragma once

#include "kellipse/linalg.hpp"
#include "kellipse/unipoly.hpp"

namespace kellipse {

/// Sylvester matrix of f, g (degrees m, n >= 1) as an (m+n) x (m+n) matrix.
Matrix<GaussianRational> sylvester_matrix(const QiPoly& f, const QiPoly& g);

/// Determinant of the Sylvester matrix; Res(f, g) = 0 iff f, g share a root
/// (over Q(i)-bar).
GaussianRational resultant_scalar(const QiPoly& f, const QiPoly& g);

/// Resultant of two bivariate polynomials with `elim` eliminated, computed
/// exactly by evaluation at integer abscissae of the kept variable and Newton
/// interpolation. The zero polynomial is returned when g and h share a
/// component. Evaluation points where a leading coefficient vanishes are
/// skipped, so specialization commutes with the determinant.
QiPoly resultant(const MultiPoly& g, const MultiPoly& h, Var elim);

}  // namespace kellipse
