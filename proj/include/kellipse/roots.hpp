#pragma once

#include <complex>
#include <vector>

#include "kellipse/unipoly.hpp"

namespace kellipse {

struct RootCluster {
    std::complex<double> value;
    int multiplicity;
};

/// All roots of p by simultaneous Aberth-Ehrlich iteration. Throws
/// ConvergenceError with a diagnostic when the iteration cap is reached.
std::vector<std::complex<double>> aberth_roots(const CPoly& p, double tol = 1e-13, int max_iter = 600);

/// aberth_roots followed by cluster merging at relative radius `cluster_tol`
/// and a residual check against tol * (coefficient scale).
std::vector<RootCluster> complex_roots(const CPoly& p, double cluster_tol = 1e-8);

}  // namespace kellipse
