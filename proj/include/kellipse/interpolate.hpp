#pragma once

#include <span>
#include <tuple>
#include <vector>

#include "kellipse/unipoly.hpp"

namespace kellipse {

/// Newton interpolation through (xs[i], ys[i]); exact over the coefficient
/// field. Throws InvalidArgument on duplicate abscissae.
template <class F>
UniPoly<F> interpolate_newton(std::span<const F> xs, std::span<const F> ys) {
    size_t n = xs.size();
    if (n == 0 || ys.size() != n) throw InvalidArgument("interpolate_newton: bad sample count");
    // Divided differences in place.
    std::vector<F> dd(ys.begin(), ys.end());
    for (size_t level = 1; level < n; ++level) {
        for (size_t i = n - 1; i >= level; --i) {
            F dx = xs[i] - xs[i - level];
            if (dx == F()) throw InvalidArgument("interpolate_newton: duplicate abscissae");
            dd[i] = (dd[i] - dd[i - 1]) / dx;
            if (i == level) break;
        }
    }
    // Expand the Newton form to the monomial basis.
    UniPoly<F> result = UniPoly<F>::constant(dd[n - 1]);
    for (size_t i = n - 1; i-- > 0;) {
        // result = result * (t - xs[i]) + dd[i]
        UniPoly<F> lin(std::vector<F>{F() - xs[i], F(1)});
        result = result * lin + UniPoly<F>::constant(dd[i]);
    }
    return result;
}

/// Bivariate tensor-grid interpolation: values[i][j] = f(xs[i], ys[j]).
/// Returns the unique polynomial in (x, y) with degree <= degree bound in
/// each variable.
MultiPoly interpolate_grid(const std::vector<Rational>& xs, const std::vector<Rational>& ys,
                           const std::vector<std::vector<Rational>>& values);

/// Sample-list front end: samples are ((x, y), value) triples that must form
/// a full (degree_bound+1)^2 tensor grid.
MultiPoly interpolate(const std::vector<std::tuple<Rational, Rational, Rational>>& samples,
                      int degree_bound);

}  // namespace kellipse
