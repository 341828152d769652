#include "kellipse/interpolate.hpp"

#include <algorithm>
#include <map>

namespace kellipse {

MultiPoly interpolate_grid(const std::vector<Rational>& xs, const std::vector<Rational>& ys,
                           const std::vector<std::vector<Rational>>& values) {
    size_t nx = xs.size(), ny = ys.size();
    if (values.size() != nx) throw InvalidArgument("interpolate_grid: row count mismatch");
    for (const auto& row : values)
        if (row.size() != ny) throw InvalidArgument("interpolate_grid: column count mismatch");

    // Interpolate each row in y, then each y-coefficient across x.
    std::vector<UniPoly<Rational>> rows(nx);
    for (size_t i = 0; i < nx; ++i)
        rows[i] = interpolate_newton<Rational>(ys, values[i]);

    size_t y_len = 0;
    for (const auto& r : rows) y_len = std::max(y_len, r.coeffs().size());

    MultiPoly result(VS_XY);
    std::vector<Rational> column(nx);
    for (size_t c = 0; c < y_len; ++c) {
        for (size_t i = 0; i < nx; ++i) column[i] = rows[i].coeff(static_cast<int>(c));
        UniPoly<Rational> px = interpolate_newton<Rational>(xs, column);
        for (size_t a = 0; a < px.coeffs().size(); ++a) {
            const Rational& coef = px.coeffs()[a];
            if (!coef.is_zero())
                result.add_term(Mono(static_cast<int>(a), static_cast<int>(c), 0),
                                GaussianRational(coef));
        }
    }
    return result;
}

MultiPoly interpolate(const std::vector<std::tuple<Rational, Rational, Rational>>& samples,
                      int degree_bound) {
    size_t d1 = static_cast<size_t>(degree_bound) + 1;
    if (samples.size() != d1 * d1)
        throw InvalidArgument("interpolate: expected a full (degree_bound+1)^2 tensor grid");
    std::vector<Rational> xs, ys;
    for (const auto& [x, y, v] : samples) {
        if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
        if (std::find(ys.begin(), ys.end(), y) == ys.end()) ys.push_back(y);
    }
    if (xs.size() != d1 || ys.size() != d1)
        throw InvalidArgument("interpolate: samples do not form a tensor grid of distinct abscissae");
    std::vector<std::vector<Rational>> values(d1, std::vector<Rational>(d1));
    std::vector<std::vector<bool>> seen(d1, std::vector<bool>(d1, false));
    for (const auto& [x, y, v] : samples) {
        size_t i = static_cast<size_t>(std::find(xs.begin(), xs.end(), x) - xs.begin());
        size_t j = static_cast<size_t>(std::find(ys.begin(), ys.end(), y) - ys.begin());
        if (seen[i][j]) throw InvalidArgument("interpolate: duplicate sample point");
        seen[i][j] = true;
        values[i][j] = v;
    }
    return interpolate_grid(xs, ys, values);
}

}  // namespace kellipse
