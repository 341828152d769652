#include "kellipse/resultant.hpp"

#include "kellipse/interpolate.hpp"

namespace kellipse {

Matrix<GaussianRational> sylvester_matrix(const QiPoly& f, const QiPoly& g) {
    int m = f.degree(), n = g.degree();
    if (m < 1 || n < 1) throw InvalidArgument("sylvester_matrix: both degrees must be >= 1");
    size_t size = static_cast<size_t>(m + n);
    Matrix<GaussianRational> s(size, size);
    for (int row = 0; row < n; ++row)
        for (int j = 0; j <= m; ++j) s(static_cast<size_t>(row), static_cast<size_t>(row + j)) = f.coeff(m - j);
    for (int row = 0; row < m; ++row)
        for (int j = 0; j <= n; ++j)
            s(static_cast<size_t>(n + row), static_cast<size_t>(row + j)) = g.coeff(n - j);
    return s;
}

GaussianRational resultant_scalar(const QiPoly& f, const QiPoly& g) {
    int m = f.degree(), n = g.degree();
    if (m < 0 || n < 0) return GaussianRational();  // zero polynomial involved
    if (m == 0 && n == 0) return GaussianRational(Rational(1));
    if (m == 0) {
        GaussianRational r(Rational(1));
        for (int i = 0; i < n; ++i) r *= f.coeff(0);
        return r;
    }
    if (n == 0) {
        GaussianRational r(Rational(1));
        for (int i = 0; i < m; ++i) r *= g.coeff(0);
        return r;
    }
    return det_gaussian(sylvester_matrix(f, g));
}

namespace {

QiPoly unipoly_power(const QiPoly& base, int e) {
    QiPoly r = QiPoly::constant(GaussianRational(Rational(1)));
    for (int i = 0; i < e; ++i) r = r * base;
    return r;
}

QiPoly collapse_to_unipoly(const MultiPoly& p, Var keep) {
    std::vector<GaussianRational> c(static_cast<size_t>(p.degree_in(keep)) + 1);
    for (const auto& [m, coef] : p.terms()) c[static_cast<size_t>(m[keep])] = coef;
    return QiPoly(std::move(c));
}

}  // namespace

QiPoly resultant(const MultiPoly& g, const MultiPoly& h, Var elim) {
    if (g.is_zero() || h.is_zero()) throw InvalidArgument("resultant: zero operand");
    if (g.vars() != h.vars()) throw InvalidArgument("resultant: operands declare different variables");
    VarSet rest = g.vars() & ~var_bit(elim);
    Var keep;
    int keep_count = 0;
    for (Var v : {Var::X, Var::Y, Var::Z})
        if (rest & var_bit(v)) {
            keep = v;
            ++keep_count;
        }
    if (keep_count != 1) throw InvalidArgument("resultant: expected bivariate operands");

    int m = g.degree_in(elim), n = h.degree_in(elim);
    if (m == 0 && n == 0) return QiPoly::constant(GaussianRational(Rational(1)));
    if (m == 0) return unipoly_power(collapse_to_unipoly(g, keep), n);
    if (n == 0) return unipoly_power(collapse_to_unipoly(h, keep), m);

    auto gc = coefficients_in(g, elim);
    auto hc = coefficients_in(h, elim);

    int bound = *g.total_degree() * *h.total_degree();
    std::vector<GaussianRational> xs, ys;
    xs.reserve(static_cast<size_t>(bound) + 1);
    long candidate = 0;
    int attempts = 0;
    const int attempt_cap = 4 * bound + 32;
    while (static_cast<int>(xs.size()) <= bound && attempts++ < attempt_cap) {
        GaussianRational t{Rational(candidate)};
        candidate = candidate <= 0 ? -candidate + 1 : -candidate;  // 0, 1, -1, 2, -2, ...

        auto specialize = [&](const std::vector<MultiPoly>& coeffs) {
            std::vector<GaussianRational> c(coeffs.size());
            for (size_t i = 0; i < coeffs.size(); ++i)
                c[i] = coeffs[i].evaluate(keep == Var::X ? t : GaussianRational(),
                                          keep == Var::Y ? t : GaussianRational(),
                                          keep == Var::Z ? t : GaussianRational());
            return c;
        };
        std::vector<GaussianRational> gs = specialize(gc), hs = specialize(hc);
        // Leading coefficients must survive specialization for the Sylvester
        // determinant to commute with evaluation.
        if (gs.back().is_zero() || hs.back().is_zero()) continue;
        QiPoly gt{std::vector<GaussianRational>(gs)};
        QiPoly ht{std::vector<GaussianRational>(hs)};
        xs.push_back(t);
        ys.push_back(resultant_scalar(gt, ht));
    }
    if (static_cast<int>(xs.size()) <= bound)
        throw InternalError("resultant: could not find enough good evaluation points");

    UniPoly<GaussianRational> r = interpolate_newton<GaussianRational>(xs, ys);
    return r;
}

}  // namespace kellipse
