#include "kellipse/curve.hpp"

#include <cmath>

#include "kellipse/combinatorics.hpp"
#include "kellipse/interpolate.hpp"
#include "kellipse/parallel.hpp"

namespace kellipse {

namespace {

/// Exact determinant samples of the pencil on the (D+1)^2 integer grid.
MultiPoly det_by_interpolation(const MatrixPencil& pencil, int deg_bound) {
    int d1 = deg_bound + 1;
    std::vector<Rational> xs(static_cast<size_t>(d1)), ys(static_cast<size_t>(d1));
    for (int i = 0; i < d1; ++i) xs[static_cast<size_t>(i)] = ys[static_cast<size_t>(i)] = Rational(i);

    std::vector<std::vector<Rational>> values(static_cast<size_t>(d1),
                                              std::vector<Rational>(static_cast<size_t>(d1)));
    parallel_for(d1 * d1, [&](int idx) {
        int i = idx / d1, j = idx % d1;
        values[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            det_rational(pencil.at(xs[static_cast<size_t>(i)], ys[static_cast<size_t>(j)]));
    });
    return interpolate_grid(xs, ys, values);
}

void holdout_check(const MultiPoly& p, const MatrixPencil& pencil, int deg_bound) {
    Rational hx(deg_bound + 1), hy(1, 2);
    GaussianRational from_poly = p.evaluate(GaussianRational(hx), GaussianRational(hy), GaussianRational());
    Rational from_det = det_rational(pencil.at(hx, hy));
    if (!(from_poly == GaussianRational(from_det)))
        throw InternalError("ellipse_polynomial: interpolated determinant fails the held-out point");
}

void guard_k(const EllipseConfig& cfg, int k_limit) {
    cfg.validate();
    if (cfg.k() > k_limit)
        throw ResourceGuardError("k = " + std::to_string(cfg.k()) + " exceeds the limit " +
                                 std::to_string(k_limit));
}

}  // namespace

CurvePoly ellipse_polynomial(const EllipseConfig& cfg, int k_limit) {
    guard_k(cfg, k_limit);
    MatrixPencil pencil = build_pencil(cfg);
    int deg_bound = 1 << cfg.k();
    MultiPoly raw = det_by_interpolation(pencil, deg_bound);
    holdout_check(raw, pencil, deg_bound);
    if (raw.is_zero()) throw NonGenericError("ellipse_polynomial: determinant is identically zero");

    auto [normalized, mu] = real_primitive_normalize(raw);
    CurvePoly cp;
    cp.affine = normalized;
    cp.projective = normalized.homogenize();
    cp.degree = *normalized.total_degree();
    cp.det_scale = mu;
    cp.degenerate = false;
    cp.config = cfg;
    return cp;
}

CurvePoly degenerate_polynomial(const EllipseConfig& cfg, int k_limit) {
    guard_k(cfg, k_limit);
    if (!cfg.radius.is_zero())
        throw InvalidArgument("degenerate_polynomial: radius must be zero");
    if (cfg.k() < 2) throw InvalidArgument("degenerate_polynomial: k must be >= 2");

    MatrixPencil pencil = build_pencil(cfg);
    int deg_bound = 1 << cfg.k();
    MultiPoly raw = det_by_interpolation(pencil, deg_bound);
    holdout_check(raw, pencil, deg_bound);
    if (raw.is_zero()) throw NonGenericError("degenerate_polynomial: determinant is identically zero");

    MultiPoly root;
    try {
        root = poly_sqrt(raw);
    } catch (const NonGenericError&) {
        throw NonGenericError("degenerate_polynomial: configuration not degenerate-consistent");
    }
    auto [normalized, mu] = real_primitive_normalize(root);
    // normalized^2 = mu^2 * root^2 = (mu^2 / lc(raw)) * raw.
    Rational scale = mu * mu / raw.leading_term().second.re;

    CurvePoly cp;
    cp.affine = normalized;
    cp.projective = normalized.homogenize();
    cp.degree = *normalized.total_degree();
    cp.det_scale = scale;
    cp.degenerate = true;
    cp.config = cfg;
    return cp;
}

int generic_degree(int k) {
    if (k < 1) throw InvalidArgument("generic_degree: k must be >= 1");
    long long d = 1LL << k;
    if (k % 2 == 0) d -= binomial(k, k / 2);
    return static_cast<int>(d);
}

int generic_degenerate_degree(int k) {
    if (k < 2) throw InvalidArgument("generic_degenerate_degree: k must be >= 2");
    return generic_degree(k) / 2;
}

DegreeCheck degree_check(const CurvePoly& cp) {
    int formula = cp.degenerate ? generic_degenerate_degree(cp.config.k())
                                : generic_degree(cp.config.k());
    return {cp.degree, formula, cp.degree == formula};
}

std::complex<double> product_oracle(const EllipseConfig& cfg, std::complex<double> x,
                                    std::complex<double> y, std::complex<double> z) {
    cfg.validate();
    int k = cfg.k();
    double r = cfg.radius.to_double();
    double scale = std::max({1.0, std::abs(x), std::abs(y), std::abs(z)});

    std::vector<std::complex<double>> d(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
        std::complex<double> dx = x - cfg.foci[static_cast<size_t>(i)].first.to_double() * z;
        std::complex<double> dy = y - cfg.foci[static_cast<size_t>(i)].second.to_double() * z;
        d[static_cast<size_t>(i)] = std::sqrt(dx * dx + dy * dy);
        if (std::abs(d[static_cast<size_t>(i)]) < 1e-12 * scale)
            throw InvalidArgument("product_oracle: branch point (focal distance vanishes)");
    }
    std::complex<double> prod = 1.0;
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        std::complex<double> sum = 0.0;
        for (int i = 0; i < k; ++i) sum += (mask >> i & 1u) ? d[static_cast<size_t>(i)] : -d[static_cast<size_t>(i)];
        prod *= r * z - sum;
    }
    if (k % 2 == 0) {
        long long c = binomial(k, k / 2);
        if (std::abs(z) < 1e-12 * scale)
            throw InvalidArgument("product_oracle: z too close to zero for even k");
        for (long long i = 0; i < c; ++i) prod /= z;
    }
    return prod;
}

}  // namespace kellipse
