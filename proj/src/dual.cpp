#include "kellipse/dual.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace kellipse {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

double golden_max(const std::function<double(double)>& f, double lo, double hi, double tol) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    while (hi - lo > tol) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

std::vector<PolarSample> polar_boundary(const EllipseConfig& cfg, int n_samples, double tol) {
    cfg.validate();
    if (n_samples < 3) throw InvalidArgument("polar_boundary: need at least 3 samples");
    MatrixPencil pencil = build_pencil(cfg);
    FloatPencil fp(pencil);
    if (fp.lambda_min(0.0, 0.0) <= 0)
        throw NonGenericError(
            "polar_boundary: origin is not interior to the spectrahedron; "
            "recenter the configuration at the foci centroid and retry");

    // Shared coarse boundary fan; each direction refines around its argmax.
    const int coarse = std::max(1024, 4 * n_samples);
    std::vector<std::pair<double, double>> cache(static_cast<size_t>(coarse));
    for (int i = 0; i < coarse; ++i)
        cache[static_cast<size_t>(i)] = boundary_point(fp, {0.0, 0.0}, kTwoPi * i / coarse);

    std::vector<PolarSample> samples;
    samples.reserve(static_cast<size_t>(n_samples));
    for (int i = 0; i < n_samples; ++i) {
        double theta = kTwoPi * i / n_samples;
        double ux = std::cos(theta), uy = std::sin(theta);
        int best = 0;
        double best_val = -1e300;
        for (int j = 0; j < coarse; ++j) {
            double val = ux * cache[static_cast<size_t>(j)].first + uy * cache[static_cast<size_t>(j)].second;
            if (val > best_val) {
                best_val = val;
                best = j;
            }
        }
        auto objective = [&](double phi) {
            auto b = boundary_point(fp, {0.0, 0.0}, phi);
            return ux * b.first + uy * b.second;
        };
        double span = 2.0 * kTwoPi / coarse;
        double phi_star = golden_max(objective, kTwoPi * best / coarse - span,
                                     kTwoPi * best / coarse + span, std::min(1e-10, tol * 1e-4));
        auto b = boundary_point(fp, {0.0, 0.0}, phi_star);
        double h = ux * b.first + uy * b.second;
        if (!(h > 0)) throw InternalError("polar_boundary: nonpositive support value");
        samples.push_back({theta, h, b.first, b.second, ux / h, uy / h});
    }
    return samples;
}

double dual_inequality_check(const std::vector<PolarSample>& samples,
                             const std::vector<std::pair<double, double>>& primal_points) {
    if (samples.empty() || primal_points.empty())
        throw InvalidArgument("dual_inequality_check: empty input");
    double worst = -1e300;
    for (const auto& s : samples)
        for (const auto& [x, y] : primal_points) worst = std::max(worst, s.w1 * x + s.w2 * y - 1.0);
    return worst;
}

std::vector<std::pair<double, double>> sample_primal_boundary(const EllipseConfig& cfg, int n) {
    MatrixPencil pencil = build_pencil(cfg);
    FloatPencil fp(pencil);
    auto center = cfg.centroid();
    if (fp.lambda_min(center.first, center.second) <= 0)
        throw NonGenericError("sample_primal_boundary: empty interior at the foci centroid");
    std::vector<std::pair<double, double>> pts;
    pts.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) pts.push_back(boundary_point(fp, center, kTwoPi * i / n));
    return pts;
}

bool convex_polygon(const std::vector<std::pair<double, double>>& pts) {
    size_t n = pts.size();
    if (n < 3) return false;
    double scale = 0;
    for (const auto& [x, y] : pts) scale = std::max({scale, std::fabs(x), std::fabs(y)});
    double pos = 0, neg = 0;
    for (size_t i = 0; i < n; ++i) {
        const auto& a = pts[i];
        const auto& b = pts[(i + 1) % n];
        const auto& c = pts[(i + 2) % n];
        double cross = (b.first - a.first) * (c.second - b.second) -
                       (b.second - a.second) * (c.first - b.first);
        if (cross > 0) pos = std::max(pos, cross);
        if (cross < 0) neg = std::max(neg, -cross);
    }
    double slack = 1e-9 * scale * scale;
    return pos <= slack || neg <= slack;
}

double point_to_polygon_distance(std::pair<double, double> p,
                                 const std::vector<std::pair<double, double>>& poly) {
    size_t n = poly.size();
    double best = 1e300;
    for (size_t i = 0; i < n; ++i) {
        const auto& a = poly[i];
        const auto& b = poly[(i + 1) % n];
        double vx = b.first - a.first, vy = b.second - a.second;
        double wx = p.first - a.first, wy = p.second - a.second;
        double len2 = vx * vx + vy * vy;
        double t = len2 > 0 ? std::clamp((wx * vx + wy * vy) / len2, 0.0, 1.0) : 0.0;
        double dx = wx - t * vx, dy = wy - t * vy;
        best = std::min(best, std::hypot(dx, dy));
    }
    return best;
}

std::vector<std::pair<double, double>> polygon_polar_samples(
    const std::vector<std::pair<double, double>>& poly, int n_samples) {
    if (poly.empty()) throw InvalidArgument("polygon_polar_samples: empty polygon");
    std::vector<std::pair<double, double>> out;
    out.reserve(static_cast<size_t>(n_samples));
    for (int i = 0; i < n_samples; ++i) {
        double theta = kTwoPi * i / n_samples;
        double ux = std::cos(theta), uy = std::sin(theta);
        double h = -1e300;
        for (const auto& [x, y] : poly) h = std::max(h, ux * x + uy * y);
        if (!(h > 0))
            throw NonGenericError("polygon_polar_samples: origin not interior to the polygon's polar");
        out.push_back({ux / h, uy / h});
    }
    return out;
}

}  // namespace kellipse
