#include "kellipse/lmi.hpp"

#include <cmath>
#include <random>

namespace kellipse {

void EllipseConfig::validate() const {
    if (foci.empty()) throw InvalidArgument("EllipseConfig: at least one focus required");
    if (radius.sign() < 0) throw InvalidArgument("EllipseConfig: radius must be >= 0");
}

EllipseConfig EllipseConfig::subset(const std::vector<int>& indices, Rational new_radius) const {
    EllipseConfig sub;
    sub.radius = std::move(new_radius);
    for (int i : indices) {
        if (i < 0 || i >= k()) throw InvalidArgument("EllipseConfig: focus index out of range");
        sub.foci.push_back(foci[static_cast<size_t>(i)]);
    }
    return sub;
}

std::pair<double, double> EllipseConfig::centroid() const {
    double cx = 0, cy = 0;
    for (const auto& [u, v] : foci) {
        cx += u.to_double();
        cy += v.to_double();
    }
    return {cx / double(k()), cy / double(k())};
}

Matrix<Rational> MatrixPencil::at(const Rational& x, const Rational& y) const {
    return A.scaled(x) + B.scaled(y) + C;
}

MatrixPencil build_pencil(const EllipseConfig& cfg) {
    cfg.validate();
    // Per-focus blocks of x A + y B + C:
    //   [[x-u,  y-v], [y-v, u-x]]
    auto block_a = [] {
        Matrix<Rational> m(2, 2);
        m(0, 0) = Rational(1);
        m(1, 1) = Rational(-1);
        return m;
    }();
    auto block_b = [] {
        Matrix<Rational> m(2, 2);
        m(0, 1) = Rational(1);
        m(1, 0) = Rational(1);
        return m;
    }();

    Matrix<Rational> A = block_a, B = block_b;
    auto block_c = [](const Rational& u, const Rational& v) {
        Matrix<Rational> m(2, 2);
        m(0, 0) = -u;
        m(0, 1) = -v;
        m(1, 0) = -v;
        m(1, 1) = u;
        return m;
    };
    Matrix<Rational> C = block_c(cfg.foci[0].first, cfg.foci[0].second);
    for (size_t i = 1; i < cfg.foci.size(); ++i) {
        A = tensor_sum(A, block_a);
        B = tensor_sum(B, block_b);
        C = tensor_sum(C, block_c(cfg.foci[i].first, cfg.foci[i].second));
    }
    size_t n = A.rows();
    Matrix<Rational> rI = Matrix<Rational>::identity(n).scaled(cfg.radius);
    return MatrixPencil{n, std::move(A), std::move(B), C + rI};
}

std::vector<std::pair<Rational, Rational>> random_rational_foci(int k, unsigned long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-4 * k, 4 * k);
    std::uniform_int_distribution<int> den(1, 4);
    auto collinear = [](const std::pair<Rational, Rational>& a, const std::pair<Rational, Rational>& b,
                        const std::pair<Rational, Rational>& c) {
        Rational cross = (b.first - a.first) * (c.second - a.second) -
                         (b.second - a.second) * (c.first - a.first);
        return cross.is_zero();
    };
    std::vector<std::pair<Rational, Rational>> foci;
    int guard = 0;
    while (static_cast<int>(foci.size()) < k) {
        if (++guard > 10000) throw InternalError("random_rational_foci: could not draw a generic set");
        std::pair<Rational, Rational> f{Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
        bool ok = true;
        for (const auto& g : foci)
            if (g == f) ok = false;
        for (size_t i = 0; ok && i < foci.size(); ++i)
            for (size_t j = i + 1; ok && j < foci.size(); ++j)
                if (collinear(foci[i], foci[j], f)) ok = false;
        if (ok) foci.push_back(std::move(f));
    }
    return foci;
}

FloatPencil::FloatPencil(const MatrixPencil& p) : n_(static_cast<int>(p.n)) {
    size_t nn = p.n * p.n;
    a_.resize(nn);
    b_.resize(nn);
    c_.resize(nn);
    for (size_t i = 0; i < p.n; ++i)
        for (size_t j = 0; j < p.n; ++j) {
            a_[i * p.n + j] = p.A(i, j).to_double();
            b_[i * p.n + j] = p.B(i, j).to_double();
            c_[i * p.n + j] = p.C(i, j).to_double();
        }
}

void FloatPencil::assemble(double x, double y, std::vector<double>& out) const {
    size_t nn = a_.size();
    out.resize(nn);
    for (size_t i = 0; i < nn; ++i) out[i] = x * a_[i] + y * b_[i] + c_[i];
}

double FloatPencil::lambda_min(double x, double y) const {
    std::vector<double> m;
    assemble(x, y, m);
    return sym_lambda_min(std::move(m), n_);
}

double FloatPencil::det(double x, double y) const {
    std::vector<double> m;
    assemble(x, y, m);
    return det_lu(std::move(m), n_);
}

double distance_sum(const EllipseConfig& cfg, double x, double y) {
    double s = 0;
    for (const auto& [u, v] : cfg.foci) s += std::hypot(x - u.to_double(), y - v.to_double());
    return s;
}

double pencil_lambda_min(const MatrixPencil& p, double x, double y) {
    return FloatPencil(p).lambda_min(x, y);
}

MembershipVerdict membership(const EllipseConfig& cfg, double x, double y, double tol) {
    MatrixPencil p = build_pencil(cfg);
    double lmin = FloatPencil(p).lambda_min(x, y);
    double dsum = distance_sum(cfg, x, y);
    double slack = cfg.radius.to_double() - dsum;
    // The tensor-sum eigenstructure makes these two numbers equal; treat a
    // gap beyond tolerance as an internal inconsistency.
    double scale = std::max(1.0, std::fabs(cfg.radius.to_double()) + dsum);
    if (std::fabs(lmin - slack) > 1e-6 * scale)
        throw InternalError("membership: eigenvalue and distance oracles disagree");
    Region status = lmin > tol ? Region::interior : (lmin < -tol ? Region::exterior : Region::boundary);
    return {status, lmin, dsum};
}

std::pair<double, double> boundary_point(const FloatPencil& fp, std::pair<double, double> from,
                                         double theta, double ray_tol) {
    double dx = std::cos(theta), dy = std::sin(theta);
    double lo = 0.0, hi = 1.0;
    int guard = 0;
    while (fp.lambda_min(from.first + hi * dx, from.second + hi * dy) > 0) {
        lo = hi;
        hi *= 2.0;
        if (++guard > 80) throw InternalError("boundary_point: spectrahedron appears unbounded");
    }
    // lambda_min is concave along the ray and positive at `from`, so the sign
    // change bracketed here is the unique boundary crossing.
    while (hi - lo > ray_tol * std::max(1.0, hi)) {
        double mid = 0.5 * (lo + hi);
        if (fp.lambda_min(from.first + mid * dx, from.second + mid * dy) > 0)
            lo = mid;
        else
            hi = mid;
    }
    double t = 0.5 * (lo + hi);
    return {from.first + t * dx, from.second + t * dy};
}

SupportResult support_function(const EllipseConfig& cfg, double ux, double uy, double tol) {
    cfg.validate();
    MatrixPencil pencil = build_pencil(cfg);
    FloatPencil fp(pencil);
    auto center = cfg.centroid();
    if (fp.lambda_min(center.first, center.second) <= 0)
        throw NonGenericError("support_function: spectrahedron has empty interior at the foci centroid");

    double norm = std::hypot(ux, uy);
    if (norm == 0) throw InvalidArgument("support_function: zero direction");
    double dx = ux / norm, dy = uy / norm;

    auto objective = [&](double phi) {
        auto b = boundary_point(fp, center, phi);
        return std::pair<double, std::pair<double, double>>{dx * b.first + dy * b.second, b};
    };

    // Coarse scan, then golden-section refinement of the bracketing arc.
    const int coarse = 96;
    double best_phi = 0, best_val = -1e300;
    for (int i = 0; i < coarse; ++i) {
        double phi = 2.0 * M_PI * i / coarse;
        double val = objective(phi).first;
        if (val > best_val) {
            best_val = val;
            best_phi = phi;
        }
    }
    double lo = best_phi - 2.0 * M_PI / coarse, hi = best_phi + 2.0 * M_PI / coarse;
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
    double f1 = objective(x1).first, f2 = objective(x2).first;
    const double phi_tol = std::min(1e-9, tol * 1e-3);
    while (hi - lo > phi_tol) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = objective(x2).first;
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = objective(x1).first;
        }
    }
    auto [val, pt] = objective(0.5 * (lo + hi));
    return {norm * val, pt.first, pt.second};
}

}  // namespace kellipse
