#include "kellipse/singular.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "kellipse/combinatorics.hpp"
#include "kellipse/resultant.hpp"
#include "kellipse/roots.hpp"

namespace kellipse {

namespace {

using cd = std::complex<double>;

std::string subset_string(const std::vector<int>& subset) {
    std::string s = "J={";
    for (size_t i = 0; i < subset.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(subset[i] + 1);
    }
    return s + "}";
}

/// CPoly from exact coefficients, scaled so the largest magnitude is ~1.
CPoly normalized_cpoly(const QiPoly& p) {
    if (p.is_zero()) return CPoly();
    double max_log2 = -1e300;
    for (const auto& c : p.coeffs()) max_log2 = std::max(max_log2, c.log2_abs());
    long e = static_cast<long>(std::floor(max_log2));
    std::vector<cd> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        mpq_class re = c.re.raw(), im = c.im.raw();
        if (e >= 0) {
            mpq_div_2exp(re.get_mpq_t(), re.get_mpq_t(), static_cast<unsigned long>(e));
            mpq_div_2exp(im.get_mpq_t(), im.get_mpq_t(), static_cast<unsigned long>(e));
        } else {
            mpq_mul_2exp(re.get_mpq_t(), re.get_mpq_t(), static_cast<unsigned long>(-e));
            mpq_mul_2exp(im.get_mpq_t(), im.get_mpq_t(), static_cast<unsigned long>(-e));
        }
        out.emplace_back(re.get_d(), im.get_d());
    }
    return CPoly(std::move(out));
}

}  // namespace

int circular_multiplicity(int k) {
    if (k < 1) throw InvalidArgument("circular_multiplicity: k must be >= 1");
    long long m = 1LL << (k - 1);
    if (k % 2 == 0) m -= binomial(k, k / 2);
    return static_cast<int>(m);
}

int circular_multiplicity_degenerate(int k) {
    if (k < 2) throw InvalidArgument("circular_multiplicity_degenerate: k must be >= 2");
    return circular_multiplicity(k) / 2;
}

CircularPointData circular_point_analysis(const CurvePoly& cp, int which) {
    if (which != 1 && which != -1)
        throw InvalidArgument("circular_point_analysis: which must be +1 or -1");
    if (cp.config.k() < 3)
        throw InvalidArgument("circular_point_analysis: needs k >= 3 (points are smooth or absent)");

    // Chart y = 1; the point sits at (x, z) = (which * i, 0).
    MultiPoly chart = cp.projective.substitute(Var::Y, GaussianRational(Rational(1)));
    GaussianRational center_x(Rational(0), Rational(which));
    InitialForm init = initial_form(chart, center_x, GaussianRational());

    if (init.multiplicity % 2 != 0)
        throw NonGenericError("circular_point_analysis: odd multiplicity at a circular point");

    CircularPointData data;
    data.tangent_cone = init.form;
    data.tangent_sqrt = poly_sqrt(init.form);  // throws NonGenericError if not a square
    data.square_ok = true;

    // Distinct tangents: the square root, as a binary form in (x, z), must be
    // squarefree. Linear factors of z show up as degree drop after z = 1.
    MultiPoly dehom = data.tangent_sqrt.substitute(Var::Z, GaussianRational(Rational(1)));
    QiPoly u = to_unipoly(dehom);
    int half = init.multiplicity / 2;
    int z_mult = half - u.degree();
    data.distinct_tangents = squarefree(u) && z_mult <= 1;
    if (!data.distinct_tangents)
        throw NonGenericError("circular_point_analysis: repeated tangent directions");

    SingularPoint pt;
    pt.coords = {cd(0.0, which), cd(1.0, 0.0), cd(0.0, 0.0)};
    pt.exact_coords = {{center_x, GaussianRational(Rational(1)), GaussianRational()}};
    pt.multiplicity = init.multiplicity;
    pt.branches = half;
    pt.delta = binomial(init.multiplicity, 2);
    pt.kind = SingKind::circular_point;
    pt.provenance = "infinity";
    data.point = pt;
    return data;
}

InfinityFactorization infinity_line_factorization(const CurvePoly& cp) {
    MultiPoly at_infinity = cp.projective.substitute(Var::Z, GaussianRational());
    MultiPoly divisor(VS_XY);
    divisor.add_term(Mono(2, 0, 0), GaussianRational(Rational(1)));
    divisor.add_term(Mono(0, 2, 0), GaussianRational(Rational(1)));

    InfinityFactorization fact;
    fact.cofactor = at_infinity;
    for (;;) {
        auto q = divide_exact(fact.cofactor, divisor);
        if (!q) break;
        fact.cofactor = *q;
        ++fact.power;
    }

    int k = cp.config.k();
    if (k % 2 == 0 && !cp.degenerate) {
        // The cofactor must vanish at the roots of the predicted quadratics
        //   r^2 (x^2 + y^2) - (x sum s_i u_i + y sum s_i v_i)^2,
        // one per {s, -s} class of balanced sign vectors.
        FloatPoly cof(fact.cofactor);
        double r = cp.config.radius.to_double();
        for (unsigned mask = 0; mask < (1u << k); ++mask) {
            if (!(mask & 1u)) continue;  // fix s_1 = +1 to take one of {s, -s}
            int pop = 0;
            for (int i = 0; i < k; ++i) pop += (mask >> i) & 1;
            if (pop != k / 2) continue;
            double su = 0, sv = 0;
            for (int i = 0; i < k; ++i) {
                double sign = (mask >> i & 1u) ? 1.0 : -1.0;
                su += sign * cp.config.foci[static_cast<size_t>(i)].first.to_double();
                sv += sign * cp.config.foci[static_cast<size_t>(i)].second.to_double();
            }
            // Roots of r^2 (t^2 + 1) - (t su + sv)^2 = 0 at y = 1.
            double a = r * r - su * su, b = -2.0 * su * sv, c = r * r - sv * sv;
            std::vector<cd> roots;
            if (std::fabs(a) > 1e-12 * (r * r + su * su + sv * sv)) {
                cd disc = std::sqrt(cd(b * b - 4.0 * a * c, 0.0));
                roots = {(-b + disc) / (2.0 * a), (-b - disc) / (2.0 * a)};
            } else {
                roots = {cd(-c / b, 0.0)};  // one root escaped to y = 0
            }
            for (const cd& t : roots) {
                ++fact.quad_points_checked;
                double height = std::pow(1.0 + std::abs(t), fact.cofactor.total_degree().value_or(0));
                if (std::abs(cof.evaluate(t, 1.0, 0.0)) > 1e-7 * height) fact.quadratics_ok = false;
            }
        }
    }
    return fact;
}

long long expected_partition_count(int j, int k) {
    if (j < 2 || j > k - 1) throw InvalidArgument("expected_partition_count: need 2 <= j <= k-1");
    long long dd = generic_degenerate_degree(j);
    long long d = generic_degree(k - j);
    long long mm = circular_multiplicity_degenerate(j);
    long long m = circular_multiplicity(k - j);
    return dd * d - 2 * mm * m;
}

long long expected_affine_count(int k) {
    if (k < 3) throw InvalidArgument("expected_affine_count: k must be >= 3");
    long long count = (1LL << (2 * k - 2)) - (k + 2) * (1LL << (k - 2));
    if (k % 2 == 0) count -= binomial(k, k / 2) * (binomial(k - 1, k / 2) - 1);
    return count;
}

namespace {

struct CurveEvaluator {
    FloatPoly f, fx, fy;
    double rx, ry;  // rescale derivative values onto f's normalization
    int degree;

    explicit CurveEvaluator(const MultiPoly& p)
        : f(p), fx(p.derivative(Var::X)), fy(p.derivative(Var::Y)),
          rx(std::pow(2.0, fx.scale_log2() - f.scale_log2())),
          ry(std::pow(2.0, fy.scale_log2() - f.scale_log2())),
          degree(p.total_degree().value_or(0)) {}

    cd value(cd x, cd y) const { return f.evaluate(x, y, 0.0); }
    cd dx(cd x, cd y) const { return rx * fx.evaluate(x, y, 0.0); }
    cd dy(cd x, cd y) const { return ry * fy.evaluate(x, y, 0.0); }
};

/// Newton refinement of an approximate intersection of two affine curves.
/// Each curve's row is consistently scaled (value and both derivatives share
/// one normalization), so the 2x2 solve is the true Newton step. A candidate
/// is accepted only with both residuals at the rounding floor of the term
/// sums: converged points sit at ~1e-15 of the bound, while near-tangency
/// phantoms stall around 1e-8 of it. Far points can keep noise-level steps
/// forever, so step size is not part of the gate.
bool polish_intersection(const CurveEvaluator& g, const CurveEvaluator& h, cd& x, cd& y) {
    for (int it = 0; it < 40; ++it) {
        cd gv = g.value(x, y), hv = h.value(x, y);
        cd gx = g.dx(x, y), gy = g.dy(x, y);
        cd hx = h.dx(x, y), hy = h.dy(x, y);
        cd det = gx * hy - gy * hx;
        if (std::abs(det) < 1e-14) return false;
        cd dx = (gv * hy - gy * hv) / det;
        cd dy = (gx * hv - gv * hx) / det;
        x -= dx;
        y -= dy;
        double step = std::max(std::abs(dx), std::abs(dy));
        if (step < 1e-14 * (1.0 + std::max(std::abs(x), std::abs(y)))) break;
    }
    auto [gv, gb] = g.f.evaluate_with_bound(x, y, 0.0);
    auto [hv, hb] = h.f.evaluate_with_bound(x, y, 0.0);
    return std::abs(gv) <= 1e-11 * std::max(gb, 1e-300) &&
           std::abs(hv) <= 1e-11 * std::max(hb, 1e-300);
}

/// Coefficient polynomials of a curve in y, with float mirrors brought onto
/// one common scale so the specialized coefficients can feed a root finder.
struct SpecializedCoeffs {
    std::vector<FloatPoly> fp;
    std::vector<double> rescale;

    explicit SpecializedCoeffs(const std::vector<MultiPoly>& coeffs) {
        double smax = -1e300;
        for (const auto& c : coeffs) {
            fp.emplace_back(c);
            if (!fp.back().empty()) smax = std::max(smax, fp.back().scale_log2());
        }
        for (const auto& f : fp)
            rescale.push_back(f.empty() ? 0.0 : std::pow(2.0, f.scale_log2() - smax));
    }
};

std::vector<cd> roots_at_x(const SpecializedCoeffs& sc, cd x0) {
    size_t n = sc.fp.size();
    std::vector<cd> coeffs(n);
    std::vector<double> bounds(n, 0.0);
    double max_abs = 0;
    for (size_t i = 0; i < n; ++i) {
        if (sc.fp[i].empty()) continue;
        auto [v, b] = sc.fp[i].evaluate_with_bound(x0, cd(0.0), cd(0.0));
        coeffs[i] = v * sc.rescale[i];
        bounds[i] = b * sc.rescale[i];
        max_abs = std::max(max_abs, std::abs(coeffs[i]));
    }
    if (max_abs == 0) return {};
    // A leading coefficient is dropped only when it genuinely cancels at
    // this x (value at the rounding floor of its own term sum); a small but
    // honest value keeps its large root.
    while (coeffs.size() > 1 && std::abs(coeffs.back()) <= 1e-9 * bounds[coeffs.size() - 1])
        coeffs.pop_back();
    CPoly p{std::move(coeffs)};
    if (p.degree() < 1) return {};
    std::vector<cd> out;
    for (const auto& rc : complex_roots(p, 1e-8)) out.insert(out.end(), static_cast<size_t>(rc.multiplicity), rc.value);
    return out;
}

constexpr double kDedupTol = 1e-6;  // relative de-duplication radius

bool same_point(const std::pair<cd, cd>& a, const std::pair<cd, cd>& b) {
    double scale = 1.0 + std::max({std::abs(a.first), std::abs(a.second), std::abs(b.first),
                                   std::abs(b.second)});
    return std::abs(a.first - b.first) <= kDedupTol * scale &&
           std::abs(a.second - b.second) <= kDedupTol * scale;
}

}  // namespace

std::vector<PartitionIntersection> enumerate_affine_singularities(const EllipseConfig& cfg,
                                                                  int k_limit) {
    cfg.validate();
    if (cfg.radius.sign() <= 0)
        throw InvalidArgument("enumerate_affine_singularities: radius must be positive");
    int k = cfg.k();
    std::vector<PartitionIntersection> out;
    if (k < 3) return out;

    std::vector<int> all(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) all[static_cast<size_t>(i)] = i;

    // Masks in increasing numeric order = colex order on subsets.
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
        int j = 0;
        for (int i = 0; i < k; ++i) j += (mask >> i) & 1;
        if (j < 2 || j > k - 1) continue;

        PartitionIntersection part;
        for (int i = 0; i < k; ++i)
            if (mask >> i & 1u) part.subset.push_back(i);
        std::vector<int> complement;
        for (int i = 0; i < k; ++i)
            if (!(mask >> i & 1u)) complement.push_back(i);

        part.degenerate_part = degenerate_polynomial(cfg.subset(part.subset, Rational(0)), k_limit);
        part.companion = ellipse_polynomial(cfg.subset(complement, cfg.radius), k_limit);
        part.expected = static_cast<int>(expected_partition_count(j, k));

        // x-locator: the resultant in y, except when one curve is y-free, in
        // which case that curve already pins x (and the resultant would be an
        // artificial power of it).
        QiPoly res;
        if (part.degenerate_part.affine.degree_in(Var::Y) == 0)
            res = to_unipoly(part.degenerate_part.affine);
        else if (part.companion.affine.degree_in(Var::Y) == 0)
            res = to_unipoly(part.companion.affine);
        else
            res = resultant(part.degenerate_part.affine, part.companion.affine, Var::Y);
        if (res.is_zero()) {
            part.shared_component = true;
            out.push_back(std::move(part));
            continue;
        }

        CurveEvaluator ge(part.degenerate_part.affine), he(part.companion.affine);
        SpecializedCoeffs g_coeffs(coefficients_in(part.degenerate_part.affine, Var::Y));
        SpecializedCoeffs h_coeffs(coefficients_in(part.companion.affine, Var::Y));

        // Every intersection lies on both curves, so y candidates are taken
        // from the curve of lower y-degree (fewer roots, far better
        // conditioned at large |x|); the Newton polish against the pair
        // validates or discards each one.
        bool h_primary = part.companion.affine.degree_in(Var::Y) <=
                         part.degenerate_part.affine.degree_in(Var::Y);
        const SpecializedCoeffs& primary = h_primary ? h_coeffs : g_coeffs;
        const SpecializedCoeffs& secondary = h_primary ? g_coeffs : h_coeffs;

        std::vector<RootCluster> xs = complex_roots(normalized_cpoly(res), kDedupTol);
        for (const auto& xc : xs) {
            if (std::abs(xc.value) > 1e8) continue;  // intersection at infinity
            std::vector<cd> candidates = roots_at_x(primary, xc.value);
            if (candidates.empty()) candidates = roots_at_x(secondary, xc.value);
            for (const cd& y0 : candidates) {
                cd x = xc.value, y = y0;
                if (!polish_intersection(ge, he, x, y)) continue;
                if (std::abs(x) > 1e8 || std::abs(y) > 1e8) continue;
                std::pair<cd, cd> pt{x, y};
                bool dup = false;
                for (const auto& q : part.points)
                    if (same_point(pt, q)) {
                        dup = true;
                        break;
                    }
                if (!dup) part.points.push_back(pt);
            }
        }
        out.push_back(std::move(part));
    }
    return out;
}

SingularVerdict verify_singular(const CurvePoly& cp, const std::array<cd, 3>& pt, double tol) {
    FloatPoly f(cp.projective);
    FloatPoly px(cp.projective.derivative(Var::X));
    FloatPoly py(cp.projective.derivative(Var::Y));
    FloatPoly pz(cp.projective.derivative(Var::Z));

    double height = std::pow(1.0 + std::max({std::abs(pt[0]), std::abs(pt[1]), std::abs(pt[2])}),
                             cp.degree);
    double tolerance = tol * height;

    SingularVerdict v{};
    v.residual = std::abs(f.evaluate(pt[0], pt[1], pt[2]));
    v.grad_norm[0] = std::abs(px.evaluate(pt[0], pt[1], pt[2]));
    v.grad_norm[1] = std::abs(py.evaluate(pt[0], pt[1], pt[2]));
    v.grad_norm[2] = std::abs(pz.evaluate(pt[0], pt[1], pt[2]));
    v.tolerance = tolerance;
    v.singular = v.residual <= tolerance && v.grad_norm[0] <= tolerance &&
                 v.grad_norm[1] <= tolerance && v.grad_norm[2] <= tolerance;
    return v;
}

bool classify_node(const CurvePoly& cp, cd x, cd y, double tol) {
    // Second-order Taylor data at the point; all three second partials share
    // a single scale so the discriminant comparison is meaningful.
    MultiPoly fxx_p = cp.affine.derivative(Var::X).derivative(Var::X);
    MultiPoly fxy_p = cp.affine.derivative(Var::X).derivative(Var::Y);
    MultiPoly fyy_p = cp.affine.derivative(Var::Y).derivative(Var::Y);

    {
        // Fast path: float evaluation, trusted while the values sit well
        // above the cancellation floor of the term sums.
        FloatPoly fxx(fxx_p), fxy(fxy_p), fyy(fyy_p);
        double smax = std::max({fxx.scale_log2(), fxy.scale_log2(), fyy.scale_log2()});
        auto rescaled = [&](const FloatPoly& p, std::pair<cd, double> v) {
            double f = std::pow(2.0, p.scale_log2() - smax);
            return std::pair<cd, double>{v.first * f, v.second * f};
        };
        auto [a, ba] = rescaled(fxx, fxx.evaluate_with_bound(x, y, 0.0));
        auto [b, bb] = rescaled(fxy, fxy.evaluate_with_bound(x, y, 0.0));
        auto [c, bc] = rescaled(fyy, fyy.evaluate_with_bound(x, y, 0.0));
        double scale = std::max({std::abs(a), std::abs(b), std::abs(c)});
        double bmax = std::max({ba, bb, bc, 1e-300});
        if (scale > 1e-8 * bmax) {
            cd disc = b * b - a * c;
            return std::abs(disc) > tol * scale * scale;
        }
    }

    // Exact path: far or delicate points, where double precision cannot read
    // the second derivatives through the cancellation. The float point is a
    // dyadic rational, so the evaluation below is error-free; the only
    // uncertainty left is the point's own accuracy.
    GaussianRational gx{Rational::from_double(x.real()), Rational::from_double(x.imag())};
    GaussianRational gy{Rational::from_double(y.real()), Rational::from_double(y.imag())};
    GaussianRational zero;
    GaussianRational a = fxx_p.evaluate(gx, gy, zero);
    GaussianRational b = fxy_p.evaluate(gx, gy, zero);
    GaussianRational c = fyy_p.evaluate(gx, gy, zero);
    double l2 = std::max({a.log2_abs(), b.log2_abs(), c.log2_abs()});

    double l3 = -std::numeric_limits<double>::infinity();
    for (Var v : {Var::X, Var::Y}) {
        for (const MultiPoly* p2 : {&fxx_p, &fyy_p}) {
            GaussianRational t = p2->derivative(v).evaluate(gx, gy, zero);
            l3 = std::max(l3, t.log2_abs());
        }
    }
    // A point known to ~1e-11 relative accuracy can only certify the
    // quadratic part as zero down to third-derivative * point-error.
    double pt_err_log2 = std::log2(1e-9 * (1.0 + std::max(std::abs(x), std::abs(y))));
    if (l2 <= l3 + pt_err_log2)
        throw NonGenericError("classify_node: degree-2 part vanishes (higher multiplicity)");
    GaussianRational disc = b * b - a * c;
    return disc.log2_abs() > std::log2(tol) + 2.0 * l2;
}

Census build_census(const CurvePoly& cp, int k_limit) {
    Census census;
    int k = cp.config.k();
    if (k >= 3) {
        for (int which : {+1, -1}) {
            try {
                CircularPointData data = circular_point_analysis(cp, which);
                if (data.point.multiplicity != circular_multiplicity(k))
                    census.flags.push_back("circular point multiplicity " +
                                           std::to_string(data.point.multiplicity) +
                                           " differs from the generic value");
                census.points.push_back(data.point);
            } catch (const Error& e) {
                census.flags.push_back(std::string("circular point analysis failed: ") + e.what());
            }
        }
        InfinityFactorization fact = infinity_line_factorization(cp);
        if (!census.points.empty() && fact.power != census.points.front().multiplicity)
            census.flags.push_back("power of (x^2+y^2) at infinity disagrees with the tangent-cone multiplicity");
        if (!fact.quadratics_ok)
            census.flags.push_back("cofactor at infinity misses a predicted quadratic point");
    }

    if (k >= 3 && cp.config.radius.sign() > 0) {
        std::vector<PartitionIntersection> parts;
        try {
            parts = enumerate_affine_singularities(cp.config, k_limit);
        } catch (const Error& e) {
            census.flags.push_back(std::string("affine enumeration failed: ") + e.what());
        }
        std::vector<std::pair<cd, cd>> seen;
        for (auto& part : parts) {
            if (part.shared_component) {
                census.flags.push_back("shared component (non-generic) for " + subset_string(part.subset));
                continue;
            }
            if (static_cast<int>(part.points.size()) != part.expected) {
                std::ostringstream msg;
                msg << subset_string(part.subset) << " found " << part.points.size()
                    << " points, expected " << part.expected;
                census.flags.push_back(msg.str());
            }
            for (const auto& [x, y] : part.points) {
                bool dup = false;
                for (const auto& q : seen)
                    if (same_point({x, y}, q)) dup = true;
                if (dup) {
                    census.flags.push_back("duplicate singular point across partitions near " +
                                           subset_string(part.subset));
                    continue;
                }
                seen.push_back({x, y});

                SingularVerdict verdict = verify_singular(cp, {x, y, cd(1.0)});
                if (!verdict.singular) {
                    census.flags.push_back("censused point fails the gradient test at " +
                                           subset_string(part.subset));
                    continue;
                }
                bool node = false;
                try {
                    node = classify_node(cp, x, y);
                } catch (const Error& e) {
                    census.flags.push_back(std::string("node classification failed: ") + e.what());
                    continue;
                }
                if (!node) {
                    census.flags.push_back("affine singularity is not a node at " +
                                           subset_string(part.subset));
                    continue;
                }
                SingularPoint pt;
                pt.coords = {x, y, cd(1.0)};
                pt.multiplicity = 2;
                pt.branches = 2;
                pt.delta = 1;
                pt.kind = SingKind::node;
                pt.provenance = subset_string(part.subset);
                census.points.push_back(pt);
                ++census.affine_node_count;
            }
        }
        census.partitions = std::move(parts);
        long long expected = expected_affine_count(k);
        if (census.affine_node_count != expected) {
            std::ostringstream msg;
            msg << "affine node count " << census.affine_node_count << " differs from expected "
                << expected;
            census.flags.push_back(msg.str());
        }
    }
    return census;
}

}  // namespace kellipse
