#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "kellipse/curve.hpp"
#include "kellipse/dual.hpp"

using namespace kellipse;

namespace {

EllipseConfig config(std::initializer_list<std::pair<long, long>> foci, Rational r) {
    EllipseConfig cfg;
    for (const auto& [u, v] : foci) cfg.foci.push_back({Rational(u), Rational(v)});
    cfg.radius = std::move(r);
    return cfg;
}

EllipseConfig fig5_k3() { return config({{0, 0}, {1, 0}, {0, 1}}, Rational(3)); }

}  // namespace

TEST_CASE("polar of the radius-2 disk is the radius-1/2 disk") {
    auto samples = polar_boundary(config({{0, 0}}, Rational(2)), 90);
    REQUIRE(samples.size() == 90);
    for (const auto& s : samples) {
        CHECK(std::hypot(s.w1, s.w2) == doctest::Approx(0.5).epsilon(1e-6));
        CHECK(s.h == doctest::Approx(2.0).epsilon(1e-6));
        CHECK(s.w1 * s.px + s.w2 * s.py == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("unit disk is self-polar") {
    auto samples = polar_boundary(config({{0, 0}}, Rational(1)), 45);
    for (const auto& s : samples) CHECK(std::hypot(s.w1, s.w2) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("origin must be interior") {
    CHECK_THROWS_AS(polar_boundary(config({{10, 10}}, Rational(1)), 16), NonGenericError);
}

TEST_CASE("dual_inequality_check") {
    SUBCASE("disk radius 2") {
        auto samples = polar_boundary(config({{0, 0}}, Rational(2)), 72);
        auto boundary = sample_primal_boundary(config({{0, 0}}, Rational(2)), 72);
        CHECK(dual_inequality_check(samples, boundary) <= 1e-6);
    }
    SUBCASE("interior points stay strictly inside") {
        auto samples = polar_boundary(config({{0, 0}}, Rational(2)), 36);
        std::vector<std::pair<double, double>> inner{{0.4, 0.3}, {-0.7, 0.2}, {0.0, 0.0}};
        CHECK(dual_inequality_check(samples, inner) < -0.2);
    }
    SUBCASE("k=3 figure configuration") {
        auto samples = polar_boundary(fig5_k3(), 360);
        auto boundary = sample_primal_boundary(fig5_k3(), 360);
        CHECK(dual_inequality_check(samples, boundary) <= 1e-6);
    }
    SUBCASE("empty input rejected") {
        CHECK_THROWS_AS(dual_inequality_check({}, {{0, 0}}), InvalidArgument);
    }
}

TEST_CASE("dual samples form a convex polygon") {
    auto samples = polar_boundary(fig5_k3(), 180);
    std::vector<std::pair<double, double>> pts;
    for (const auto& s : samples) pts.push_back({s.w1, s.w2});
    CHECK(convex_polygon(pts));
}

TEST_CASE("tangency: dual point is normal to the boundary at the argmax") {
    EllipseConfig cfg = fig5_k3();
    CurvePoly cp = ellipse_polynomial(cfg);
    FloatPoly fx(cp.affine.derivative(Var::X));
    FloatPoly fy(cp.affine.derivative(Var::Y));
    double ry = std::pow(2.0, fy.scale_log2() - fx.scale_log2());
    auto samples = polar_boundary(cfg, 40);
    for (const auto& s : samples) {
        double gx = fx.evaluate(s.px, s.py, 0.0).real();
        double gy = ry * fy.evaluate(s.px, s.py, 0.0).real();
        // det > 0 inside, so the gradient points inward; w is outward.
        double norm_g = std::hypot(gx, gy), norm_w = std::hypot(s.w1, s.w2);
        REQUIRE(norm_g > 0);
        double cosangle = -(gx * s.w1 + gy * s.w2) / (norm_g * norm_w);
        CHECK(std::acos(std::clamp(cosangle, -1.0, 1.0)) <= 1e-4);
    }
}

TEST_CASE("scale covariance: scaling the body by s scales the polar by 1/s") {
    EllipseConfig big = config({{0, 0}, {2, 0}, {0, 2}}, Rational(6));  // fig5 scaled by 2
    auto base = polar_boundary(fig5_k3(), 24);
    auto scaled = polar_boundary(big, 24);
    for (size_t i = 0; i < base.size(); ++i) {
        CHECK(scaled[i].w1 == doctest::Approx(base[i].w1 / 2.0).epsilon(1e-6).scale(1));
        CHECK(scaled[i].w2 == doctest::Approx(base[i].w2 / 2.0).epsilon(1e-6).scale(1));
    }
}

TEST_CASE("bipolar check: the polar of the sampled polar re-contains the body") {
    const int n = 1024;  // inscribed-polygon sagitta ~2e-5, well under the 1e-4 budget
    auto samples = polar_boundary(fig5_k3(), n);
    std::vector<std::pair<double, double>> dual_polygon;
    for (const auto& s : samples) dual_polygon.push_back({s.w1, s.w2});
    auto bipolar = polygon_polar_samples(dual_polygon, n);
    // Primal boundary points must lie within 1e-4 of the bipolar polygon.
    auto primal = sample_primal_boundary(fig5_k3(), 256);
    double worst = 0;
    for (const auto& p : primal) worst = std::max(worst, point_to_polygon_distance(p, bipolar));
    CHECK(worst <= 1e-4);
}
