#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kellipse/curve.hpp"

using namespace kellipse;

namespace {

EllipseConfig config(std::initializer_list<std::pair<long, long>> foci, Rational r) {
    EllipseConfig cfg;
    for (const auto& [u, v] : foci) cfg.foci.push_back({Rational(u), Rational(v)});
    cfg.radius = std::move(r);
    return cfg;
}

MultiPoly mono(long num, int ex, int ey, VarSet vars = VS_XY) {
    return MultiPoly::monomial(GaussianRational(Rational(num)), Mono(ex, ey, 0), vars);
}

}  // namespace

TEST_CASE("ellipse_polynomial") {
    SUBCASE("k=1 circle") {
        CurvePoly cp = ellipse_polynomial(config({{0, 0}}, Rational(2)));
        CHECK(cp.degree == 2);
        // Normalized: x^2 + y^2 - 4, with det_scale -1 recording the flip
        // from the raw determinant r^2 - x^2 - y^2.
        MultiPoly want = mono(1, 2, 0) + mono(1, 0, 2) +
                         MultiPoly::constant(GaussianRational(Rational(-4)), VS_XY);
        CHECK(cp.affine == want);
        CHECK(cp.det_scale == Rational(-1));
    }
    SUBCASE("k=3 generic has degree 8") {
        CurvePoly cp = ellipse_polynomial(config({{0, 0}, {1, 0}, {0, 1}}, Rational(3)));
        CHECK(cp.degree == 8);
        CHECK(degree_check(cp).match);
    }
    SUBCASE("k=4 generic has degree 10 (top-degree cancellation)") {
        EllipseConfig cfg;
        cfg.foci = random_rational_foci(4, 7);
        cfg.radius = Rational(9, 2);
        CurvePoly cp = ellipse_polynomial(cfg);
        CHECK(cp.degree == 10);
        CHECK(cp.degree < 16);  // strictly below deg det bound 2^4
        CHECK(degree_check(cp).match);
    }
    SUBCASE("resource guard") {
        EllipseConfig cfg;
        cfg.foci = random_rational_foci(5, 3);
        cfg.radius = Rational(11);
        CHECK_THROWS_AS(ellipse_polynomial(cfg, 4), ResourceGuardError);
    }
}

TEST_CASE("degenerate_polynomial") {
    SUBCASE("bisecting normal of (0,0) and (1,2)") {
        CurvePoly cp = degenerate_polynomial(config({{0, 0}, {1, 2}}, Rational(0)));
        MultiPoly want = mono(2, 1, 0) + mono(4, 0, 1) +
                         MultiPoly::constant(GaussianRational(Rational(-5)), VS_XY);
        CHECK(cp.affine == want);
        CHECK(cp.degree == 1);
        CHECK(cp.affine.to_string() == "2*x+4*y-5");
        // Homogenized: proportional to 2x + 4y - 5z. Oracle: expanding
        // (d1^2 - d2^2)^2 by hand gives (2x + 4y - 5)^2 at z = 1.
        MultiPoly want_h = MultiPoly::monomial(GaussianRational(Rational(2)), Mono(1, 0, 0), VS_XYZ) +
                           MultiPoly::monomial(GaussianRational(Rational(4)), Mono(0, 1, 0), VS_XYZ) +
                           MultiPoly::monomial(GaussianRational(Rational(-5)), Mono(0, 0, 1), VS_XYZ);
        CHECK(cp.projective == want_h);
    }
    SUBCASE("degrees halve") {
        EllipseConfig c3;
        c3.foci = random_rational_foci(3, 5);
        c3.radius = Rational(0);
        CHECK(degenerate_polynomial(c3).degree == 4);
        EllipseConfig c4;
        c4.foci = random_rational_foci(4, 5);
        c4.radius = Rational(0);
        CHECK(degenerate_polynomial(c4).degree == 5);
    }
    SUBCASE("square relation is exact") {
        EllipseConfig cfg;
        cfg.foci = random_rational_foci(3, 6);
        cfg.radius = Rational(0);
        CurvePoly cp = degenerate_polynomial(cfg);
        MatrixPencil pencil = build_pencil(cfg);
        std::mt19937_64 rng(31);
        std::uniform_int_distribution<int> num(-9, 9);
        for (int t = 0; t < 5; ++t) {
            Rational x(num(rng), 3), y(num(rng), 3);
            GaussianRational lhs = cp.affine.evaluate(GaussianRational(x), GaussianRational(y),
                                                      GaussianRational());
            Rational rhs = cp.det_scale * det_rational(pencil.at(x, y));
            CHECK(lhs * lhs == GaussianRational(rhs));
        }
    }
    SUBCASE("preconditions") {
        CHECK_THROWS_AS(degenerate_polynomial(config({{0, 0}, {1, 2}}, Rational(1))),
                        InvalidArgument);
        CHECK_THROWS_AS(degenerate_polynomial(config({{0, 0}}, Rational(0))), InvalidArgument);
    }
    SUBCASE("coincident foci are not degenerate-consistent") {
        // det L_2(r=0) vanishes identically when the two foci coincide.
        CHECK_THROWS_AS(degenerate_polynomial(config({{1, 1}, {1, 1}}, Rational(0))),
                        NonGenericError);
    }
}

TEST_CASE("degree_check") {
    CHECK(generic_degree(1) == 2);
    CHECK(generic_degree(2) == 2);
    CHECK(generic_degree(3) == 8);
    CHECK(generic_degree(4) == 10);
    CHECK(generic_degree(5) == 32);
    CHECK(generic_degree(6) == 44);
    CHECK(generic_degenerate_degree(2) == 1);
    CHECK(generic_degenerate_degree(3) == 4);
    CHECK(generic_degenerate_degree(4) == 5);

    SUBCASE("mismatch is reported, not thrown") {
        CurvePoly fake;
        fake.degree = 6;
        fake.config = config({{0, 0}, {1, 0}, {0, 1}}, Rational(3));
        DegreeCheck dc = degree_check(fake);
        CHECK(dc.formula == 8);
        CHECK_FALSE(dc.match);
    }
    SUBCASE("coincident foci keep degree 2 at k=2") {
        CurvePoly cp = ellipse_polynomial(config({{1, 1}, {1, 1}}, Rational(2)));
        // det = r^2 (r^2 - 4 d^2): still degree 2 in x, y.
        CHECK(degree_check(cp).computed == 2);
    }
}

TEST_CASE("product_oracle") {
    using cd = std::complex<double>;
    SUBCASE("k=1 identity at z=1") {
        EllipseConfig cfg = config({{0, 0}}, Rational(3));
        std::mt19937_64 rng(33);
        std::uniform_real_distribution<double> u(-2, 2);
        for (int t = 0; t < 10; ++t) {
            cd x(u(rng), u(rng)), y(u(rng), u(rng));
            cd want = 9.0 - x * x - y * y;
            cd got = product_oracle(cfg, x, y, 1.0);
            CHECK(std::abs(got - want) <= 1e-9 * (1.0 + std::abs(want)));
        }
    }
    SUBCASE("matches the exact polynomial at random complex points, k <= 4") {
        std::mt19937_64 rng(34);
        std::uniform_real_distribution<double> u(-2, 2);
        for (int k = 1; k <= 4; ++k) {
            EllipseConfig cfg;
            cfg.foci = random_rational_foci(k, 40 + static_cast<unsigned long>(k));
            cfg.radius = Rational(2 * k + 1);
            CurvePoly cp = ellipse_polynomial(cfg);
            FloatPoly fp(cp.projective);
            double mu = cp.det_scale.to_double();
            for (int t = 0; t < 25; ++t) {
                cd x(u(rng), u(rng)), y(u(rng), u(rng)), z(1.0, u(rng) * 0.1);
                cd oracle;
                try {
                    oracle = product_oracle(cfg, x, y, z);
                } catch (const InvalidArgument&) {
                    continue;  // branch point
                }
                cd poly = fp.evaluate(x, y, z) * std::pow(2.0, fp.scale_log2()) / mu;
                CHECK(std::abs(poly - oracle) <= 1e-9 * (1.0 + std::abs(oracle)));
            }
        }
    }
    SUBCASE("even k: the raw product vanishes to order C(k, k/2) in z") {
        for (int k : {2, 4}) {
            EllipseConfig cfg;
            cfg.foci = random_rational_foci(k, 50 + static_cast<unsigned long>(k));
            cfg.radius = Rational(k + 2);
            long long c = k == 2 ? 2 : 6;
            // product_oracle divides by z^C; the quotient must stay bounded
            // as z -> 0, so the raw product scales like z^C.
            cd x(0.7, 0.3), y(-0.4, 0.2);
            cd q1 = product_oracle(cfg, x, y, cd(1e-3, 0));
            cd q2 = product_oracle(cfg, x, y, cd(1e-4, 0));
            double raw1 = std::abs(q1) * std::pow(1e-3, double(c));
            double raw2 = std::abs(q2) * std::pow(1e-4, double(c));
            double slope = std::log10(raw1 / raw2);
            CHECK(slope == doctest::Approx(double(c)).epsilon(0.05));
        }
    }
    SUBCASE("branch point rejected") {
        EllipseConfig cfg = config({{0, 0}, {1, 0}}, Rational(3));
        CHECK_THROWS_AS(product_oracle(cfg, 0.0, 0.0, 1.0), InvalidArgument);
    }
}

TEST_CASE("curve invariants") {
    EllipseConfig cfg = config({{0, 0}, {1, 0}, {0, 1}}, Rational(3));
    CurvePoly cp = ellipse_polynomial(cfg);

    SUBCASE("projective part is homogeneous of the stated degree") {
        CHECK(cp.projective.is_homogeneous());
        CHECK(*cp.projective.total_degree() == cp.degree);
        CHECK(cp.projective.dehomogenize() == cp.affine);
    }
    SUBCASE("coefficients are real") {
        CHECK(cp.affine.has_real_coefficients());
    }
    SUBCASE("relabeling foci leaves the polynomial unchanged") {
        CurvePoly other = ellipse_polynomial(config({{0, 1}, {0, 0}, {1, 0}}, Rational(3)));
        CHECK(cp.affine == other.affine);
    }
    SUBCASE("holdout check trips on interpolation inconsistency") {
        // Sanity: the normal path never throws InternalError.
        CHECK_NOTHROW(ellipse_polynomial(cfg));
    }
}
