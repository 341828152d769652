#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kellipse/lmi.hpp"

using namespace kellipse;

namespace {

EllipseConfig config(std::initializer_list<std::pair<long, long>> foci, Rational r) {
    EllipseConfig cfg;
    for (const auto& [u, v] : foci) cfg.foci.push_back({Rational(u), Rational(v)});
    cfg.radius = std::move(r);
    return cfg;
}

}  // namespace

TEST_CASE("tensor_sum") {
    SUBCASE("1x1 case reduces to B + 2I") {
        Matrix<Rational> a(1, 1);
        a(0, 0) = Rational(2);
        Matrix<Rational> b(2, 2);
        b(0, 1) = b(1, 0) = Rational(1);
        Matrix<Rational> s = tensor_sum(a, b);
        REQUIRE(s.rows() == 2);
        CHECK(s(0, 0) == Rational(2));
        CHECK(s(0, 1) == Rational(1));
        CHECK(s(1, 0) == Rational(1));
        CHECK(s(1, 1) == Rational(2));
    }
    SUBCASE("eigenvalues are pairwise sums (random symmetric 2x2)") {
        std::mt19937_64 rng(21);
        std::uniform_real_distribution<double> u(-3, 3);
        for (int t = 0; t < 30; ++t) {
            Matrix<Rational> a(2, 2), b(2, 2);
            auto rr = [&] { return Rational(int(u(rng) * 8), 8); };
            a(0, 0) = rr(); a(1, 1) = rr(); a(0, 1) = a(1, 0) = rr();
            b(0, 0) = rr(); b(1, 1) = rr(); b(0, 1) = b(1, 0) = rr();
            Matrix<Rational> s = tensor_sum(a, b);
            auto to_vec = [](const Matrix<Rational>& m) {
                std::vector<double> v(m.rows() * m.cols());
                for (size_t i = 0; i < m.rows(); ++i)
                    for (size_t j = 0; j < m.cols(); ++j) v[i * m.cols() + j] = m(i, j).to_double();
                return v;
            };
            auto ea = sym_eigenvalues(to_vec(a), 2);
            auto eb = sym_eigenvalues(to_vec(b), 2);
            auto es = sym_eigenvalues(to_vec(s), 4);
            std::vector<double> sums;
            for (double x : ea)
                for (double y : eb) sums.push_back(x + y);
            std::sort(sums.begin(), sums.end());
            for (size_t i = 0; i < 4; ++i) CHECK(es[i] == doctest::Approx(sums[i]).epsilon(1e-9));
        }
    }
    SUBCASE("zero matrices") {
        Matrix<Rational> z2(2, 2), z3(3, 3);
        CHECK(tensor_sum(z2, z3) == Matrix<Rational>(6, 6));
    }
}

TEST_CASE("build_pencil") {
    SUBCASE("k=1 circle block") {
        EllipseConfig cfg = config({{0, 0}}, Rational(2));
        MatrixPencil p = build_pencil(cfg);
        REQUIRE(p.n == 2);
        // L = [[r+x, y], [y, r-x]]
        Matrix<Rational> at = p.at(Rational(3), Rational(5));
        CHECK(at(0, 0) == Rational(5));
        CHECK(at(0, 1) == Rational(5));
        CHECK(at(1, 0) == Rational(5));
        CHECK(at(1, 1) == Rational(-1));
        CHECK(det_rational(at) == Rational(2 * 2 - 3 * 3 - 5 * 5));
    }
    SUBCASE("k=2 determinant against the sign-product oracle") {
        EllipseConfig cfg = config({{0, 0}, {1, 2}}, Rational(4));
        MatrixPencil p = build_pencil(cfg);
        REQUIRE(p.n == 4);
        std::mt19937_64 rng(22);
        std::uniform_int_distribution<int> num(-12, 12);
        for (int t = 0; t < 20; ++t) {
            Rational x(num(rng), 4), y(num(rng), 4);
            double det = det_rational(p.at(x, y)).to_double();
            double xd = x.to_double(), yd = y.to_double();
            double d1 = std::hypot(xd, yd), d2 = std::hypot(xd - 1, yd - 2);
            double prod = 1;
            for (int s1 : {-1, 1})
                for (int s2 : {-1, 1}) prod *= 4.0 - s1 * d1 - s2 * d2;
            CHECK(std::fabs(det - prod) <= 1e-9 * std::max({1.0, std::fabs(det), std::fabs(prod)}));
        }
    }
    SUBCASE("structure for any k") {
        for (int k = 1; k <= 4; ++k) {
            EllipseConfig cfg;
            for (int i = 0; i < k; ++i) cfg.foci.push_back({Rational(i, 2), Rational(i * i, 3)});
            cfg.radius = Rational(k + 1);
            MatrixPencil p = build_pencil(cfg);
            CHECK(p.n == (1u << k));
            CHECK(p.A.is_symmetric());
            CHECK(p.B.is_symmetric());
            CHECK(p.C.is_symmetric());
            // The tensor sum of the per-focus blocks makes A diagonal with
            // entry k - 2*popcount at each index, and B the 0/1 adjacency
            // matrix of the k-cube.
            for (size_t i = 0; i < p.n; ++i)
                for (size_t j = 0; j < p.n; ++j) {
                    if (i == j) {
                        int pop = 0;
                        for (int b = 0; b < k; ++b) pop += int(i >> b) & 1;
                        CHECK(p.A(i, i) == Rational(k - 2 * pop));
                    } else {
                        CHECK(p.A(i, j) == Rational(0));
                        size_t diff = i ^ j;
                        bool one_bit = diff != 0 && (diff & (diff - 1)) == 0;
                        CHECK(p.B(i, j) == Rational(one_bit ? 1 : 0));
                    }
                }
        }
    }
}

TEST_CASE("lambda_min") {
    EllipseConfig unit = config({{0, 0}}, Rational(1));
    MatrixPencil p = build_pencil(unit);
    CHECK(pencil_lambda_min(p, 0, 0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(pencil_lambda_min(p, 1, 0) == doctest::Approx(0.0).scale(1).epsilon(1e-10));

    SUBCASE("identity with the distance sum (randomized, k <= 5)") {
        std::mt19937_64 rng(23);
        std::uniform_real_distribution<double> u(-3, 3);
        for (int k = 1; k <= 5; ++k) {
            EllipseConfig cfg;
            cfg.foci = random_rational_foci(k, 1000 + static_cast<unsigned long>(k));
            cfg.radius = Rational(2 * k + 1);
            FloatPencil fp(build_pencil(cfg));
            for (int t = 0; t < 20; ++t) {
                double x = u(rng), y = u(rng);
                double lmin = fp.lambda_min(x, y);
                double slack = cfg.radius.to_double() - distance_sum(cfg, x, y);
                CHECK(std::fabs(lmin - slack) <= 1e-8 * std::max(1.0, std::fabs(slack)));
            }
        }
    }
}

TEST_CASE("membership") {
    CHECK(membership(config({{0, 0}, {1, 0}}, Rational(3)), 0.5, 0).status == Region::interior);
    CHECK(membership(config({{0, 0}}, Rational(2)), 2.0, 0).status == Region::boundary);
    CHECK(membership(config({{0, 0}, {1, 0}, {0, 1}}, Rational(3)), 10, 10).status == Region::exterior);

    SUBCASE("invariant under focus relabeling") {
        std::mt19937_64 rng(24);
        std::uniform_real_distribution<double> u(-4, 4);
        EllipseConfig cfg = config({{0, 0}, {2, 1}, {-1, 1}}, Rational(6));
        EllipseConfig perm = config({{-1, 1}, {0, 0}, {2, 1}}, Rational(6));
        for (int t = 0; t < 50; ++t) {
            double x = u(rng), y = u(rng);
            CHECK(membership(cfg, x, y).status == membership(perm, x, y).status);
        }
    }
}

TEST_CASE("support_function") {
    SUBCASE("circle radius 2") {
        auto s = support_function(config({{0, 0}}, Rational(2)), 1, 0);
        CHECK(s.value == doctest::Approx(2.0).epsilon(1e-8));
        CHECK(s.px == doctest::Approx(2.0).epsilon(1e-6));
        CHECK(s.py == doctest::Approx(0.0).scale(1).epsilon(1e-6));
    }
    SUBCASE("translated circle") {
        auto s = support_function(config({{1, 0}}, Rational(1)), 1, 0);
        CHECK(s.value == doctest::Approx(2.0).epsilon(1e-8));
    }
    SUBCASE("2-ellipse against a dense boundary scan") {
        EllipseConfig cfg = config({{-1, 0}, {1, 0}}, Rational(4));
        auto s = support_function(cfg, 1, 0);
        FloatPencil fp(build_pencil(cfg));
        double best = -1e300;
        for (int i = 0; i < 100000; ++i) {
            double phi = 2.0 * M_PI * i / 100000;
            auto b = boundary_point(fp, {0, 0}, phi);
            best = std::max(best, b.first);
        }
        CHECK(std::fabs(s.value - best) <= 1e-6);
    }
    SUBCASE("sublinearity on sampled directions") {
        EllipseConfig cfg = config({{0, 0}, {1, 0}, {0, 1}}, Rational(3));
        std::mt19937_64 rng(25);
        std::uniform_real_distribution<double> u(-1, 1);
        for (int t = 0; t < 15; ++t) {
            double ax = u(rng), ay = u(rng), bx = u(rng), by = u(rng);
            if (std::hypot(ax, ay) < 0.1 || std::hypot(bx, by) < 0.1 ||
                std::hypot(ax + bx, ay + by) < 0.1)
                continue;
            double ha = support_function(cfg, ax, ay).value;
            double hb = support_function(cfg, bx, by).value;
            double hab = support_function(cfg, ax + bx, ay + by).value;
            CHECK(hab <= ha + hb + 1e-7);
        }
    }
    SUBCASE("empty interior") {
        // Radius too small: the distance sum can never be this low.
        CHECK_THROWS_AS(support_function(config({{0, 0}, {4, 0}}, Rational(1)), 1, 0),
                        NonGenericError);
    }
}
