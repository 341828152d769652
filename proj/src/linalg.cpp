#include "kellipse/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace kellipse {

Rational det_rational(const Matrix<Rational>& m) {
    size_t n = m.rows();
    if (n != m.cols()) throw InvalidArgument("det_rational: matrix not square");
    if (n == 0) return Rational(1);

    // Clear denominators row by row; det(M) = det(Z) / prod(row scales).
    std::vector<mpz_class> z(n * n);
    mpz_class scale_prod = 1;
    for (size_t i = 0; i < n; ++i) {
        mpz_class row_lcm = 1;
        for (size_t j = 0; j < n; ++j) {
            const mpz_class& den = m(i, j).denominator();
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), row_lcm.get_mpz_t(), den.get_mpz_t());
            row_lcm = row_lcm / g * den;
        }
        scale_prod *= row_lcm;
        for (size_t j = 0; j < n; ++j)
            z[i * n + j] = m(i, j).numerator() * (row_lcm / m(i, j).denominator());
    }

    // Fraction-free Bareiss; every division is exact.
    int sign = 1;
    mpz_class prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (z[k * n + k] == 0) {
            size_t p = k + 1;
            while (p < n && z[p * n + k] == 0) ++p;
            if (p == n) return Rational(0);
            for (size_t j = 0; j < n; ++j) std::swap(z[k * n + j], z[p * n + j]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                mpz_class v = z[i * n + j] * z[k * n + k] - z[i * n + k] * z[k * n + j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                z[i * n + j] = std::move(v);
            }
            z[i * n + k] = 0;
        }
        prev = z[k * n + k];
    }
    mpz_class det = z[(n - 1) * n + (n - 1)];
    if (sign < 0) det = -det;
    return Rational(det, scale_prod);
}

GaussianRational det_gaussian(const Matrix<GaussianRational>& m) {
    size_t n = m.rows();
    if (n != m.cols()) throw InvalidArgument("det_gaussian: matrix not square");
    if (n == 0) return GaussianRational(Rational(1));
    std::vector<GaussianRational> a(n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);

    int sign = 1;
    GaussianRational prev(Rational(1));
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k * n + k].is_zero()) {
            size_t p = k + 1;
            while (p < n && a[p * n + k].is_zero()) ++p;
            if (p == n) return GaussianRational();
            for (size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
            a[i * n + k] = GaussianRational();
        }
        prev = a[k * n + k];
    }
    GaussianRational det = a[(n - 1) * n + (n - 1)];
    return sign < 0 ? -det : det;
}

double det_lu(std::vector<double> a, int n) {
    double det = 1.0;
    for (int k = 0; k < n; ++k) {
        int p = k;
        for (int i = k + 1; i < n; ++i)
            if (std::fabs(a[size_t(i) * n + k]) > std::fabs(a[size_t(p) * n + k])) p = i;
        if (a[size_t(p) * n + k] == 0.0) return 0.0;
        if (p != k) {
            for (int j = 0; j < n; ++j) std::swap(a[size_t(k) * n + j], a[size_t(p) * n + j]);
            det = -det;
        }
        double pivot = a[size_t(k) * n + k];
        det *= pivot;
        for (int i = k + 1; i < n; ++i) {
            double f = a[size_t(i) * n + k] / pivot;
            for (int j = k + 1; j < n; ++j) a[size_t(i) * n + j] -= f * a[size_t(k) * n + j];
        }
    }
    return det;
}

std::vector<double> sym_eigenvalues(std::vector<double> a, int n) {
    auto off = [&]() {
        double s = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s += a[size_t(i) * n + j] * a[size_t(i) * n + j];
        return s;
    };
    double norm = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) norm += a[size_t(i) * n + j] * a[size_t(i) * n + j];
    const double stop = norm * 1e-30 + 1e-300;

    for (int sweep = 0; sweep < 64 && off() > stop; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = a[size_t(p) * n + q];
                if (apq == 0.0) continue;
                double app = a[size_t(p) * n + p], aqq = a[size_t(q) * n + q];
                double tau = (aqq - app) / (2.0 * apq);
                double t = (tau >= 0 ? 1.0 : -1.0) / (std::fabs(tau) + std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t), s = t * c;
                for (int i = 0; i < n; ++i) {
                    double aip = a[size_t(i) * n + p], aiq = a[size_t(i) * n + q];
                    a[size_t(i) * n + p] = c * aip - s * aiq;
                    a[size_t(i) * n + q] = s * aip + c * aiq;
                }
                for (int j = 0; j < n; ++j) {
                    double apj = a[size_t(p) * n + j], aqj = a[size_t(q) * n + j];
                    a[size_t(p) * n + j] = c * apj - s * aqj;
                    a[size_t(q) * n + j] = s * apj + c * aqj;
                }
            }
        }
    }
    std::vector<double> ev(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) ev[static_cast<size_t>(i)] = a[size_t(i) * n + i];
    std::sort(ev.begin(), ev.end());
    return ev;
}

double sym_lambda_min(std::vector<double> a, int n) {
    return sym_eigenvalues(std::move(a), n).front();
}

}  // namespace kellipse
