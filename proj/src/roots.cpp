#include "kellipse/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace kellipse {

namespace {

using cd = std::complex<double>;

// p and p' at x in one Horner pass.
std::pair<cd, cd> eval_with_derivative(const std::vector<cd>& c, const cd& x) {
    cd p = c.back(), dp = 0.0;
    for (size_t i = c.size() - 1; i-- > 0;) {
        dp = dp * x + p;
        p = p * x + c[i];
    }
    return {p, dp};
}

}  // namespace

std::vector<cd> aberth_roots(const CPoly& poly, double tol, int max_iter) {
    if (poly.is_zero()) throw InvalidArgument("aberth_roots: zero polynomial");
    std::vector<cd> c = poly.coeffs();
    // Scale so the largest coefficient is 1; the roots are unchanged.
    double cmax = 0;
    for (const auto& v : c) cmax = std::max(cmax, std::abs(v));
    for (auto& v : c) v /= cmax;

    // Exact roots at the origin: strip trailing zero coefficients.
    size_t zeros = 0;
    while (zeros < c.size() - 1 && std::abs(c[zeros]) == 0.0) ++zeros;
    std::vector<cd> roots(zeros, 0.0);
    c.erase(c.begin(), c.begin() + static_cast<long>(zeros));

    int n = static_cast<int>(c.size()) - 1;
    if (n == 0) return roots;

    double lead = std::abs(c.back());
    double bound = 0;
    for (int i = 0; i < n; ++i) bound = std::max(bound, std::abs(c[static_cast<size_t>(i)]) / lead);
    double radius = 1.0 + bound;

    std::vector<cd> x(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        double theta = 2.0 * M_PI * i / n + 0.376;  // offset breaks symmetry locking
        x[static_cast<size_t>(i)] = std::polar(radius * (0.5 + 0.5 * (i % 7) / 7.0), theta);
    }

    // Stop criterion per root: |p(x)| below the attainable evaluation
    // accuracy eps * sum |c_j| |x|^j. This is what terminates multiple-root
    // clusters, whose corrections never reach `tol`.
    const double eps_stop = 8.0 * n * 2.220446049250313e-16;
    auto bound_at = [&](const cd& v) {
        double ax = std::abs(v), s = 0, pw = 1;
        for (const auto& coef : c) {
            s += std::abs(coef) * pw;
            pw *= ax;
        }
        return s;
    };

    for (int iter = 0; iter < max_iter; ++iter) {
        double worst = 0;
        bool all_frozen = true;
        for (int i = 0; i < n; ++i) {
            auto [p, dp] = eval_with_derivative(c, x[static_cast<size_t>(i)]);
            if (std::abs(p) <= eps_stop * bound_at(x[static_cast<size_t>(i)])) continue;
            all_frozen = false;
            cd ratio = (dp == cd(0.0)) ? cd(0.0) : p / dp;
            cd sum = 0.0;
            for (int j = 0; j < n; ++j)
                if (j != i) sum += 1.0 / (x[static_cast<size_t>(i)] - x[static_cast<size_t>(j)]);
            cd denom = 1.0 - ratio * sum;
            cd w = (dp == cd(0.0) || denom == cd(0.0)) ? cd(0.02, 0.017)  // nudge off a bad spot
                                                       : ratio / denom;
            x[static_cast<size_t>(i)] -= w;
            worst = std::max(worst, std::abs(w) / (1.0 + std::abs(x[static_cast<size_t>(i)])));
        }
        if (all_frozen || worst <= tol) {
            roots.insert(roots.end(), x.begin(), x.end());
            return roots;
        }
    }
    std::ostringstream msg;
    msg << "aberth_roots: no convergence after " << max_iter << " iterations on degree " << n
        << " polynomial (radius " << radius << ")";
    throw ConvergenceError(msg.str());
}

std::vector<RootCluster> complex_roots(const CPoly& poly, double cluster_tol) {
    std::vector<cd> roots = aberth_roots(poly);
    size_t n = roots.size();
    // Union-find merge of roots within cluster_tol * max(1, |root|).
    std::vector<size_t> parent(n);
    std::iota(parent.begin(), parent.end(), size_t{0});
    auto find = [&](size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            double scale = std::max({1.0, std::abs(roots[i]), std::abs(roots[j])});
            if (std::abs(roots[i] - roots[j]) <= cluster_tol * scale) {
                size_t a = find(i), b = find(j);
                if (a != b) parent[a] = b;
            }
        }
    std::vector<RootCluster> out;
    for (size_t i = 0; i < n; ++i) {
        if (find(i) != i) continue;
        cd sum = 0.0;
        int count = 0;
        for (size_t j = 0; j < n; ++j)
            if (find(j) == i) {
                sum += roots[j];
                ++count;
            }
        out.push_back({sum / double(count), count});
    }
    std::sort(out.begin(), out.end(), [](const RootCluster& a, const RootCluster& b) {
        if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
        return a.value.imag() < b.value.imag();
    });

    double cmax = 0;
    for (const auto& v : poly.coeffs()) cmax = std::max(cmax, std::abs(v));
    for (const auto& rc : out) {
        double residual = std::abs(poly.eval(rc.value));
        double height = std::pow(std::max(1.0, std::abs(rc.value)), poly.degree());
        if (residual > 1e-6 * cmax * height)
            throw ConvergenceError("complex_roots: residual check failed");
    }
    return out;
}

}  // namespace kellipse
