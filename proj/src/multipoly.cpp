#include "kellipse/multipoly.hpp"

#include <algorithm>
#include <cmath>

namespace kellipse {

MultiPoly MultiPoly::constant(GaussianRational c, VarSet vars) {
    MultiPoly p(vars);
    p.add_term(Mono(), c);
    return p;
}

MultiPoly MultiPoly::variable(Var v, VarSet vars) {
    if (!(vars & var_bit(v))) throw InvalidArgument("MultiPoly: variable outside declared set");
    Mono m;
    m[v] = 1;
    return monomial(GaussianRational(Rational(1)), m, vars);
}

MultiPoly MultiPoly::monomial(GaussianRational c, Mono m, VarSet vars) {
    for (Var v : {Var::X, Var::Y, Var::Z})
        if (m[v] != 0 && !(vars & var_bit(v)))
            throw InvalidArgument("MultiPoly: exponent on undeclared variable");
    MultiPoly p(vars);
    p.add_term(m, c);
    return p;
}

int MultiPoly::degree_in(Var v) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[v]);
    return d;
}

std::pair<Mono, GaussianRational> MultiPoly::leading_term() const {
    if (terms_.empty()) throw InvalidArgument("MultiPoly: leading term of zero polynomial");
    auto it = terms_.rbegin();
    return {it->first, it->second};
}

void MultiPoly::add_term(const Mono& m, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(vars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (vars_ != o.vars_) throw InvalidArgument("MultiPoly: operands declare different variables");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (vars_ != o.vars_) throw InvalidArgument("MultiPoly: operands declare different variables");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars_ != b.vars_) throw InvalidArgument("MultiPoly: operands declare different variables");
    MultiPoly r(a.vars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma + mb, ca * cb);
    return r;
}

MultiPoly MultiPoly::scaled(const GaussianRational& c) const {
    MultiPoly r(vars_);
    if (c.is_zero()) return r;
    for (const auto& [m, coef] : terms_) r.terms_.emplace(m, coef * c);
    return r;
}

namespace {

template <class S>
std::vector<S> power_table(const S& v, int max_exp, const S& one) {
    std::vector<S> p(static_cast<size_t>(max_exp) + 1, one);
    for (int i = 1; i <= max_exp; ++i) p[i] = p[i - 1] * v;
    return p;
}

}  // namespace

GaussianRational MultiPoly::evaluate(const GaussianRational& x, const GaussianRational& y,
                                     const GaussianRational& z) const {
    GaussianRational one(Rational(1));
    auto px = power_table(x, degree_in(Var::X), one);
    auto py = power_table(y, degree_in(Var::Y), one);
    auto pz = power_table(z, degree_in(Var::Z), one);
    GaussianRational acc;
    for (const auto& [m, c] : terms_) acc += c * px[m.e[0]] * py[m.e[1]] * pz[m.e[2]];
    return acc;
}

std::complex<double> MultiPoly::evaluate(const std::complex<double>& x, const std::complex<double>& y,
                                         const std::complex<double>& z) const {
    // Horner in x over Horner in y over Horner in z, using the sorted term
    // map; coefficients converted on the fly.
    // Terms are grouped by (ex) then (ey); within a group z-degrees descend.
    struct Entry {
        int ex, ey, ez;
        std::complex<double> c;
    };
    std::vector<Entry> entries;
    entries.reserve(terms_.size());
    for (const auto& [m, c] : terms_) entries.push_back({m.e[0], m.e[1], m.e[2], c.to_complex()});
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.ex != b.ex) return a.ex > b.ex;
        if (a.ey != b.ey) return a.ey > b.ey;
        return a.ez > b.ez;
    });
    std::complex<double> acc_x = 0.0;
    size_t i = 0;
    int prev_ex = -1;
    while (i < entries.size()) {
        int ex = entries[i].ex;
        if (prev_ex >= 0)
            for (int s = 0; s < prev_ex - ex; ++s) acc_x *= x;
        std::complex<double> acc_y = 0.0;
        int prev_ey = -1;
        while (i < entries.size() && entries[i].ex == ex) {
            int ey = entries[i].ey;
            if (prev_ey >= 0)
                for (int s = 0; s < prev_ey - ey; ++s) acc_y *= y;
            std::complex<double> acc_z = 0.0;
            int prev_ez = -1;
            while (i < entries.size() && entries[i].ex == ex && entries[i].ey == ey) {
                int ez = entries[i].ez;
                if (prev_ez >= 0)
                    for (int s = 0; s < prev_ez - ez; ++s) acc_z *= z;
                acc_z += entries[i].c;
                prev_ez = ez;
                ++i;
            }
            for (int s = 0; s < prev_ez; ++s) acc_z *= z;
            acc_y += acc_z;
            prev_ey = ey;
        }
        for (int s = 0; s < prev_ey; ++s) acc_y *= y;
        acc_x += acc_y;
        prev_ex = ex;
    }
    for (int s = 0; s < prev_ex; ++s) acc_x *= x;
    return acc_x;
}

MultiPoly MultiPoly::derivative(Var v) const {
    MultiPoly r(vars_);
    for (const auto& [m, c] : terms_) {
        int e = m[v];
        if (e == 0) continue;
        Mono d = m;
        d[v] = e - 1;
        r.add_term(d, c * GaussianRational(Rational(e)));
    }
    return r;
}

MultiPoly MultiPoly::substitute(Var v, const GaussianRational& value) const {
    GaussianRational one(Rational(1));
    auto pw = power_table(value, degree_in(v), one);
    MultiPoly r(vars_ & ~var_bit(v));
    for (const auto& [m, c] : terms_) {
        Mono d = m;
        int e = d[v];
        d[v] = 0;
        r.add_term(d, c * pw[e]);
    }
    return r;
}

MultiPoly MultiPoly::translate(Var v, const GaussianRational& shift) const {
    if (shift.is_zero()) return *this;
    if (!(vars_ & var_bit(v))) throw InvalidArgument("MultiPoly: translating undeclared variable");
    // (v + shift)^e expanded with binomial coefficients.
    int maxe = degree_in(v);
    GaussianRational one(Rational(1));
    auto shift_pow = power_table(shift, maxe, one);
    std::vector<std::vector<mpz_class>> binom(static_cast<size_t>(maxe) + 1);
    for (int n = 0; n <= maxe; ++n) {
        binom[n].resize(static_cast<size_t>(n) + 1);
        binom[n][0] = 1;
        for (int j = 1; j <= n; ++j)
            binom[n][j] = binom[n - 1][j - 1] + (j <= n - 1 ? binom[n - 1][j] : mpz_class(0));
    }
    MultiPoly r(vars_);
    for (const auto& [m, c] : terms_) {
        int e = m[v];
        for (int j = 0; j <= e; ++j) {
            Mono d = m;
            d[v] = j;
            GaussianRational coeff = c * shift_pow[e - j];
            coeff *= GaussianRational(Rational(mpz_class(binom[e][j])));
            r.add_term(d, coeff);
        }
    }
    return r;
}

MultiPoly MultiPoly::homogenize() const {
    if (vars_ != VS_XY) throw InvalidArgument("MultiPoly: homogenize expects a polynomial in x, y");
    if (terms_.empty()) throw InvalidArgument("MultiPoly: cannot homogenize the zero polynomial");
    int d = *total_degree();
    MultiPoly r(VS_XYZ);
    for (const auto& [m, c] : terms_) r.add_term(Mono(m.e[0], m.e[1], d - m.total()), c);
    return r;
}

bool MultiPoly::has_real_coefficients() const {
    for (const auto& [m, c] : terms_)
        if (!c.is_real()) return false;
    return true;
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.total();
    for (const auto& [m, c] : terms_)
        if (m.total() != d) return false;
    return true;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Mono& m = it->first;
        const GaussianRational& c = it->second;
        std::string mono;
        static const char* names[3] = {"x", "y", "z"};
        for (int v = 0; v < 3; ++v) {
            if (m.e[v] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[v];
            if (m.e[v] > 1) mono += "^" + std::to_string(m.e[v]);
        }
        bool first = out.empty();
        if (c.is_real()) {
            Rational r = c.re;
            std::string sep = r.sign() < 0 ? "-" : (first ? "" : "+");
            Rational mag = r.abs();
            std::string body;
            if (mono.empty())
                body = mag.to_string();
            else if (mag == Rational(1))
                body = mono;
            else
                body = mag.to_string() + "*" + mono;
            out += sep + body;
        } else {
            std::string sep = first ? "" : "+";
            if (mono.empty())
                out += sep + "(" + c.to_string() + ")";
            else
                out += sep + "(" + c.to_string() + ")*" + mono;
        }
    }
    return out;
}

InitialForm initial_form(const MultiPoly& p, const GaussianRational& ca, const GaussianRational& cb) {
    VarSet vs = p.vars();
    std::vector<Var> active;
    for (Var v : {Var::X, Var::Y, Var::Z})
        if (vs & var_bit(v)) active.push_back(v);
    if (active.size() != 2)
        throw InvalidArgument("initial_form: expected a polynomial in exactly two variables");
    MultiPoly t = p.translate(active[0], ca).translate(active[1], cb);
    if (!t.coefficient(Mono()).is_zero()) throw InvalidArgument("initial_form: not on curve");
    if (t.is_zero()) throw InvalidArgument("initial_form: zero polynomial");
    int m = t.terms().begin()->first.total();  // map ascends in total degree
    MultiPoly form(vs);
    for (const auto& [mono, c] : t.terms()) {
        if (mono.total() > m) break;
        form.add_term(mono, c);
    }
    return {form, m};
}

MultiPoly poly_sqrt(const MultiPoly& F) {
    if (F.is_zero()) throw NonGenericError("poly_sqrt: zero polynomial");
    auto [lm, lc] = F.leading_term();
    if (lm.e[0] % 2 || lm.e[1] % 2 || lm.e[2] % 2)
        throw NonGenericError("poly_sqrt: leading monomial is not a square");
    Mono half(lm.e[0] / 2, lm.e[1] / 2, lm.e[2] / 2);

    GaussianRational inv_lc = GaussianRational(Rational(1)) / lc;
    MultiPoly target = F.scaled(inv_lc);  // monic
    MultiPoly g = MultiPoly::monomial(GaussianRational(Rational(1)), half, F.vars());
    GaussianRational two(Rational(2));

    // Greedy: repeatedly cancel the leading term of target - g^2 against
    // 2 * lt(g) * t. Each accepted term is strictly below `half`, so the
    // residual's leading monomial strictly decreases.
    for (;;) {
        MultiPoly resid = target - g * g;
        if (resid.is_zero()) return g;
        auto [rm, rc] = resid.leading_term();
        if (!rm.divisible_by(half)) throw NonGenericError("poly_sqrt: not a perfect square");
        Mono tm = rm - half;
        MonoGradedLexLess less;
        if (!less(tm, half)) throw NonGenericError("poly_sqrt: not a perfect square");
        g.add_term(tm, rc / two);
    }
}

std::optional<MultiPoly> divide_exact(const MultiPoly& F, const MultiPoly& G) {
    if (G.is_zero()) throw InvalidArgument("divide_exact: division by zero polynomial");
    if (F.vars() != G.vars()) throw InvalidArgument("divide_exact: variable sets differ");
    auto [gm, gc] = G.leading_term();
    MultiPoly rem = F;
    MultiPoly q(F.vars());
    while (!rem.is_zero()) {
        auto [rm, rc] = rem.leading_term();
        if (!rm.divisible_by(gm)) return std::nullopt;
        Mono qm = rm - gm;
        GaussianRational qc = rc / gc;
        q.add_term(qm, qc);
        rem -= G * MultiPoly::monomial(qc, qm, F.vars());
    }
    return q;
}

NormalizedPoly real_primitive_normalize(const MultiPoly& p) {
    if (p.is_zero()) return {p, Rational(1)};
    if (!p.has_real_coefficients())
        throw InvalidArgument("real_primitive_normalize: coefficients are not all real");
    mpz_class den_lcm = 1;
    for (const auto& [m, c] : p.terms()) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), c.re.denominator().get_mpz_t());
        den_lcm = den_lcm / g * c.re.denominator();
    }
    mpz_class content = 0;
    for (const auto& [m, c] : p.terms()) {
        mpz_class num = c.re.numerator() * (den_lcm / c.re.denominator());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
    }
    Rational mu(den_lcm, content);
    if (p.leading_term().second.re.sign() < 0) mu = -mu;
    return {p.scaled(GaussianRational(mu)), mu};
}

FloatPoly::FloatPoly(const MultiPoly& p) {
    if (p.is_zero()) return;
    degree_ = *p.total_degree();
    double max_log2 = -std::numeric_limits<double>::infinity();
    for (const auto& [m, c] : p.terms()) max_log2 = std::max(max_log2, c.log2_abs());
    scale_log2_ = std::floor(max_log2);
    // Exact scaling by a power of two before conversion keeps coefficients
    // representable even when the exact values overflow double range.
    long e = static_cast<long>(scale_log2_);
    terms_.reserve(p.terms().size());
    for (const auto& [m, c] : p.terms()) {
        mpq_class re = c.re.raw(), im = c.im.raw();
        if (e >= 0) {
            mpq_div_2exp(re.get_mpq_t(), re.get_mpq_t(), static_cast<unsigned long>(e));
            mpq_div_2exp(im.get_mpq_t(), im.get_mpq_t(), static_cast<unsigned long>(e));
        } else {
            mpq_mul_2exp(re.get_mpq_t(), re.get_mpq_t(), static_cast<unsigned long>(-e));
            mpq_mul_2exp(im.get_mpq_t(), im.get_mpq_t(), static_cast<unsigned long>(-e));
        }
        terms_.push_back({m.e[0], m.e[1], m.e[2], {re.get_d(), im.get_d()}});
    }
}

std::complex<double> FloatPoly::evaluate(const std::complex<double>& x, const std::complex<double>& y,
                                         const std::complex<double>& z) const {
    return evaluate_with_bound(x, y, z).first;
}

std::pair<std::complex<double>, double> FloatPoly::evaluate_with_bound(
    const std::complex<double>& x, const std::complex<double>& y,
    const std::complex<double>& z) const {
    if (terms_.empty()) return {0.0, 0.0};
    auto pow_tab = [](const std::complex<double>& v, int n) {
        std::vector<std::complex<double>> t(static_cast<size_t>(n) + 1, 1.0);
        for (int i = 1; i <= n; ++i) t[i] = t[i - 1] * v;
        return t;
    };
    int dx = 0, dy = 0, dz = 0;
    for (const auto& t : terms_) {
        dx = std::max(dx, t.ex);
        dy = std::max(dy, t.ey);
        dz = std::max(dz, t.ez);
    }
    auto px = pow_tab(x, dx), py = pow_tab(y, dy), pz = pow_tab(z, dz);
    // Kahan-compensated accumulation, separately per component.
    double sr = 0, cr = 0, si = 0, ci = 0, bound = 0;
    for (const auto& t : terms_) {
        std::complex<double> v = t.c * px[t.ex] * py[t.ey] * pz[t.ez];
        bound += std::abs(v);
        double yr = v.real() - cr, tr = sr + yr;
        cr = (tr - sr) - yr;
        sr = tr;
        double yi = v.imag() - ci, ti = si + yi;
        ci = (ti - si) - yi;
        si = ti;
    }
    return {{sr, si}, bound};
}

}  // namespace kellipse
