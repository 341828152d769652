#include "kellipse/unipoly.hpp"

namespace kellipse {

std::vector<MultiPoly> coefficients_in(const MultiPoly& p, Var v) {
    VarSet rest = p.vars() & ~var_bit(v);
    std::vector<MultiPoly> out(static_cast<size_t>(p.degree_in(v)) + 1, MultiPoly(rest));
    for (const auto& [m, c] : p.terms()) {
        Mono d = m;
        int e = d[v];
        d[v] = 0;
        out[static_cast<size_t>(e)].add_term(d, c);
    }
    return out;
}

QiPoly to_unipoly(const MultiPoly& p) {
    Var the_var = Var::X;
    int seen = 0;
    for (Var v : {Var::X, Var::Y, Var::Z})
        if (p.degree_in(v) > 0) {
            the_var = v;
            ++seen;
        }
    if (seen > 1) throw InvalidArgument("to_unipoly: polynomial uses more than one variable");
    std::vector<GaussianRational> c(static_cast<size_t>(p.degree_in(the_var)) + 1);
    for (const auto& [m, coef] : p.terms()) c[static_cast<size_t>(m[the_var])] = coef;
    return QiPoly(std::move(c));
}

CPoly to_cpoly(const QiPoly& p) {
    std::vector<std::complex<double>> c;
    c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) c.push_back(v.to_complex());
    return CPoly(std::move(c));
}

QiPoly monic(const QiPoly& p) {
    if (p.is_zero()) return p;
    GaussianRational inv = GaussianRational(Rational(1)) / p.leading();
    return p.scaled(inv);
}

QiPoly gcd(QiPoly a, QiPoly b) {
    a = monic(a);
    b = monic(b);
    while (!b.is_zero()) {
        // Remainder of a by monic b.
        QiPoly r = a;
        while (!r.is_zero() && r.degree() >= b.degree()) {
            GaussianRational q = r.leading();
            int shift = r.degree() - b.degree();
            std::vector<GaussianRational> sub(static_cast<size_t>(shift) + 1);
            sub[static_cast<size_t>(shift)] = q;
            r = r - b * QiPoly(std::move(sub));
        }
        a = b;
        b = monic(r);
    }
    return a;
}

bool squarefree(const QiPoly& p) {
    if (p.degree() <= 1) return true;
    return gcd(p, p.derivative()).degree() == 0;
}

}  // namespace kellipse
