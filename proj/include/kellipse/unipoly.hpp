#pragma once

#include <complex>
#include <vector>

#include "kellipse/multipoly.hpp"

namespace kellipse {

/// Dense univariate polynomial; coefficient index = degree. The invariant is
/// a nonzero leading coefficient unless the polynomial is zero (empty).
template <class C>
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly zero() { return UniPoly(); }
    static UniPoly constant(C v) { return UniPoly(std::vector<C>{std::move(v)}); }

    const std::vector<C>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const C& leading() const { return c_.back(); }
    C coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : C(); }

    void set_coeff(int i, C v) {
        if (i >= static_cast<int>(c_.size())) c_.resize(static_cast<size_t>(i) + 1, C());
        c_[static_cast<size_t>(i)] = std::move(v);
        trim();
    }

    template <class S>
    S eval(const S& x) const {
        if (c_.empty()) return S();
        S acc = S(c_.back());
        for (auto it = c_.rbegin() + 1; it != c_.rend(); ++it) acc = acc * x + S(*it);
        return acc;
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return UniPoly();
        std::vector<C> d(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * C(static_cast<long>(i));
        return UniPoly(std::move(d));
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<C> r(std::max(a.c_.size(), b.c_.size()), C());
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
        return UniPoly(std::move(r));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        std::vector<C> r(std::max(a.c_.size(), b.c_.size()), C());
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] - b.c_[i];
        return UniPoly(std::move(r));
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        std::vector<C> r(a.c_.size() + b.c_.size() - 1, C());
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        return UniPoly(std::move(r));
    }
    UniPoly scaled(const C& s) const {
        std::vector<C> r = c_;
        for (auto& v : r) v = v * s;
        return UniPoly(std::move(r));
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  private:
    void trim() {
        while (!c_.empty() && is_zero_coeff(c_.back())) c_.pop_back();
    }
    static bool is_zero_coeff(const GaussianRational& v) { return v.is_zero(); }
    static bool is_zero_coeff(const Rational& v) { return v.is_zero(); }
    static bool is_zero_coeff(const std::complex<double>& v) { return v == std::complex<double>(0.0); }
    static bool is_zero_coeff(double v) { return v == 0.0; }

    std::vector<C> c_;
};

using QiPoly = UniPoly<GaussianRational>;
using CPoly = UniPoly<std::complex<double>>;

/// Coefficients of p viewed as univariate in v; entry i is the MultiPoly
/// coefficient (with v removed from the variable set) of v^i.
std::vector<MultiPoly> coefficients_in(const MultiPoly& p, Var v);

/// Collapses a MultiPoly that uses at most one variable into a UniPoly.
QiPoly to_unipoly(const MultiPoly& p);

CPoly to_cpoly(const QiPoly& p);

QiPoly monic(const QiPoly& p);
QiPoly gcd(QiPoly a, QiPoly b);
bool squarefree(const QiPoly& p);

}  // namespace kellipse
