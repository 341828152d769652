#pragma once

#include <array>
#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kellipse/gaussian.hpp"

namespace kellipse {

enum class Var : int { X = 0, Y = 1, Z = 2 };

/// Bitmask of declared variables.
using VarSet = unsigned;
inline constexpr VarSet VS_X = 1u << 0;
inline constexpr VarSet VS_Y = 1u << 1;
inline constexpr VarSet VS_Z = 1u << 2;
inline constexpr VarSet VS_XY = VS_X | VS_Y;
inline constexpr VarSet VS_XZ = VS_X | VS_Z;
inline constexpr VarSet VS_XYZ = VS_X | VS_Y | VS_Z;

inline VarSet var_bit(Var v) { return 1u << static_cast<int>(v); }

/// Exponent triple (e_x, e_y, e_z).
struct Mono {
    int e[3] = {0, 0, 0};

    Mono() = default;
    Mono(int ex, int ey, int ez) : e{ex, ey, ez} {}

    int total() const { return e[0] + e[1] + e[2]; }
    int operator[](Var v) const { return e[static_cast<int>(v)]; }
    int& operator[](Var v) { return e[static_cast<int>(v)]; }

    friend Mono operator+(const Mono& a, const Mono& b) {
        return {a.e[0] + b.e[0], a.e[1] + b.e[1], a.e[2] + b.e[2]};
    }
    friend bool operator==(const Mono& a, const Mono& b) {
        return a.e[0] == b.e[0] && a.e[1] == b.e[1] && a.e[2] == b.e[2];
    }
    /// True when every exponent of d is <= the matching exponent.
    bool divisible_by(const Mono& d) const {
        return e[0] >= d.e[0] && e[1] >= d.e[1] && e[2] >= d.e[2];
    }
    Mono operator-(const Mono& d) const {
        return {e[0] - d.e[0], e[1] - d.e[1], e[2] - d.e[2]};
    }
};

/// Graded lexicographic order with x > y > z (ascending; the leading term of
/// a polynomial is the map's last entry).
struct MonoGradedLexLess {
    bool operator()(const Mono& a, const Mono& b) const {
        if (a.total() != b.total()) return a.total() < b.total();
        if (a.e[0] != b.e[0]) return a.e[0] < b.e[0];
        if (a.e[1] != b.e[1]) return a.e[1] < b.e[1];
        return a.e[2] < b.e[2];
    }
};

/// Exact multivariate polynomial over Q(i) in (a subset of) x, y, z.
/// Invariant: no zero coefficients are stored, so equality of term maps is
/// polynomial equality. degree of the zero polynomial is a distinct
/// sentinel (empty optional), never -1.
class MultiPoly {
  public:
    using TermMap = std::map<Mono, GaussianRational, MonoGradedLexLess>;

    explicit MultiPoly(VarSet vars = VS_XY) : vars_(vars) {}

    static MultiPoly constant(GaussianRational c, VarSet vars = VS_XY);
    static MultiPoly variable(Var v, VarSet vars);
    static MultiPoly monomial(GaussianRational c, Mono m, VarSet vars);

    VarSet vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    std::optional<int> total_degree() const {
        if (terms_.empty()) return std::nullopt;
        return terms_.rbegin()->first.total();
    }
    int degree_in(Var v) const;

    /// Leading term under graded lex; polynomial must be nonzero.
    std::pair<Mono, GaussianRational> leading_term() const;

    GaussianRational coefficient(const Mono& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? GaussianRational() : it->second;
    }
    void add_term(const Mono& m, const GaussianRational& c);

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly scaled(const GaussianRational& c) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    GaussianRational evaluate(const GaussianRational& x, const GaussianRational& y,
                              const GaussianRational& z) const;
    std::complex<double> evaluate(const std::complex<double>& x, const std::complex<double>& y,
                                  const std::complex<double>& z) const;

    MultiPoly derivative(Var v) const;
    /// Substitutes an exact value for v; v leaves the declared variable set.
    MultiPoly substitute(Var v, const GaussianRational& value) const;
    /// v -> v + shift.
    MultiPoly translate(Var v, const GaussianRational& shift) const;

    /// Requires vars == {x, y} and a nonzero polynomial; every output term
    /// has total degree deg(p), and substitute(z, 1) inverts it.
    MultiPoly homogenize() const;
    MultiPoly dehomogenize() const { return substitute(Var::Z, GaussianRational(Rational(1))); }

    bool has_real_coefficients() const;
    bool is_homogeneous() const;

    /// Canonical text: graded-lex descending, coefficients as "a/b+c/d*i".
    std::string to_string() const;

  private:
    TermMap terms_;
    VarSet vars_;
};

/// Lowest-degree homogeneous part of p after translating `center` to the
/// origin; p must use exactly two variables and vanish at the center.
/// Returned degree is the multiplicity of the curve at the center.
struct InitialForm {
    MultiPoly form;
    int multiplicity;
};
InitialForm initial_form(const MultiPoly& p, const GaussianRational& ca, const GaussianRational& cb);

/// Monic graded-lex square root: returns G with G^2 = F / lc(F).
/// Throws NonGenericError when F is not a square up to a constant.
MultiPoly poly_sqrt(const MultiPoly& F);

/// Quotient F / G when the division is exact, nullopt otherwise.
std::optional<MultiPoly> divide_exact(const MultiPoly& F, const MultiPoly& G);

/// For a polynomial with real coefficients: the primitive integer-coefficient
/// multiple with positive leading graded-lex coefficient, plus the rational
/// factor mu such that normalized = mu * p.
struct NormalizedPoly {
    MultiPoly poly;
    Rational mu;
};
NormalizedPoly real_primitive_normalize(const MultiPoly& p);

/// Float mirror of a MultiPoly for repeated numeric evaluation. Coefficients
/// are divided by 2^scale_log2 so the largest magnitude is ~1; evaluation
/// uses power tables and compensated summation.
class FloatPoly {
  public:
    FloatPoly() = default;
    explicit FloatPoly(const MultiPoly& p);

    std::complex<double> evaluate(const std::complex<double>& x, const std::complex<double>& y,
                                  const std::complex<double>& z) const;
    /// Value plus the sum of absolute term magnitudes; the latter bounds the
    /// cancellation scale (evaluation error is ~ eps * bound).
    std::pair<std::complex<double>, double> evaluate_with_bound(const std::complex<double>& x,
                                                                const std::complex<double>& y,
                                                                const std::complex<double>& z) const;
    double scale_log2() const { return scale_log2_; }
    int degree() const { return degree_; }
    bool empty() const { return terms_.empty(); }

  private:
    struct Term {
        int ex, ey, ez;
        std::complex<double> c;
    };
    std::vector<Term> terms_;
    double scale_log2_ = 0.0;
    int degree_ = 0;
};

}  // namespace kellipse
