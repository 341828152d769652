#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

#include "kellipse/error.hpp"

namespace kellipse {

/// Arbitrary-precision rational, always stored reduced with a positive
/// denominator. Backed by GMP; the wrapper exists to guarantee canonical
/// form on every construction path (mpq_class does not canonicalize
/// constructor arguments on its own).
class Rational {
  public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}  // NOLINT: implicit by design
    Rational(long num, long den) : q_(num, den) { canonicalize_checked(); }
    Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) { canonicalize_checked(); }
    explicit Rational(const mpz_class& n) : q_(n) {}
    explicit Rational(const mpq_class& q) : q_(q) { canonicalize_checked(); }

    /// Accepts "a", "a/b", and decimal literals like "-1.25".
    static Rational from_string(const std::string& s);
    /// Exact dyadic rational equal to the double.
    static Rational from_double(double d) { return Rational(mpq_class(d)); }

    const mpz_class& numerator() const { return q_.get_num(); }
    const mpz_class& denominator() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    double to_double() const { return q_.get_d(); }
    /// Approximate log2 of |value|; safe for magnitudes far outside double range.
    double log2_abs() const;
    std::string to_string() const;

    Rational operator-() const { return Rational(mpq_class(-q_), already_canonical{}); }
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw InvalidArgument("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

  private:
    struct already_canonical {};
    Rational(mpq_class q, already_canonical) : q_(std::move(q)) {}

    void canonicalize_checked() {
        if (q_.get_den() == 0) throw InvalidArgument("Rational: zero denominator");
        q_.canonicalize();
    }

    mpq_class q_;
};

}  // namespace kellipse
