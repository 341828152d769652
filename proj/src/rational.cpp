#include "kellipse/rational.hpp"

#include <cctype>
#include <cmath>

#include "kellipse/gaussian.hpp"

namespace kellipse {

Rational Rational::from_string(const std::string& s) {
    if (s.empty()) throw InvalidArgument("Rational: empty string");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        mpz_class num, den;
        if (num.set_str(s.substr(0, slash), 10) != 0 || den.set_str(s.substr(slash + 1), 10) != 0)
            throw InvalidArgument("Rational: cannot parse \"" + s + "\"");
        return Rational(num, den);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        size_t frac_digits = s.size() - dot - 1;
        if (frac_digits == 0 || digits.empty() || digits == "-" || digits == "+")
            throw InvalidArgument("Rational: cannot parse \"" + s + "\"");
        mpz_class num;
        if (num.set_str(digits, 10) != 0)
            throw InvalidArgument("Rational: cannot parse \"" + s + "\"");
        mpz_class den = 1;
        for (size_t j = 0; j < frac_digits; ++j) den *= 10;
        return Rational(num, den);
    }
    mpz_class num;
    if (num.set_str(s, 10) != 0)
        throw InvalidArgument("Rational: cannot parse \"" + s + "\"");
    return Rational(num);
}

double Rational::log2_abs() const {
    if (is_zero()) return -std::numeric_limits<double>::infinity();
    long exp_num = 0, exp_den = 0;
    double m_num = mpz_get_d_2exp(&exp_num, numerator().get_mpz_t());
    double m_den = mpz_get_d_2exp(&exp_den, denominator().get_mpz_t());
    return std::log2(std::fabs(m_num)) + double(exp_num) - std::log2(std::fabs(m_den)) - double(exp_den);
}

std::string Rational::to_string() const {
    if (is_integer()) return numerator().get_str();
    return numerator().get_str() + "/" + denominator().get_str();
}

double GaussianRational::log2_abs() const {
    if (is_zero()) return -std::numeric_limits<double>::infinity();
    return std::max(re.log2_abs(), im.log2_abs());
}

std::string GaussianRational::to_string() const {
    if (is_zero()) return "0";
    if (im.is_zero()) return re.to_string();
    std::string imag = im.abs().to_string() + "*i";
    if (re.is_zero()) return (im.sign() < 0 ? "-" : "") + imag;
    return re.to_string() + (im.sign() < 0 ? "-" : "+") + imag;
}

}  // namespace kellipse
