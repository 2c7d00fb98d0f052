#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hfg {

// All path lengths, cross numbers and potentials are exact rationals.
// No property decision anywhere in this library touches floating point.
using Rational = boost::rational<long long>;

// "p/q" with the slash always present; files use this form.
inline std::string rational_to_string(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// Reduced human form: "3" instead of "3/1".
inline std::string rational_pretty(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return rational_to_string(r);
}

// Accepts "p/q" or a bare integer.
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(s));
        long long num = std::stoll(s.substr(0, slash));
        long long den = std::stoll(s.substr(slash + 1));
        return Rational(num, den);
    } catch (const boost::bad_rational&) {
        throw std::invalid_argument("zero denominator in rational: " + s);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational: " + s);
    }
}

inline long long gcd_ll(long long a, long long b) {
    while (b != 0) { long long t = a % b; a = b; b = t; }
    return a < 0 ? -a : a;
}

inline long long lcm_ll(long long a, long long b) {
    if (a == 0 || b == 0) return 0;
    return (a / gcd_ll(a, b)) * b;
}

}  // namespace hfg
