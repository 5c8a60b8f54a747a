#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fse {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

// base^e for integer e (negative allowed, base != 0).
inline Rational pow_rational(const Rational& base, const Int& e) {
    if (base == 0 && e <= 0) throw std::domain_error("pow_rational: zero base with nonpositive exponent");
    Rational acc = 1;
    Rational b = e < 0 ? Rational(denominator(base), numerator(base)) : base;
    for (Int k = abs(e); k > 0; --k) acc *= b;
    return acc;
}

inline std::string to_string(const Rational& r) {
    if (is_integer(r)) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

// Accepts "p", "-p", "p/q".
inline Rational parse_rational(std::string_view s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) return Rational(Int(std::string(s)));
        Int num{std::string(s.substr(0, slash))};
        Int den{std::string(s.substr(slash + 1))};
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_rational: malformed rational '" + std::string(s) + "'");
    }
}

inline double to_double(const Rational& r) { return static_cast<double>(r); }

}  // namespace fse
