#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace frontal {

// Exact arbitrary-precision integers and rationals. Every coefficient in the
// library is a Rational; there is no floating-point mode anywhere.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string rational_to_string(const Rational& x) {
    const Integer num = boost::multiprecision::numerator(x);
    const Integer den = boost::multiprecision::denominator(x);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

} // namespace frontal
