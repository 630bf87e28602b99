#pragma once

#include "ixcalc/integer.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace ixcalc {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator (both guaranteed by the backend).
using Rational = boost::multiprecision::cpp_rational;

inline Integer numer(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denom(const Rational& r) { return boost::multiprecision::denominator(r); }

/// Builds p/q from any integer pair with q != 0; the sign moves onto the
/// numerator and the gcd is divided out.
inline Rational make_rational(Integer num, Integer den) {
    if (den == 0)
        throw std::invalid_argument("make_rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(std::move(num), std::move(den));
}

/// Renders "p/q" with the denominator always spelled out, so 1 prints as "1/1".
inline std::string rational_str(const Rational& r) {
    return numer(r).str() + "/" + denom(r).str();
}

} // namespace ixcalc
