#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace stabctab {

// Expression templates off: values are stored in containers and captured by auto.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

inline bool is_integer(const Rational& r) {
    return boost::multiprecision::denominator(r) == 1;
}

inline Integer numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

Integer floor(const Rational& r);
Integer ceil(const Rational& r);

/// Renders "p" for integers and "p/q" otherwise.
std::string to_string(const Rational& r);
std::string to_string(const Integer& n);

/// Accepts "p", "-p", "p/q" (q > 0). Throws ParseError.
Rational parse_rational(std::string_view text);

}  // namespace stabctab
