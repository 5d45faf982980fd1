#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace projsym {

// Exact rational scalar. cpp_rational keeps values reduced with a positive
// denominator, which is exactly the canonical form we need.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numer(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denom(const Rational& r) { return boost::multiprecision::denominator(r); }

inline Rational rational(long long num, long long den = 1)
{
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    return Rational(num, den);
}

// Parses "p" or "p/q" with optional sign. Rejects anything else.
Rational rational_from_string(const std::string& s);

std::string to_string(const Rational& r);

Integer factorial(int m);

// Ordinary binomial coefficient for integer arguments, zero when m < 0.
Rational binom(int t, int m);

} // namespace projsym
