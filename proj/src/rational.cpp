#include "projsym/rational.hpp"

#include <cctype>

namespace projsym {

Rational rational_from_string(const std::string& s)
{
    std::size_t pos = 0;
    auto fail = [&] { throw std::invalid_argument("bad rational: '" + s + "'"); };
    if (s.empty()) fail();
    bool neg = false;
    if (s[pos] == '+' || s[pos] == '-') neg = (s[pos++] == '-');
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail();
    Integer num(s.substr(start, pos - start));
    Integer den = 1;
    if (pos < s.size()) {
        if (s[pos] != '/') fail();
        ++pos;
        start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start || pos != s.size()) fail();
        den = Integer(s.substr(start, pos - start));
        if (den == 0) fail();
    }
    Rational r(num, den);
    return neg ? Rational(-r) : r;
}

std::string to_string(const Rational& r)
{
    std::string s = numer(r).str();
    if (denom(r) != 1) s += "/" + denom(r).str();
    return s;
}

Integer factorial(int m)
{
    Integer f = 1;
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
}

Rational binom(int t, int m)
{
    if (m < 0) return 0;
    Integer num = 1;
    for (int j = 0; j < m; ++j) num *= (t - j);
    return Rational(num, factorial(m));
}

} // namespace projsym
