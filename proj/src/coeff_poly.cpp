#include "projsym/coeff_poly.hpp"

#include <cctype>
#include <sstream>

namespace projsym {

CoeffPoly::CoeffPoly(int n, const Scalar& c) : n_(n)
{
    if (!c.is_zero()) terms_[MultiIndex(n)] = c;
}

CoeffPoly CoeffPoly::variable(int n, int axis)
{
    if (axis < 1 || axis > n) throw std::out_of_range("CoeffPoly::variable: axis");
    return monomial(n, MultiIndex::unit(n, axis - 1), Scalar(1));
}

CoeffPoly CoeffPoly::monomial(int n, const MultiIndex& m, const Scalar& c)
{
    CoeffPoly p(n);
    p.add_term(m, c);
    return p;
}

int CoeffPoly::total_degree() const
{
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.order());
    return d;
}

int CoeffPoly::lambda_degree() const
{
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, c.degree());
    return d;
}

Scalar CoeffPoly::coeff(const MultiIndex& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar() : it->second;
}

void CoeffPoly::add_term(const MultiIndex& m, const Scalar& c)
{
    if (m.size() != n_) throw std::invalid_argument("CoeffPoly: index length != dimension");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void CoeffPoly::check_dim(const CoeffPoly& o) const
{
    if (n_ != o.n_) throw std::invalid_argument("CoeffPoly: dimension mismatch");
}

CoeffPoly CoeffPoly::operator-() const
{
    CoeffPoly r(n_);
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

CoeffPoly& CoeffPoly::operator+=(const CoeffPoly& o)
{
    check_dim(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

CoeffPoly& CoeffPoly::operator-=(const CoeffPoly& o)
{
    check_dim(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b)
{
    a.check_dim(b);
    CoeffPoly r(a.n_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            r.add_term(ma + mb, ca * cb);
    return r;
}

CoeffPoly CoeffPoly::scaled(const Scalar& c) const
{
    CoeffPoly r(n_);
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.add_term(m, v * c);
    return r;
}

CoeffPoly CoeffPoly::differentiate(int axis) const
{
    if (axis < 1 || axis > n_) throw std::out_of_range("CoeffPoly::differentiate: axis");
    CoeffPoly r(n_);
    for (const auto& [m, c] : terms_) {
        int e = m[axis - 1];
        if (e == 0) continue;
        r.add_term(m.plus(axis - 1, -1), c * Scalar(e));
    }
    return r;
}

CoeffPoly CoeffPoly::derivative(const MultiIndex& m) const
{
    CoeffPoly r = *this;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < m[i]; ++j) r = r.differentiate(i + 1);
    return r;
}

CoeffPoly CoeffPoly::eval_lambda(const Rational& value) const
{
    CoeffPoly r(n_);
    for (const auto& [m, c] : terms_) r.add_term(m, Scalar(c.eval(value)));
    return r;
}

CoeffPoly CoeffPoly::substitute_lambda(const Scalar& value) const
{
    CoeffPoly r(n_);
    for (const auto& [m, c] : terms_) r.add_term(m, c.substitute(value));
    return r;
}

std::string CoeffPoly::str() const
{
    if (terms_.empty()) return "0";
    // expanded over (x-monomial, lambda-power) pairs, leading x-monomials first
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const MultiIndex& m = it->first;
        const Scalar& s = it->second;
        for (int p = s.degree(); p >= 0; --p) {
            Rational c = s.coeff(p);
            if (c == 0) continue;
            if (!first) os << (c > 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            first = false;
            Rational a = boost::multiprecision::abs(c);
            bool unit = (a == 1);
            bool havevar = (p > 0) || (m.order() > 0);
            if (!unit || !havevar) os << to_string(a);
            bool need_star = !unit || !havevar;
            if (p > 0) {
                if (need_star) os << "*";
                os << "l";
                if (p > 1) os << "^" << p;
                need_star = true;
            }
            for (int i = 0; i < n_; ++i) {
                if (m[i] == 0) continue;
                if (need_star) os << "*";
                os << "x" << (i + 1);
                if (m[i] > 1) os << "^" << m[i];
                need_star = true;
            }
        }
    }
    return os.str();
}

namespace {

// Minimal recursive-descent parser for the canonical text form:
//   expr := ['+'|'-'] term (('+'|'-') term)*
//   term := factor ('*' factor)*
//   factor := rational | 'l' ['^' int] | 'x' int ['^' int]
struct Parser {
    const std::string& s;
    std::size_t pos = 0;
    int n;

    void skip() { while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos; }
    bool eat(char c)
    {
        skip();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    [[noreturn]] void fail(const std::string& what)
    {
        throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + what);
    }
    long long integer()
    {
        skip();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return std::stoll(s.substr(start, pos - start));
    }
    CoeffPoly factor()
    {
        skip();
        if (pos >= s.size()) fail("expected factor");
        char c = s[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long long num = integer();
            long long den = 1;
            if (eat('/')) den = integer();
            if (den == 0) fail("zero denominator");
            return CoeffPoly(n, Scalar(Rational(num, den)));
        }
        if (c == 'l') {
            ++pos;
            int p = eat('^') ? static_cast<int>(integer()) : 1;
            return CoeffPoly(n, Scalar::monomial(1, p));
        }
        if (c == 'x') {
            ++pos;
            int axis = static_cast<int>(integer());
            if (axis < 1 || axis > n) fail("variable x" + std::to_string(axis) + " out of range");
            int p = eat('^') ? static_cast<int>(integer()) : 1;
            return CoeffPoly::monomial(n, MultiIndex(n).plus(axis - 1, p), Scalar(1));
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }
    CoeffPoly term()
    {
        CoeffPoly r = factor();
        while (eat('*')) r = r * factor();
        return r;
    }
    CoeffPoly expr()
    {
        CoeffPoly r(n);
        skip();
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        CoeffPoly t = term();
        r += neg ? -t : t;
        for (;;) {
            skip();
            if (pos >= s.size()) break;
            if (eat('-')) neg = true;
            else if (eat('+')) neg = false;
            else fail("expected '+' or '-'");
            t = term();
            r += neg ? -t : t;
        }
        return r;
    }
};

} // namespace

CoeffPoly parse_coeff_poly(const std::string& text, int n)
{
    Parser p{text, 0, n};
    return p.expr();
}

Scalar parse_scalar(const std::string& text)
{
    CoeffPoly p = parse_coeff_poly(text, 0);
    return p.coeff(MultiIndex(0));
}

} // namespace projsym
